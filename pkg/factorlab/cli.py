import sys
import logging
import argparse
from typing import List, Optional

from .core.commands.bench import bench_command
from .core.commands.factor import factor_command
from .core.commands.methods import methods_command
from .core.lib.log import set_log_level
from .core.lib.methods import MethodCode, parse_method
from .core.lib.settings import RHO_POLYNOMIALS


def modulus(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not a decimal integer")
    if n < 4:
        raise argparse.ArgumentTypeError(f"{n} is below 4")
    return n


def positive_int(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not an integer")
    if number < 1:
        raise argparse.ArgumentTypeError(f"{number} is not positive")
    return number


def method(value: str) -> MethodCode:
    try:
        return parse_method(value)
    except ValueError as error:
        raise argparse.ArgumentTypeError(str(error))


def method_list(value: str) -> List[MethodCode]:
    return [method(item.strip()) for item in value.split(',') if item.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument('--verbose', action='store_true', help="Log debug diagnostics to standard error")
    verbosity.add_argument('--quiet', action='store_true', help="Only log warnings and errors")

    run_options = argparse.ArgumentParser(add_help=False)
    run_options.add_argument('--json', action='store_true', help="Emit one JSON object per line")
    run_options.add_argument('--timeout-ms', type=positive_int, help="Per-run time budget (default: FACTORLAB_TIMEOUT_MS or 10000)")
    run_options.add_argument('--seed', type=int, help="Seed for the randomized methods")
    run_options.add_argument('--lattice-param', type=positive_int, help="Shift degree of the Coppersmith lattice")
    run_options.add_argument('--spec-box', type=int, help="Half-width B of the MDpv specialization box [-B, B]^4")
    run_options.add_argument('--matrix-a', type=int, help="First entry a of the MDpv matrix")
    run_options.add_argument('--matrix-b', type=int, help="Second entry b of the MDpv matrix")
    run_options.add_argument('--modulus', type=positive_int, help="Auxiliary modulus M of the lattice solver")
    run_options.add_argument('--rho-polynomial', choices=RHO_POLYNOMIALS, help="Iteration polynomial of Pollard rho")
    run_options.add_argument('--ecm-curves', type=positive_int, help="Number of ECM curves")
    run_options.add_argument('--ecm-bound', type=positive_int, help="ECM stage-one bound")

    parser = argparse.ArgumentParser(prog='factorlab', description="Integer factorization toolkit and benchmark harness.")
    subparsers = parser.add_subparsers(dest='command', required=True)

    factor_parser = subparsers.add_parser('factor', parents=[common, run_options], help="Factor a single integer")
    factor_parser.add_argument('n', type=modulus, help="Integer >= 4 to factor")
    factor_parser.add_argument('--method', type=method, default=MethodCode.AUTO, help="Method identifier (default: auto)")
    factor_parser.set_defaults(handler=factor_command)

    bench_parser = subparsers.add_parser('bench', parents=[common, run_options], help="Run methods over a corpus of moduli")
    bench_parser.add_argument('--input', required=True, help="Corpus file, one modulus per line, '#' comments")
    bench_parser.add_argument('--methods', type=method_list, required=True, help="Comma-separated method identifiers")
    bench_parser.add_argument('--workers', type=positive_int, help="Worker processes (default: 1)")
    bench_parser.add_argument('--summary-json', action='store_true', help="With --json, end with a summary object")
    bench_parser.set_defaults(handler=bench_command)

    methods_parser = subparsers.add_parser('methods', parents=[common], help="List the available methods")
    methods_parser.add_argument('--json', action='store_true', help="Emit one JSON object per method")
    methods_parser.set_defaults(handler=methods_command)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        set_log_level(logging.DEBUG)
    elif args.quiet:
        set_log_level(logging.WARNING)
    return args.handler(args)


if __name__ == '__main__':
    sys.exit(main())
