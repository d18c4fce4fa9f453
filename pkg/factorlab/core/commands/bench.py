import os
import sys
import json
import statistics
from multiprocessing import Pool
from typing import Dict, Iterable, List, Tuple

from ..dispatcher import FactorDispatcher
from ..lib.constants import COMMENT_MARKER, EXIT_OK, EXIT_USAGE, SUMMARY_KEY
from ..lib.log import LOGGER
from ..lib.methods import MethodCode
from ..lib.settings import FactorlabSettings, SettingsLoader
from ..records import BenchRecord


def parse_corpus(lines: Iterable[str]) -> List[int]:
    """
    One decimal modulus per line; '#' starts a comment. Lines that are not
    integers >= 4 are skipped with a warning.
    """
    moduli = []
    for line_number, line in enumerate(lines, start=1):
        text = line.split(COMMENT_MARKER, 1)[0].strip()
        if not text:
            continue
        try:
            n = int(text)
        except ValueError:
            LOGGER.warning(f"Skipping line {line_number}: {text!r} is not an integer")
            continue
        if n < 4:
            LOGGER.warning(f"Skipping line {line_number}: {n} is below 4")
            continue
        moduli.append(n)
    return moduli


def run_cell(cell: Tuple[int, str, Dict]) -> BenchRecord:
    n, method_value, settings_payload = cell
    method = MethodCode(method_value)
    dispatcher = FactorDispatcher(FactorlabSettings(settings_payload))
    return BenchRecord.from_result(dispatcher.run(n, method), method)


def run_bench(moduli: List[int], methods: List[MethodCode], settings: FactorlabSettings) -> List[BenchRecord]:
    """
    Records in input order x method order, whatever order the workers
    finish in.
    """
    payload = settings.convert_to_dict()
    cells = [(n, method.value, payload) for n in moduli for method in methods]
    workers = settings.general.workers
    if workers > 1 and len(cells) > 1:
        LOGGER.debug(f"Benchmarking {len(cells)} cells on {workers} workers")
        with Pool(workers) as pool:
            return pool.map(run_cell, cells)
    return [run_cell(cell) for cell in cells]


def summarize(records: List[BenchRecord], methods: List[MethodCode]) -> Dict[str, Dict]:
    summary = {}
    for method in methods:
        own = [record for record in records if record.method == method.value]
        elapsed = [record.elapsed_ms for record in own]
        summary[method.value] = {
            'runs': len(own),
            'ok': sum(1 for record in own if record.is_ok),
            'median_elapsed_ms': statistics.median(elapsed) if elapsed else None,
        }
    return summary


def format_summary(summary: Dict[str, Dict]) -> str:
    lines = [f"{'method':<15} {'ok':>11} {'median ms':>10}"]
    for method, row in summary.items():
        median = '-' if row['median_elapsed_ms'] is None else f"{row['median_elapsed_ms']:g}"
        lines.append(f"{method:<15} {row['ok']:>5}/{row['runs']:<5} {median:>10}")
    return '\n'.join(lines)


def bench_command(args) -> int:
    """
    Handler for the 'bench' subcommand.
    """
    try:
        with open(args.input, 'r', encoding='utf-8') as corpus:
            moduli = parse_corpus(corpus)
    except (OSError, UnicodeDecodeError) as error:
        print(f"factorlab bench: cannot read {args.input}: {error}", file=sys.stderr)
        return EXIT_USAGE

    settings = SettingsLoader.load_from_args(args, os.environ)
    records = run_bench(moduli, args.methods, settings)
    for record in records:
        print(record.to_json() if args.json else record.to_text())

    summary = summarize(records, args.methods)
    if args.json:
        if args.summary_json:
            print(json.dumps({SUMMARY_KEY: summary}))
    elif records:
        print(format_summary(summary), file=sys.stderr)
    return EXIT_OK
