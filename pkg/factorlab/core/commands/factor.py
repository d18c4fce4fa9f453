import os

from ..dispatcher import FactorDispatcher
from ..lib.constants import EXIT_FAILED, EXIT_OK, EXIT_TIMEOUT
from ..lib.log import LOGGER
from ..lib.result import FactorStatus
from ..lib.settings import SettingsLoader
from ..records import BenchRecord

EXIT_CODES = {
    FactorStatus.OK: EXIT_OK,
    FactorStatus.FAILED: EXIT_FAILED,
    FactorStatus.TIMEOUT: EXIT_TIMEOUT,
}


def factor_command(args) -> int:
    """
    Handler for the 'factor' subcommand. Prints one record and returns the
    exit code matching its status.
    """
    settings = SettingsLoader.load_from_args(args, os.environ)
    dispatcher = FactorDispatcher(settings)
    result = dispatcher.run(args.n, args.method)
    record = BenchRecord.from_result(result, args.method)

    if args.json:
        print(record.to_json())
    else:
        line = record.to_text()
        if result.reason and not record.is_ok:
            line += f'  ({result.reason})'
        print(line)
    LOGGER.debug(f"factor {args.n} with {args.method.value}: {result}")
    return EXIT_CODES[record.status]
