import json

from ..lib.constants import EXIT_OK
from ..lib.methods import METHODS


def format_methods_table() -> str:
    rows = [('code', 'category', 'complexity', 'description')]
    rows += [
        (method.code.value, method.category, method.complexity or '-', method.description)
        for method in METHODS.values()
    ]
    widths = [max(len(row[column]) for row in rows) for column in range(3)]
    return '\n'.join(
        f"{row[0]:<{widths[0]}}  {row[1]:<{widths[1]}}  {row[2]:<{widths[2]}}  {row[3]}"
        for row in rows
    )


def methods_command(args) -> int:
    """
    Handler for the 'methods' subcommand: lists the method registry.
    """
    if args.json:
        for method in METHODS.values():
            print(json.dumps({
                'code': method.code.value,
                'name': method.name,
                'category': method.category,
                'complexity': method.complexity,
                'description': method.description,
            }))
    else:
        print(format_methods_table())
    return EXIT_OK
