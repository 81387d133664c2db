"""
Command-line entry point

    python cli.py check-gcm ideals/I_1.ideal
    python cli.py analyze ideals/frobJ.ideal --json
    python cli.py oracle-compare random --seed 1 --count 50

Exit codes: 0 success, 1 internal inconsistency (TheoremViolation), 2 invalid input.
"""

import argparse
import logging
import sys
from typing import List, Optional

from app.commands import CommandRegistry
from app.config import settings
from app.exceptions import InputError, TheoremViolation

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_THEOREM_VIOLATION = 1
EXIT_INPUT_ERROR = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT_ERROR)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default=None, help="q or gf:<p> (default from the ideal file, then q)")
    common.add_argument("--json", action="store_true", help="emit the JSON report")
    common.add_argument("--parallel", type=int, default=settings.PARALLEL, help="worker threads")
    common.add_argument("--seed", type=int, default=None, help="seed for random corpora")

    parser = _Parser(prog="hochster-lc", description="Local cohomology of monomial ideals")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in CommandRegistry.get_available_commands():
        command_class = CommandRegistry.get_command(name)
        sub = subparsers.add_parser(name, help=command_class.help, parents=[common])
        command_class().add_arguments(sub)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(level=settings.LOG_LEVEL, stream=sys.stderr,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    command = CommandRegistry.create_command(args.command)
    try:
        report = command.execute(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except TheoremViolation as e:
        logger.error(f"{args.command}: {e}")
        print(f"internal inconsistency: {e}", file=sys.stderr)
        return EXIT_THEOREM_VIOLATION
    print(report.model_dump_json(indent=2) if args.json else command.render_text(report))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
