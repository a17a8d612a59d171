"""Argument parsing and subcommand dispatch."""

import argparse
import logging
import sys
from collections.abc import Sequence

from pydantic import ValidationError

from loop_graphic import __version__
from loop_graphic.cli import (
    EXIT_BUDGET,
    EXIT_FAILED,
    EXIT_INPUT_ERROR,
)
from loop_graphic.cli.formatters import format_report
from loop_graphic.config import get_settings
from loop_graphic.errors import (
    BudgetExceeded,
    GraphError,
    InfeasibleSequence,
    InputFormatError,
    SequenceError,
)

logger = logging.getLogger(__name__)


def create_parser() -> argparse.ArgumentParser:
    """Create the parser with every subcommand registered."""
    from loop_graphic.cli.commands import check, complement, cover, oracle, realize

    parser = argparse.ArgumentParser(
        prog="loop-graphic",
        description="Degree sequences of graphs-with-loops: checks, realizers, covers.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log progress to stderr (-v info, -vv debug)",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    check.register(subparsers)
    realize.register(subparsers)
    cover.register(subparsers)
    complement.register(subparsers)
    oracle.register(subparsers)
    return parser


def _configure_logging(verbose: int, default_level: str) -> None:
    if verbose >= 2:
        level: int | str = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = default_level.upper()
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def main(argv: Sequence[str] | None = None) -> int:
    """Run one command and return its exit status."""
    parser = create_parser()
    args = parser.parse_args(argv)
    try:
        settings = get_settings()
    except ValidationError as e:
        print(f"error: invalid LOOP_GRAPHIC_* setting: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    _configure_logging(args.verbose, settings.log_level)

    try:
        status: int = args.handler(args, settings)
    except InfeasibleSequence as e:
        logger.info("Infeasible: %s", e)
        print(format_report(e.report))
        return EXIT_FAILED
    except BudgetExceeded as e:
        logger.error("Budget exceeded: %s", e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputFormatError, SequenceError, GraphError, ValidationError) as e:
        logger.error("Input error: %s", e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    return status


if __name__ == "__main__":
    sys.exit(main())
