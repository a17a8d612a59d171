"""check: run one inequality check and print its per-k report."""

import argparse
import json
import logging

from loop_graphic.cli import EXIT_FAILED, EXIT_OK
from loop_graphic.cli.commands import add_sequence_arguments
from loop_graphic.cli.files import load_sequence
from loop_graphic.cli.formatters import format_report, report_to_dict
from loop_graphic.config import Settings
from loop_graphic.sequences import CheckKind, check

logger = logging.getLogger(__name__)


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser(
        "check", help="decide realizability with one of the inequality checks"
    )
    add_sequence_arguments(parser)
    parser.add_argument(
        "--mode",
        choices=[kind.value for kind in CheckKind],
        default=CheckKind.LOOPS_REDUCED.value,
        help="which check to run (default: loops-reduced)",
    )
    parser.add_argument("--json", action="store_true", help="print the report as JSON")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> int:
    """Exit 0 when the check passes, 1 when it fails."""
    d = load_sequence(args.sequence, args.file, autosort=args.sort)
    report = check(d, CheckKind(args.mode))
    if args.json:
        print(json.dumps(report_to_dict(report), indent=2))
    else:
        print(format_report(report))
    logger.info("%s on %s: %s", args.mode, d, "passed" if report.passed else "failed")
    return EXIT_OK if report.passed else EXIT_FAILED
