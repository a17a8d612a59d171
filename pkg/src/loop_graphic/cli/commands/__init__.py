"""Subcommands; each module exposes register(subparsers)."""

import argparse


def add_sequence_arguments(parser: argparse.ArgumentParser) -> None:
    """Positional sequence text, --file and --sort."""
    parser.add_argument(
        "sequence",
        nargs="?",
        default=None,
        help='degrees as space-separated integers, e.g. "4 4 2 2" ("-" reads stdin)',
    )
    parser.add_argument(
        "--file",
        default=None,
        help='SequenceFile: JSON {"degrees": [...]} or plain integers ("-" = stdin)',
    )
    parser.add_argument(
        "--sort",
        action="store_true",
        help="sort the input into nonincreasing order instead of rejecting it",
    )


def add_output_arguments(parser: argparse.ArgumentParser) -> None:
    """--output and --dot for graph-emitting commands."""
    parser.add_argument("--output", "-o", default=None, help="write to this file")
    parser.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
