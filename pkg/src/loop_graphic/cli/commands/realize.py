"""realize: build an explicit graph for a feasible sequence."""

import argparse
import logging

from loop_graphic.cli import EXIT_OK
from loop_graphic.cli.commands import add_sequence_arguments
from loop_graphic.cli.files import dump_document, load_sequence, write_output
from loop_graphic.cli.formatters import graph_to_dot
from loop_graphic.config import Settings
from loop_graphic.graphs import graph_to_document
from loop_graphic.realize import (
    realize_loops_double,
    realize_loops_reduced,
    realize_simple_traced,
)

logger = logging.getLogger(__name__)

REALIZERS = {
    "simple": realize_simple_traced,
    "loops-double": realize_loops_double,
    "loops-reduced": realize_loops_reduced,
}


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser("realize", help="construct a realizing graph")
    add_sequence_arguments(parser)
    parser.add_argument(
        "--mode",
        choices=list(REALIZERS),
        default="loops-reduced",
        help="simple graph, or graph-with-loops under either degree convention",
    )
    parser.add_argument("--output", "-o", default=None, help="write to this file")
    output_format = parser.add_mutually_exclusive_group()
    output_format.add_argument(
        "--dot", action="store_true", help="emit DOT instead of JSON"
    )
    output_format.add_argument(
        "--trace",
        action="store_true",
        help='emit {"graph": ..., "trace": ...} with the reductions and patch moves',
    )
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> int:
    """Infeasible sequences surface as InfeasibleSequence (exit 1)."""
    d = load_sequence(args.sequence, args.file, autosort=args.sort)
    graph, trace = REALIZERS[args.mode](d)
    logger.info(
        "Realized %s (%s): %d edges, %d loops",
        d,
        args.mode,
        len(graph.edges),
        len(graph.loops),
    )
    if args.dot:
        text = graph_to_dot(graph)
    elif args.trace:
        text = dump_document(
            {"graph": graph_to_document(graph), "trace": trace.model_dump(mode="json")}
        )
    else:
        text = dump_document(graph_to_document(graph))
    write_output(text, args.output)
    return EXIT_OK
