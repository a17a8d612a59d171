"""complement: complement a sequence or a graph."""

import argparse
import json

from loop_graphic.cli import EXIT_OK
from loop_graphic.cli.commands import add_output_arguments
from loop_graphic.cli.files import (
    dump_document,
    load_document,
    load_sequence,
    write_output,
)
from loop_graphic.cli.formatters import format_sequence, graph_to_dot
from loop_graphic.config import Settings
from loop_graphic.errors import InputFormatError
from loop_graphic.graphs import graph_from_document, graph_to_document
from loop_graphic.sequences import complement_sequence, graphic_complement_sequence
from loop_graphic.transforms import complement_graph, complement_simple_graph


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser(
        "complement", help="complement a degree sequence or a graph"
    )
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--sequence", help="degrees as space-separated integers")
    source.add_argument("--graph", help='GraphFile JSON path ("-" reads stdin)')
    parser.add_argument(
        "--kind",
        choices=["loops", "simple"],
        default="loops",
        help="complement in the complete graph-with-loops (n - d) or in K_n (n-1-d)",
    )
    parser.add_argument("--sort", action="store_true", help="sort the input sequence")
    parser.add_argument("--json", action="store_true", help="print sequences as JSON")
    add_output_arguments(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> int:
    if args.sequence is not None:
        d = load_sequence(args.sequence, None, autosort=args.sort)
        if args.kind == "loops":
            result = complement_sequence(d)
        else:
            result = graphic_complement_sequence(d)
        if args.dot:
            raise InputFormatError("--dot needs a graph input")
        text = (
            json.dumps({"degrees": list(result.values)})
            if args.json
            else format_sequence(result)
        )
    else:
        graph = graph_from_document(load_document(args.graph))
        if args.kind == "loops":
            complement = complement_graph(graph)
        else:
            complement = complement_simple_graph(graph)
        text = (
            graph_to_dot(complement)
            if args.dot
            else dump_document(graph_to_document(complement))
        )
    write_output(text, args.output)
    return EXIT_OK
