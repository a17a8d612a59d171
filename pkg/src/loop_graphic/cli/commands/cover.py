"""cover: tensor or topological double cover of a graph file."""

import argparse

from loop_graphic.cli import EXIT_OK
from loop_graphic.cli.commands import add_output_arguments
from loop_graphic.cli.files import dump_document, load_document, write_output
from loop_graphic.cli.formatters import bipartite_to_dot, multigraph_to_dot
from loop_graphic.config import Settings
from loop_graphic.graphs import (
    bipartite_to_document,
    graph_from_document,
    multigraph_to_document,
)
from loop_graphic.transforms import tensor_double_cover, topological_double_cover


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser("cover", help="build a double cover of a graph")
    parser.add_argument("graph", help='GraphFile JSON path ("-" reads stdin)')
    parser.add_argument(
        "--kind",
        choices=["tensor", "topological"],
        default="tensor",
        help="tensor product G x K2 (bipartite) or topological cover (multigraph)",
    )
    add_output_arguments(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> int:
    graph = graph_from_document(load_document(args.graph))
    if args.kind == "tensor":
        bipartite = tensor_double_cover(graph)
        text = (
            bipartite_to_dot(bipartite)
            if args.dot
            else dump_document(bipartite_to_document(bipartite))
        )
    else:
        multigraph = topological_double_cover(graph)
        text = (
            multigraph_to_dot(multigraph)
            if args.dot
            else dump_document(multigraph_to_document(multigraph))
        )
    write_output(text, args.output)
    return EXIT_OK
