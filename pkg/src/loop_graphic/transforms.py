"""Double covers, complements and the symmetric bipartite realization."""

from __future__ import annotations

import logging
from itertools import combinations

from loop_graphic.errors import InfeasibleSequence, InvalidGraph, PartSizeMismatch
from loop_graphic.graphs import (
    BipartiteGraph,
    GraphWithLoops,
    LoopMultigraph,
    canonical_edge,
)
from loop_graphic.realize import realize_loops_reduced
from loop_graphic.sequences import DegreeSequence, check_gale_ryser_symmetric

logger = logging.getLogger(__name__)


def tensor_double_cover(g: GraphWithLoops) -> BipartiteGraph:
    """The tensor product G x K2.

    Left vertex a is (a, 0), right vertex b is (b, 1). An edge {a, b} gives
    (a, b) and (b, a); a loop at a gives the single edge (a, a).
    """
    edges: set[tuple[int, int]] = set()
    for a, b in g.edges:
        edges.add((a, b))
        edges.add((b, a))
    edges.update((a, a) for a in g.loops)
    return BipartiteGraph(n_left=g.n, n_right=g.n, edges=frozenset(edges))


def topological_double_cover(g: GraphWithLoops) -> LoopMultigraph:
    """The two-fold covering multigraph.

    Copy 0 keeps ids [0, n), copy 1 uses [n, 2n). An edge {a, b} lifts to
    {a, b + n} and {b, a + n}; a loop at a lifts to a double edge {a, a + n}.
    """
    n = g.n
    multiplicities: dict[tuple[int, int], int] = {}
    for a, b in g.edges:
        multiplicities[canonical_edge(a, b + n)] = 1
        multiplicities[canonical_edge(b, a + n)] = 1
    for a in g.loops:
        multiplicities[(a, a + n)] = 2
    return LoopMultigraph(n=2 * n, edge_multiplicities=multiplicities)


def classic_double_cover(g: GraphWithLoops) -> BipartiteGraph:
    """Bipartite double cover of the loop-free part of ``g``."""
    edges = {(a, b) for a, b in g.edges} | {(b, a) for a, b in g.edges}
    return BipartiteGraph(n_left=g.n, n_right=g.n, edges=frozenset(edges))


def cover_to_multigraph(b: BipartiteGraph) -> LoopMultigraph:
    """View a bipartite graph as a multigraph with right ids shifted by n_left."""
    return LoopMultigraph(
        n=b.n_left + b.n_right,
        edge_multiplicities={(i, j + b.n_left): 1 for i, j in b.edges},
    )


def complement_graph(g: GraphWithLoops) -> GraphWithLoops:
    """Complement inside the complete graph-with-loops on the same vertices."""
    all_pairs = frozenset(combinations(range(g.n), 2))
    return GraphWithLoops(
        n=g.n,
        edges=all_pairs - g.edges,
        loops=frozenset(range(g.n)) - g.loops,
    )


def complement_simple_graph(g: GraphWithLoops) -> GraphWithLoops:
    """Complement of a loop-free graph inside K_n.

    Raises:
        InvalidGraph: If ``g`` carries loops
    """
    if g.loops:
        raise InvalidGraph("simple complement needs a loop-free graph")
    all_pairs = frozenset(combinations(range(g.n), 2))
    return GraphWithLoops(n=g.n, edges=all_pairs - g.edges)


def symmetric_bipartite_realization(d: DegreeSequence) -> BipartiteGraph:
    """Bipartite graph whose two parts both have degree sequence ``d``.

    Built as the tensor cover of a reduced-degree realization, so swapping
    left i with right i is an automorphism.

    Raises:
        InfeasibleSequence: If ``d`` is not bipartite graphic
    """
    report = check_gale_ryser_symmetric(d)
    if not report.passed:
        raise InfeasibleSequence(report)
    graph, _ = realize_loops_reduced(d)
    cover = tensor_double_cover(graph)
    logger.debug("symmetric realization of %s: %d edges", d, len(cover.edges))
    return cover


def involution_check(b: BipartiteGraph) -> bool:
    """True if left i <-> right i maps the edge set onto itself.

    Raises:
        PartSizeMismatch: If the parts differ in size
    """
    if b.n_left != b.n_right:
        raise PartSizeMismatch(f"parts of size {b.n_left} and {b.n_right}")
    return all((j, i) in b.edges for i, j in b.edges)
