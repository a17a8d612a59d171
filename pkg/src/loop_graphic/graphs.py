"""Graph types and degree computations.

Vertices are contiguous integer ids. Edges are stored canonically as
``(i, j)`` with ``i < j``, so a set of edges cannot hold a pair twice.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Iterable, Iterator
from itertools import combinations, product
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator

from loop_graphic.errors import InvalidGraph
from loop_graphic.sequences import Convention, DegreeSequence

logger = logging.getLogger(__name__)

Edge = tuple[int, int]


def canonical_edge(a: int, b: int) -> Edge:
    """Order an unordered pair with the smaller id first."""
    return (a, b) if a < b else (b, a)


class GraphWithLoops(BaseModel):
    """Simple graph with at most one loop per vertex."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    edges: frozenset[Edge] = frozenset()
    loops: frozenset[int] = frozenset()

    @model_validator(mode="after")
    def _check_structure(self) -> GraphWithLoops:
        for a, b in self.edges:
            if not 0 <= a < b < self.n:
                raise ValueError(f"edge {(a, b)} is not canonical or out of range")
        for v in self.loops:
            if not 0 <= v < self.n:
                raise ValueError(f"loop at {v} is out of range")
        return self

    @classmethod
    def build(
        cls, n: int, edges: Iterable[Iterable[int]] = (), loops: Iterable[int] = ()
    ) -> GraphWithLoops:
        """Build from raw pairs, rejecting self-pairs, duplicates and bad ids.

        Raises:
            InvalidGraph: If the data violates a structural invariant
        """
        if n < 0:
            raise InvalidGraph(f"vertex count must be nonnegative, got {n}")
        edge_set: set[Edge] = set()
        for pair in edges:
            a, b = _pair(pair)
            if a == b:
                raise InvalidGraph(f"edge {(a, b)} joins a vertex to itself; use loops")
            for v in (a, b):
                if not 0 <= v < n:
                    raise InvalidGraph(f"vertex {v} out of range for n={n}")
            edge = canonical_edge(a, b)
            if edge in edge_set:
                raise InvalidGraph(f"edge {edge} appears twice")
            edge_set.add(edge)
        loop_set: set[int] = set()
        for v in loops:
            if not 0 <= v < n:
                raise InvalidGraph(f"loop vertex {v} out of range for n={n}")
            if v in loop_set:
                raise InvalidGraph(f"vertex {v} carries two loops")
            loop_set.add(v)
        return cls(n=n, edges=frozenset(edge_set), loops=frozenset(loop_set))

    def has_edge(self, a: int, b: int) -> bool:
        return canonical_edge(a, b) in self.edges


class BipartiteGraph(BaseModel):
    """Simple bipartite graph; edges are (left id, right id)."""

    model_config = ConfigDict(frozen=True)

    n_left: int = Field(ge=0)
    n_right: int = Field(ge=0)
    edges: frozenset[Edge] = frozenset()

    @model_validator(mode="after")
    def _check_structure(self) -> BipartiteGraph:
        for i, j in self.edges:
            if not (0 <= i < self.n_left and 0 <= j < self.n_right):
                raise ValueError(f"edge {(i, j)} out of part bounds")
        return self

    @classmethod
    def build(
        cls, n_left: int, n_right: int, edges: Iterable[Iterable[int]] = ()
    ) -> BipartiteGraph:
        """Build from raw pairs.

        Raises:
            InvalidGraph: On duplicate pairs or ids outside the parts
        """
        if n_left < 0 or n_right < 0:
            raise InvalidGraph("part sizes must be nonnegative")
        edge_set: set[Edge] = set()
        for pair in edges:
            i, j = _pair(pair)
            if not (0 <= i < n_left and 0 <= j < n_right):
                raise InvalidGraph(f"edge {(i, j)} out of part bounds")
            if (i, j) in edge_set:
                raise InvalidGraph(f"edge {(i, j)} appears twice")
            edge_set.add((i, j))
        return cls(n_left=n_left, n_right=n_right, edges=frozenset(edge_set))

    @classmethod
    def complete(cls, n_left: int, n_right: int) -> BipartiteGraph:
        return cls(
            n_left=n_left,
            n_right=n_right,
            edges=frozenset((i, j) for i in range(n_left) for j in range(n_right)),
        )


class LoopMultigraph(BaseModel):
    """Loopless multigraph with edge multiplicities 1 or 2."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    edge_multiplicities: dict[Edge, int] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_structure(self) -> LoopMultigraph:
        for (a, b), mult in self.edge_multiplicities.items():
            if not 0 <= a < b < self.n:
                raise ValueError(f"pair {(a, b)} is not canonical or out of range")
            if mult not in (1, 2):
                raise ValueError(f"multiplicity {mult} of {(a, b)} not in {{1, 2}}")
        return self

    @property
    def edge_count(self) -> int:
        """Number of edges counted with multiplicity."""
        return sum(self.edge_multiplicities.values())


def _pair(raw: Iterable[int]) -> Edge:
    items = [int(x) for x in raw]
    if len(items) != 2:
        raise InvalidGraph(f"an edge needs exactly two endpoints, got {items}")
    return items[0], items[1]


def degree_vector(g: GraphWithLoops, convention: Convention) -> list[int]:
    """Per-vertex degrees in vertex-id order (unsorted)."""
    counts = [0] * g.n
    for a, b in g.edges:
        counts[a] += 1
        counts[b] += 1
    weight = convention.loop_weight
    for v in g.loops:
        counts[v] += weight
    return counts


def _sorted_sequence(degrees: list[int]) -> DegreeSequence:
    return DegreeSequence(values=tuple(sorted(degrees, reverse=True)))


def degrees_double(g: GraphWithLoops) -> DegreeSequence:
    """Degree sequence with loops counted twice."""
    return _sorted_sequence(degree_vector(g, Convention.DOUBLE))


def degrees_reduced(g: GraphWithLoops) -> DegreeSequence:
    """Reduced degree sequence: loops counted once."""
    return _sorted_sequence(degree_vector(g, Convention.REDUCED))


def degrees(g: GraphWithLoops, convention: Convention) -> DegreeSequence:
    return _sorted_sequence(degree_vector(g, convention))


def bipartite_degree_vectors(b: BipartiteGraph) -> tuple[list[int], list[int]]:
    """Per-vertex degrees of each part, in id order."""
    left = [0] * b.n_left
    right = [0] * b.n_right
    for i, j in b.edges:
        left[i] += 1
        right[j] += 1
    return left, right


def bipartite_part_degrees(b: BipartiteGraph) -> tuple[DegreeSequence, DegreeSequence]:
    """Sorted degree sequences of the left and right parts."""
    left, right = bipartite_degree_vectors(b)
    return _sorted_sequence(left), _sorted_sequence(right)


def multigraph_degrees(m: LoopMultigraph) -> list[int]:
    """Per-vertex degrees of a multigraph, counting multiplicity."""
    counts = [0] * m.n
    for (a, b), mult in m.edge_multiplicities.items():
        counts[a] += mult
        counts[b] += mult
    return counts


def verify_realization(
    g: GraphWithLoops, d: DegreeSequence, convention: Convention
) -> bool:
    """True if the degrees of ``g`` under ``convention`` are exactly ``d``."""
    if g.n != d.n:
        return False
    return tuple(sorted(degree_vector(g, convention), reverse=True)) == d.values


def empty_graph(n: int) -> GraphWithLoops:
    return GraphWithLoops(n=n)


def complete_graph_with_loops(n: int) -> GraphWithLoops:
    """Every pair joined and a loop at every vertex."""
    return GraphWithLoops(
        n=n,
        edges=frozenset(combinations(range(n), 2)),
        loops=frozenset(range(n)),
    )


def cycle_graph(n: int) -> GraphWithLoops:
    """Loop-free cycle on n >= 3 vertices."""
    if n < 3:
        raise InvalidGraph(f"a cycle needs at least 3 vertices, got {n}")
    return GraphWithLoops(
        n=n, edges=frozenset(canonical_edge(v, (v + 1) % n) for v in range(n))
    )


def random_graph_with_loops(
    n: int, p: float, rng: random.Random, loop_p: float | None = None
) -> GraphWithLoops:
    """Each pair becomes an edge with probability p, each vertex a loop with loop_p."""
    loop_p = p if loop_p is None else loop_p
    edges = frozenset(pair for pair in combinations(range(n), 2) if rng.random() < p)
    loops = frozenset(v for v in range(n) if rng.random() < loop_p)
    return GraphWithLoops(n=n, edges=edges, loops=loops)


def all_graphs(n: int) -> Iterator[GraphWithLoops]:
    """Every graph-with-loops on n labeled vertices."""
    pairs = list(combinations(range(n), 2))
    for edge_bits in product((False, True), repeat=len(pairs)):
        edges = frozenset(p for p, on in zip(pairs, edge_bits, strict=True) if on)
        for loop_bits in product((False, True), repeat=n):
            loops = frozenset(v for v, on in enumerate(loop_bits) if on)
            yield GraphWithLoops(n=n, edges=edges, loops=loops)


def graph_to_document(g: GraphWithLoops) -> dict[str, Any]:
    """JSON-ready form: ``{"n", "edges", "loops"}`` with sorted entries."""
    return {
        "n": g.n,
        "edges": [list(edge) for edge in sorted(g.edges)],
        "loops": sorted(g.loops),
    }


def graph_from_document(doc: Any) -> GraphWithLoops:
    """Inverse of graph_to_document.

    Raises:
        InvalidGraph: On missing keys, wrong types or broken invariants
    """
    if not isinstance(doc, dict) or "n" not in doc:
        raise InvalidGraph('graph document needs an object with key "n"')
    try:
        return GraphWithLoops.build(
            int(doc["n"]), doc.get("edges", []), doc.get("loops", [])
        )
    except (TypeError, ValueError) as e:
        raise InvalidGraph(f"malformed graph document: {e}") from e


def bipartite_to_document(b: BipartiteGraph) -> dict[str, Any]:
    return {
        "n_left": b.n_left,
        "n_right": b.n_right,
        "edges": [list(edge) for edge in sorted(b.edges)],
    }


def bipartite_from_document(doc: Any) -> BipartiteGraph:
    """Inverse of bipartite_to_document.

    Raises:
        InvalidGraph: On missing keys, wrong types or broken invariants
    """
    if not isinstance(doc, dict) or "n_left" not in doc or "n_right" not in doc:
        raise InvalidGraph('bipartite document needs keys "n_left" and "n_right"')
    try:
        return BipartiteGraph.build(
            int(doc["n_left"]), int(doc["n_right"]), doc.get("edges", [])
        )
    except (TypeError, ValueError) as e:
        raise InvalidGraph(f"malformed bipartite document: {e}") from e


def multigraph_to_document(m: LoopMultigraph) -> dict[str, Any]:
    """``{"n", "edges": [[a, b, multiplicity], ...]}``."""
    return {
        "n": m.n,
        "edges": [
            [a, b, mult] for (a, b), mult in sorted(m.edge_multiplicities.items())
        ],
    }
