"""Constructive realizers built on the reduction step.

A sequence is first reduced to all zeros (``sequences.reduction_trace``).
The graph is then rebuilt from the empty graph by walking the descent
backwards: at each level the rebuilt graph G' realizes the reduced sequence,
and one patch move raises the degrees of the two lowered vertices v1 and vn
by one each, leaving every other degree unchanged.

Patch dispatch at a level, in order:

1. no edge v1–vn: add it
2. no loop at v1 nor vn: trade the edge for two loops (double convention)
   or add the two loops (reduced convention)
3. loop at v1: take vi, the smallest id not adjacent to v1, and either
   reroute through a neighbour vj of vi or rework the loop at vi
4. loop only at vn: move one of v1's edges over to vn and put a loop at v1
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable
from enum import StrEnum

from pydantic import BaseModel, ConfigDict, model_validator

from loop_graphic.errors import InfeasibleSequence, InternalPatchFailure
from loop_graphic.graphs import GraphWithLoops, canonical_edge, verify_realization
from loop_graphic.sequences import (
    Convention,
    DegreeSequence,
    ReductionStep,
    ReductionTrace,
    check_erdos_gallai,
    check_for,
    choudum_reduce,
    reduction_trace,
)

logger = logging.getLogger(__name__)


class PatchKind(StrEnum):
    """The moves that lift a realization of d'' to one of d."""

    ADD_EDGE = "add-edge"
    # Single active vertex: its last edge is a loop.
    ADD_LOOP = "add-loop"
    SWAP_EDGE_FOR_TWO_LOOPS = "swap-edge-for-two-loops"
    ADD_TWO_LOOPS = "add-two-loops"
    THREE_VERTEX_REROUTE = "three-vertex-reroute"
    EDGE_TO_TAIL_LOOP = "edge-to-tail-loop"
    LOOP_SPLIT_TO_TWO_EDGES = "loop-split-to-two-edges"
    LOOP_TRANSFER_VIA_EDGE = "loop-transfer-via-edge"
    LOOP_AT_TAIL = "loop-at-tail"
    TAIL_LOOP_REROUTE = "tail-loop-reroute"


# Witness arity per kind: (v1, vn), then vi, then vj.
_ARITY: dict[PatchKind, int] = {
    PatchKind.ADD_EDGE: 2,
    PatchKind.ADD_LOOP: 1,
    PatchKind.SWAP_EDGE_FOR_TWO_LOOPS: 2,
    PatchKind.ADD_TWO_LOOPS: 2,
    PatchKind.THREE_VERTEX_REROUTE: 4,
    PatchKind.EDGE_TO_TAIL_LOOP: 3,
    PatchKind.LOOP_SPLIT_TO_TWO_EDGES: 3,
    PatchKind.LOOP_TRANSFER_VIA_EDGE: 3,
    PatchKind.LOOP_AT_TAIL: 3,
    PatchKind.TAIL_LOOP_REROUTE: 4,
}


class PatchCase(BaseModel):
    """A patch move and the vertex ids it touches."""

    model_config = ConfigDict(frozen=True)

    kind: PatchKind
    witnesses: tuple[int, ...]

    @model_validator(mode="after")
    def _check_witnesses(self) -> PatchCase:
        if len(self.witnesses) != _ARITY[self.kind]:
            raise ValueError(
                f"{self.kind.value} takes {_ARITY[self.kind]} witnesses, "
                f"got {len(self.witnesses)}"
            )
        if len(set(self.witnesses)) != len(self.witnesses):
            raise ValueError(f"witnesses {self.witnesses} must be distinct")
        return self


class RealizationTrace(BaseModel):
    """Descent plus the patch applied at each level on the way back up."""

    model_config = ConfigDict(frozen=True)

    reductions: ReductionTrace
    rebuild_steps: tuple[PatchCase, ...]


class _Workspace:
    """Mutable graph-with-loops used while rebuilding."""

    def __init__(self, n: int, loop_weight: int) -> None:
        self.n = n
        self.loop_weight = loop_weight
        self.adj: list[set[int]] = [set() for _ in range(n)]
        self.loops: set[int] = set()

    def degree(self, v: int) -> int:
        return len(self.adj[v]) + (self.loop_weight if v in self.loops else 0)

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adj[a]

    def add_edge(self, a: int, b: int) -> None:
        if a == b or b in self.adj[a]:
            raise InternalPatchFailure(f"cannot add edge {(a, b)}")
        self.adj[a].add(b)
        self.adj[b].add(a)

    def remove_edge(self, a: int, b: int) -> None:
        if b not in self.adj[a]:
            raise InternalPatchFailure(f"cannot remove missing edge {(a, b)}")
        self.adj[a].discard(b)
        self.adj[b].discard(a)

    def add_loop(self, v: int) -> None:
        if v in self.loops:
            raise InternalPatchFailure(f"vertex {v} already carries a loop")
        self.loops.add(v)

    def remove_loop(self, v: int) -> None:
        if v not in self.loops:
            raise InternalPatchFailure(f"vertex {v} has no loop to remove")
        self.loops.discard(v)

    def freeze(self) -> GraphWithLoops:
        edges = frozenset(
            canonical_edge(a, b) for a in range(self.n) for b in self.adj[a] if a < b
        )
        return GraphWithLoops(n=self.n, edges=edges, loops=frozenset(self.loops))


def _apply_add_edge(ws: _Workspace, v1: int, vn: int) -> None:
    ws.add_edge(v1, vn)


def _apply_add_loop(ws: _Workspace, v: int) -> None:
    ws.add_loop(v)


def _apply_swap_edge_for_two_loops(ws: _Workspace, v1: int, vn: int) -> None:
    ws.remove_edge(v1, vn)
    ws.add_loop(v1)
    ws.add_loop(vn)


def _apply_add_two_loops(ws: _Workspace, v1: int, vn: int) -> None:
    ws.add_loop(v1)
    ws.add_loop(vn)


def _apply_three_vertex_reroute(
    ws: _Workspace, v1: int, vn: int, vi: int, vj: int
) -> None:
    ws.remove_edge(vi, vj)
    ws.add_edge(v1, vi)
    ws.add_edge(vj, vn)


def _apply_edge_to_tail_loop(ws: _Workspace, v1: int, vn: int, vi: int) -> None:
    ws.remove_edge(vi, vn)
    ws.add_edge(v1, vi)
    ws.add_loop(vn)


def _apply_loop_split_to_two_edges(ws: _Workspace, v1: int, vn: int, vi: int) -> None:
    ws.add_edge(v1, vi)
    ws.add_edge(vi, vn)
    ws.remove_loop(vi)


def _apply_loop_transfer_via_edge(ws: _Workspace, v1: int, vn: int, vi: int) -> None:
    ws.remove_loop(vi)
    ws.add_edge(v1, vi)
    ws.add_loop(vn)


def _apply_loop_at_tail(ws: _Workspace, v1: int, vn: int, vi: int) -> None:
    ws.remove_edge(v1, vi)
    ws.add_edge(vi, vn)
    ws.add_loop(v1)


def _apply_tail_loop_reroute(
    ws: _Workspace, v1: int, vn: int, vi: int, vj: int
) -> None:
    ws.remove_loop(vn)
    ws.remove_edge(vi, vj)
    ws.add_edge(vj, vn)
    ws.add_edge(vi, vn)
    ws.add_loop(v1)


_MOVES: dict[PatchKind, Callable[..., None]] = {
    PatchKind.ADD_EDGE: _apply_add_edge,
    PatchKind.ADD_LOOP: _apply_add_loop,
    PatchKind.SWAP_EDGE_FOR_TWO_LOOPS: _apply_swap_edge_for_two_loops,
    PatchKind.ADD_TWO_LOOPS: _apply_add_two_loops,
    PatchKind.THREE_VERTEX_REROUTE: _apply_three_vertex_reroute,
    PatchKind.EDGE_TO_TAIL_LOOP: _apply_edge_to_tail_loop,
    PatchKind.LOOP_SPLIT_TO_TWO_EDGES: _apply_loop_split_to_two_edges,
    PatchKind.LOOP_TRANSFER_VIA_EDGE: _apply_loop_transfer_via_edge,
    PatchKind.LOOP_AT_TAIL: _apply_loop_at_tail,
    PatchKind.TAIL_LOOP_REROUTE: _apply_tail_loop_reroute,
}


def _apply(ws: _Workspace, patch: PatchCase) -> None:
    _MOVES[patch.kind](ws, *patch.witnesses)


def _patch(kind: PatchKind, *witnesses: int) -> PatchCase:
    return PatchCase.model_construct(kind=kind, witnesses=witnesses)


def _first(candidates: Iterable[int], what: str) -> int:
    found = min(candidates, default=None)
    if found is None:
        raise InternalPatchFailure(f"no vertex qualifies as {what}")
    return found


def _check_above_tail(ws: _Workspace, vi: int, vn: int) -> None:
    # The rebuilt degree of vi must exceed that of vn for a reroute partner
    # vj to exist.
    if ws.degree(vi) <= ws.degree(vn):
        raise InternalPatchFailure(
            f"expected degree of v{vi} ({ws.degree(vi)}) to exceed degree of "
            f"v{vn} ({ws.degree(vn)})"
        )


def _reroute_partner(ws: _Workspace, vi: int, vn: int) -> int:
    """Smallest neighbour vj of vi that is neither vn nor adjacent to vn."""
    _check_above_tail(ws, vi, vn)
    blocked = ws.adj[vn]
    return _first(
        (vj for vj in ws.adj[vi] if vj != vn and vj not in blocked), "vj"
    )


def _choose_patch(
    ws: _Workspace,
    step: ReductionStep,
    active: tuple[int, ...],
    convention: Convention | None,
) -> PatchCase:
    """Pick the move for one level; ``convention`` None means loop-free."""
    v1, vn = step.v_first, step.v_last
    if v1 == vn:
        if convention is None:
            raise InternalPatchFailure(f"loop-free rebuild reached lone vertex v{v1}")
        return _patch(PatchKind.ADD_LOOP, v1)

    if not ws.has_edge(v1, vn):
        return _patch(PatchKind.ADD_EDGE, v1, vn)

    if convention is None:
        vi = _first(
            (v for v in active if v != v1 and v != vn and not ws.has_edge(v1, v)),
            "vi",
        )
        vj = _reroute_partner(ws, vi, vn)
        return _patch(PatchKind.THREE_VERTEX_REROUTE, v1, vn, vi, vj)

    loop_first = v1 in ws.loops
    loop_last = vn in ws.loops

    if not loop_first and not loop_last:
        if convention is Convention.DOUBLE:
            return _patch(PatchKind.SWAP_EDGE_FOR_TWO_LOOPS, v1, vn)
        return _patch(PatchKind.ADD_TWO_LOOPS, v1, vn)

    if loop_first:
        vi = _first(
            (v for v in active if v != v1 and not ws.has_edge(v1, v)), "vi"
        )
        _check_above_tail(ws, vi, vn)
        if loop_last or vi not in ws.loops:
            vj = _reroute_partner(ws, vi, vn)
            return _patch(PatchKind.THREE_VERTEX_REROUTE, v1, vn, vi, vj)
        if convention is Convention.REDUCED:
            return _patch(PatchKind.LOOP_TRANSFER_VIA_EDGE, v1, vn, vi)
        if ws.has_edge(vi, vn):
            return _patch(PatchKind.EDGE_TO_TAIL_LOOP, v1, vn, vi)
        return _patch(PatchKind.LOOP_SPLIT_TO_TWO_EDGES, v1, vn, vi)

    # Loop at vn only.
    tail_neighbours = ws.adj[vn]
    vi = _first(
        (v for v in ws.adj[v1] if v != vn and v not in tail_neighbours), "vi"
    )
    if convention is Convention.DOUBLE:
        return _patch(PatchKind.LOOP_AT_TAIL, v1, vn, vi)
    vj = _reroute_partner(ws, vi, vn)
    return _patch(PatchKind.TAIL_LOOP_REROUTE, v1, vn, vi, vj)


def _rebuild(
    d: DegreeSequence, convention: Convention | None
) -> tuple[GraphWithLoops, RealizationTrace]:
    descent = reduction_trace(d, convention or Convention.DOUBLE)
    ws = _Workspace(d.n, (convention or Convention.DOUBLE).loop_weight)
    patches: list[PatchCase] = []
    for step in reversed(descent.steps):
        patch = _choose_patch(ws, step, step.vertex_order, convention)
        logger.debug(
            "rebuild %s: %s %s", step.original, patch.kind.value, patch.witnesses
        )
        _apply(ws, patch)
        patches.append(patch)
    graph = ws.freeze()
    if not verify_realization(graph, d, convention or Convention.DOUBLE):
        raise InternalPatchFailure(f"rebuilt graph does not realize {d}")
    return graph, RealizationTrace.model_construct(
        reductions=descent, rebuild_steps=tuple(patches)
    )


def realize_loops_double(d: DegreeSequence) -> tuple[GraphWithLoops, RealizationTrace]:
    """Realize ``d`` as the degrees (loops counted twice) of a graph-with-loops.

    Raises:
        InfeasibleSequence: If ``d`` fails check_loops_double
        InternalPatchFailure: If no patch move applies at some level
    """
    report = check_for(Convention.DOUBLE)(d)
    if not report.passed:
        raise InfeasibleSequence(report)
    return _rebuild(d, Convention.DOUBLE)


def realize_loops_reduced(d: DegreeSequence) -> tuple[GraphWithLoops, RealizationTrace]:
    """Realize ``d`` as the reduced degrees (loops counted once) of a graph-with-loops.

    Raises:
        InfeasibleSequence: If ``d`` fails check_loops_reduced
        InternalPatchFailure: If no patch move applies at some level
    """
    report = check_for(Convention.REDUCED)(d)
    if not report.passed:
        raise InfeasibleSequence(report)
    return _rebuild(d, Convention.REDUCED)


def realize(
    d: DegreeSequence, convention: Convention
) -> tuple[GraphWithLoops, RealizationTrace]:
    if convention is Convention.DOUBLE:
        return realize_loops_double(d)
    return realize_loops_reduced(d)


def realize_simple_traced(d: DegreeSequence) -> tuple[GraphWithLoops, RealizationTrace]:
    """Loop-free realizer for graphic sequences, with its trace.

    Raises:
        InfeasibleSequence: If ``d`` fails the Erdős–Gallai check
    """
    report = check_erdos_gallai(d)
    if not report.passed:
        raise InfeasibleSequence(report)
    return _rebuild(d, None)


def realize_simple(d: DegreeSequence) -> GraphWithLoops:
    """Simple graph (no loops) with degree sequence ``d``."""
    graph, _ = realize_simple_traced(d)
    return graph


def replay(trace: RealizationTrace, n: int) -> GraphWithLoops:
    """Apply a trace's patch moves to the empty graph on ``n`` vertices."""
    ws = _Workspace(n, Convention.DOUBLE.loop_weight)
    for patch in trace.rebuild_steps:
        _apply(ws, patch)
    return ws.freeze()


def feasibility_descends(d: DegreeSequence, convention: Convention) -> bool:
    """Whether one reduction step keeps ``d`` feasible under ``convention``.

    Raises:
        InfeasibleSequence: If ``d`` itself is infeasible
        ZeroEntry: If ``d`` is empty or contains a zero
    """
    check = check_for(convention)
    report = check(d)
    if not report.passed:
        raise InfeasibleSequence(report)
    reduced, m = choudum_reduce(d, convention)
    result = check(reduced).passed
    logger.debug("descent %s -> %s (m=%d): %s", d, reduced, m, result)
    return result
