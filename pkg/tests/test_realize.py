import random
import time

import pytest
from hypothesis import given
from pydantic import ValidationError
from strategies import graphs_with_loops, seq

from loop_graphic.errors import InfeasibleSequence, InternalPatchFailure
from loop_graphic.graphs import (
    GraphWithLoops,
    complete_graph_with_loops,
    cycle_graph,
    degrees,
    empty_graph,
    random_graph_with_loops,
    verify_realization,
)
from loop_graphic.realize import (
    PatchCase,
    PatchKind,
    RealizationTrace,
    feasibility_descends,
    realize,
    realize_loops_double,
    realize_loops_reduced,
    realize_simple,
    realize_simple_traced,
    replay,
)
from loop_graphic.sequences import (
    Convention,
    check_erdos_gallai,
    check_for,
    reduction_trace,
    sequences_up_to,
)


def _moves(trace: RealizationTrace) -> list[tuple[PatchKind, tuple[int, ...]]]:
    return [(patch.kind, patch.witnesses) for patch in trace.rebuild_steps]


class TestRealizeDouble:
    def test_complete_with_loops(self) -> None:
        graph, trace = realize_loops_double(seq(4, 4, 4))
        assert graph == complete_graph_with_loops(3)
        assert _moves(trace) == [
            (PatchKind.ADD_EDGE, (0, 1)),
            (PatchKind.SWAP_EDGE_FOR_TWO_LOOPS, (0, 1)),
            (PatchKind.ADD_EDGE, (1, 2)),
            (PatchKind.ADD_EDGE, (0, 2)),
            (PatchKind.EDGE_TO_TAIL_LOOP, (1, 2, 0)),
            (PatchKind.ADD_EDGE, (0, 2)),
        ]

    def test_single_loop(self) -> None:
        graph, trace = realize_loops_double(seq(2))
        assert graph == GraphWithLoops(n=1, loops=frozenset({0}))
        assert _moves(trace) == [(PatchKind.ADD_LOOP, (0,))]

    def test_larger_sequence(self) -> None:
        d = seq(5, 5, 4, 4, 2, 2)
        graph, _ = realize_loops_double(d)
        assert verify_realization(graph, d, Convention.DOUBLE)

    def test_odd_sum_is_infeasible(self) -> None:
        with pytest.raises(InfeasibleSequence) as excinfo:
            realize_loops_double(seq(3))
        assert not excinfo.value.report.parity_ok


class TestRealizeReduced:
    def test_complete_with_loops(self) -> None:
        graph, trace = realize_loops_reduced(seq(3, 3, 3))
        assert graph == complete_graph_with_loops(3)
        assert _moves(trace) == [
            (PatchKind.ADD_LOOP, (1,)),
            (PatchKind.ADD_EDGE, (1, 0)),
            (PatchKind.ADD_EDGE, (0, 2)),
            (PatchKind.ADD_EDGE, (1, 2)),
            (PatchKind.ADD_TWO_LOOPS, (0, 2)),
        ]

    def test_single_loop(self) -> None:
        graph, _ = realize_loops_reduced(seq(1))
        assert graph == GraphWithLoops(n=1, loops=frozenset({0}))

    def test_not_graphic_but_reduced_feasible(self) -> None:
        d = seq(3, 3, 1, 1)
        graph, _ = realize_loops_reduced(d)
        assert verify_realization(graph, d, Convention.REDUCED)

    def test_infeasible(self) -> None:
        with pytest.raises(InfeasibleSequence) as excinfo:
            realize_loops_reduced(seq(2))
        assert excinfo.value.report.first_violation == 1


class TestRealizeSimple:
    def test_triangle(self) -> None:
        assert realize_simple(seq(2, 2, 2)) == cycle_graph(3)

    def test_isolated_vertices(self) -> None:
        assert realize_simple(seq(0, 0)) == empty_graph(2)

    def test_loop_free(self) -> None:
        d = seq(3, 3, 2, 2, 2)
        graph = realize_simple(d)
        assert not graph.loops
        assert verify_realization(graph, d, Convention.DOUBLE)

    def test_not_graphic(self) -> None:
        with pytest.raises(InfeasibleSequence) as excinfo:
            realize_simple(seq(3, 3, 1, 1))
        assert excinfo.value.report.first_violation == 2


def test_trailing_zeros_stay_isolated() -> None:
    graph, _ = realize_loops_reduced(seq(2, 1, 1, 0, 0))
    assert graph.n == 5
    assert all(3 not in edge and 4 not in edge for edge in graph.edges)
    assert not graph.loops & {3, 4}


class TestPatchCase:
    def test_arity(self) -> None:
        with pytest.raises(ValidationError):
            PatchCase(kind=PatchKind.ADD_EDGE, witnesses=(1,))

    def test_distinct_witnesses(self) -> None:
        with pytest.raises(ValidationError):
            PatchCase(kind=PatchKind.THREE_VERTEX_REROUTE, witnesses=(0, 1, 1, 2))


def test_replay_rejects_impossible_moves() -> None:
    add = PatchCase(kind=PatchKind.ADD_EDGE, witnesses=(0, 1))
    trace = RealizationTrace(
        reductions=reduction_trace(seq()), rebuild_steps=(add, add)
    )
    with pytest.raises(InternalPatchFailure):
        replay(trace, 2)


@pytest.mark.parametrize(
    ("values", "convention"),
    [
        ((4, 4, 4), Convention.DOUBLE),
        ((3, 3, 1, 1), Convention.REDUCED),
        ((2, 2), Convention.DOUBLE),
    ],
)
def test_feasibility_descends_examples(
    values: tuple[int, ...], convention: Convention
) -> None:
    assert feasibility_descends(seq(*values), convention)


def test_feasibility_descends_rejects_infeasible() -> None:
    with pytest.raises(InfeasibleSequence):
        feasibility_descends(seq(2), Convention.REDUCED)


@pytest.mark.slow
@pytest.mark.parametrize(
    ("convention", "slack"), [(Convention.DOUBLE, 1), (Convention.REDUCED, 0)]
)
def test_realizers_total_on_small_feasible_sequences(
    convention: Convention, slack: int
) -> None:
    check = check_for(convention)
    realized = 0
    for d in sequences_up_to(5, slack=slack):
        if not check(d).passed:
            continue
        graph, trace = realize(d, convention)
        assert verify_realization(graph, d, convention), d
        assert replay(trace, d.n) == graph, d
        realized += 1
    assert realized > 0


@pytest.mark.slow
def test_simple_realizer_total_on_small_graphic_sequences() -> None:
    for d in sequences_up_to(6, slack=-1):
        if check_erdos_gallai(d).passed:
            graph, trace = realize_simple_traced(d)
            assert not graph.loops
            assert verify_realization(graph, d, Convention.DOUBLE), d
            assert replay(trace, d.n) == graph


@pytest.mark.slow
@pytest.mark.parametrize(
    ("convention", "slack"), [(Convention.DOUBLE, 1), (Convention.REDUCED, 0)]
)
def test_reduction_stays_feasible_exhaustive(
    convention: Convention, slack: int
) -> None:
    check = check_for(convention)
    for d in sequences_up_to(6, slack=slack):
        if d.n and d.values[-1] > 0 and check(d).passed:
            assert feasibility_descends(d, convention), d


@given(graphs_with_loops(max_n=12))
def test_degrees_of_a_graph_are_realized_again(g: GraphWithLoops) -> None:
    for convention in Convention:
        d = degrees(g, convention)
        graph, trace = realize(d, convention)
        assert verify_realization(graph, d, convention)
        assert len(trace.rebuild_steps) == len(trace.reductions.steps)
        assert replay(trace, d.n) == graph
        assert realize(d, convention) == (graph, trace)


@pytest.mark.slow
def test_thousand_random_sequences_realize_quickly() -> None:
    rng = random.Random(20240517)
    cases = []
    for i in range(1000):
        convention = Convention.DOUBLE if i % 2 else Convention.REDUCED
        g = random_graph_with_loops(rng.randint(1, 40), rng.random(), rng)
        cases.append((degrees(g, convention), convention))

    started = time.perf_counter()
    for d, convention in cases:
        graph, _ = realize(d, convention)
        assert verify_realization(graph, d, convention)
    assert time.perf_counter() - started < 10.0
