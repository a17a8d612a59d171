#!/usr/bin/env python
"""Acceptance replay - runs every desk-scale criterion and logs a verdict each."""

import logging
import random
import sys
import time
from collections.abc import Callable
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from loop_graphic.errors import LoopGraphicError
from loop_graphic.graphs import (
    all_graphs,
    bipartite_part_degrees,
    complete_graph_with_loops,
    degree_vector,
    degrees,
    degrees_reduced,
    multigraph_degrees,
    random_graph_with_loops,
    verify_realization,
)
from loop_graphic.oracle import (
    OracleBudget,
    exhaustive_sequence_scan,
    oracle_bipartite_symmetric,
)
from loop_graphic.realize import feasibility_descends, realize
from loop_graphic.sequences import (
    Convention,
    check_erdos_gallai,
    check_for,
    check_gale_ryser_symmetric,
    check_loops_reduced,
    choudum_reduce,
    complement_sequence,
    increment_all,
    make_sequence,
    sequences_up_to,
)
from loop_graphic.transforms import (
    involution_check,
    symmetric_bipartite_realization,
    tensor_double_cover,
    topological_double_cover,
)

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)
logger = logging.getLogger(__name__)

BUDGET = OracleBudget(max_n=6, timeout=120.0, bipartite_max_n=4)


def check_equivalence(convention: Convention, slack: int) -> str | None:
    """Check vs oracle on n <= 5, and the realizer on every feasible sequence."""
    check = check_for(convention)
    for n in range(6):
        for d, realizable in exhaustive_sequence_scan(
            n, n + slack, convention, BUDGET
        ):
            passed = check(d).passed
            if passed != realizable:
                return f"check and oracle disagree on {d}"
            if passed:
                graph, _ = realize(d, convention)
                if not verify_realization(graph, d, convention):
                    return f"realizer output does not verify for {d}"
    return None


def bipartite_equivalence() -> str | None:
    for d in sequences_up_to(6):
        expected = check_gale_ryser_symmetric(d).passed
        if check_loops_reduced(d).passed != expected:
            return f"reduced check and Gale-Ryser disagree on {d}"
        if d.n <= 4 and oracle_bipartite_symmetric(d, BUDGET).realizable != expected:
            return f"bipartite oracle disagrees on {d}"
    return None


def counterexample_pair() -> str | None:
    d = make_sequence([3, 3, 1, 1])
    report = check_erdos_gallai(d)
    row = report.rows[1]
    if report.first_violation != 2 or (row.lhs, row.rhs) != (6, 4):
        return f"unexpected Erdős–Gallai report for {d}"
    incremented = increment_all(d)
    if incremented.values != (4, 4, 2, 2):
        return f"increment_all gave {incremented}"
    if not check_gale_ryser_symmetric(incremented).passed:
        return f"{incremented} should be bipartite graphic"
    return None


def random_realizations() -> str | None:
    rng = random.Random(20240517)
    cases = []
    for i in range(1000):
        convention = Convention.DOUBLE if i % 2 else Convention.REDUCED
        g = random_graph_with_loops(rng.randint(1, 40), rng.random(), rng)
        cases.append((degrees(g, convention), convention))
    started = time.perf_counter()
    for d, convention in cases:
        graph, _ = realize(d, convention)
        if not verify_realization(graph, d, convention):
            return f"realizer output does not verify for {d}"
    elapsed = time.perf_counter() - started
    logger.info("1000 random realizations took %.2fs", elapsed)
    if elapsed >= 10.0:
        return f"1000 realizations took {elapsed:.1f}s"
    return None


def reduction_feasibility() -> str | None:
    for convention, slack in ((Convention.DOUBLE, 1), (Convention.REDUCED, 0)):
        check = check_for(convention)
        for d in sequences_up_to(6, slack):
            if d.n and d.values[-1] > 0 and check(d).passed:
                if not feasibility_descends(d, convention):
                    return f"{convention.value} reduction of {d} is infeasible"
    return None


def cover_degrees() -> str | None:
    rng = random.Random(7)
    graphs = [
        random_graph_with_loops(rng.randint(0, 12), rng.random(), rng)
        for _ in range(200)
    ]
    for n in range(4):
        graphs.extend(all_graphs(n))
    for g in graphs:
        reduced = degrees_reduced(g)
        if bipartite_part_degrees(tensor_double_cover(g)) != (reduced, reduced):
            return f"tensor cover changes degrees of {g}"
        double = degree_vector(g, Convention.DOUBLE)
        if multigraph_degrees(topological_double_cover(g)) != double + double:
            return f"topological cover changes degrees of {g}"
    k33 = tensor_double_cover(complete_graph_with_loops(3))
    if len(k33.edges) != 9:
        return f"cover of the complete graph-with-loops has {len(k33.edges)} edges"
    return None


def closure_properties() -> str | None:
    for d in sequences_up_to(6):
        if not check_gale_ryser_symmetric(d).passed:
            continue
        if d.n and d.values[-1] > 0:
            reduced, _ = choudum_reduce(d, Convention.REDUCED)
            if not check_gale_ryser_symmetric(reduced).passed:
                return f"reduction of {d} is not bipartite graphic"
        if not check_gale_ryser_symmetric(complement_sequence(d)).passed:
            return f"complement of {d} is not bipartite graphic"
    return None


def symmetric_realizations() -> str | None:
    for d in sequences_up_to(6):
        if not check_gale_ryser_symmetric(d).passed:
            continue
        b = symmetric_bipartite_realization(d)
        if bipartite_part_degrees(b) != (d, d) or not involution_check(b):
            return f"symmetric realization of {d} is wrong"
    return None


CRITERIA: list[tuple[str, Callable[[], str | None]]] = [
    ("double check vs oracle", lambda: check_equivalence(Convention.DOUBLE, 1)),
    ("reduced check vs oracle", lambda: check_equivalence(Convention.REDUCED, 0)),
    ("bipartite graphic equivalence", bipartite_equivalence),
    ("counterexample pair", counterexample_pair),
    ("random realizations", random_realizations),
    ("reduction feasibility", reduction_feasibility),
    ("cover degrees", cover_degrees),
    ("closure properties", closure_properties),
    ("symmetric realizations", symmetric_realizations),
]


def main() -> int:
    """Run every criterion; exit 1 if any fails."""
    failures = 0
    for name, criterion in CRITERIA:
        started = time.perf_counter()
        try:
            problem = criterion()
        except LoopGraphicError as e:
            problem = f"{type(e).__name__}: {e}"
        elapsed = time.perf_counter() - started
        if problem is None:
            logger.info("PASS %s (%.2fs)", name, elapsed)
        else:
            failures += 1
            logger.error("FAIL %s: %s", name, problem)
    logger.info("%d of %d criteria passed", len(CRITERIA) - failures, len(CRITERIA))
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
