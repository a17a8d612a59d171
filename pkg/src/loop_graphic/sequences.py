"""Degree sequences, the four prefix-sum checks and the sequence transforms.

Every check compares, for k = 1..n, the prefix sum of the sequence against a
check-specific bound built from ``sum(min(k, d_i) for i > k)``:

* Erdős–Gallai (simple graphs):          k(k-1) + tail, even sum required
* loops, double convention:              k(k+1) + tail, even sum required
* loops, reduced convention:             k*k    + tail
* symmetric Gale–Ryser (bipartite):      sum(min(k, d_i) for all i)
"""

from __future__ import annotations

import logging
import operator
from collections.abc import Callable, Iterable, Iterator, Sequence
from enum import StrEnum
from itertools import combinations_with_replacement

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from loop_graphic.errors import (
    DegreeExceedsOrder,
    NegativeEntry,
    NonIntegerEntry,
    NotSorted,
    SequenceError,
    Underflow,
    ZeroEntry,
)

logger = logging.getLogger(__name__)


class Convention(StrEnum):
    """How a loop contributes to the degree of its vertex."""

    DOUBLE = "double"  # loops counted twice
    REDUCED = "reduced"  # loops counted once

    @property
    def loop_weight(self) -> int:
        return 2 if self is Convention.DOUBLE else 1


class CheckKind(StrEnum):
    """The four inequality families."""

    EG = "eg"
    LOOPS_DOUBLE = "loops-double"
    LOOPS_REDUCED = "loops-reduced"
    GALE_RYSER = "gale-ryser"


class DegreeSequence(BaseModel):
    """Nonincreasing tuple of nonnegative integers."""

    model_config = ConfigDict(frozen=True)

    values: tuple[int, ...] = ()

    @model_validator(mode="after")
    def _check_order(self) -> DegreeSequence:
        if any(v < 0 for v in self.values):
            raise ValueError("degree sequence entries must be nonnegative")
        if any(a < b for a, b in zip(self.values, self.values[1:], strict=False)):
            raise ValueError("degree sequence must be nonincreasing")
        return self

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def total(self) -> int:
        return sum(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, index: int) -> int:
        return self.values[index]

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.values) + ")"


class CheckRow(BaseModel):
    """One inequality of a check: the prefix sum at k against its bound."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=1)
    lhs: int
    rhs: int

    @computed_field  # type: ignore[prop-decorator]
    @property
    def slack(self) -> int:
        return self.rhs - self.lhs

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs


class CheckReport(BaseModel):
    """Per-k audit trail of one check on one sequence."""

    model_config = ConfigDict(frozen=True)

    check: CheckKind
    sequence: DegreeSequence
    passed: bool
    parity_ok: bool
    total: int
    rows: tuple[CheckRow, ...]
    first_violation: int | None = None


class ReductionStep(BaseModel):
    """One level of the descent: a positive sequence and its reduction."""

    model_config = ConfigDict(frozen=True)

    original: DegreeSequence
    reduced_sorted: DegreeSequence
    pivot_m: int
    tail_index: int
    # Stable vertex id at each position of ``original``.
    vertex_order: tuple[int, ...]

    @property
    def v_first(self) -> int:
        return self.vertex_order[0]

    @property
    def v_last(self) -> int:
        return self.vertex_order[-1]


class ReductionTrace(BaseModel):
    """The full descent of a sequence down to all zeros."""

    model_config = ConfigDict(frozen=True)

    steps: tuple[ReductionStep, ...]
    terminal: DegreeSequence


def make_sequence(raw: Iterable[int], autosort: bool = False) -> DegreeSequence:
    """Validate raw integers and wrap them in a DegreeSequence.

    Args:
        raw: Degrees in any iterable form
        autosort: Sort into nonincreasing order instead of rejecting disorder

    Raises:
        NonIntegerEntry: If some entry is not an integer (1.5, "2")
        NegativeEntry: If some entry is below zero
        NotSorted: If autosort is off and the input is not nonincreasing
    """
    entries = list(raw)
    try:
        values = [operator.index(v) for v in entries]
    except TypeError as e:
        raise NonIntegerEntry(f"non-integer degree in {entries!r}") from e
    negatives = [v for v in values if v < 0]
    if negatives:
        raise NegativeEntry(f"negative degree {negatives[0]} in {values}")
    if autosort:
        values.sort(reverse=True)
    else:
        for i in range(len(values) - 1):
            if values[i] < values[i + 1]:
                raise NotSorted(
                    f"entry {i + 2} ({values[i + 1]}) exceeds entry {i + 1} "
                    f"({values[i]}); pass autosort to reorder"
                )
    return DegreeSequence(values=tuple(values))


def _sequence(values: Sequence[int]) -> DegreeSequence:
    # Internal fast path: callers guarantee the invariants.
    return DegreeSequence.model_construct(values=tuple(values))


def _tail_min(values: tuple[int, ...], k: int) -> int:
    return sum(min(k, v) for v in values[k:])


def _run_check(
    d: DegreeSequence,
    kind: CheckKind,
    bound: Callable[[int, tuple[int, ...]], int],
    needs_even_sum: bool,
) -> CheckReport:
    values = d.values
    total = sum(values)
    parity_ok = total % 2 == 0 if needs_even_sum else True
    rows: list[CheckRow] = []
    first_violation: int | None = None
    prefix = 0
    for k in range(1, len(values) + 1):
        prefix += values[k - 1]
        rhs = bound(k, values)
        rows.append(CheckRow.model_construct(k=k, lhs=prefix, rhs=rhs))
        if first_violation is None and prefix > rhs:
            first_violation = k
    passed = parity_ok and first_violation is None
    logger.debug(
        "%s on %s: passed=%s parity_ok=%s first_violation=%s",
        kind.value,
        d,
        passed,
        parity_ok,
        first_violation,
    )
    return CheckReport(
        check=kind,
        sequence=d,
        passed=passed,
        parity_ok=parity_ok,
        total=total,
        rows=tuple(rows),
        first_violation=first_violation,
    )


def check_erdos_gallai(d: DegreeSequence) -> CheckReport:
    """Decide whether ``d`` is the degree sequence of a simple graph."""
    return _run_check(
        d,
        CheckKind.EG,
        lambda k, vs: k * (k - 1) + _tail_min(vs, k),
        needs_even_sum=True,
    )


def check_loops_double(d: DegreeSequence) -> CheckReport:
    """Decide realizability by a graph-with-loops, loops counted twice."""
    return _run_check(
        d,
        CheckKind.LOOPS_DOUBLE,
        lambda k, vs: k * (k + 1) + _tail_min(vs, k),
        needs_even_sum=True,
    )


def check_loops_reduced(d: DegreeSequence) -> CheckReport:
    """Decide realizability by a graph-with-loops, loops counted once.

    No parity condition applies: a single loop changes the sum by one.
    """
    return _run_check(
        d,
        CheckKind.LOOPS_REDUCED,
        lambda k, vs: k * k + _tail_min(vs, k),
        needs_even_sum=False,
    )


def check_gale_ryser_symmetric(d: DegreeSequence) -> CheckReport:
    """Decide whether (d, d) are the part degrees of a bipartite simple graph.

    Symmetric Gale–Ryser dominance: the prefix sums of ``d`` are bounded by
    those of its conjugate, written as ``sum(min(k, d_i))`` over all i.
    """
    return _run_check(
        d,
        CheckKind.GALE_RYSER,
        lambda k, vs: sum(min(k, v) for v in vs),
        needs_even_sum=False,
    )


_CHECKS: dict[CheckKind, Callable[[DegreeSequence], CheckReport]] = {
    CheckKind.EG: check_erdos_gallai,
    CheckKind.LOOPS_DOUBLE: check_loops_double,
    CheckKind.LOOPS_REDUCED: check_loops_reduced,
    CheckKind.GALE_RYSER: check_gale_ryser_symmetric,
}


def check(d: DegreeSequence, kind: CheckKind) -> CheckReport:
    """Run the check named by ``kind``."""
    return _CHECKS[kind](d)


def check_for(convention: Convention) -> Callable[[DegreeSequence], CheckReport]:
    """The graph-with-loops check matching a degree convention."""
    if convention is Convention.DOUBLE:
        return check_loops_double
    return check_loops_reduced


def conjugate(d: DegreeSequence) -> DegreeSequence:
    """Conjugate partition: entry k counts the d_i that are at least k."""
    if not d.values:
        return _sequence(())
    return _sequence([sum(1 for v in d.values if v >= k) for k in range(1, d[0] + 1)])


def strip_zeros(d: DegreeSequence) -> DegreeSequence:
    """Drop the trailing zeros (isolated vertices)."""
    values = d.values
    end = len(values)
    while end and values[end - 1] == 0:
        end -= 1
    return _sequence(values[:end])


def pivot_index(d: DegreeSequence) -> int:
    """The 1-based index m of the reduction step.

    m = n - 1 when all entries are equal, otherwise the last index with
    d_m = d_1 (so d_m > d_{m+1}). A single entry has m = 1.
    """
    values = d.values
    if not values:
        raise SequenceError("empty sequence has no pivot")
    n = len(values)
    if n == 1:
        return 1
    if values[0] == values[-1]:
        return n - 1
    m = 1
    while values[m] == values[0]:
        m += 1
    return m


def choudum_reduce(
    d: DegreeSequence, convention: Convention = Convention.DOUBLE
) -> tuple[DegreeSequence, int]:
    """Lower d_1 and d_n by one and re-sort.

    A one-entry sequence stands for a single vertex whose last edge is a
    loop: it drops by the loop weight of ``convention`` (2 double, 1 reduced).

    Returns:
        The re-sorted sequence d'' and the pivot index m

    Raises:
        ZeroEntry: If ``d`` is empty or contains a zero
        Underflow: If a single entry is smaller than the loop weight
    """
    values = d.values
    if not values or values[-1] == 0:
        raise ZeroEntry(f"reduction needs strictly positive entries, got {d}")
    if len(values) == 1:
        weight = convention.loop_weight
        if values[0] < weight:
            raise Underflow(
                f"cannot remove a loop of weight {weight} from a vertex of degree "
                f"{values[0]}"
            )
        return _sequence((values[0] - weight,)), 1
    m = pivot_index(d)
    lowered = list(values)
    lowered[0] -= 1
    lowered[-1] -= 1
    lowered.sort(reverse=True)
    return _sequence(lowered), m


def reduction_trace(
    d: DegreeSequence, convention: Convention = Convention.DOUBLE
) -> ReductionTrace:
    """Apply the reduction step repeatedly until every entry is zero.

    Vertex ids are the positions of ``d``. At each level the positive
    vertices are ordered by (degree descending, id ascending); the first and
    last of that order are the vertices lowered.
    """
    targets = list(d.values)
    steps: list[ReductionStep] = []
    while True:
        order = sorted(
            (v for v in range(len(targets)) if targets[v] > 0),
            key=lambda v: (-targets[v], v),
        )
        if not order:
            break
        current = _sequence([targets[v] for v in order])
        reduced, m = choudum_reduce(current, convention)
        first, last = order[0], order[-1]
        if first == last:
            targets[first] -= convention.loop_weight
        else:
            targets[first] -= 1
            targets[last] -= 1
        steps.append(
            ReductionStep.model_construct(
                original=current,
                reduced_sorted=reduced,
                pivot_m=m,
                tail_index=len(order),
                vertex_order=tuple(order),
            )
        )
        logger.debug("reduce %s -> %s (m=%d)", current, reduced, m)
    return ReductionTrace.model_construct(
        steps=tuple(steps), terminal=_sequence([0] * len(targets))
    )


def increment_all(d: DegreeSequence) -> DegreeSequence:
    """Raise every entry by one."""
    return _sequence([v + 1 for v in d.values])


def complement_sequence(d: DegreeSequence) -> DegreeSequence:
    """Degrees of the complement inside the complete graph-with-loops.

    Entry i becomes n - d_{n+1-i} (reduced degrees: each vertex of the
    complete graph-with-loops on n vertices has reduced degree n).

    Raises:
        DegreeExceedsOrder: If d_1 > n
    """
    n = d.n
    if n and d[0] > n:
        raise DegreeExceedsOrder(f"largest degree {d[0]} exceeds order {n}")
    return _sequence([n - v for v in reversed(d.values)])


def graphic_complement_sequence(d: DegreeSequence) -> DegreeSequence:
    """Degrees of the complement inside the complete simple graph K_n.

    Raises:
        DegreeExceedsOrder: If d_1 > n - 1
    """
    n = d.n
    if n and d[0] > n - 1:
        raise DegreeExceedsOrder(f"largest degree {d[0]} exceeds n - 1 = {n - 1}")
    return _sequence([n - 1 - v for v in reversed(d.values)])


def all_sequences(n: int, d_max: int) -> Iterator[DegreeSequence]:
    """Every nonincreasing sequence of length n with entries in [0, d_max].

    Yielded in ascending lexicographic order.
    """
    tuples = sorted(
        tuple(reversed(c)) for c in combinations_with_replacement(range(d_max + 1), n)
    )
    for values in tuples:
        yield _sequence(values)


def sequences_up_to(max_n: int, slack: int = 0) -> Iterator[DegreeSequence]:
    """Every nonincreasing sequence with n <= max_n and entries <= n + slack."""
    for n in range(max_n + 1):
        yield from all_sequences(n, n + slack)
