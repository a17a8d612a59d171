"""Brute-force realizability oracles for small sequences.

The oracles enumerate edge/loop slots depth-first, trying "absent" before
"present", so the first witness found is the lexicographically smallest bit
vector over the slots (pairs in canonical order, then loops). Vertex i is
assigned target degree d_i; any realization can be relabeled that way, so
fixing the assignment loses nothing and prunes much harder.
"""

from __future__ import annotations

import json
import logging
from datetime import datetime
from pathlib import Path
from typing import Any

from joblib import Parallel, delayed
from pydantic import BaseModel, ConfigDict, Field

from loop_graphic.config import Settings, get_settings
from loop_graphic.errors import BudgetExceeded
from loop_graphic.graphs import (
    BipartiteGraph,
    GraphWithLoops,
    graph_to_document,
)
from loop_graphic.sequences import Convention, DegreeSequence, all_sequences
from loop_graphic.utils import Deadline, timed

logger = logging.getLogger(__name__)

# A slot is one potential edge or loop: the (vertex, weight) pairs it feeds.
Slot = tuple[tuple[int, int], ...]

_DEADLINE_EVERY = 4096


class OracleBudget(BaseModel):
    """Size and time limits for one oracle query."""

    model_config = ConfigDict(frozen=True)

    max_n: int = Field(default=5, ge=0)
    timeout: float = Field(default=30.0, gt=0)
    bipartite_max_n: int = Field(default=4, ge=0)

    @classmethod
    def from_settings(cls, settings: Settings | None = None) -> OracleBudget:
        settings = settings or get_settings()
        return cls(
            max_n=settings.oracle_max_n,
            timeout=settings.oracle_timeout,
            bipartite_max_n=settings.bipartite_max_n,
        )


class OracleResult(BaseModel):
    """Verdict of oracle_realizable, with the first witness when one exists."""

    model_config = ConfigDict(frozen=True)

    sequence: DegreeSequence
    convention: Convention
    realizable: bool
    witness: GraphWithLoops | None = None


class BipartiteOracleResult(BaseModel):
    """Verdict of oracle_bipartite_symmetric."""

    model_config = ConfigDict(frozen=True)

    sequence: DegreeSequence
    realizable: bool
    witness: BipartiteGraph | None = None


def _search(
    targets: list[int], slots: list[Slot], deadline: Deadline
) -> list[int] | None:
    """Indices of a slot subset meeting every target exactly, or None."""
    degree = [0] * len(targets)
    potential = [0] * len(targets)
    for slot in slots:
        for v, w in slot:
            potential[v] += w
    if any(p < t for p, t in zip(potential, targets, strict=True)):
        return None

    chosen: list[int] = []
    nodes = 0
    pruned = 0

    def descend(index: int) -> bool:
        nonlocal nodes, pruned
        nodes += 1
        if nodes % _DEADLINE_EVERY == 0:
            deadline.check()
        if index == len(slots):
            return degree == targets
        slot = slots[index]
        for v, w in slot:
            potential[v] -= w
        if all(degree[v] + potential[v] >= targets[v] for v, _ in slot):
            if descend(index + 1):
                return True
        else:
            pruned += 1
        if all(degree[v] + w <= targets[v] for v, w in slot):
            for v, w in slot:
                degree[v] += w
            chosen.append(index)
            if descend(index + 1):
                return True
            chosen.pop()
            for v, w in slot:
                degree[v] -= w
        else:
            pruned += 1
        for v, w in slot:
            potential[v] += w
        return False

    found = descend(0)
    logger.debug(
        "search over %d slots: %d nodes, %d pruned", len(slots), nodes, pruned
    )
    return chosen if found else None


def _graph_slots(n: int, convention: Convention) -> list[Slot]:
    weight = convention.loop_weight
    slots: list[Slot] = [((a, 1), (b, 1)) for a in range(n) for b in range(a + 1, n)]
    slots.extend(((v, weight),) for v in range(n))
    return slots


def oracle_realizable(
    d: DegreeSequence,
    convention: Convention,
    budget: OracleBudget | None = None,
) -> OracleResult:
    """Decide by exhaustive search whether a graph-with-loops realizes ``d``.

    Raises:
        BudgetExceeded: If ``d`` is longer than budget.max_n or the search
            runs past budget.timeout
    """
    budget = budget or OracleBudget.from_settings()
    n = d.n
    if n > budget.max_n:
        raise BudgetExceeded(
            f"n={n} exceeds oracle max_n={budget.max_n} "
            f"(2^{n * (n + 1) // 2} graphs)"
        )
    slots = _graph_slots(n, convention)
    deadline = Deadline(budget.timeout, f"oracle {convention.value} {d}")
    picks = _search(list(d.values), slots, deadline)
    if picks is None:
        return OracleResult(sequence=d, convention=convention, realizable=False)
    edges = []
    loops = []
    for index in picks:
        slot = slots[index]
        if len(slot) == 2:
            edges.append((slot[0][0], slot[1][0]))
        else:
            loops.append(slot[0][0])
    witness = GraphWithLoops(n=n, edges=frozenset(edges), loops=frozenset(loops))
    return OracleResult(
        sequence=d, convention=convention, realizable=True, witness=witness
    )


def oracle_bipartite_symmetric(
    d: DegreeSequence, budget: OracleBudget | None = None
) -> BipartiteOracleResult:
    """Decide by exhaustive search whether (d, d) are bipartite part degrees.

    Raises:
        BudgetExceeded: If ``d`` is longer than budget.bipartite_max_n or
            the search runs past budget.timeout
    """
    budget = budget or OracleBudget.from_settings()
    n = d.n
    if n > budget.bipartite_max_n:
        raise BudgetExceeded(
            f"n={n} exceeds bipartite oracle cap {budget.bipartite_max_n} "
            f"(2^{n * n} graphs)"
        )
    # Right vertex j sits at index n + j.
    slots: list[Slot] = [((i, 1), (n + j, 1)) for i in range(n) for j in range(n)]
    deadline = Deadline(budget.timeout, f"bipartite oracle {d}")
    picks = _search(list(d.values) * 2, slots, deadline)
    if picks is None:
        return BipartiteOracleResult(sequence=d, realizable=False)
    edges = frozenset((slots[i][0][0], slots[i][1][0] - n) for i in picks)
    witness = BipartiteGraph(n_left=n, n_right=n, edges=edges)
    return BipartiteOracleResult(sequence=d, realizable=True, witness=witness)


def _verdict(
    d: DegreeSequence, convention: Convention, budget: OracleBudget
) -> tuple[DegreeSequence, bool]:
    return d, oracle_realizable(d, convention, budget).realizable


def exhaustive_sequence_scan(
    n: int,
    d_max: int,
    convention: Convention,
    budget: OracleBudget | None = None,
    workers: int | None = None,
) -> list[tuple[DegreeSequence, bool]]:
    """Oracle verdict for every nonincreasing length-n sequence with entries <= d_max.

    Sequences come back in ascending lexicographic order. Queries run on
    ``workers`` joblib workers (default Settings.scan_workers).

    Raises:
        BudgetExceeded: If n exceeds budget.max_n
    """
    settings = get_settings()
    budget = budget or OracleBudget.from_settings(settings)
    workers = settings.scan_workers if workers is None else workers
    if n > budget.max_n:
        raise BudgetExceeded(f"scan length n={n} exceeds oracle max_n={budget.max_n}")
    sequences = list(all_sequences(n, d_max))
    logger.info(
        "Scanning %d sequences (n=%d, d_max=%d, %s) on %d worker(s)",
        len(sequences),
        n,
        d_max,
        convention.value,
        workers,
    )
    with timed(f"scan n={n} d_max={d_max} {convention.value}"):
        results: list[tuple[DegreeSequence, bool]] = Parallel(n_jobs=workers)(
            delayed(_verdict)(d, convention, budget) for d in sequences
        )
    return results


class FixtureStore:
    """Append-only JSONL log of oracle verdicts.

    One file per convention at {fixtures_path}/{convention}.jsonl, one line
    per (sequence, verdict, witness).
    """

    def __init__(self, fixtures_path: Path | str) -> None:
        self.fixtures_dir = Path(fixtures_path)
        self.fixtures_dir.mkdir(parents=True, exist_ok=True)

    def _get_fixture_file(self, convention: Convention) -> Path:
        return self.fixtures_dir / f"{convention.value}.jsonl"

    def append(self, result: OracleResult) -> None:
        """Append one verdict line."""
        entry = {
            "ts": datetime.now().astimezone().isoformat(),
            "convention": result.convention.value,
            "degrees": list(result.sequence.values),
            "realizable": result.realizable,
            "witness": graph_to_document(result.witness) if result.witness else None,
        }
        path = self._get_fixture_file(result.convention)
        with path.open("a", encoding="utf-8") as f:
            f.write(json.dumps(entry, ensure_ascii=False) + "\n")
        logger.info("Fixture appended to %s", path)

    def read(self, convention: Convention) -> list[dict[str, Any]]:
        """All verdict lines for a convention, oldest first."""
        path = self._get_fixture_file(convention)
        if not path.exists():
            return []

        entries = []
        with path.open("r", encoding="utf-8") as f:
            for line in f:
                if line.strip():
                    try:
                        entries.append(json.loads(line))
                    except json.JSONDecodeError:
                        continue  # Skip malformed lines

        return entries
