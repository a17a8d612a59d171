"""Text, JSON and DOT renderings of reports and graphs."""

from typing import Any

from loop_graphic.graphs import BipartiteGraph, GraphWithLoops, LoopMultigraph
from loop_graphic.sequences import CheckKind, CheckReport, DegreeSequence

PARITY_CHECKS = {CheckKind.EG, CheckKind.LOOPS_DOUBLE}


def format_sequence(d: DegreeSequence) -> str:
    """Space-separated entries, readable back as a SequenceFile."""
    return " ".join(str(v) for v in d.values)


def format_report(report: CheckReport) -> str:
    """Per-k table of one check.

    Args:
        report: Report from one of the sequence checks

    Returns:
        Multi-line text: verdict, parity, the lhs/rhs/slack table and the
        first violation
    """
    verdict = "PASSED" if report.passed else "FAILED"
    lines = [f"{report.check.value} check on {report.sequence}: {verdict}"]
    if report.check in PARITY_CHECKS:
        parity = "even" if report.parity_ok else "odd"
        lines.append(f"sum = {report.total} ({parity})")
    else:
        lines.append(f"sum = {report.total} (no parity condition)")
    if report.rows:
        lines.append(f"{'k':>4} {'lhs':>6} {'rhs':>6} {'slack':>6}")
        for row in report.rows:
            marker = "  <-" if row.k == report.first_violation else ""
            lines.append(
                f"{row.k:>4} {row.lhs:>6} {row.rhs:>6} {row.slack:>6}{marker}"
            )
    if report.first_violation is not None:
        row = report.rows[report.first_violation - 1]
        lines.append(
            f"first violation: k={row.k} (lhs {row.lhs} > rhs {row.rhs})"
        )
    else:
        lines.append("first violation: none")
    return "\n".join(lines)


def report_to_dict(report: CheckReport) -> dict[str, Any]:
    return {
        "check": report.check.value,
        "degrees": list(report.sequence.values),
        "passed": report.passed,
        "parity_ok": report.parity_ok,
        "total": report.total,
        "first_violation": report.first_violation,
        "rows": [
            {"k": row.k, "lhs": row.lhs, "rhs": row.rhs, "slack": row.slack}
            for row in report.rows
        ],
    }


def graph_to_dot(g: GraphWithLoops, name: str = "G") -> str:
    """DOT export; each loop is a self-edge."""
    result = [f"graph {name} {{"]
    for v in range(g.n):
        result.append(f"    {v};")
    for a, b in sorted(g.edges):
        result.append(f"    {a} -- {b};")
    for v in sorted(g.loops):
        result.append(f"    {v} -- {v};")
    result.append("}")
    return "\n".join(result)


def bipartite_to_dot(b: BipartiteGraph, name: str = "B") -> str:
    """DOT export with left vertices L<i> and right vertices R<j>."""
    result = [f"graph {name} {{", "    rankdir=LR;"]
    for i in range(b.n_left):
        result.append(f"    L{i} [shape=circle];")
    for j in range(b.n_right):
        result.append(f"    R{j} [shape=doublecircle];")
    for i, j in sorted(b.edges):
        result.append(f"    L{i} -- R{j};")
    result.append("}")
    return "\n".join(result)


def multigraph_to_dot(m: LoopMultigraph, name: str = "M") -> str:
    """DOT export; a pair of multiplicity 2 is written as two parallel edges."""
    result = [f"graph {name} {{"]
    for v in range(m.n):
        result.append(f"    {v};")
    for (a, b), mult in sorted(m.edge_multiplicities.items()):
        for _ in range(mult):
            result.append(f"    {a} -- {b};")
    result.append("}")
    return "\n".join(result)
