"""Exception hierarchy shared by every loop-graphic module."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from loop_graphic.sequences import CheckReport


class LoopGraphicError(Exception):
    """Base class for all loop-graphic errors."""


class SequenceError(LoopGraphicError):
    """A degree sequence violates an operation's hypothesis."""


class NegativeEntry(SequenceError):
    """A degree sequence contains a negative entry."""


class NotSorted(SequenceError):
    """A degree sequence is not in nonincreasing order."""


class NonIntegerEntry(SequenceError):
    """A degree sequence contains an entry that is not an integer."""


class ZeroEntry(SequenceError):
    """The reduction step was given a sequence containing a zero."""


class Underflow(SequenceError):
    """Lowering the single entry of a one-vertex sequence would go negative."""


class DegreeExceedsOrder(SequenceError):
    """The largest entry exceeds the sequence length, so no complement exists."""


class InfeasibleSequence(LoopGraphicError):
    """A realizer was asked for a sequence that fails its check."""

    def __init__(self, report: CheckReport) -> None:
        self.report = report
        where = (
            f"first violation at k={report.first_violation}"
            if report.first_violation is not None
            else "odd degree sum"
        )
        super().__init__(f"{report.check.value} check failed: {where}")


class InternalPatchFailure(LoopGraphicError):
    """No patch move applied during a rebuild; the realizer has a bug."""


class GraphError(LoopGraphicError):
    """Base class for graph construction errors."""


class InvalidGraph(GraphError):
    """Graph data violates the structural invariants."""


class PartSizeMismatch(GraphError):
    """A symmetric operation was applied to a bipartite graph with unequal parts."""


class BudgetExceeded(LoopGraphicError):
    """An oracle query would exceed its vertex or wall-clock budget."""


class InputFormatError(LoopGraphicError):
    """A sequence or graph file could not be parsed."""
