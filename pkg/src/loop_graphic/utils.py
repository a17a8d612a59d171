"""Utility helpers for loop-graphic."""

import logging
import time
from collections.abc import Iterator
from contextlib import contextmanager

from loop_graphic.errors import BudgetExceeded

logger = logging.getLogger(__name__)


class Deadline:
    """Wall-clock budget checked periodically by long searches."""

    def __init__(self, seconds: float, label: str = "query") -> None:
        self.seconds = seconds
        self.label = label
        self.started = time.monotonic()
        self.expires = self.started + seconds

    def elapsed(self) -> float:
        return time.monotonic() - self.started

    def check(self) -> None:
        """Raise BudgetExceeded once the deadline has passed.

        Raises:
            BudgetExceeded: If more than ``seconds`` have elapsed
        """
        if time.monotonic() > self.expires:
            logger.warning("%s exceeded its %.1fs budget", self.label, self.seconds)
            raise BudgetExceeded(
                f"{self.label} exceeded its {self.seconds:.1f}s time budget"
            )


@contextmanager
def timed(label: str) -> Iterator[None]:
    """Log how long the enclosed block took."""
    started = time.monotonic()
    try:
        yield
    finally:
        logger.info("%s took %.3fs", label, time.monotonic() - started)
