"""Monotonic stopwatch with tic/toc semantics."""

from __future__ import annotations

import time


class Timer:
    """Wall-clock stopwatch on a monotonic clock.

    Construction starts the timer; :meth:`toc` snapshots the end instant,
    so :meth:`elapsed_seconds` stays stable until the next toc or tic.
    """

    def __init__(self):
        self.tic()

    def tic(self) -> "Timer":
        """Restart the stopwatch."""
        self._start = time.perf_counter()
        self._end = self._start
        return self

    def toc(self) -> "Timer":
        """Record the end instant; returns self so it can be formatted inline."""
        self._end = time.perf_counter()
        return self

    def elapsed_seconds(self) -> float:
        """Seconds between the last tic and the last toc (never negative)."""
        return self._end - self._start

    def __str__(self) -> str:
        return str(self.elapsed_seconds())

    def __format__(self, spec: str) -> str:
        return format(self.elapsed_seconds(), spec)
