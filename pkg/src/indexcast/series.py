"""Calendar-anchored monthly series and daily-to-monthly aggregation.

A :class:`MonthlyTimeSeries` stores one value per calendar month with no
gaps; contiguity is guaranteed by construction (a start month plus an
ordered tuple of values).  All types are immutable, so instances can be
shared freely across threads.
"""

from __future__ import annotations

import datetime
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyInputError, GapInSeriesError, OutOfRangeError

MONTH_ABBR = ("Jan", "Feb", "Mar", "Apr", "May", "Jun",
              "Jul", "Aug", "Sep", "Oct", "Nov", "Dec")

PERIOD = 12


@dataclass(frozen=True, order=True)
class MonthStamp:
    """A calendar month; ordering is (year, month) lexicographic."""

    year: int
    month: int

    def __post_init__(self):
        if not 1 <= self.month <= 12:
            raise ValueError(f"month must be in 1..12, got {self.month}")

    @classmethod
    def parse(cls, text: str) -> "MonthStamp":
        """Parse ``YYYY-MM``."""
        parts = text.strip().split("-")
        if len(parts) != 2:
            raise ValueError(f"expected YYYY-MM, got {text!r}")
        return cls(int(parts[0]), int(parts[1]))

    def offset(self, months: int) -> "MonthStamp":
        """The month `months` steps after this one (negative steps back)."""
        k = self.year * 12 + (self.month - 1) + months
        return MonthStamp(k // 12, k % 12 + 1)

    def months_until(self, other: "MonthStamp") -> int:
        """Signed number of months from self to other."""
        return (other.year - self.year) * 12 + (other.month - self.month)

    @property
    def month_index(self) -> int:
        """Calendar month as 0-based index (Jan=0 .. Dec=11)."""
        return self.month - 1

    def __str__(self):
        return f"{self.year:04d}-{self.month:02d}"


@dataclass(frozen=True)
class DailyObservation:
    """One dated observation; dates need not be contiguous."""

    date: datetime.date
    value: float

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError(f"value must be finite, got {self.value}")


@dataclass(frozen=True)
class MonthlyTimeSeries:
    """Consecutive monthly values anchored at a start month (period 12)."""

    start: MonthStamp
    values: tuple[float, ...]

    def __post_init__(self):
        values = tuple(float(v) for v in self.values)
        if not values:
            raise EmptyInputError("monthly series must contain at least one value")
        for i, v in enumerate(values):
            if not math.isfinite(v):
                raise ValueError(f"non-finite value at position {i}: {v}")
        object.__setattr__(self, "values", values)

    @property
    def period(self) -> int:
        return PERIOD

    @property
    def end(self) -> MonthStamp:
        return self.start.offset(len(self.values) - 1)

    def __len__(self):
        return len(self.values)

    def month_at(self, i: int) -> MonthStamp:
        if not 0 <= i < len(self.values):
            raise OutOfRangeError(f"position {i} outside series of length {len(self.values)}")
        return self.start.offset(i)

    def index_of(self, stamp: MonthStamp) -> int:
        i = self.start.months_until(stamp)
        if not 0 <= i < len(self.values):
            raise OutOfRangeError(f"{stamp} outside series span {self.start}..{self.end}")
        return i

    def month_indices(self) -> tuple[int, ...]:
        """Calendar month index (0..11) of each position."""
        first = self.start.month_index
        return tuple((first + i) % 12 for i in range(len(self.values)))

    def months(self) -> tuple[MonthStamp, ...]:
        return tuple(self.start.offset(i) for i in range(len(self.values)))


def aggregate_daily_to_monthly(daily: Iterable[DailyObservation]) -> MonthlyTimeSeries:
    """Average daily observations into a gapless monthly series.

    Each monthly value is the unweighted arithmetic mean of that month's
    observations.  The output spans every calendar month between the first
    and the last observation.

    Raises:
        EmptyInputError: no observations supplied.
        GapInSeriesError: a month inside the span has no observations.
    """
    sums: dict[tuple[int, int], float] = {}
    counts: dict[tuple[int, int], int] = {}
    for obs in daily:
        key = (obs.date.year, obs.date.month)
        sums[key] = sums.get(key, 0.0) + obs.value
        counts[key] = counts.get(key, 0) + 1
    if not sums:
        raise EmptyInputError("no daily observations")
    first = MonthStamp(*min(sums))
    last = MonthStamp(*max(sums))
    values = []
    for i in range(first.months_until(last) + 1):
        stamp = first.offset(i)
        key = (stamp.year, stamp.month)
        if key not in sums:
            raise GapInSeriesError(f"no observations in {stamp}")
        values.append(sums[key] / counts[key])
    return MonthlyTimeSeries(first, tuple(values))


def slice_window(series: MonthlyTimeSeries, start: MonthStamp,
                 end: MonthStamp) -> MonthlyTimeSeries:
    """Copy the months start..end inclusive into a new series."""
    if start > end:
        raise OutOfRangeError(f"empty window {start}..{end}")
    i = series.index_of(start)
    j = series.index_of(end)
    return MonthlyTimeSeries(start, series.values[i:j + 1])


def make_series(start: MonthStamp | str, values: Sequence[float]) -> MonthlyTimeSeries:
    """Convenience constructor accepting a ``YYYY-MM`` string start."""
    if isinstance(start, str):
        start = MonthStamp.parse(start)
    return MonthlyTimeSeries(start, tuple(values))
