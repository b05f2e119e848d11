"""Averaged Sopfr over the windows between consecutive squares.

    A(n) = (Sopfr(n^2 + 1) + ... + Sopfr((n + 1)^2)) / (2n + 1)

Coordinate naming follows the regression convention used throughout the
package: ``x = ln A(n)`` is the *dependent* variable and ``y = ln n`` the
regressor. Plots usually put ``ln n`` on the horizontal axis, i.e. they show
``y`` horizontally and ``x`` vertically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .factor_core import SopfrTable


@dataclass(frozen=True, eq=False)
class AveragedSeries:
    n_min: int
    n_max: int
    sums: np.ndarray  # exact integer window sums, int64
    values: np.ndarray  # A(n) as float64

    @property
    def n(self) -> np.ndarray:
        return np.arange(self.n_min, self.n_max + 1, dtype=np.int64)

    def __len__(self) -> int:
        return self.n_max - self.n_min + 1

    def at(self, n: int) -> float:
        if not self.n_min <= n <= self.n_max:
            raise DomainError(f"n={n} outside [{self.n_min}, {self.n_max}]")
        return float(self.values[n - self.n_min])

    def window(self, n_lo: int, n_hi: int) -> "AveragedSeries":
        if not self.n_min <= n_lo <= n_hi <= self.n_max:
            raise DomainError(
                f"window [{n_lo}, {n_hi}] not inside [{self.n_min}, {self.n_max}]"
            )
        i, j = n_lo - self.n_min, n_hi - self.n_min + 1
        return AveragedSeries(n_lo, n_hi, self.sums[i:j], self.values[i:j])


@dataclass(frozen=True, eq=False)
class LogPointSeries:
    n: np.ndarray
    y: np.ndarray  # ln n
    x: np.ndarray  # ln A(n)

    def __len__(self) -> int:
        return len(self.n)

    def window(self, n_lo: int, n_hi: int) -> "LogPointSeries":
        mask = (self.n >= n_lo) & (self.n <= n_hi)
        if np.count_nonzero(mask) != n_hi - n_lo + 1:
            raise DomainError(f"points do not cover window [{n_lo}, {n_hi}]")
        return LogPointSeries(self.n[mask], self.y[mask], self.x[mask])


def window_width(n: int) -> int:
    return 2 * n + 1


def average_series(table: SopfrTable, n_min: int, n_max: int) -> AveragedSeries:
    if n_min < 1:
        raise DomainError(f"n_min must be >= 1, got {n_min}")
    if n_max < n_min:
        raise DomainError(f"n_max={n_max} < n_min={n_min}")
    top = (n_max + 1) ** 2
    if top > table.limit:
        raise DomainError(
            f"window up to n={n_max} needs a table limit >= {top}, have {table.limit}"
        )
    n = np.arange(n_min, n_max + 1, dtype=np.int64)
    lo = n_min * n_min + 1
    block = table.sopfr[lo : top + 1]
    sums = np.add.reduceat(block, n * n + 1 - lo)
    values = sums / (2 * n + 1)
    return AveragedSeries(n_min=n_min, n_max=n_max, sums=sums, values=values)


def to_log_points(series: AveragedSeries) -> LogPointSeries:
    if np.any(series.values <= 0):
        raise AssertionError("averaged series has a nonpositive value")
    n = series.n
    return LogPointSeries(n=n, y=np.log(n.astype(np.float64)), x=np.log(series.values))
