"""Residual bands of the line fit and the normalised series B(n)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .averaging import AveragedSeries, LogPointSeries
from .errors import DomainError
from .fitting import LINE, FitResult

# Published rounded line coefficients, keyed by fit window.
ROUNDED_LINE_COEFFICIENTS = {
    (122, 998): (1.820, -0.847),
    (1000, 3161): (1.860, -1.115),
}

EVIDENCE_NOTE = (
    "empirical band statistics over a finite window; consistent with, "
    "but never a proof of, bounded or convergent B(n)"
)


@dataclass(frozen=True, eq=False)
class DeviationSeries:
    window: tuple[int, int]
    alpha: float
    beta: float
    n: np.ndarray
    values: np.ndarray

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class BandReport:
    window: tuple[int, int]
    min_dev: float
    max_dev: float
    bound_lo: float
    bound_hi: float
    satisfied: bool

    @property
    def max_abs(self) -> float:
        return max(abs(self.min_dev), abs(self.max_dev))


@dataclass(frozen=True, eq=False)
class BSeries:
    alpha: float
    gamma: float
    n: np.ndarray
    values: np.ndarray

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class ConjectureReport:
    alpha: float
    gamma: float
    window: tuple[int, int]
    b1: float
    b2: float
    tail_window: tuple[int, int]
    tail_b1: float
    tail_b2: float
    note: str = EVIDENCE_NOTE

    @property
    def width(self) -> float:
        return self.b2 - self.b1

    @property
    def tail_width(self) -> float:
        return self.tail_b2 - self.tail_b1

    @property
    def narrowing(self) -> bool:
        return self.tail_width < self.width


def rounded_line_fit(n_lo: int, n_hi: int) -> FitResult:
    """A LINE result carrying the published 3-decimal coefficients."""
    try:
        alpha, beta = ROUNDED_LINE_COEFFICIENTS[(n_lo, n_hi)]
    except KeyError:
        raise DomainError(f"no published coefficients for window [{n_lo}, {n_hi}]") from None
    return FitResult(
        model=LINE,
        window=(n_lo, n_hi),
        coefficients=np.array([alpha, beta]),
        objective=float("nan"),
        count=n_hi - n_lo + 1,
    )


def deviation_series(
    points: LogPointSeries, fit: FitResult, n_lo: int, n_hi: int
) -> DeviationSeries:
    """delta(n) = ln A(n) - alpha*ln n - beta over ``[n_lo, n_hi]``."""
    if fit.model is not LINE:
        raise DomainError("deviation series is defined for the line model only")
    pts = points.window(n_lo, n_hi)
    alpha, beta = (float(c) for c in fit.coefficients)
    values = pts.x - alpha * pts.y - beta
    return DeviationSeries(window=(n_lo, n_hi), alpha=alpha, beta=beta, n=pts.n, values=values)


def band_report(dev: DeviationSeries, bound_lo: float, bound_hi: float) -> BandReport:
    if len(dev) == 0:
        raise DomainError("empty deviation series")
    lo = float(np.min(dev.values))
    hi = float(np.max(dev.values))
    return BandReport(
        window=dev.window,
        min_dev=lo,
        max_dev=hi,
        bound_lo=bound_lo,
        bound_hi=bound_hi,
        satisfied=bound_lo < lo and hi < bound_hi,
    )


def b_series(series: AveragedSeries, alpha: float, gamma: float) -> BSeries:
    """B(n) = A(n) / (n**alpha * (ln n)**gamma), n >= 2."""
    if series.n_min < 2:
        raise DomainError("B(n) needs n >= 2 so that ln n > 0")
    n = series.n
    ln_n = np.log(n.astype(np.float64))
    values = series.values / (np.exp(alpha * ln_n) * ln_n**gamma)
    return BSeries(alpha=alpha, gamma=gamma, n=n, values=values)


def conjecture_scan(
    series: AveragedSeries, alpha: float, gamma: float, tail_fraction: float
) -> ConjectureReport:
    """Band (min, max) of B(n) over the window and over its trailing fraction.

    A tail band narrower than the full band is consistent with B(n) settling
    to a limit; it is evidence only.
    """
    if not 0.0 < tail_fraction <= 1.0:
        raise DomainError(f"tail_fraction must lie in (0, 1], got {tail_fraction}")
    b = b_series(series, alpha, gamma)
    size = int(len(b) * tail_fraction)
    if size == 0:
        raise DomainError("tail fraction selects no points")
    tail = b.values[len(b) - size :]
    return ConjectureReport(
        alpha=alpha,
        gamma=gamma,
        window=(series.n_min, series.n_max),
        b1=float(b.values.min()),
        b2=float(b.values.max()),
        tail_window=(int(b.n[len(b) - size]), series.n_max),
        tail_b1=float(tail.min()),
        tail_b2=float(tail.max()),
    )
