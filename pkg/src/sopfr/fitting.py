"""Least-squares fits of ``x = sum_j c_j * b_j(y)`` in log-log coordinates.

Two bases are supported:

* ``LINE``: ``x = alpha*y + beta``
* ``FULL``: ``x = alpha*y + beta + gamma*ln(y) + lambda*exp(-y) + mu*exp(-2y)``

Both are linear in their coefficients, so the minimiser of
``F = sum (x_n - sum_j c_j b_j(y_n))**2`` solves the normal equations
``(M^T M) c = M^T x``. The system is at most 5x5 and is solved here by
Gaussian elimination with partial pivoting, followed by one step of iterative
refinement against the least-squares residual.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .averaging import LogPointSeries
from .errors import DegeneracyError, DomainError

Basis = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class FitModel:
    name: str
    names: tuple[str, ...]
    basis: tuple[Basis, ...]
    min_n: int

    def design(self, y: np.ndarray) -> np.ndarray:
        y = np.asarray(y, dtype=np.float64)
        return np.column_stack([b(y) for b in self.basis])

    def __len__(self) -> int:
        return len(self.basis)


LINE = FitModel(
    name="line",
    names=("alpha", "beta"),
    basis=(lambda y: y, np.ones_like),
    min_n=1,
)

FULL = FitModel(
    name="full",
    names=("alpha", "beta", "gamma", "lambda", "mu"),
    basis=(
        lambda y: y,
        np.ones_like,
        np.log,
        lambda y: np.exp(-y),
        lambda y: np.exp(-2.0 * y),
    ),
    # ln(y) = ln(ln n) needs ln n > 0
    min_n=2,
)

MODELS = {"line": LINE, "full": FULL}


@dataclass(frozen=True)
class FitResult:
    model: FitModel
    window: tuple[int, int]
    coefficients: np.ndarray
    objective: float
    count: int

    def __getitem__(self, name: str) -> float:
        return float(self.coefficients[self.model.names.index(name)])

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.model.names, map(float, self.coefficients)))


def solve_linear(a: np.ndarray, b: np.ndarray, rtol: float = 1e-13) -> np.ndarray:
    """Solve the square system ``a @ c = b`` by elimination with partial pivoting.

    Raises DegeneracyError when a pivot vanishes relative to the largest
    entry of ``a``.
    """
    a = np.array(a, dtype=np.float64)
    b = np.array(b, dtype=np.float64)
    k = a.shape[0]
    scale = np.max(np.abs(a)) if a.size else 0.0
    if scale == 0.0:
        raise DegeneracyError("normal matrix is zero")
    for col in range(k):
        piv = col + int(np.argmax(np.abs(a[col:, col])))
        if abs(a[piv, col]) <= rtol * scale:
            raise DegeneracyError(f"normal matrix is singular (pivot {col})")
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            b[[col, piv]] = b[[piv, col]]
        for row in range(col + 1, k):
            f = a[row, col] / a[col, col]
            a[row, col:] -= f * a[col, col:]
            b[row] -= f * b[col]
    c = np.zeros(k)
    for row in range(k - 1, -1, -1):
        c[row] = (b[row] - a[row, row + 1 :] @ c[row + 1 :]) / a[row, row]
    return c


def _window(points: LogPointSeries, model: FitModel, n_lo: int, n_hi: int):
    if n_lo > n_hi:
        raise DomainError(f"empty window [{n_lo}, {n_hi}]")
    if n_lo < model.min_n:
        raise DomainError(f"{model.name} model needs n >= {model.min_n}, got {n_lo}")
    pts = points.window(n_lo, n_hi)
    if len(pts) < len(model):
        raise DegeneracyError(
            f"{len(pts)} points cannot determine {len(model)} coefficients"
        )
    return pts


def objective(
    points: LogPointSeries, model: FitModel, coefficients: Sequence[float], n_lo: int, n_hi: int
) -> float:
    pts = _window(points, model, n_lo, n_hi)
    r = pts.x - model.design(pts.y) @ np.asarray(coefficients, dtype=np.float64)
    return float(r @ r)


def gradient(
    points: LogPointSeries, model: FitModel, coefficients: Sequence[float], n_lo: int, n_hi: int
) -> np.ndarray:
    """Analytic gradient ``dF/dc_j = -2 sum b_j(y_n) * residual_n``."""
    pts = _window(points, model, n_lo, n_hi)
    m = model.design(pts.y)
    r = pts.x - m @ np.asarray(coefficients, dtype=np.float64)
    return -2.0 * (m.T @ r)


def fit(points: LogPointSeries, model: FitModel, n_lo: int, n_hi: int) -> FitResult:
    pts = _window(points, model, n_lo, n_hi)
    m = model.design(pts.y)
    if not np.all(np.isfinite(m)):
        raise DomainError("basis is not finite on the window")

    # Column equilibration keeps the normal matrix from squaring the raw
    # spread of column magnitudes.
    norms = np.linalg.norm(m, axis=0)
    if np.any(norms == 0.0):
        raise DegeneracyError("a basis column vanishes on the window")
    ms = m / norms
    g = ms.T @ ms
    c = solve_linear(g, ms.T @ pts.x)
    c = c + solve_linear(g, ms.T @ (pts.x - ms @ c))
    coefficients = c / norms

    r = pts.x - m @ coefficients
    return FitResult(
        model=model,
        window=(n_lo, n_hi),
        coefficients=coefficients,
        objective=float(r @ r),
        count=len(pts),
    )


def predict(result: FitResult, n: int) -> float:
    """Model value of A(n) in linear space, ``exp(sum_j c_j b_j(ln n))``."""
    if n < result.model.min_n:
        raise DomainError(f"{result.model.name} model needs n >= {result.model.min_n}")
    row = result.model.design(np.array([np.log(float(n))]))[0]
    return float(np.exp(row @ result.coefficients))
