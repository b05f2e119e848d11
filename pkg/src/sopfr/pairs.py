"""Ruth-Aaron pairs and the quadratic prime family that produces them.

For integer x put

    p = 8x + 5,   q = 48x^2 + 24x - 1,
    r = 2x + 1,   s = 48x^2 + 30x - 1.

Then p*q + 1 = 4*r*s and p + q = 4 + r + s identically, so whenever all four
values are prime the numbers p*q and 4*r*s = p*q + 1 have equal Sopfr.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import DomainError
from .factor_core import SopfrTable, is_prime

_INT64_MIN = -(2**63)
_INT64_MAX = 2**63 - 1
_CHUNK = 1 << 20


@dataclass(frozen=True)
class RuthAaronPair:
    n: int
    common_sopfr: int


@dataclass(frozen=True)
class SchinzelQuadruple:
    x: int
    p: int
    q: int
    r: int
    s: int
    all_prime: bool

    @property
    def pair_n(self) -> int:
        """Lower member p*q of the derived Ruth-Aaron pair."""
        return self.p * self.q

    @property
    def pair_sopfr(self) -> int:
        return self.p + self.q


def iter_pairs(table: SopfrTable, lo: int, hi: int) -> Iterator[RuthAaronPair]:
    """Stream every n in [lo, hi] with Sopfr(n) == Sopfr(n + 1), ascending."""
    if lo < 2:
        raise DomainError(f"lo must be >= 2, got {lo}")
    if hi + 1 > table.limit:
        raise DomainError(f"scan to {hi} needs a table limit >= {hi + 1}, have {table.limit}")
    s = table.sopfr
    for start in range(lo, hi + 1, _CHUNK):
        stop = min(start + _CHUNK, hi + 1)
        hits = np.flatnonzero(s[start:stop] == s[start + 1 : stop + 1])
        for i in hits:
            n = start + int(i)
            yield RuthAaronPair(n=n, common_sopfr=int(s[n]))


def scan_pairs(table: SopfrTable, lo: int, hi: int) -> list[RuthAaronPair]:
    return list(iter_pairs(table, lo, hi))


def _check_int64(x: int, *values: int) -> None:
    for v in values:
        if not _INT64_MIN <= v <= _INT64_MAX:
            raise DomainError(f"polynomial values at x={x} overflow 64-bit integers")


def quadruple(x: int) -> SchinzelQuadruple:
    x = int(x)
    p = 8 * x + 5
    q = 48 * x * x + 24 * x - 1
    r = 2 * x + 1
    s = 48 * x * x + 30 * x - 1
    _check_int64(x, p, q, r, s)
    return SchinzelQuadruple(
        x=x,
        p=p,
        q=q,
        r=r,
        s=s,
        all_prime=is_prime(p) and is_prime(q) and is_prime(r) and is_prime(s),
    )


def verify_pair(quad: SchinzelQuadruple, table: SopfrTable | None = None) -> bool:
    """Check Sopfr(p*q) == Sopfr(p*q + 1) for an all-prime quadruple.

    Read straight from ``table`` when it covers p*q + 1, otherwise compare
    p + q with 2 + 2 + r + s, which is what the two Sopfr values reduce to
    when p, q, r, s are prime.
    """
    if not quad.all_prime:
        return False
    n = quad.pair_n
    if table is not None and 1 <= n and n + 1 <= table.limit:
        return int(table.sopfr[n]) == int(table.sopfr[n + 1]) == quad.p + quad.q
    return quad.p + quad.q == 2 + 2 + quad.r + quad.s


def iter_family(x_lo: int, x_hi: int) -> Iterator[SchinzelQuadruple]:
    if x_lo > x_hi:
        raise DomainError(f"empty range [{x_lo}, {x_hi}]")
    # the polynomials are extremal at the range ends, so checking them
    # rules out overflow anywhere inside
    quadruple(x_lo)
    quadruple(x_hi)
    for x in range(x_lo, x_hi + 1):
        quad = quadruple(x)
        if quad.all_prime:
            yield quad


def family_search(x_lo: int, x_hi: int) -> list[SchinzelQuadruple]:
    return list(iter_family(x_lo, x_hi))
