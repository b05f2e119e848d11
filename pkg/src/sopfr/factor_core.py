"""Smallest-prime-factor sieve, Sopfr table and 64-bit primality.

The table stores, for every ``2 <= n <= limit``, the least prime dividing
``n`` and the sum of the prime factors of ``n`` counted with multiplicity.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .errors import DomainError, ResourceError

MAX_LIMIT = 2**32 - 1

# Deterministic for every n < 3.3 * 10**24, which covers all 64-bit inputs.
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        out = 1
        for p, k in self.factors:
            out *= p**k
        return out

    def primes(self) -> list[int]:
        """Prime factors repeated by multiplicity, ascending."""
        return [p for p, k in self.factors for _ in range(k)]

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)


@dataclass(frozen=True, eq=False)
class SopfrTable:
    """Read-only sieve table.

    ``spf[n]`` and ``sopfr[n]`` are indexed directly by ``n``; ``spf[0]`` and
    ``spf[1]`` are 0 and carry no meaning.
    """

    limit: int
    spf: np.ndarray
    sopfr: np.ndarray

    def __contains__(self, n: int) -> bool:
        return 1 <= n <= self.limit


def build_table(limit: int) -> SopfrTable:
    if limit < 1:
        raise DomainError(f"limit must be >= 1, got {limit}")
    if limit > MAX_LIMIT:
        raise DomainError(f"limit must be <= {MAX_LIMIT}, got {limit}")
    try:
        spf = np.zeros(limit + 1, dtype=np.uint32)
        sopfr = np.zeros(limit + 1, dtype=np.int64)
    except MemoryError as exc:
        raise ResourceError(f"cannot allocate a sieve table of size {limit}") from exc

    for p in range(2, isqrt(limit) + 1):
        if spf[p] == 0:
            multiples = spf[p * p :: p]
            multiples[multiples == 0] = p
    unmarked = np.flatnonzero(spf == 0)
    unmarked = unmarked[unmarked >= 2]
    spf[unmarked] = unmarked.astype(np.uint32)

    # sopfr[n] = spf[n] + sopfr[n // spf[n]]. Within [lo, 2*lo) every cofactor
    # n // spf[n] <= n // 2 < lo is already filled, so each block is one
    # vectorised step of the ascending recurrence.
    lo = 2
    while lo <= limit:
        hi = min(2 * lo, limit + 1)
        n = np.arange(lo, hi, dtype=np.int64)
        p = spf[lo:hi].astype(np.int64)
        sopfr[lo:hi] = p + sopfr[n // p]
        lo = hi

    spf.flags.writeable = False
    sopfr.flags.writeable = False
    return SopfrTable(limit=limit, spf=spf, sopfr=sopfr)


def _check_index(table: SopfrTable, n: int, lowest: int = 1) -> int:
    n = int(n)
    if not lowest <= n <= table.limit:
        raise DomainError(f"n={n} outside [{lowest}, {table.limit}]")
    return n


def sopfr(table: SopfrTable, n: int) -> int:
    n = _check_index(table, n)
    return int(table.sopfr[n])


def factorize(table: SopfrTable, n: int) -> Factorization:
    """Prime factorization of ``n`` read off the sieve.

    ``factorize(table, 1)`` returns the empty factorization.
    """
    n = _check_index(table, n)
    factors: list[tuple[int, int]] = []
    m = n
    while m > 1:
        p = int(table.spf[m])
        k = 0
        while m % p == 0:
            m //= p
            k += 1
        factors.append((p, k))
    return Factorization(n=n, factors=tuple(factors))


def is_prime(n: int) -> bool:
    """Deterministic strong-pseudoprime test, exact for 0 <= n < 2**64."""
    n = int(n)
    if n < 2:
        return False
    for p in _WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True
