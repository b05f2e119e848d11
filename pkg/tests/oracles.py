"""Independent reference computations. Deliberately slow and simple."""

from fractions import Fraction
from math import isqrt


def trial_factors(n):
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def trial_sopfr(n):
    return sum(trial_factors(n))


def trial_is_prime(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, isqrt(n) + 1))


def exact_average(n, sopfr_values):
    window = range(n * n + 1, (n + 1) ** 2 + 1)
    return Fraction(sum(sopfr_values[i] for i in window), len(window))


def brute_pairs(lo, hi):
    values = [trial_sopfr(n) for n in range(lo, hi + 2)]
    return [lo + i for i in range(hi - lo + 1) if values[i] == values[i + 1]]
