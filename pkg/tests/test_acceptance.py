"""Exit criteria. Each test logs one PASS/FAIL line in the terminal summary."""

import random
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LOG
from oracles import brute_pairs, trial_sopfr
from sopfr import (
    FULL,
    LINE,
    average_series,
    band_report,
    build_table,
    conjecture_scan,
    deviation_series,
    fit,
    quadruple,
    scan_pairs,
    sopfr,
    to_log_points,
)
from sopfr.averaging import LogPointSeries
from sopfr.fitting import gradient, objective


def record(number, title, passed, detail):
    ACCEPTANCE_LOG.append(f"[{'PASS' if passed else 'FAIL'}] {number:>2}. {title}: {detail}")
    assert passed, detail


def coefficient_check(res, targets, tol):
    misses = {k: res[k] - v for k, v in targets.items() if not abs(res[k] - v) <= tol}
    detail = ", ".join(f"{k}={res[k]:.4f} (target {v:+.3f})" for k, v in targets.items())
    return not misses, detail


@pytest.fixture(scope="module")
def pipeline():
    start = time.perf_counter()
    table = build_table(10_000_000)
    series = average_series(table, 1, 3161)
    points = to_log_points(series)
    first = fit(points, LINE, 122, 998)
    elapsed = time.perf_counter() - start
    return table, series, points, first, elapsed


def test_01_first_line_fit(pipeline):
    _, _, _, res, elapsed = pipeline
    ok, detail = coefficient_check(res, {"alpha": 1.820, "beta": -0.847}, 0.01)
    ok = ok and elapsed < 10.0
    record(1, "line fit on [122, 998], tol 0.01", ok, f"{detail}, {elapsed:.2f}s (< 10s)")


def test_02_second_line_fit(pipeline):
    _, _, points, _, _ = pipeline
    res = fit(points, LINE, 1000, 3161)
    ok, detail = coefficient_check(res, {"alpha": 1.860, "beta": -1.115}, 0.01)
    record(2, "line fit on [1000, 3161], tol 0.01", ok, detail)


def test_03_five_parameter_fit(pipeline):
    _, _, points, _, _ = pipeline
    res = fit(points, FULL, 4, 3161)
    targets = {"alpha": 2.001, "beta": -0.047, "gamma": -1.056, "lambda": 1.187, "mu": -2.240}
    ok, detail = coefficient_check(res, targets, 0.02)
    record(3, "five-parameter fit on [4, 3161], tol 0.02", ok, detail)


def test_04_first_band(pipeline):
    _, _, points, res, _ = pipeline
    band = band_report(deviation_series(points, res, 122, 998), -0.15, 0.15)
    record(
        4,
        "|delta| < 0.15 on [122, 998]",
        band.satisfied,
        f"min={band.min_dev:.4f}, max={band.max_dev:.4f}",
    )


def test_05_second_band(pipeline):
    _, _, points, _, _ = pipeline
    res = fit(points, LINE, 1000, 3161)
    band = band_report(deviation_series(points, res, 1000, 3161), -0.1, 0.15)
    record(
        5,
        "-0.1 < delta < 0.15 on [1000, 3161]",
        band.satisfied,
        f"min={band.min_dev:.4f}, max={band.max_dev:.4f}",
    )


def test_06_additivity(pipeline):
    table = pipeline[0]
    rng = random.Random(20261014)
    failures = 0
    for _ in range(10_000):
        a = rng.randint(1, 10_000)
        b = rng.randint(1, 10_000_000 // a)
        if sopfr(table, a * b) != sopfr(table, a) + sopfr(table, b):
            failures += 1
    record(6, "additivity on 10^4 random pairs, ab <= 10^7", failures == 0, f"{failures} mismatches")


def test_07_oracle_equivalence():
    start = time.perf_counter()
    table = build_table(100_000)
    mismatches = sum(int(table.sopfr[n]) != trial_sopfr(n) for n in range(1, 100_001))
    elapsed = time.perf_counter() - start
    record(
        7,
        "table matches trial division for n <= 10^5",
        mismatches == 0 and elapsed < 5.0,
        f"{mismatches} mismatches, {elapsed:.2f}s (< 5s)",
    )


def test_08_ruth_aaron(pipeline):
    table = pipeline[0]
    hits = {p.n: p.common_sopfr for p in scan_pairs(table, 2, 1_000_000)}
    spot = all(
        n in hits and trial_sopfr(n) == trial_sopfr(n + 1) == hits[n] for n in (5, 714)
    )
    small = [p.n for p in scan_pairs(table, 2, 100_000)]
    oracle = brute_pairs(2, 100_000)
    record(
        8,
        "Ruth-Aaron scan",
        spot and small == oracle,
        f"5 and 714 present: {spot}; {len(small)} hits on [2, 10^5] == brute force: {small == oracle}",
    )


def test_09_schinzel_family(pipeline):
    table = pipeline[0]
    x = np.arange(-10_000, 10_001, dtype=object)
    p, q, r, s = 8 * x + 5, 48 * x * x + 24 * x - 1, 2 * x + 1, 48 * x * x + 30 * x - 1
    identities = bool(all(p * q + 1 == 4 * r * s) and all(p + q == 4 + r + s))
    quad = quadruple(3)
    n = quad.p * quad.q
    pair = (n, n + 1) == (14587, 14588) and sopfr(table, n) == sopfr(table, n + 1) == 532
    record(
        9,
        "polynomial family identities and x = 3 pair",
        identities and quad.all_prime and pair,
        f"identities on [-10^4, 10^4]: {identities}; x=3 all prime: {quad.all_prime}; "
        f"sopfr(14587)=sopfr(14588)=532: {pair}",
    )


def _fd_gradient(points, model, c, n_lo, n_hi, h=1e-6):
    out = np.zeros(len(c))
    for j in range(len(c)):
        up, dn = c.copy(), c.copy()
        up[j] += h
        dn[j] -= h
        out[j] = (objective(points, model, up, n_lo, n_hi) - objective(points, model, dn, n_lo, n_hi)) / (2 * h)
    return out


def test_10_fit_self_consistency(pipeline):
    _, series, points, _, _ = pipeline
    rng = np.random.default_rng(10)

    worst = 0.0
    for model in (LINE, FULL):
        for _ in range(20):
            coef = rng.uniform(-3, 3, size=len(model))
            n = np.arange(4, 3162)
            y = np.log(n.astype(float))
            synth = LogPointSeries(n=n, y=y, x=model.design(y) @ coef)
            res = fit(synth, model, 4, 3161)
            rel = np.max(np.abs(res.coefficients - coef) / np.maximum(1.0, np.abs(coef)))
            worst = max(worst, rel)
    recovery = worst <= 1e-6

    grad_ok = True
    for model, window in [(LINE, (122, 998)), (LINE, (1000, 3161)), (FULL, (4, 3161))]:
        res = fit(points, model, *window)
        scale = max(1.0, res.objective)
        g = gradient(points, model, res.coefficients, *window)
        fd = _fd_gradient(points, model, res.coefficients, *window)
        grad_ok &= np.max(np.abs(g)) <= 1e-6 * scale and np.max(np.abs(fd)) <= 1e-4 * scale

    scan = conjecture_scan(series.window(4, 3161), 2.0, -1.0, 0.25)
    record(
        10,
        "fit self-consistency",
        recovery and grad_ok and scan.narrowing,
        f"worst recovery error {worst:.1e} (<= 1e-6); gradients vanish: {grad_ok}; "
        f"B band tail width {scan.tail_width:.4f} < full {scan.width:.4f}",
    )
