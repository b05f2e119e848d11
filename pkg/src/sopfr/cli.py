"""Command-line entry point.

Exit status: 0 success, 1 runtime or domain failure, 2 usage error.
Flags override ``SOPFR_*`` environment variables, which override defaults.
"""

from __future__ import annotations

import argparse
import os
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterable, Iterator, TextIO

from . import analysis, report
from .averaging import average_series, to_log_points
from .errors import DegeneracyError, DomainError, ResourceError
from .factor_core import MAX_LIMIT, build_table, factorize
from .fitting import MODELS, fit
from .pairs import iter_family, iter_pairs, verify_pair

DEFAULT_LIMIT = 10_000_000
ENV_PREFIX = "SOPFR_"

DEFAULT_WINDOWS = {
    "average": (1, 3161),
    "line": (122, 998),
    "full": (4, 3161),
    "deviation": (122, 998),
    "bseries": (4, 3161),
}


class CommandError(Exception):
    """Failure reported on stderr with exit status 1."""


def fmt(v: float) -> str:
    return f"{float(v):.12g}"


def parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    try:
        if not sep:
            raise ValueError
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None


def _env(name: str) -> str | None:
    return os.environ.get(ENV_PREFIX + name)


def _limit(args, needed: int = 0) -> int:
    if args.limit is not None:
        return args.limit
    env = _env("LIMIT")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise CommandError(f"{ENV_PREFIX}LIMIT is not an integer: {env!r}") from None
    return max(DEFAULT_LIMIT, needed)


def _window(args, default_key: str) -> tuple[int, int]:
    if args.window is not None:
        return args.window
    env = _env("WINDOW")
    if env is not None:
        try:
            return parse_range(env)
        except argparse.ArgumentTypeError as exc:
            raise CommandError(f"{ENV_PREFIX}WINDOW: {exc}") from None
    return DEFAULT_WINDOWS[default_key]


def _model(args) -> str:
    name = args.model or _env("MODEL") or "line"
    if name not in MODELS:
        raise CommandError(f"unknown model {name!r}")
    return name


def _table_for_window(args, window: tuple[int, int]):
    n_lo, n_hi = window
    if n_lo < 1 or n_hi < n_lo:
        raise CommandError(f"invalid window {n_lo}:{n_hi}")
    needed = (n_hi + 1) ** 2
    limit = _limit(args, needed)
    if needed > limit:
        raise CommandError(f"window {n_lo}:{n_hi} needs --limit >= {needed}, have {limit}")
    return build_table(limit)


@contextmanager
def _output(path: str | None) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
        return
    try:
        fh = open(path, "w", encoding="ascii", newline="\n")
    except OSError as exc:
        raise CommandError(f"cannot write {path}: {exc}") from None
    with fh:
        yield fh


def _write_rows(path: str | None, header: str, rows: Iterable[str]) -> None:
    with _output(path) as out:
        out.write(header + "\n")
        for row in rows:
            out.write(row + "\n")


def _write_plot(csv_path: str, title: str, using: str, xlabel: str, ylabel: str) -> Path:
    script = Path(csv_path).with_suffix(".gp")
    text = (
        "set datafile separator ','\n"
        f"set title '{title}'\n"
        f"set xlabel '{xlabel}'\n"
        f"set ylabel '{ylabel}'\n"
        "set key off\n"
        f"plot '{Path(csv_path).name}' using {using} every ::1 with points pt 7 ps 0.3\n"
    )
    try:
        script.write_text(text, encoding="ascii", newline="\n")
    except OSError as exc:
        raise CommandError(f"cannot write {script}: {exc}") from None
    return script


def _emit(args, header: str, rows: Iterable[str], plot: tuple[str, str, str, str]) -> None:
    if args.format == "plot" and args.out is None:
        raise CommandError("--format plot needs --out")
    _write_rows(args.out, header, rows)
    if args.format == "plot":
        _write_plot(args.out, *plot)


def cmd_sopfr(args) -> int:
    values = []
    for item in args.n:
        if ":" in item:
            lo, hi = parse_range(item)
            values.extend(range(lo, hi + 1))
        else:
            try:
                values.append(int(item))
            except ValueError:
                raise argparse.ArgumentTypeError(f"not an integer: {item!r}") from None
    if not values:
        return 0
    bad = [n for n in values if n < 1]
    if bad:
        raise CommandError(f"n must be >= 1, got {bad[0]}")
    top = max(values)
    if args.limit is not None or _env("LIMIT") is not None:
        limit = _limit(args)
        if top > limit:
            raise CommandError(f"n={top} exceeds --limit {limit}")
    else:
        limit = top
    if limit > MAX_LIMIT:
        raise CommandError(f"n={top} exceeds sieve capacity {MAX_LIMIT}")
    table = build_table(limit)
    out = sys.stdout
    for n in values:
        f = factorize(table, n)
        out.write(f"{n},{int(table.sopfr[n])},{'·'.join(map(str, f.primes()))}\n")
    return 0


def cmd_average(args) -> int:
    window = _window(args, "average")
    table = _table_for_window(args, window)
    series = average_series(table, *window)
    points = to_log_points(series)
    rows = (
        f"{n},{fmt(a)},{fmt(y)},{fmt(x)}"
        for n, a, y, x in zip(series.n.tolist(), series.values, points.y, points.x)
    )
    _emit(args, "n,A,ln_n,ln_A", rows, ("averaged Sopfr", "3:4", "ln n", "ln A(n)"))
    return 0


def cmd_fit(args) -> int:
    name = _model(args)
    window = _window(args, name)
    table = _table_for_window(args, window)
    points = to_log_points(average_series(table, *window))
    res = fit(points, MODELS[name], *window)
    parts = [f"{k}={fmt(v)}" for k, v in res.as_dict().items()]
    parts += [f"F={fmt(res.objective)}", f"n_lo={window[0]}", f"n_hi={window[1]}"]
    print(",".join(parts))
    return 0


def cmd_deviation(args) -> int:
    window = _window(args, "deviation")
    table = _table_for_window(args, window)
    points = to_log_points(average_series(table, *window))
    if args.rounded:
        line = analysis.rounded_line_fit(*window)
    else:
        line = fit(points, MODELS["line"], *window)
    dev = analysis.deviation_series(points, line, *window)
    if args.bounds is not None:
        band = analysis.band_report(dev, *args.bounds)
        print(
            f"min={fmt(band.min_dev)},max={fmt(band.max_dev)},"
            f"bound_lo={fmt(band.bound_lo)},bound_hi={fmt(band.bound_hi)},"
            f"satisfied={str(band.satisfied).lower()}",
            file=sys.stderr,
        )
    rows = (
        f"{n},{fmt(y)},{fmt(d)}"
        for n, y, d in zip(dev.n.tolist(), points.window(*window).y, dev.values)
    )
    _emit(args, "n,ln_n,delta", rows, ("deviation from line fit", "2:3", "ln n", "delta(n)"))
    return 0


def cmd_bseries(args) -> int:
    window = _window(args, "bseries")
    table = _table_for_window(args, window)
    series = average_series(table, *window)
    b = analysis.b_series(series, args.alpha, args.gamma)
    scan = analysis.conjecture_scan(series, args.alpha, args.gamma, args.tail)
    print(
        f"B1={fmt(scan.b1)},B2={fmt(scan.b2)},"
        f"tail_B1={fmt(scan.tail_b1)},tail_B2={fmt(scan.tail_b2)},"
        f"tail_n_lo={scan.tail_window[0]},narrowing={str(scan.narrowing).lower()}"
        f"  # {scan.note}",
        file=sys.stderr,
    )
    rows = (f"{n},{fmt(v)}" for n, v in zip(b.n.tolist(), b.values))
    _emit(args, "n,B", rows, ("normalised averaged Sopfr", "1:2", "n", "B(n)"))
    return 0


def cmd_pairs(args) -> int:
    lo, hi = args.range
    limit = _limit(args, hi + 1)
    if hi + 1 > limit:
        raise CommandError(f"scan to {hi} needs --limit >= {hi + 1}")
    table = build_table(limit)
    rows = (f"{p.n},{p.common_sopfr}" for p in iter_pairs(table, lo, hi))
    _write_rows(args.out, "n,sopfr", rows)
    return 0


def cmd_family(args) -> int:
    x_lo, x_hi = args.range
    table = build_table(_limit(args)) if args.verify else None
    rows = (
        f"{q.x},{q.p},{q.q},{q.r},{q.s},{q.pair_n},{q.pair_sopfr},"
        f"{str(verify_pair(q, table)).lower()}"
        for q in iter_family(x_lo, x_hi)
    )
    _write_rows(args.out, "x,p,q,r,s,n,sopfr,verified", rows)
    return 0


def cmd_reproduce(args) -> int:
    limit = _limit(args, report.REQUIRED_LIMIT)
    if limit < report.REQUIRED_LIMIT:
        raise CommandError(f"reproduce needs --limit >= {report.REQUIRED_LIMIT}")
    checks = report.run_checks(build_table(limit))
    with _output(args.out) as out:
        out.write(report.render(checks))
    return 0 if report.all_passed(checks) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sopfr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, window=True, model=False, fmt_flag=False):
        p.add_argument("--limit", type=int, help="sieve bound (default 10000000)")
        p.add_argument("--out", help="output path (default stdout)")
        if window:
            p.add_argument("--window", type=parse_range, metavar="LO:HI")
        if model:
            p.add_argument("--model", choices=sorted(MODELS))
        if fmt_flag:
            p.add_argument("--format", choices=("csv", "plot"), default="csv")
        return p

    p = sub.add_parser("sopfr", help="print n,Sopfr(n),factors")
    p.add_argument("n", nargs="+", help="integers or LO:HI ranges")
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_sopfr)

    common(sub.add_parser("average", help="CSV of A(n)"), fmt_flag=True).set_defaults(
        func=cmd_average
    )
    common(sub.add_parser("fit", help="least-squares fit"), model=True).set_defaults(
        func=cmd_fit
    )

    p = common(sub.add_parser("deviation", help="CSV of line-fit residuals"), fmt_flag=True)
    p.add_argument("--rounded", action="store_true", help="use published 3-decimal coefficients")
    p.add_argument("--bounds", type=_float_pair, metavar="LO:HI")
    p.set_defaults(func=cmd_deviation)

    p = common(sub.add_parser("bseries", help="CSV of B(n)"), fmt_flag=True)
    p.add_argument("--alpha", type=float, default=2.0)
    p.add_argument("--gamma", type=float, default=-1.0)
    p.add_argument("--tail", type=float, default=0.25, help="trailing fraction of the window")
    p.set_defaults(func=cmd_bseries)

    p = common(sub.add_parser("pairs", help="Ruth-Aaron pairs in LO:HI"), window=False)
    p.add_argument("range", type=parse_range, metavar="LO:HI")
    p.set_defaults(func=cmd_pairs)

    p = common(sub.add_parser("family", help="all-prime quadruples for x in LO:HI"), window=False)
    p.add_argument("range", type=parse_range, metavar="LO:HI")
    p.add_argument("--verify", action="store_true", help="check derived pairs through the table")
    p.set_defaults(func=cmd_family)

    common(sub.add_parser("reproduce", help="full reproduction report"), window=False).set_defaults(
        func=cmd_reproduce
    )
    return parser


def _float_pair(text: str) -> tuple[float, float]:
    lo, sep, hi = text.partition(":")
    try:
        if not sep:
            raise ValueError
        return float(lo), float(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except argparse.ArgumentTypeError as exc:
        parser.print_usage(sys.stderr)
        print(f"sopfr: error: {exc}", file=sys.stderr)
        return 2
    except (CommandError, DomainError, DegeneracyError, ResourceError) as exc:
        print(f"sopfr: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
