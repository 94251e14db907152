"""Command-line front end.

Exit codes: 0 success, 1 domain error, 2 budget exceeded, 3 table mismatch.

Sign convention: the zero table lists ordinates t of zeros 1/2 + i t and
evaluates U at z = x - i t.  ``table``, ``uz --t`` and ``sweep`` take positive
ordinates and negate them internally; ``eval`` and the other commands take the
signed imaginary part through ``--y``.
"""
from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import diagnostics, domination, oracle, radial, winding, zeros
from .errors import BudgetExceeded, DomainError, RadialZetaError
from .export import svg_polylines, to_csv, to_json
from .numerics import StripPoint

EXIT_OK, EXIT_DOMAIN, EXIT_BUDGET, EXIT_MISMATCH = 0, 1, 2, 3
THREADS_ENV = "RADIAL_ZETA_THREADS"

UZ_COLUMNS = ["index", "t", "u_value", "nearest_integer", "residual", "n_used", "converged",
              "flagged_steps"]
TABLE_COLUMNS = ["index", "t", "u_value", "nearest_integer", "expected_u", "match", "residual",
                 "converged"]
SWEEP_COLUMNS = ["y", "u_value", "nearest_integer", "residual", "converged"]


@dataclass
class RunConfig:
    command: str
    n_max: int = 1
    tol: float = 1e-6
    output: Path | None = None
    format: str = "csv"
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.n_max < 1:
            raise DomainError(f"--n-max must be >= 1, got {self.n_max}")
        if not self.tol > 0:
            raise DomainError(f"--tol must be > 0, got {self.tol}")
        if self.format == "svg" and self.command != "spiral":
            raise DomainError("svg output is only available for the spiral command")


def threads() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        n = int(raw)
    except ValueError:
        raise DomainError(f"{THREADS_ENV} must be an integer >= 1, got {raw!r}") from None
    if n < 1:
        raise DomainError(f"{THREADS_ENV} must be >= 1, got {n}")
    return n


def ordered_map(fn, items):
    """map() over items, possibly threaded; results keep input order."""
    items = list(items)
    workers = min(threads(), max(1, len(items)))
    if workers == 1:
        return [fn(i) for i in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def emit(text: str, output: Path | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8", newline="\n")


def _uz(t: float, x: float, n_max: int, threshold: float) -> winding.UzEstimate:
    return winding.u_limit(complex(x, -t), n_max, threshold)


def cmd_eval(cfg: RunConfig) -> int:
    x, y = cfg.params["x"], cfg.params["y"]
    p = StripPoint(x, y)
    code = EXIT_OK
    try:
        res = radial.center_limit(p, cfg.tol, cfg.n_max)
    except BudgetExceeded as exc:
        res, code = exc.result, EXIT_BUDGET
    ref = oracle.zeta_eta(p.z, 1e-12)
    out = {
        "z": p.z,
        "center": res.center,
        "tail_bound": res.tail_bound,
        "oracle": ref.value,
        "abs_diff": abs(res.center - ref.value),
        "n_used": res.n_used,
        "budget_exceeded": code == EXIT_BUDGET,
    }
    emit(to_json(out), cfg.output)
    return code


def cmd_uz(cfg: RunConfig) -> int:
    x, thr = cfg.params["x"], cfg.params["threshold"]
    ts = cfg.params["t"]
    ests = ordered_map(lambda t: _uz(t, x, cfg.n_max, thr), ts)
    if cfg.format == "json":
        emit(to_json([{"index": i, "t": t, **e.to_dict()}
                      for i, (t, e) in enumerate(zip(ts, ests), start=1)]), cfg.output)
    else:
        rows = [(i, t, e.value, e.nearest_integer, e.residual, e.n_used, e.converged, e.flagged_steps)
                for i, (t, e) in enumerate(zip(ts, ests), start=1)]
        emit(to_csv(UZ_COLUMNS, rows), cfg.output)
    return EXIT_OK


def table_rows(records, x: float, n_max: int, threshold: float) -> list[tuple]:
    ests = ordered_map(lambda r: _uz(r.ordinate, x, n_max, threshold), records)
    rows = []
    for r, e in zip(records, ests):
        match = None if r.expected_u is None else (
            e.nearest_integer == r.expected_u and e.residual < threshold)
        rows.append((r.index, r.ordinate, e.value, e.nearest_integer, r.expected_u, match,
                     e.residual, e.converged))
    return rows


def cmd_table(cfg: RunConfig) -> int:
    path = cfg.params.get("zeros")
    records = zeros.load_zeros(path, cfg.params["zeros_format"]) if path else zeros.builtin_zeros()
    k = cfg.params["first"]
    if k > len(records):
        raise DomainError(f"--first {k} exceeds the {len(records)} available zeros")
    rows = table_rows(records[:k], 0.5, cfg.n_max, cfg.params["threshold"])
    emit(to_csv(TABLE_COLUMNS, rows), cfg.output)
    checked = [r for r in rows if r[5] is not None]
    matched = sum(1 for r in checked if r[5])
    print(f"matched {matched}/{len(checked)} (n_max={cfg.n_max})", file=sys.stderr)
    return EXIT_OK if matched == len(checked) else EXIT_MISMATCH


def sweep_grid(y_from: float, y_to: float, step: float) -> list[float]:
    if not (y_from < y_to and step > 0):
        raise DomainError("sweep requires --y-from < --y-to and --step > 0")
    count = math.floor((y_to - y_from) / step + 1e-9)
    return [y_from + k * step for k in range(count + 1)]


def cmd_sweep(cfg: RunConfig) -> int:
    x, thr = cfg.params["x"], cfg.params["threshold"]

    def one(t):
        try:
            e = _uz(t, x, cfg.n_max, thr)
        except RadialZetaError:
            return (t, math.nan, None, math.nan, False)
        return (t, e.value, e.nearest_integer, e.residual, e.converged)

    emit(to_csv(SWEEP_COLUMNS, ordered_map(one, sweep_grid(*cfg.params["grid"]))), cfg.output)
    return EXIT_OK


def cmd_spiral(cfg: RunConfig) -> int:
    rows = diagnostics.spiral_export(StripPoint(cfg.params["x"], cfg.params["y"]), cfg.n_max)
    if cfg.format == "svg":
        text = svg_polylines([("zeta_n", [(r[1], r[2]) for r in rows]),
                              ("c_n", [(r[3], r[4]) for r in rows])])
    else:
        text = to_csv(diagnostics.SPIRAL_COLUMNS, rows)
    emit(text, cfg.output)
    return EXIT_OK


def cmd_dominate(cfg: RunConfig) -> int:
    rect = cfg.params.get("rect")
    if rect:
        emit(to_json(domination.scan_rectangle(*rect, cfg.n_max)), cfg.output)
        return EXIT_OK
    report = domination.scan_band(StripPoint(cfg.params["x"], cfg.params["y"]), cfg.n_max)
    emit(to_json(report.to_dict()), cfg.output)
    return EXIT_OK


def cmd_diagnose(cfg: RunConfig) -> int:
    p = StripPoint(cfg.params["x"], cfg.params["y"])
    fit = diagnostics.cr_decay(p, cfg.params["n_lo"], cfg.params["n_hi"], cfg.params["points"])
    if cfg.format == "csv":
        cols = ["n", "h", "res1", "res2", "predicted"]
        emit(to_csv(cols, [[r[c] for c in cols] for r in fit["rows"]]), cfg.output)
    else:
        fit["note"] = "empirical log-log fit; expected exponent -x"
        emit(to_json(fit), cfg.output)
    return EXIT_OK


COMMANDS = {
    "eval": cmd_eval, "uz": cmd_uz, "table": cmd_table, "sweep": cmd_sweep,
    "spiral": cmd_spiral, "dominate": cmd_dominate, "diagnose": cmd_diagnose,
}


def _int(text: str) -> int:
    # accept 1e6 style budgets
    value = float(text)
    if value != int(value):
        raise argparse.ArgumentTypeError(f"not an integer: {text}")
    return int(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radial-zeta", description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n_max, formats=("csv",)):
        p.add_argument("--n-max", type=_int, default=n_max)
        p.add_argument("--output", "-o", type=Path)
        p.add_argument("--format", choices=formats, default=formats[0])

    p = sub.add_parser("eval", help="radial center c(z) vs the eta oracle (JSON)")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True, help="signed imaginary part")
    p.add_argument("--tol", type=float, default=1e-6)
    common(p, radial.DEFAULT_N_MAX, ("json",))

    p = sub.add_parser("uz", help="U at z = x - i t for given ordinates t > 0")
    p.add_argument("--x", type=float, default=0.5)
    p.add_argument("--t", type=float, nargs="+", required=True)
    p.add_argument("--threshold", type=float, default=winding.RESIDUAL_THRESHOLD)
    common(p, 1_000_000, ("csv", "json"))

    p = sub.add_parser("table", help="reproduce the U table at z = 1/2 - i t")
    p.add_argument("--first", type=int, default=10)
    p.add_argument("--zeros", type=Path, help="external zero table")
    p.add_argument("--zeros-format", choices=("plain", "csv"), default="plain")
    p.add_argument("--threshold", type=float, default=winding.RESIDUAL_THRESHOLD)
    common(p, 1_000_000)

    p = sub.add_parser("sweep", help="U along z = x - i y on a y grid")
    p.add_argument("--x", type=float, default=0.5)
    p.add_argument("--y-from", type=float, required=True)
    p.add_argument("--y-to", type=float, required=True)
    p.add_argument("--step", type=float, required=True)
    p.add_argument("--threshold", type=float, default=winding.RESIDUAL_THRESHOLD)
    common(p, 100_000)

    p = sub.add_parser("spiral", help="partial sums and centers, CSV or SVG")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True)
    common(p, 10_000, ("csv", "svg"))

    p = sub.add_parser("dominate", help="scan d_{x,y}(n) against its band (JSON)")
    p.add_argument("--x", type=float)
    p.add_argument("--y", type=float)
    p.add_argument("--rect", type=float, nargs=4, metavar=("a", "A", "b", "B"),
                   help="scan the corners of [a, A] x [b, B] instead (heuristic)")
    common(p, 100_000, ("json",))

    p = sub.add_parser("diagnose", help="Cauchy-Riemann residual decay of r_n")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True)
    p.add_argument("--n-lo", type=_int, default=1_000)
    p.add_argument("--n-hi", type=_int, default=100_000)
    p.add_argument("--points", type=int, default=400)
    common(p, 1, ("json", "csv"))
    return parser


def make_config(args) -> RunConfig:
    params = {k: v for k, v in vars(args).items()
              if k not in ("command", "n_max", "tol", "output", "format")}
    if args.command == "sweep":
        params["grid"] = (args.y_from, args.y_to, args.step)
    if args.command == "dominate" and not args.rect and (args.x is None or args.y is None):
        raise DomainError("dominate needs --x and --y, or --rect")
    return RunConfig(args.command, args.n_max, getattr(args, "tol", 1e-6), args.output,
                     args.format, params)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = make_config(args)
        threads()
        return COMMANDS[cfg.command](cfg)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (RadialZetaError, OSError) as exc:
        # numerical breakdowns and unreadable inputs: reported, not a traceback
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
