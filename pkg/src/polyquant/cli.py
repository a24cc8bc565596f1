"""Command-line interface.

Subcommands: eval, dist, sample, moments, curves, fit.  Output is CSV
(header always present) or JSON-lines via --format; numbers are rendered
with 17 significant digits so parsing the text recovers the exact binary
value, infinities as the literal "inf".  Identical argv (and seed) produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

import numpy as np

from .distribution import PolyDist
from .errors import PolyquantError, QuadratureError
from .polylog import EvalOptions, polylog, zeta
from .numerics import QuadConfig
from .ppcc import fit_shape

__all__ = ["main"]


def _fmt(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    x = float(v)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(x, ".17g")


def _emit(header, rows, fmt: str) -> None:
    if fmt == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(v) for v in row])
    else:
        for row in rows:
            obj = {k: _fmt(v) for k, v in zip(header, row)}
            sys.stdout.write(json.dumps(obj) + "\n")


def _parse_grid(spec: str) -> np.ndarray:
    """Parse a "start:step:stop" shape grid (stop inclusive up to rounding)."""
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid must be start:step:stop, got {spec!r}")
    start, step, stop = (float(p) for p in parts)
    if not step > 0 or stop < start:
        raise ValueError(f"grid {spec!r} is empty or descending")
    n = int(math.floor((stop - start) / step + 1e-9)) + 1
    return start + step * np.arange(n)


def _eval_options(args) -> EvalOptions | None:
    if args.rel_tol is None:
        return None
    return EvalOptions(rel_tol=args.rel_tol)


def _quad_config(args) -> QuadConfig | None:
    if args.rel_tol is None:
        return None
    return QuadConfig(rel_tol=args.rel_tol)


def cmd_eval(args) -> int:
    opts = _eval_options(args)
    rows = []
    for z in args.z:
        r = polylog(args.s, z, opts)
        rows.append((z, r.value, r.method, r.est_error))
    _emit(("z", "value", "method", "est_error"), rows, args.format)
    return 0


def cmd_dist(args) -> int:
    d = PolyDist(args.s, args.loc, args.scale)
    opts = _eval_options(args)
    rows = []
    if args.what == "quantile":
        if not args.p:
            raise PolyquantError("--what quantile requires --p")
        for p in args.p:
            rows.append((p, d.quantile(p, opts)))
        _emit(("p", "value"), rows, args.format)
    else:
        if not args.x:
            raise PolyquantError(f"--what {args.what} requires --x")
        fn = d.cdf if args.what == "cdf" else d.pdf
        for x in args.x:
            rows.append((x, fn(x, opts)))
        _emit(("x", "value"), rows, args.format)
    return 0


def cmd_sample(args) -> int:
    d = PolyDist(args.s, args.loc, args.scale)
    values = d.sample(args.n, args.seed, _eval_options(args))
    _emit(("value",), [(v,) for v in values], args.format)
    return 0


def cmd_moments(args) -> int:
    grid = _parse_grid(args.s_grid)
    opts = _eval_options(args)
    quad = _quad_config(args)
    rows = []
    successes = 0
    for s in grid:
        d = PolyDist(float(s))
        results = []
        for order in range(1, args.max_order + 1):
            try:
                r = d.moment(order, opts, quad)
                results.append((s, order, r.value, r.method))
                successes += 1
            except (QuadratureError, PolyquantError) as exc:
                print(f"moments: s={s} order={order}: {exc}", file=sys.stderr)
                results.append((s, order, math.nan, "error"))
        if args.max_order >= 2:
            try:
                r = d.variance(opts, quad)
                results.append((s, "var", r.value, r.method))
                successes += 1
            except (QuadratureError, PolyquantError) as exc:
                print(f"moments: s={s} variance: {exc}", file=sys.stderr)
                results.append((s, "var", math.nan, "error"))
        rows.extend(results)
    _emit(("s", "order", "value", "method"), rows, args.format)
    return 0 if successes else 1


def cmd_curves(args) -> int:
    opts = _eval_options(args)
    rows = []
    for s in args.s:
        d = PolyDist(s)
        ps = np.linspace(0.0, 1.0, args.npoints)
        xs = d.quantile(ps, opts)
        for p, x in zip(ps, xs):
            if args.what == "cdf":
                rows.append((s, x, p))
            else:
                rows.append((s, x, _pdf_at_p(d, float(p), opts)))
    _emit(("s", "x", "value"), rows, args.format)
    return 0


def _pdf_at_p(d: PolyDist, p: float, opts) -> float:
    """Density at the quantile point, straight from the derivative identity."""
    if p == 0.0:
        return 1.0 / d.scale
    if p == 1.0:
        if d.s > 2.0:
            return 1.0 / (d.scale * zeta(d.s - 1.0))
        return 0.0
    return p / (polylog(d.s - 1.0, p, opts).value * d.scale)


def cmd_fit(args) -> int:
    data = []
    with open(args.data, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                value = float(line)
            except ValueError:
                print(f"fit: line {lineno}: not a number: {line!r}", file=sys.stderr)
                return 2
            if math.isnan(value) or value < 0.0:
                print(f"fit: line {lineno}: negative or NaN value {line!r}",
                      file=sys.stderr)
                return 2
            data.append(value)
    grid = _parse_grid(args.s_grid)
    profile = fit_shape(data, grid, _eval_options(args))
    rows = [(s, r, "") for s, r in zip(profile.grid, profile.r)]
    rows.append((profile.best_s, profile.best_r, profile.family.name))
    _emit(("s", "r", "family"), rows, args.format)
    return 0


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv",
                   help="output format (default csv)")
    p.add_argument("--rel-tol", type=float, default=None,
                   help="override the relative tolerance of kernel series "
                        "evaluation and moment quadrature")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="polyquant",
        description="Polylogarithm-quantile distribution toolkit",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate the kernel Li_s(z)")
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--z", type=float, nargs="+", required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("dist", help="quantile / cdf / pdf queries")
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--loc", type=float, default=0.0)
    p.add_argument("--scale", type=float, default=1.0)
    p.add_argument("--what", choices=("quantile", "cdf", "pdf"), required=True)
    p.add_argument("--p", type=float, nargs="+", help="probabilities (quantile)")
    p.add_argument("--x", type=float, nargs="+", help="points (cdf/pdf)")
    _add_common(p)
    p.set_defaults(fn=cmd_dist)

    p = sub.add_parser("sample", help="seeded inverse-transform sampling")
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--loc", type=float, default=0.0)
    p.add_argument("--scale", type=float, default=1.0)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)
    p.set_defaults(fn=cmd_sample)

    p = sub.add_parser("moments", help="moment and variance curves over a shape grid")
    p.add_argument("--s-grid", required=True, metavar="START:STEP:STOP")
    p.add_argument("--max-order", type=int, default=2)
    _add_common(p)
    p.set_defaults(fn=cmd_moments)

    p = sub.add_parser("curves", help="cdf/pdf curve data, parametrized by p "
                                      "so infinite support needs no cutoff")
    p.add_argument("--what", choices=("cdf", "pdf"), required=True)
    p.add_argument("--s", type=float, nargs="+", required=True)
    p.add_argument("--npoints", type=int, required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_curves)

    p = sub.add_parser("fit", help="PPCC shape fit of a data file "
                                   "(one non-negative number per line, # comments)")
    p.add_argument("--data", required=True)
    p.add_argument("--s-grid", required=True, metavar="START:STEP:STOP")
    _add_common(p)
    p.set_defaults(fn=cmd_fit)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "npoints", 2) < 2:
        print("curves: --npoints must be at least 2", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except (PolyquantError, ValueError, OSError) as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
