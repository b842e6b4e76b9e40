"""Command-line front end: ``kratzel eval|bounds|verify|transform``.

Exit codes: 0 success, 1 a verified inequality failed, 2 usage or domain
error, 3 only indeterminate numerics.  CSV output uses ``.`` decimals and 15
significant digits.  ``KRATZEL_RTOL`` sets the default relative tolerance.
"""

import argparse
import csv
import logging
import math
import os
import sys

import numpy as np

from . import bounds as bd
from .errors import AccuracyError, DomainError
from .kernel import bessel_k, kratzel_kernel, log_bessel_k
from .quad import QuadConfig
from .transform import ExpDecay, PowerExp, read_sampled_csv, transform_grid

log = logging.getLogger("kratzel")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INDETERMINATE = 3

BOUNDS_HEADER = [
    "x",
    "exact",
    "gamma_bound",
    "gamma_bound_margin",
    "scaled_exact",
    "envelope_lower",
    "envelope_upper",
    "envelope_lower_margin",
    "envelope_upper_margin",
    "luke_lower",
    "luke_upper",
    "luke_lower_margin",
    "luke_upper_margin",
]
VERIFY_HEADER = ["which", "n", "nu", "x", "exact", "bound", "direction", "margin", "err", "status"]
TRANSFORM_HEADER = ["z", "value", "err_estimate", "error"]
DEFAULT_N = (2, 3)
DEFAULT_NU = (0.0, 0.25, 1.0)


class UsageError(Exception):
    pass


def fmt(v):
    if v is None:
        return ""
    if isinstance(v, str):
        return v
    if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
        return str(v)
    v = float(v)
    if math.isnan(v):
        return "nan"
    return format(v, ".15g")


def _default_rtol():
    raw = os.environ.get("KRATZEL_RTOL")
    if raw is None:
        return 1e-10
    try:
        return float(raw)
    except ValueError:
        raise UsageError(f"KRATZEL_RTOL is not a number: {raw!r}") from None


def _config(args):
    rtol = args.rel_tol if args.rel_tol is not None else _default_rtol()
    if not rtol > 0.0:
        raise UsageError("--rel-tol must be positive")
    return QuadConfig(rel_tol=rtol)


def _x_values(args):
    if args.x is not None:
        return list(args.x)
    if args.x_min is None or args.x_max is None:
        raise UsageError("give --x or --x-min/--x-max/--x-count")
    if args.x_count is None:
        args.x_count = 40
    if args.x_count < 2:
        raise UsageError("--x-count must be at least 2")
    if not 0.0 < args.x_min < args.x_max:
        raise UsageError("x grid needs 0 < x-min < x-max")
    space = np.geomspace if args.x_log else np.linspace
    return [float(v) for v in space(args.x_min, args.x_max, args.x_count)]


class _Output:
    def __init__(self, path):
        self.path = path

    def __enter__(self):
        if self.path in (None, "-", "stdout"):
            self.fh = sys.stdout
            self.close = False
        else:
            self.fh = open(self.path, "w", newline="")
            self.close = True
        return csv.writer(self.fh, lineterminator="\n")

    def __exit__(self, *exc):
        if self.close:
            self.fh.close()
        else:
            self.fh.flush()


def _resolve_nu(args, n):
    if getattr(args, "nu_eq_recip_n", False):
        if n is None:
            raise UsageError("--nu-eq-recip-n needs --n")
        return 1.0 / n
    if args.nu is None:
        raise UsageError("--nu is required")
    return args.nu


def cmd_eval(args):
    cfg = _config(args)
    if args.x is None or len(args.x) != 1:
        raise UsageError("eval takes exactly one --x")
    x = args.x[0]
    if not x > 0.0:
        raise DomainError("x must be positive")
    if args.kind == "bessel":
        res = bessel_k(_resolve_nu(args, 2 if args.nu_eq_recip_n else None), x, cfg)
    else:
        if args.n is None or len(args.n) != 1:
            raise UsageError("--kind kernel needs exactly one --n")
        n = args.n[0]
        res = kratzel_kernel(n, _resolve_nu(args, n), x, cfg)
    print(fmt(res.value))
    print(f"# err_estimate={fmt(res.err_estimate)}")
    return EXIT_OK


def bounds_rows(nu, xs, cfg):
    rows = []
    for x in xs:
        log_k, rel, _ = log_bessel_k(nu, x, cfg)
        exact = math.exp(log_k)
        row = {"x": x, "exact": exact}
        direction = bd.bound_direction(2, nu)
        if direction.admits(x):
            log_b = bd.log_theorem_bessel_bound(nu, x)
            rep = bd.make_report("bessel_gamma_bound", 2, nu, x, log_k, log_b, direction.kind, rel, bd.TOL_EQ)
            row["gamma_bound"] = rep.bound
            row["gamma_bound_margin"] = rep.margin
        if nu < 0.5:
            scaled = math.exp(0.5 * math.log(2.0 * x / math.pi) + x + log_k)
            row["scaled_exact"] = scaled
            for name, (lo, up) in (
                ("envelope", bd.corollary_envelope(nu, x)),
                ("luke", bd.luke_envelope(nu, x)),
            ):
                row[f"{name}_lower"] = lo
                row[f"{name}_upper"] = up
                row[f"{name}_lower_margin"] = (scaled - lo) / scaled
                row[f"{name}_upper_margin"] = (up - scaled) / scaled
        rows.append(row)
    return rows


def cmd_bounds(args):
    cfg = _config(args)
    nu = _resolve_nu(args, 2 if args.nu_eq_recip_n else None)
    if not nu >= 0.0:
        raise DomainError("nu must be non-negative")
    xs = _x_values(args)
    if any(not x > 0.0 for x in xs):
        raise DomainError("x must be positive")
    rows = bounds_rows(nu, xs, cfg)
    with _Output(args.out) as out:
        out.writerow(BOUNDS_HEADER)
        for row in rows:
            out.writerow([fmt(row.get(col)) for col in BOUNDS_HEADER])
    return EXIT_OK


def sweep_reports(n_values, nu_values, recip, xs, cfg):
    reports = []
    for n in n_values:
        nus = list(nu_values)
        if recip:
            nus.append(1.0 / n)
        for nu in sorted(set(nus)):
            for x in xs:
                reports.extend(bd.verify_point(n, nu, x, cfg))
    return reports


def cmd_verify(args):
    cfg = _config(args)
    n_values = args.n if args.n is not None else list(DEFAULT_N)
    if any(n < 2 for n in n_values):
        raise UsageError("--n values must be >= 2")
    nu_values = args.nu_list if args.nu_list is not None else list(DEFAULT_NU)
    recip = args.nu_eq_recip_n or (args.nu_list is None and args.n is None)
    if any(not nu >= 0.0 for nu in nu_values):
        raise UsageError("--nu values must be non-negative")
    if args.x is None and args.x_min is None:
        args.x_min, args.x_max, args.x_log = 1e-3, 1e2, True
    xs = _x_values(args)
    reports = sweep_reports(n_values, nu_values, recip, xs, cfg)
    failed = sum(r.status == "failed" for r in reports)
    indeterminate = sum(r.status == "indeterminate" for r in reports)
    with _Output(args.out) as out:
        out.writerow(VERIFY_HEADER)
        for r in reports:
            out.writerow([
                r.which, fmt(r.n), fmt(r.nu), fmt(r.x), fmt(r.exact), fmt(r.bound),
                r.direction.value, fmt(r.margin), fmt(r.err), r.status,
            ])
    print(f"checked={len(reports)} failed={failed} indeterminate={indeterminate}", file=sys.stderr)
    if failed:
        return EXIT_FAILED
    if indeterminate:
        return EXIT_INDETERMINATE
    return EXIT_OK


def cmd_transform(args):
    cfg = _config(args)
    if args.n is None or len(args.n) != 1:
        raise UsageError("transform needs exactly one --n")
    n = args.n[0]
    nu = _resolve_nu(args, n)
    if (args.input is None) == (args.builtin is None):
        raise UsageError("give exactly one of --input or --builtin")
    if args.input is not None:
        f = read_sampled_csv(args.input)
    elif args.builtin == "exp-decay":
        f = ExpDecay(args.mu)
    else:
        f = PowerExp(args.power, args.mu)
    if not args.z:
        raise UsageError("--z needs at least one value")
    rows = transform_grid(f, n, nu, args.z, cfg)
    with _Output(args.out) as out:
        out.writerow(TRANSFORM_HEADER)
        for row in rows:
            out.writerow([fmt(row.z), fmt(row.value), fmt(row.err_estimate), row.error or ""])
    return EXIT_INDETERMINATE if any(row.error for row in rows) else EXIT_OK


def _add_common(p, x_grid=True):
    p.add_argument("--n", type=int, action="append", help="kernel index (repeatable for verify)")
    p.add_argument("--nu-eq-recip-n", action="store_true", help="use nu = 1/n exactly")
    p.add_argument("--rel-tol", type=float, default=None)
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    if x_grid:
        p.add_argument("--x", type=float, action="append")
        p.add_argument("--x-min", type=float)
        p.add_argument("--x-max", type=float)
        p.add_argument("--x-count", type=int, default=None)
        p.add_argument("--x-log", action="store_true", help="logarithmic x spacing")


def build_parser():
    parser = argparse.ArgumentParser(prog="kratzel", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate K_nu(x) or the Kratzel kernel")
    p.add_argument("--kind", choices=["kernel", "bessel"], required=True)
    p.add_argument("--nu", type=float)
    _add_common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("bounds", help="tabulate K_nu against its bounds")
    p.add_argument("--nu", type=float)
    _add_common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="sweep every inequality over a grid")
    p.add_argument("--nu", type=float, action="append", dest="nu_list")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("transform", help="Kratzel transform of a sampled or builtin function")
    p.add_argument("--nu", type=float)
    p.add_argument("--input", help="two-column CSV (t, f) with header")
    p.add_argument("--builtin", choices=["exp-decay", "power-exp"])
    p.add_argument("--mu", type=float, default=1.0, help="decay rate of the builtin")
    p.add_argument("--power", type=float, default=0.0, help="power of power-exp")
    p.add_argument("--z", type=float, nargs="+")
    _add_common(p, x_grid=False)
    p.set_defaults(func=cmd_transform)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"kratzel {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AccuracyError as exc:
        print(f"kratzel {args.command}: indeterminate: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE


if __name__ == "__main__":
    sys.exit(main())
