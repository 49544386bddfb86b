"""Command line entry point: ``jumpgames <command> [options]``.

Every command writes CSV (or JSON with ``--json``) to stdout or ``--out``.
Exit codes: 0 ok, 1 Monte Carlo tripwire, 2 solver failure, 3 bad input.
"""

import argparse
import csv
import io
import json
import math
import sys

from .errors import BracketError, DomainError, HorizonError, NoConvergence
from .ladder import DEFAULT_TOL, c_ladder
from .offspring import FiniteSupport, Poisson
from .recursors import GameSpec, Variant, class_probs
from .simulate import mc_estimate
from .solve import (
    MAX_ITER,
    eta_curve_extremum,
    h_slope_at_ck,
    horizon_sequence,
    lambda_c,
    outcomes,
    solve_chat,
    solve_nl,
)

OK, TRIPWIRE, SOLVER, USAGE = 0, 1, 2, 3
Z_LIMIT = 4.0
MAX_GRID = 10**5


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


def _floats(text):
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _ints(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _variants(name):
    return [Variant.NORMAL, Variant.MISERE] if name == "both" else [Variant(name)]


def _dist(args):
    if args.poisson is not None:
        return Poisson(args.poisson)
    if args.finite is not None:
        return FiniteSupport(args.finite)
    raise UsageError("give --poisson RATE or --finite P0,P1,...")


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _json_value(v):
    if isinstance(v, float) and not math.isfinite(v):
        return repr(v)
    return v


def _emit(args, header, rows):
    if args.json:
        text = json.dumps([{h: _json_value(v) for h, v in zip(header, r)} for r in rows], indent=2) + "\n"
    else:
        buf = io.StringIO()
        out = csv.writer(buf, lineterminator="\n")
        out.writerow(header)
        out.writerows([_cell(v) for v in r] for r in rows)
        text = buf.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _outcome_row(spec, tol, max_iter):
    lad = c_ladder(spec.dist, spec.k, tol)
    res = outcomes(spec, tol, max_iter, ladder=lad)
    chat = solve_chat(lad) if spec.variant == Variant.MISERE else None
    return res, lad.ck, chat, h_slope_at_ck(lad)


def cmd_outcomes(args):
    dist = _dist(args)
    header = ["k", "dist", "variant", "loss", "win", "draw", "c_k", "c_hat", "slope_at_ck"]
    rows = []
    for var in _variants(args.variant):
        res, ck, chat, slope = _outcome_row(GameSpec(args.k, var, dist), args.tol, args.max_iter)
        rows.append([args.k, dist.describe(), var.value, res.loss, res.win, res.draw, ck, chat, slope])
    _emit(args, header, rows)
    return OK


def _grid(args):
    if args.lambdas is not None:
        lams = sorted(set(args.lambdas))
    elif args.grid is not None:
        start, stop, step = args.grid
        if not (0 < start < stop and step > 0):
            raise UsageError("grid needs 0 < START < STOP and STEP > 0")
        count = int(math.floor((stop - start) / step + 1e-9)) + 1
        if count > MAX_GRID:
            raise UsageError(f"grid has {count} points, limit is {MAX_GRID}")
        lams = [round(start + i * step, 12) for i in range(count)]
    else:
        raise UsageError("give --grid START STOP STEP or --lambdas L1,L2,...")
    if any(not lam > 0 for lam in lams):
        raise UsageError("rates must be positive")
    return lams


def cmd_sweep(args):
    lams = _grid(args)
    ks = sorted(set(args.k_list))
    if any(k < 1 for k in ks):
        raise UsageError("k values must be positive")
    header = ["k", "lambda", "variant", "loss", "win", "draw", "c_k", "slope_at_ck", "error"]
    rows = []
    failures = 0
    for k in ks:
        for lam in lams:
            for var in _variants(args.variant):
                try:
                    res, ck, _, slope = _outcome_row(GameSpec(k, var, Poisson(lam)), args.tol, args.max_iter)
                    rows.append([k, lam, var.value, res.loss, res.win, res.draw, ck, slope, None])
                except (NoConvergence, BracketError, DomainError) as exc:
                    failures += 1
                    rows.append([k, lam, var.value, None, None, None, None, None, str(exc)])
    _emit(args, header, rows)
    return SOLVER if rows and failures == len(rows) else OK


def cmd_phase(args):
    lc = lambda_c(2, tol=min(args.tol * 1e3, 1e-10))
    lam0, eta_max = eta_curve_extremum()
    _emit(args, ["lambda_c", "lambda_0", "eta_max"], [[lc, lam0, eta_max]])
    return OK


def _z(est, exact, n):
    se = math.sqrt(max(exact * (1.0 - exact), 0.0) / n) if n else 0.0
    if se > 0:
        return (est - exact) / se
    return 0.0 if abs(est - exact) < 1e-12 else math.copysign(math.inf, est - exact)


def cmd_simulate(args):
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    if args.horizon < 1:
        raise UsageError("--horizon must be at least 1")
    dist = _dist(args)
    variants = _variants(args.variant)
    header = ["n", "analytic_loss", "mc_loss", "mc_se", "analytic_win", "mc_win", "mc_win_se",
              "analytic_draw", "mc_draw", "z_loss", "z_win", "z_score"]
    if len(variants) > 1:
        header = ["variant"] + header
    rows = []
    worst = 0.0
    for var in variants:
        spec = GameSpec(args.k, var, dist)
        est = mc_estimate(spec, args.horizon, args.samples, args.seed, method=args.method,
                          workers=args.workers)
        if est.capped:
            print(f"note: {est.capped} trees hit the node cap and were left out", file=sys.stderr)
        loss, win, draw = horizon_sequence(spec, args.horizon, args.tol)
        for i in range(args.horizon):
            zl = _z(float(est.loss[i]), float(loss[i]), est.used)
            zw = _z(float(est.win[i]), float(win[i]), est.used)
            zs = zl if abs(zl) >= abs(zw) else zw
            worst = max(worst, abs(zs))
            row = [i + 1, float(loss[i]), float(est.loss[i]), float(est.loss_se[i]),
                   float(win[i]), float(est.win[i]), float(est.win_se[i]),
                   float(draw[i]), float(est.draw[i]), zl, zw, zs]
            rows.append(([var.value] if len(variants) > 1 else []) + row)
    _emit(args, header, rows)
    if worst > Z_LIMIT:
        print(f"tripwire: |z| = {worst:.2f} exceeds {Z_LIMIT}", file=sys.stderr)
        return TRIPWIRE
    return OK


def cmd_classes(args):
    dist = _dist(args)
    lad = c_ladder(dist, args.k, args.tol)
    nl = solve_nl(lad, args.tol, args.max_iter)
    probs = class_probs(lad, nl)
    rows = [[args.k, dist.describe(), i, j, p] for (i, j), p in sorted(probs.items())]
    _emit(args, ["k", "dist", "i", "j", "p"], rows)
    return OK


def build_parser():
    p = Parser(prog="jumpgames", description="k-jump games on Galton-Watson trees")
    sub = p.add_subparsers(dest="command", required=True, parser_class=Parser)

    def common(sp):
        sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
        sp.add_argument("--max-iter", type=int, default=MAX_ITER)
        sp.add_argument("--json", action="store_true", help="write JSON instead of CSV")
        sp.add_argument("--out", help="output file (default stdout)")

    def dist_args(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--poisson", type=float, metavar="RATE")
        g.add_argument("--finite", type=_floats, metavar="P0,P1,...")

    sp = sub.add_parser("outcomes", help="loss/win/draw at one point")
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--variant", choices=["normal", "misere", "both"], default="normal")
    dist_args(sp)
    common(sp)
    sp.set_defaults(run=cmd_outcomes)

    sp = sub.add_parser("sweep", help="outcomes over a grid of Poisson rates")
    sp.add_argument("--k", dest="k_list", type=_ints, default=[1, 2, 3], metavar="K1,K2,...")
    sp.add_argument("--variant", choices=["normal", "misere", "both"], default="normal")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--grid", type=float, nargs=3, metavar=("START", "STOP", "STEP"))
    g.add_argument("--lambdas", type=_floats, metavar="L1,L2,...")
    common(sp)
    sp.set_defaults(run=cmd_sweep)

    sp = sub.add_parser("phase", help="critical rate and eta-curve maximum")
    common(sp)
    sp.set_defaults(run=cmd_phase)

    sp = sub.add_parser("simulate", help="Monte Carlo estimates against the exact horizon sequence")
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--variant", choices=["normal", "misere", "both"], default="normal")
    sp.add_argument("--horizon", type=int, default=6)
    sp.add_argument("--samples", type=int, default=10**5)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--method", choices=["lazy", "full"], default="lazy")
    sp.add_argument("--workers", type=int, default=1)
    dist_args(sp)
    common(sp)
    sp.set_defaults(run=cmd_simulate)

    sp = sub.add_parser("classes", help="class probabilities at the normal-play loss probability")
    sp.add_argument("--k", type=int, default=2)
    dist_args(sp)
    common(sp)
    sp.set_defaults(run=cmd_classes)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (UsageError, DomainError, HorizonError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except (NoConvergence, BracketError) as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return SOLVER


if __name__ == "__main__":
    sys.exit(main())
