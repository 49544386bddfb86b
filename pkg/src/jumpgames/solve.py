"""Outcome probabilities, slopes at c_k and the Poisson transition constants."""

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence
from .ladder import DEFAULT_TOL, bisect_root, c_ladder, f_deriv
from .offspring import Poisson
from .recursors import GameSpec, Variant, h_eval, j_eval

MAX_ITER = 10**6


@dataclass(frozen=True)
class OutcomeTriple:
    loss: float
    win: float
    draw: float
    variant: Variant = Variant.NORMAL

    def as_tuple(self):
        return (self.loss, self.win, self.draw)


@dataclass(frozen=True)
class PhaseReport:
    rate: float
    c_k: float
    slope_at_ck: float
    draw_positive: bool
    eta: float = None


@dataclass(frozen=True)
class DurationReport:
    nl_equals_ck: bool
    slope_h: float
    abs_slope_f: float
    finite_expected_duration_certified: bool
    conjecture_holds: bool


def _iterate(step, tol, max_iter, cap=None):
    x = 0.0
    prev_step = None
    for n in range(1, max_iter + 1):
        y = step(x)
        if cap is not None and y > cap:
            y = cap
        d = abs(y - x)
        if d < tol:
            return y, d, prev_step
        prev_step = d
        x = y
    raise NoConvergence(
        f"no convergence after {max_iter} steps: last = {x!r}, step = {prev_step!r}",
        last=x, step=prev_step, iterations=max_iter,
    )


def solve_nl(ladder, tol=None, max_iter=MAX_ITER):
    """Minimal positive fixed point of H_k, by iterating from 0."""
    tol = ladder.tol if tol is None else tol
    ck = ladder.ck
    x, d, prev = _iterate(lambda v: h_eval(ladder, v), tol, max_iter, cap=ck)
    # the iterates approach their limit geometrically; if the remaining tail
    # would carry them to within 10 tol of c_k then the limit is c_k itself
    if prev and d < prev:
        r = d / prev
        if x + d * r / (1.0 - r) >= ck - 10 * tol:
            return ck
    if x >= ck - 10 * tol:
        return ck
    return x


def solve_ml(ladder, tol=None, max_iter=MAX_ITER):
    """Minimal positive fixed point of J_k, by iterating from 0."""
    tol = ladder.tol if tol is None else tol
    x, d, prev = _iterate(lambda v: j_eval(ladder, v), tol, max_iter)
    # the limit is capped by the crossing point; when the iterates are headed
    # there (zero draw) return the crossing point itself
    chat = solve_chat(ladder)
    if abs(j_eval(ladder, chat) - chat) < 10 * tol:
        tail = 0.0
        if prev and d < prev:
            r = d / prev
            tail = d * r / (1.0 - r)
        if x + tail >= chat - 10 * tol:
            return chat
    return x


def solve_chat(ladder):
    """The crossing point of F_k and J_k + chi(0) inside (0, c_{k-1})."""
    chi0 = ladder.dist.chi0
    k = ladder.k

    def gap(x):
        return ladder.values(x)[k] - j_eval(ladder, x) - chi0

    return bisect_root(gap, 0.0, ladder.c[k - 1], ladder.tol)


def _clamp_draw(v, tol):
    return 0.0 if abs(v) <= 10 * tol else v


def outcomes(spec, tol=DEFAULT_TOL, max_iter=MAX_ITER, ladder=None):
    """Loss, win and draw probabilities for the first player."""
    lad = ladder if ladder is not None else c_ladder(spec.dist, spec.k, tol)
    k = spec.k
    if spec.variant == Variant.NORMAL:
        nl = solve_nl(lad, tol, max_iter)
        fk = lad.values(nl)[k]
        return OutcomeTriple(nl, 1.0 - fk, _clamp_draw(fk - nl, tol), Variant.NORMAL)
    chi0 = spec.dist.chi0
    ml = solve_ml(lad, tol, max_iter)
    fk = lad.values(ml)[k]
    draw = fk - j_eval(lad, ml) - chi0
    return OutcomeTriple(ml, 1.0 - fk + chi0, _clamp_draw(draw, tol), Variant.MISERE)


def _fd_slope(ladder):
    ck = ladder.ck
    upper = ladder.c[ladder.k - 1]
    h = max(1e-7, 1e-7 * ck)
    if ck + h <= upper:
        return (h_eval(ladder, ck + h) - h_eval(ladder, ck - h)) / (2 * h)
    return (h_eval(ladder, ck) - h_eval(ladder, ck - h)) / h


def _closed_slope(ladder):
    lam = ladder.dist.rate
    eta = lam * ladder.ck
    e = math.exp(-eta)
    return lam**2 * eta**2 * e * e + 2 * lam * eta**2 * e - lam * eta**3 * e - eta**3


def h_slope_at_ck(ladder, method="auto"):
    """H_k'(c_k): closed form for Poisson with k = 2, central differences otherwise."""
    closed_ok = isinstance(ladder.dist, Poisson) and ladder.k == 2
    if method == "auto":
        method = "closed" if closed_ok else "fd"
    if method == "closed":
        if not closed_ok:
            raise ValueError("closed-form slope needs Poisson offspring and k = 2")
        return _closed_slope(ladder)
    if method == "fd":
        return _fd_slope(ladder)
    raise ValueError(f"unknown method {method!r}")


def poisson_slope(rate, k=2, tol=DEFAULT_TOL, method="auto"):
    return h_slope_at_ck(c_ladder(Poisson(rate), k, tol), method)


def lambda_c(k=2, tol=1e-10, lo=2.0, hi=2.5):
    """Poisson rate where H_2'(c_2) crosses 1."""
    if k != 2:
        raise ValueError("the critical rate is only located for k = 2")
    return bisect_root(lambda lam: 1.0 - poisson_slope(lam, 2), lo, hi, tol)


def eta(rate, tol=DEFAULT_TOL):
    """eta = rate * c_2 for Poisson offspring."""
    return rate * c_ladder(Poisson(rate), 2, tol).ck


def eta_curve_extremum(tol=1e-12, lo=2.0, hi=3.0):
    """(lambda_0, eta_max): where c_2 e^{rate c_2 + 1} = 1, and eta there."""

    def excess(lam):
        c2 = c_ladder(Poisson(lam), 2).ck
        return c2 * math.exp(lam * c2 + 1.0) - 1.0

    lam0 = bisect_root(excess, lo, hi, tol)
    return lam0, eta(lam0)


def duration_check(ladder, tol=None):
    """Sufficient conditions for a finite expected game length, plus the slope probe."""
    tol = ladder.tol if tol is None else tol
    k = ladder.k
    ck = ladder.ck
    dist = ladder.dist
    if k == 2:
        a0 = dist.deriv(1.0 - ck, 1)
        a1 = dist.deriv(ladder.values(ck)[1] - ck, 1)
        slope_h = a1 * a1 * (a0 * a0 + 2 * a0 - a1 * a0 - a1)
        abs_f = abs(-a1 * (a0 + 1.0))
    else:
        slope_h = h_slope_at_ck(ladder)
        abs_f = abs(f_deriv(ladder, k, ck))
    nl = solve_nl(ladder, tol)
    on_ck = abs(nl - ck) < 10 * tol
    certified = on_ck and (max(slope_h, abs_f) < 1.0 or (k in (2, 3) and abs_f < 1.0))
    return DurationReport(on_ck, slope_h, abs_f, certified, slope_h < abs_f * abs_f)


def phase_report(spec, tol=DEFAULT_TOL, max_iter=MAX_ITER):
    lad = c_ladder(spec.dist, spec.k, tol)
    nl = solve_nl(lad, tol, max_iter)
    rate = spec.dist.rate if isinstance(spec.dist, Poisson) else float("nan")
    eta_v = rate * lad.ck if spec.k == 2 and isinstance(spec.dist, Poisson) else None
    return PhaseReport(rate, lad.ck, h_slope_at_ck(lad), bool(nl < lad.ck - 10 * tol), eta_v)


def horizon_sequence(spec, horizon, tol=DEFAULT_TOL, ladder=None):
    """Exact loss/win/draw probabilities for horizons n = 1..horizon.

    Returns three arrays indexed by n - 1.
    """
    lad = ladder if ladder is not None else c_ladder(spec.dist, spec.k, tol)
    k = spec.k
    chi0 = spec.dist.chi0
    loss = np.zeros(horizon + 1)
    win = np.zeros(horizon + 1)
    if spec.variant == Variant.NORMAL:
        # loss at n = 1 is chi0 = H(0); the map advances the loss every two horizons
        x = 0.0
        for n in range(1, horizon + 1):
            if n % 2 == 1:
                x = h_eval(lad, x)
            loss[n] = x
        for n in range(1, horizon + 1):
            win[n] = 1.0 - lad.values(loss[n - 1])[k]
    else:
        x = 0.0
        for n in range(1, horizon + 1):
            if n >= 2 and n % 2 == 0:
                x = j_eval(lad, x)
            loss[n] = x
        for n in range(1, horizon + 1):
            win[n] = chi0 + 1.0 - lad.values(loss[n - 1])[k]
    loss, win = loss[1:], win[1:]
    return loss, win, 1.0 - loss - win
