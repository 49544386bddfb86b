"""Nested difference operators and the one-dimensional outcome maps.

``g_eval`` and ``gamma_eval`` take an argument list x_0..x_j. Both branches of
the recursion share the tail x_2..x_j, so each intermediate value is fixed by
(first argument, tail start) and the evaluation is memoized on that pair.
"""

from dataclasses import dataclass
from enum import Enum

from .errors import DomainError
from .offspring import OffspringDistribution, clamp_unit


class Variant(str, Enum):
    NORMAL = "normal"
    MISERE = "misere"


@dataclass(frozen=True)
class GameSpec:
    k: int
    variant: Variant
    dist: OffspringDistribution

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 1:
            raise DomainError(f"k must be a positive integer, got {self.k!r}")
        object.__setattr__(self, "k", int(self.k))
        object.__setattr__(self, "variant", Variant(self.variant))


def _nested(dist, args, shift):
    xs = [float(a) for a in args]
    j = len(xs) - 1
    if j < 1:
        raise DomainError("need at least two arguments")
    memo = {}

    def value(first, start):
        # depth j - start + 1 operator applied to (xs[first], xs[start], ..., xs[j])
        if start == j:
            return xs[first] - xs[j]
        key = (first, start)
        if key not in memo:
            a = clamp_unit(shift + value(first, start + 1))
            b = clamp_unit(shift + value(start, start + 1))
            memo[key] = dist.pgf(a) - dist.pgf(b)
        return memo[key]

    return value(0, 1)


def g_eval(dist, args):
    """g_j(x_0, ..., x_j) with g_1(x, y) = x - y."""
    return _nested(dist, args, 0.0)


def gamma_eval(dist, args):
    """gamma_j(x_0, ..., x_j): like g_j with chi(0) added inside each G."""
    return _nested(dist, args, dist.chi0)


def h_eval(ladder, x):
    """H_k(x) = G(g_k(F_0(x), ..., F_k(x))) on [0, c_{k-1}]."""
    F = ladder.values(x)
    return ladder.dist.pgf(clamp_unit(g_eval(ladder.dist, F)))


def j_eval(ladder, x):
    """J_k(x) = G(chi0 + gamma_k(F_0(x), ..., F_k(x))) - chi0 on [0, c_{k-1}]."""
    dist = ladder.dist
    F = ladder.values(x)
    return dist.pgf(clamp_unit(dist.chi0 + gamma_eval(dist, F))) - dist.chi0


def class_probs(ladder, x):
    """Map (i, j) -> p_{i,j}(x) for 0 <= i < j <= k."""
    k = ladder.k
    F = ladder.values(x)
    out = {}
    for j in range(1, k + 1):
        for i in range(j):
            args = [F[j - i - 1], F[j - i]] + F[k - i + 1:]
            out[(i, j)] = g_eval(ladder.dist, args)
    return out


def system_residual_k2(ladder, nl2, p01, p02, p12):
    """Residuals of the four equations tying nl_2 to the k = 2 class probabilities."""
    G = ladder.dist.pgf
    for v in (nl2, p01, p02, p12):
        clamp_unit(v)
    return (
        nl2 - G(p12),
        p01 - (1.0 - G(1.0 - nl2)),
        p12 - (G(p01 + p02) - G(p02)),
        p02 - (G(1.0 - nl2) - G(1.0 - nl2 - p01)),
    )
