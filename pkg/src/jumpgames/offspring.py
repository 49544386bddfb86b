"""Offspring distributions described by their probability generating function.

Everything downstream only needs ``pgf``, ``pgf_deriv`` and ``chi0``, so a
new distribution only has to provide those three.
"""

import math

import numpy as np

from .errors import DomainError, InvalidOrder

EDGE = 1e-12


def clamp_unit(x, lo=0.0, hi=1.0):
    """Clamp x to [lo, hi] if it overshoots by at most EDGE, else raise."""
    if np.ndim(x) == 0:
        x = float(x)
        if not (lo - EDGE <= x <= hi + EDGE):
            raise DomainError(f"{x!r} outside [{lo}, {hi}]")
        return min(max(x, lo), hi)
    x = np.asarray(x, dtype=float)
    if np.any(~((x >= lo - EDGE) & (x <= hi + EDGE))):
        raise DomainError(f"values outside [{lo}, {hi}]")
    return np.clip(x, lo, hi)


class OffspringDistribution:
    kind = "abstract"
    chi0 = 0.0

    def pgf(self, x):
        raise NotImplementedError

    def deriv(self, x, order=1):
        raise NotImplementedError

    def pmf(self, tail=1e-17):
        """Probability masses 0..m with the neglected tail below ``tail``."""
        raise NotImplementedError

    def mean(self):
        return self.deriv(1.0, 1)

    def describe(self):
        raise NotImplementedError


class Poisson(OffspringDistribution):
    kind = "poisson"

    def __init__(self, rate):
        rate = float(rate)
        if not (rate > 0 and math.isfinite(rate)):
            raise DomainError(f"Poisson rate must be positive, got {rate!r}")
        chi0 = math.exp(-rate)
        if not 0.0 < chi0 < 1.0:
            raise DomainError(f"rate {rate!r} gives chi(0) = {chi0!r}")
        self.rate = rate
        self.chi0 = chi0

    def pgf(self, x):
        x = clamp_unit(x)
        if isinstance(x, float):
            return math.exp(self.rate * (x - 1.0))
        return np.exp(self.rate * (x - 1.0))

    def deriv(self, x, order=1):
        if order not in (1, 2):
            raise InvalidOrder(f"order must be 1 or 2, got {order!r}")
        return self.rate ** order * self.pgf(x)

    def pmf(self, tail=1e-17):
        lam = self.rate
        out = [self.chi0]
        n = 0
        # past the mode terms shrink geometrically; stop once they are negligible
        while n < lam or out[-1] > tail * 1e-3:
            n += 1
            out.append(math.exp(n * math.log(lam) - lam - math.lgamma(n + 1)))
        return np.array(out)

    def describe(self):
        return f"poisson({self.rate!r})"

    def __repr__(self):
        return f"Poisson({self.rate!r})"

    def __eq__(self, other):
        return isinstance(other, Poisson) and other.rate == self.rate

    def __hash__(self):
        return hash(("poisson", self.rate))


class FiniteSupport(OffspringDistribution):
    kind = "finite"

    def __init__(self, mass):
        mass = [float(m) for m in mass]
        if len(mass) < 2:
            raise DomainError("need masses for at least 0 and 1 children")
        if any(not math.isfinite(m) or m < 0 for m in mass):
            raise DomainError("masses must be finite and nonnegative")
        if abs(math.fsum(mass) - 1.0) > 1e-12:
            raise DomainError(f"masses sum to {math.fsum(mass)!r}, not 1")
        if not 0.0 < mass[0] < 1.0:
            raise DomainError(f"chi(0) = {mass[0]!r} must lie strictly in (0, 1)")
        self.mass = tuple(mass)
        self.chi0 = mass[0]
        self._d1 = tuple(i * m for i, m in enumerate(mass))[1:]
        self._d2 = tuple(i * (i - 1) * m for i, m in enumerate(mass))[2:]

    @staticmethod
    def _horner(coef, x):
        acc = 0.0 if isinstance(x, float) else np.zeros_like(x)
        for a in reversed(coef):
            acc = acc * x + a
        return acc

    def pgf(self, x):
        return self._horner(self.mass, clamp_unit(x))

    def deriv(self, x, order=1):
        if order not in (1, 2):
            raise InvalidOrder(f"order must be 1 or 2, got {order!r}")
        x = clamp_unit(x)
        coef = self._d1 if order == 1 else self._d2
        if not coef:
            return 0.0 if isinstance(x, float) else np.zeros_like(x)
        return self._horner(coef, x)

    def pmf(self, tail=1e-17):
        return np.array(self.mass)

    def describe(self):
        return "finite(" + ",".join(repr(m) for m in self.mass) + ")"

    def __repr__(self):
        return f"FiniteSupport({list(self.mass)!r})"

    def __eq__(self, other):
        return isinstance(other, FiniteSupport) and other.mass == self.mass

    def __hash__(self):
        return hash(("finite", self.mass))


def pgf(dist, x):
    """G(x) for x in [0, 1]."""
    return dist.pgf(x)


def pgf_deriv(dist, x, order=1):
    """G'(x) or G''(x) for x in [0, 1]."""
    return dist.deriv(x, order)
