"""The function ladder F_0 = 1, F_i(x) = G(F_{i-1}(x) - x) and its fixed points."""

from dataclasses import dataclass

from .errors import BracketError, DomainError
from .offspring import EDGE, OffspringDistribution, Poisson

DEFAULT_TOL = 1e-13


def bisect_root(f, lo, hi, tol, max_iter=400):
    """Root of f on [lo, hi] where f(lo) > 0 > f(hi), to bracket width < tol."""
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if not (flo > 0.0 > fhi):
        raise BracketError(f"no sign change on [{lo!r}, {hi!r}]: f = {flo!r}, {fhi!r}")
    for _ in range(max_iter):
        if hi - lo < tol:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = f(mid)
        if fm > 0.0:
            lo = mid
        elif fm < 0.0:
            hi = mid
        else:
            return mid
    return 0.5 * (lo + hi)


def _climb(dist, x, upto):
    # F_0..F_upto at x with no domain check on the c_i
    if x == 0.0:
        return [1.0] * (upto + 1)  # exact; summed masses can miss 1 by an ulp
    vals = [1.0]
    for _ in range(upto):
        vals.append(dist.pgf(vals[-1] - x))
    return vals


@dataclass(frozen=True)
class Ladder:
    dist: OffspringDistribution
    k: int
    c: tuple
    tol: float = DEFAULT_TOL

    @property
    def ck(self):
        return self.c[self.k]

    def values(self, x, upto=None):
        """[F_0(x), ..., F_upto(x)], requiring 0 <= x <= c_{upto-1}."""
        upto = self.k if upto is None else upto
        if not 0 <= upto <= self.k:
            raise DomainError(f"ladder index {upto} outside [0, {self.k}]")
        x = float(x)
        bound = self.c[upto - 1] if upto >= 1 else 1.0
        if x < -EDGE or x > bound + EDGE:
            raise DomainError(f"x = {x!r} outside [0, {bound!r}]")
        x = min(max(x, 0.0), bound)
        return _climb(self.dist, x, upto)


def c_ladder(dist, k, tol=DEFAULT_TOL):
    """Build the ladder for jump distance k: c_0 = 1 and c_i the fixed point of F_i."""
    if int(k) != k or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    k = int(k)
    cs = [1.0]
    for i in range(1, k + 1):
        lo, hi = dist.chi0, cs[-1]
        ci = bisect_root(lambda x: _climb(dist, x, i)[i] - x, lo, hi, tol)
        cs.append(ci)
    return Ladder(dist, k, tuple(cs), tol)


def f_eval(ladder, i, x):
    """F_i(x) on [0, c_{i-1}]."""
    if i == 0:
        x = float(x)
        if x < -EDGE or x > 1.0 + EDGE:
            raise DomainError(f"x = {x!r} outside [0, 1]")
        return 1.0
    return ladder.values(x, i)[i]


def f_deriv(ladder, i, x, method="auto"):
    """F_i'(x) on the open interval (0, c_{i-1}).

    ``method`` is "closed" (Poisson only), "chain" (any distribution), or
    "auto" which picks the closed form when it applies.
    """
    if int(i) != i or not 1 <= i <= ladder.k:
        raise DomainError(f"derivative index {i!r} outside [1, {ladder.k}]")
    i = int(i)
    x = float(x)
    if not 0.0 < x < ladder.c[i - 1]:
        raise DomainError(f"x = {x!r} outside (0, {ladder.c[i - 1]!r})")
    F = _climb(ladder.dist, x, i)
    if method == "auto":
        method = "closed" if isinstance(ladder.dist, Poisson) else "chain"
    if method == "closed":
        if not isinstance(ladder.dist, Poisson):
            raise DomainError("closed-form derivative needs a Poisson distribution")
        lam = ladder.dist.rate
        acc = 1.0
        for t in range(1, i):
            prod = 1.0
            for j in range(t, i):
                prod *= F[j]
            acc += lam ** (i - t) * prod
        return -lam * acc * F[i]
    if method != "chain":
        raise ValueError(f"unknown method {method!r}")
    d = 0.0  # F_0' = 0
    for j in range(1, i + 1):
        d = ladder.dist.deriv(F[j - 1] - x, 1) * (d - 1.0)
    return d
