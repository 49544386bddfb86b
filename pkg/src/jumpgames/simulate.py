"""Monte Carlo game simulator on sampled Galton-Watson trees.

Two routes to the root outcome of a finite-horizon game:

* ``sample_tree`` + ``label_game``: grow the whole tree to depth horizon*k
  breadth-first, then run the horizon recursions bottom-up for every vertex.
* the lazy evaluator in ``_kernel``: grow only the parts of the tree the
  search needs. Much cheaper when the root is decided quickly, which is the
  common case.

``mc_estimate`` uses either; tests check them against each other and against
an exhaustive minimax search on small trees.
"""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import IntEnum
from functools import lru_cache
from multiprocessing import get_context

import numpy as np

from . import _kernel
from .errors import DomainError, HorizonError
from .recursors import Variant

MASK64 = (1 << 64) - 1
DEFAULT_NODE_CAP = 10**6
LAZY_BLOCK = 2048


class Label(IntEnum):
    LOSS = 0
    WIN = 1
    UNDECIDED = 2


@dataclass
class SampledTree:
    """A rooted tree with breadth-first ids; vertex 0 is the root.

    The children of v are ``first[v] .. first[v] + count[v] - 1``. A count of
    -1 means v was never expanded (depth or node cap reached).
    """

    count: np.ndarray
    first: np.ndarray
    depth: np.ndarray
    depth_cap: int
    node_cap_hit: bool = False

    @property
    def size(self):
        return len(self.count)

    @property
    def parent(self):
        # children are contiguous and grouped by parent in id order
        has = self.count > 0
        return np.concatenate(([-1], np.repeat(np.flatnonzero(has), self.count[has])))

    @property
    def children(self):
        return [list(range(self.first[v], self.first[v] + max(self.count[v], 0)))
                for v in range(self.size)]

    @property
    def complete(self):
        return bool(np.all(self.count >= 0))

    @classmethod
    def from_children(cls, children, depth_cap=None):
        """Build from an adjacency list already in breadth-first order."""
        n = len(children)
        count = np.array([len(c) for c in children], dtype=np.int64)
        first = np.zeros(n, dtype=np.int64)
        depth = np.zeros(n, dtype=np.int64)
        nxt = 1
        for v, kids in enumerate(children):
            if kids and list(kids) != list(range(nxt, nxt + len(kids))):
                raise DomainError("children must be listed in breadth-first order")
            first[v] = nxt
            for w in kids:
                depth[w] = depth[v] + 1
            nxt += len(kids)
        if nxt != n:
            raise DomainError("adjacency list does not describe a single tree")
        cap = int(depth.max()) + 1 if depth_cap is None else depth_cap
        return cls(count, first, depth, cap, False)


@dataclass
class LabelTable:
    """Per-vertex outcome of the game started there, at the given horizon.

    ``rounds[v]`` is the number of rounds the game from v lasts under optimal
    play when it is decided within the horizon, else ``horizon``.
    ``exact[v]`` is False where truncation may have hidden a move.
    """

    label: np.ndarray
    rounds: np.ndarray
    exact: np.ndarray
    horizon: int
    variant: Variant
    approximate: bool = False

    def loss_by(self, n):
        """Vertices in the loss set at horizon n <= self.horizon."""
        return (self.label == Label.LOSS) & (self.rounds < n)

    def win_by(self, n):
        return (self.label == Label.WIN) & (self.rounds < n)


def _seed64(seed):
    return int(seed) & MASK64


@lru_cache(maxsize=64)
def _cdf(dist):
    pmf = dist.pmf()
    cdf = np.cumsum(pmf) / pmf.sum()
    cdf[-1] = 1.0
    return cdf


def sample_tree(dist, depth_cap, node_cap=DEFAULT_NODE_CAP, seed=0, index=0):
    """Grow a Galton-Watson tree breadth-first down to ``depth_cap`` generations.

    Each (seed, index) pair gives its own random stream, so tree ``index``
    is the same no matter which other trees are drawn.
    """
    if depth_cap < 1:
        raise DomainError(f"depth_cap must be at least 1, got {depth_cap!r}")
    if node_cap < 1:
        raise DomainError(f"node_cap must be at least 1, got {node_cap!r}")
    cnt, first, depth, hit = _kernel.grow(
        np.uint64(_seed64(seed)), np.uint64(index), _cdf(dist), int(depth_cap), int(node_cap))
    return SampledTree(cnt, first, depth, int(depth_cap), bool(hit))


def _near(par, marked, k):
    """Mask of vertices with a marked strict descendant within distance k."""
    n = len(marked)
    par = par[1:]
    hit = np.zeros(n, dtype=bool)
    for _ in range(k):
        src = marked[1:] | hit[1:]
        hit = np.bincount(par[src], minlength=n) > 0
    return hit


def label_game(tree, spec, horizon, exact=True):
    """Run the horizon recursions on every vertex of ``tree``.

    With ``exact=True`` the tree must reach depth horizon*k so the root label
    is exact; otherwise labels are computed anyway and vertices near the
    truncation frontier are marked inexact.
    """
    k = spec.k
    if horizon < 1:
        raise DomainError(f"horizon must be at least 1, got {horizon!r}")
    if exact and horizon * k > tree.depth_cap:
        raise HorizonError(
            f"horizon {horizon} with k = {k} needs depth {horizon * k}, tree has {tree.depth_cap}")
    mis = spec.variant == Variant.MISERE
    n = tree.size
    par = tree.parent
    known = tree.count >= 0
    leaf = tree.count == 0
    lose = np.zeros(n, dtype=bool)
    win = np.zeros(n, dtype=bool)
    first_decided = np.full(n, horizon + 1, dtype=np.int64)
    for m in range(horizon):
        # lose/win hold the level-m sets; build level m + 1
        if mis:
            new_win = (known & leaf) | _near(par, lose, k)
            new_lose = known & ~leaf & ~_near(par, ~win, k)
        else:
            new_win = _near(par, lose, k)
            new_lose = known & (leaf | ~_near(par, ~win, k))
        fresh = (new_win | new_lose) & (first_decided > horizon)
        first_decided[fresh] = m + 1
        lose, win = new_lose, new_win
    label = np.full(n, Label.UNDECIDED, dtype=np.int8)
    label[lose] = Label.LOSS
    label[win] = Label.WIN
    rounds = np.where(first_decided <= horizon, first_decided - 1, horizon)
    # exact unless a vertex fewer than horizon*k generations below was left unexpanded
    ok = known & ~_near(par, ~known, horizon * k - 1)
    approximate = bool(tree.node_cap_hit or not ok[0])
    return LabelTable(label, rounds, ok, horizon, spec.variant, approximate)


def moves(tree, u, k):
    """Strict descendants of u within distance k, in increasing id order."""
    out = []
    level = [u]
    for _ in range(k):
        nxt = []
        for v in level:
            if tree.count[v] > 0:
                nxt.extend(range(tree.first[v], tree.first[v] + tree.count[v]))
        out.extend(nxt)
        level = nxt
    return sorted(out)


def minimax(tree, spec, u=0):
    """(Label, rounds, line) by exhaustive search over every move sequence.

    The winner picks the quickest win and the loser the slowest loss; among
    equally good moves the lowest id is played. ``line`` is that sequence
    of vertices. Needs a fully expanded tree.
    """
    if not tree.complete:
        raise DomainError("exhaustive search needs a fully expanded tree")
    mis = spec.variant == Variant.MISERE
    k = spec.k

    def play(v):
        opts = moves(tree, v, k)
        if not opts:
            return (Label.WIN if mis else Label.LOSS), 0, [v]
        best = None
        for w in opts:
            lab, r, line = play(w)
            if lab == Label.LOSS:
                cand = (0, r)  # we win; prefer short
            else:
                cand = (1, -r)  # we lose; prefer long
            if best is None or cand < best[0]:
                best = (cand, lab, r, line)
        _, lab, r, line = best
        mine = Label.WIN if lab == Label.LOSS else Label.LOSS
        return mine, r + 1, [v] + line

    return play(u)


def lazy_root_codes(tree, spec, horizon):
    """Root codes for horizons 1..horizon from the lazy search run on a given tree.

    Returns None if the search needed a vertex the tree leaves unexpanded.
    """
    mis = spec.variant == Variant.MISERE
    tabs, zs, pl = _kernel.draw_tables(spec.dist.pmf(), spec.k)
    out = np.empty((1, horizon), dtype=np.int8)
    work = np.empty(1, dtype=np.int64)
    cap = tree.size + 1
    _kernel.evaluate(0, 1, np.uint64(0), tabs, zs, pl, spec.k, horizon, bool(mis), False, cap,
                     tree.count.astype(np.int64), tree.first.astype(np.int64), out, work)
    return None if work[0] < 0 else out[0]


@dataclass
class McEstimate:
    """Per-horizon root outcome frequencies; index n - 1 holds horizon n."""

    loss: np.ndarray
    win: np.ndarray
    draw: np.ndarray
    loss_se: np.ndarray
    win_se: np.ndarray
    draw_se: np.ndarray
    samples: int
    used: int
    capped: int
    horizon: int
    method: str
    codes: np.ndarray = field(default=None, repr=False)


def _se(p, n):
    return np.sqrt(np.maximum(p * (1.0 - p), 0.0) / max(n, 1))


def _lazy_chunk(args):
    t0, t1, seed, pmf, k, horizon, mis, bottom, cap = args
    tabs, zs, pl = _kernel.draw_tables(pmf, k)
    out = np.empty((t1 - t0, horizon), dtype=np.int8)
    work = np.empty(t1 - t0, dtype=np.int64)
    none = np.empty(0, dtype=np.int64)
    _kernel.evaluate(t0, t1, np.uint64(seed), tabs, zs, pl, k, horizon, bool(mis), bool(bottom),
                     cap, none, none, out, work)
    return out, work


def _full_chunk(args):
    t0, t1, seed, dist, spec, horizon, cap = args
    out = np.empty((t1 - t0, horizon), dtype=np.int8)
    work = np.zeros(t1 - t0, dtype=np.int64)
    for t in range(t0, t1):
        tree = sample_tree(dist, horizon * spec.k, cap, seed, t)
        if tree.node_cap_hit:
            work[t - t0] = -1
            out[t - t0] = Label.UNDECIDED
            continue
        table = label_game(tree, spec, horizon)
        r = int(table.rounds[0])
        lab = int(table.label[0])
        work[t - t0] = tree.size
        for n in range(1, horizon + 1):
            out[t - t0, n - 1] = lab if r < n else Label.UNDECIDED
    return out, work


def _chunks(samples):
    # fixed blocks so the split never depends on the worker count
    bounds = list(range(0, samples, LAZY_BLOCK)) + [samples]
    return list(zip(bounds[:-1], bounds[1:]))


def root_codes(spec, horizon, samples, seed=0, method="lazy", workers=1,
               node_cap=DEFAULT_NODE_CAP, bottom=True):
    """Root outcome code per (tree, horizon) and per-tree work, -1 for capped trees."""
    if samples < 1:
        raise DomainError(f"samples must be at least 1, got {samples!r}")
    if horizon < 1:
        raise DomainError(f"horizon must be at least 1, got {horizon!r}")
    seed = _seed64(seed)
    mis = spec.variant == Variant.MISERE
    if method == "lazy":
        if horizon > _kernel.MAX_HORIZON:
            raise HorizonError(f"lazy evaluation supports horizons up to {_kernel.MAX_HORIZON}")
        pmf = spec.dist.pmf()
        cap = int(min(node_cap, 2**31 - 1))
        jobs = [(a, b, seed, pmf, spec.k, horizon, mis, bottom and not mis, cap)
                for a, b in _chunks(samples)]
        run = _lazy_chunk
    elif method == "full":
        jobs = [(a, b, seed, spec.dist, spec, horizon, node_cap) for a, b in _chunks(samples)]
        run = _full_chunk
    else:
        raise DomainError(f"unknown method {method!r}")
    if workers is None:
        workers = os.cpu_count() or 1
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers, mp_context=get_context("spawn")) as pool:
            parts = list(pool.map(run, jobs))
    else:
        parts = [run(j) for j in jobs]
    codes = np.concatenate([p[0] for p in parts])
    work = np.concatenate([p[1] for p in parts])
    return codes, work


def mc_estimate(spec, horizon, samples, seed=0, method="lazy", workers=1,
                node_cap=DEFAULT_NODE_CAP):
    """Estimate loss/win/draw at horizons 1..horizon from ``samples`` trees.

    Trees that hit ``node_cap`` are left out and counted in ``capped``.
    Results depend only on (spec, horizon, samples, seed), never on workers.
    """
    codes, work = root_codes(spec, horizon, samples, seed, method, workers, node_cap)
    keep = work >= 0
    used = int(keep.sum())
    c = codes[keep]
    loss = (c == Label.LOSS).mean(axis=0) if used else np.full(horizon, np.nan)
    win = (c == Label.WIN).mean(axis=0) if used else np.full(horizon, np.nan)
    draw = 1.0 - loss - win
    return McEstimate(loss, win, draw, _se(loss, used), _se(win, used), _se(draw, used),
                      samples, used, samples - used, horizon, method, c)


@dataclass
class DurationEstimate:
    partial_sum: float
    partial_sum_se: float
    undecided_fraction: float
    undecided_se: float
    mean_rounds_conditional_on_decision: float
    samples: int
    used: int
    horizon: int


def mc_duration(spec, horizon, samples, seed=0, method="lazy", workers=1,
                node_cap=DEFAULT_NODE_CAP):
    """Game length statistics from the same trees ``mc_estimate`` would use.

    ``partial_sum`` estimates the sum over n = 1..horizon of the undecided
    probability at horizon n, a lower bound on the expected length.
    """
    est = mc_estimate(spec, horizon, samples, seed, method, workers, node_cap)
    c = est.codes
    undecided = c == Label.UNDECIDED
    per_tree = undecided.sum(axis=1).astype(float)
    used = est.used
    decided = ~undecided[:, -1]
    rounds = per_tree[decided]  # a game decided at horizon n lasts n - 1 rounds
    psum = float(per_tree.mean()) if used else float("nan")
    psd = float(per_tree.std(ddof=1) / np.sqrt(used)) if used > 1 else float("nan")
    und = float(undecided[:, -1].mean()) if used else float("nan")
    mean_r = float(rounds.mean()) if rounds.size else float("nan")
    return DurationEstimate(psum, psd, und, float(_se(und, used)), mean_r, samples, used, horizon)
