"""Compiled kernels for tree sampling and lazy root evaluation.

Random numbers come from a counter-based stream: draw i of tree t under seed s
is a fixed hash of (s, t, i), so results do not depend on how trees are split
across workers.

The lazy evaluator answers "is the root in L^(n) / W^(n)" by depth-first
search over the game recursion, growing the random tree only where the search
looks. Memo columns record the best known bounds per vertex: sets grow with n,
so "in L^(m)" settles every n >= m and "not in L^(m)" settles every n <= m.

In the normal game "in W^(2)" means "has a childless vertex within k
generations". Write L(v) for the first generation below v (0 = v itself)
holding a childless vertex. Everything the search learns about that is a set
of possible L(v) values, kept as a bitmask over 0..k and "more than k". A
question about an unexpanded vertex is answered by one draw from the law of
L(v) restricted to its mask; when its children are finally needed, L(v) is
drawn exactly and the children are drawn given it. The realized tree keeps
the Galton-Watson law.
"""

import numpy as np
from numba import njit

FIRST, CNT, MASK, LT, LF, WT, WF, ORIG = range(8)
NCOL = 8
ZK, EK = 1, 2  # no childless vertex in generations 0..j / 1..j
UNSET = 127
MAX_HORIZON = 120
BUF = 1 << 22
DEPTH = 256


@njit(cache=True, _nrt=False)
def mix(z):
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


@njit(cache=True)
def tree_key(seed, index):
    return mix(mix(np.uint64(seed)) ^ mix(np.uint64(index) + np.uint64(0x632BE59BD9B4E019)))


@njit(cache=True, _nrt=False)
def unif(key, st):
    z = mix(key + np.uint64(st[1]) * np.uint64(0x9E3779B97F4A7C15))
    st[1] += 1
    return (z >> np.uint64(11)) * (1.0 / 9007199254740992.0)


@njit(cache=True)
def uniforms(seed, index, n):
    st = np.zeros(3, np.int64)
    key = tree_key(seed, index)
    out = np.empty(n)
    for i in range(n):
        out[i] = unif(key, st)
    return out


@njit(cache=True, _nrt=False)
def invert(tabs, row, x):
    c = 0
    n = tabs.shape[1]
    while c < n - 1 and x >= tabs[row, c]:
        c += 1
    return c


# explicit trees ------------------------------------------------------------

@njit(cache=True)
def grow(seed, index, cdf, depth_cap, node_cap):
    """Breadth-first Galton-Watson tree; count -1 marks an unexpanded vertex."""
    key = tree_key(seed, index)
    st = np.zeros(3, np.int64)
    size = 64
    cnt = np.full(size, -1, np.int64)
    first = np.zeros(size, np.int64)
    depth = np.zeros(size, np.int64)
    tab = cdf.reshape(1, cdf.shape[0])
    n = 1
    hit = False
    v = 0
    while v < n:
        if depth[v] < depth_cap:
            c = invert(tab, 0, unif(key, st))
            if n + c > node_cap:
                hit = True
                break
            if n + c > size:
                while n + c > size:
                    size *= 2
                cnt2 = np.full(size, -1, np.int64)
                cnt2[:n] = cnt[:n]
                first2 = np.zeros(size, np.int64)
                first2[:n] = first[:n]
                depth2 = np.zeros(size, np.int64)
                depth2[:n] = depth[:n]
                cnt, first, depth = cnt2, first2, depth2
            cnt[v] = c
            first[v] = n
            for i in range(n, n + c):
                depth[i] = depth[v] + 1
            n += c
        v += 1
    return cnt[:n].copy(), first[:n].copy(), depth[:n].copy(), hit


# lazy evaluation -----------------------------------------------------------
# The search helpers never allocate, so they are compiled without the
# reference-counting runtime; with it every call pays for each array argument.

@njit(cache=True, _nrt=False)
def above(lo, full):
    # mask of leaf depths lo, lo + 1, ...
    return full & ~((1 << lo) - 1)


@njit(cache=True, _nrt=False)
def weight(mask, pl):
    s = 0.0
    for l in range(pl.shape[0]):
        if mask & (1 << l):
            s += pl[l]
    return s


@njit(cache=True, _nrt=False)
def fresh(nd, w, mask):
    nd[w, CNT] = -1
    nd[w, MASK] = mask
    nd[w, LT] = UNSET
    nd[w, LF] = 0
    nd[w, WT] = UNSET
    nd[w, WF] = 0


@njit(cache=True, _nrt=False)
def expand(u, nd, st, tabs, zs, pl, key, fcnt, ffirst):
    c = nd[u, CNT]
    if c >= 0:
        return c
    top = pl.shape[0] - 1
    full = (1 << (top + 1)) - 1
    mask = nd[u, MASK]
    lev = -1
    if fcnt.shape[0] > 0:
        c = fcnt[nd[u, ORIG]]
        if c < 0:
            st[2] = 1
            c = 0
    elif mask == full:
        c = invert(tabs, 0, unif(key, st))
    else:
        # draw the exact leaf depth, then the children given it
        x = unif(key, st) * weight(mask, pl)
        lev = top
        for l in range(top + 1):
            if mask & (1 << l):
                x -= pl[l]
                lev = l
                if x < 0.0:
                    break
        c = 0 if lev == 0 else invert(tabs, lev, unif(key, st))
    n = st[0]
    if n + c > nd.shape[0]:
        st[2] = 1
        c = 0
    nd[u, FIRST] = n
    nd[u, CNT] = c
    st[0] = n + c
    if lev < 0:
        nd[u, MASK] = mask & (1 if c == 0 else ~1)
        for i in range(c):
            fresh(nd, n + i, full)
            if fcnt.shape[0] > 0:
                nd[n + i, ORIG] = ffirst[nd[u, ORIG]] + i
    elif c > 0:
        nd[u, MASK] = 1 << lev
        if lev == top:
            for i in range(c):
                fresh(nd, n + i, above(top - 1, full))
        else:
            # some child has leaf depth exactly lev - 1, the rest at least that
            a = zs[lev - 2] if lev >= 2 else 1.0
            r = (a - zs[lev - 1]) / a
            miss = (1.0 - r) ** c
            hit = c
            for i in range(c):
                pf = r / (1.0 - miss)
                if unif(key, st) < pf:
                    hit = i
                    fresh(nd, n + i, 1 << (lev - 1))
                    break
                fresh(nd, n + i, above(lev, full))
                miss /= 1.0 - r
            for i in range(hit + 1, c):
                fresh(nd, n + i, above(lev - 1, full))
    else:
        nd[u, MASK] = 1
    return c


@njit(cache=True, _nrt=False)
def query_mask(kind, j, full):
    # leaf depths for which Z_j (> j) or E_j (0 or > j) holds
    q = above(j + 1, full)
    if kind == EK:
        q |= 1
    return q


@njit(cache=True, _nrt=False)
def status(u, kind, j, nd, st, tabs, zs, pl, key, fcnt, ffirst, sn, sj, sc):
    """Evaluate Z_j or E_j at u, drawing unexpanded vertices from their law."""
    full = (1 << pl.shape[0]) - 1
    top = 0
    sn[0] = u
    sj[0] = j
    ret = True
    have = False
    while top >= 0:
        v = sn[top]
        jj = sj[top]
        kd = kind if top == 0 else ZK
        q = query_mask(kd, jj, full)
        if have:
            have = False
            if not ret:
                res = False
            else:
                sc[top] += 1
                if sc[top] < nd[v, FIRST] + nd[v, CNT]:
                    top += 1
                    sn[top] = sc[top - 1]
                    sj[top] = jj - 1
                    continue
                res = True
        else:
            mask = nd[v, MASK]
            if mask & q == mask:
                res = True
            elif mask & q == 0:
                res = False
            elif nd[v, CNT] < 0 and fcnt.shape[0] == 0:
                res = unif(key, st) * weight(mask, pl) < weight(mask & q, pl)
            else:
                c = expand(v, nd, st, tabs, zs, pl, key, fcnt, ffirst)
                if c == 0:
                    res = kd == EK
                elif jj == 0:
                    res = True
                else:
                    sc[top] = nd[v, FIRST]
                    top += 1
                    sn[top] = nd[v, FIRST]
                    sj[top] = jj - 1
                    continue
        nd[v, MASK] &= q if res else ~q
        top -= 1
        ret = res
        have = True
    return ret


@njit(cache=True, _nrt=False)
def leaf(v, nd, st, tabs, zs, pl, key, fcnt, ffirst):
    mask = nd[v, MASK]
    if mask & 1 == 0:
        return False
    if mask == 1:
        return True
    return expand(v, nd, st, tabs, zs, pl, key, fcnt, ffirst) == 0


@njit(cache=True, _nrt=False)
def canon(lose, m, mis):
    # loss sets change only at odd n (normal) or even n (misere), wins the opposite
    if lose:
        if (m % 2 == 0) != mis:
            m -= 1
    elif (m % 2 == 1) != mis:
        m -= 1
    return m


@njit(cache=True, _nrt=False)
def record(nd, v, lose, m, res):
    if lose:
        if res:
            if nd[v, LT] > m:
                nd[v, LT] = m
        elif nd[v, LF] < m:
            nd[v, LF] = m
    else:
        if res:
            if nd[v, WT] > m:
                nd[v, WT] = m
        elif nd[v, WF] < m:
            nd[v, WF] = m


@njit(cache=True, _nrt=False)
def quick(v, lose, m, nd, st, tabs, zs, pl, key, fcnt, ffirst, sn, sj, sc, k, mis, bottom):
    """Settle a query from memo or a cheap check: 1 yes, 0 no, -1 needs a search."""
    if m <= 0:
        return 0
    if lose:
        if nd[v, LT] <= m:
            return 1
        if nd[v, LF] >= m or nd[v, WT] <= m:
            return 0
        if nd[v, MASK] == 1:
            q = 0 if mis else 1
        elif m == 1 and not mis:
            q = 1 if leaf(v, nd, st, tabs, zs, pl, key, fcnt, ffirst) else 0
        else:
            return -1
    else:
        if nd[v, WT] <= m:
            return 1
        if nd[v, WF] >= m or nd[v, LT] <= m:
            return 0
        if nd[v, MASK] == 1:
            q = 1 if mis else 0
        elif m == 1:
            if mis:
                q = 1 if leaf(v, nd, st, tabs, zs, pl, key, fcnt, ffirst) else 0
            else:
                q = 0
        elif bottom and m == 2 and not mis:
            e = status(v, EK, k, nd, st, tabs, zs, pl, key, fcnt, ffirst, sn, sj, sc)
            q = 0 if e else 1
        else:
            return -1
    record(nd, v, lose, m, q == 1)
    return q


@njit(cache=True, _nrt=False)
def refill(i, nd, st, tabs, zs, pl, key, fcnt, ffirst, buf, bd, fe, fx, k):
    # grow the breadth-first listing of frame i until it gains a vertex or ends
    end = fe[i]
    while fx[i] < end:
        w = buf[fx[i]]
        dw = bd[fx[i]]
        fx[i] += 1
        if dw < k:
            cw = expand(w, nd, st, tabs, zs, pl, key, fcnt, ffirst)
            if end + cw > buf.shape[0]:
                st[2] = 1
                cw = 0
            f = nd[w, FIRST]
            for x in range(f, f + cw):
                buf[end] = x
                bd[end] = dw + 1
                end += 1
            if cw > 0:
                break
    fe[i] = end


@njit(cache=True, _nrt=False)
def solve_root(lose0, n, nd, st, tabs, zs, pl, key, fcnt, ffirst, k, mis, bottom,
               buf, bd, fu, fl, fm, fj, fe, fx, sn, sj, sc):
    m0 = canon(lose0, n, mis)
    q = quick(0, lose0, m0, nd, st, tabs, zs, pl, key, fcnt, ffirst, sn, sj, sc, k, mis, bottom)
    if q >= 0:
        return q == 1
    fu[0] = 0
    fl[0] = lose0
    fm[0] = m0
    sp = 1
    ret = False
    have = False
    while sp > 0:
        i = sp - 1
        u = fu[i]
        lose = fl[i]
        m = fm[i]
        res = lose
        scan = True
        if not have:
            c = expand(u, nd, st, tabs, zs, pl, key, fcnt, ffirst)
            if c == 0:
                res = lose != mis
                scan = False
            else:
                base = 0 if i == 0 else fe[i - 1]
                f = nd[u, FIRST]
                end = base
                for x in range(f, f + c):
                    buf[end] = x
                    bd[end] = 1
                    end += 1
                fj[i] = base
                fe[i] = end
                fx[i] = base
        else:
            have = False
            if ret != lose:
                res = ret
                scan = False
            else:
                fj[i] += 1
        if scan:
            pushed = False
            res = lose
            cm = canon(not lose, m - 1, mis)
            while True:
                if fj[i] >= fe[i]:
                    refill(i, nd, st, tabs, zs, pl, key, fcnt, ffirst, buf, bd, fe, fx, k)
                    if fj[i] >= fe[i]:
                        break
                v = buf[fj[i]]
                q = quick(v, not lose, cm, nd, st, tabs, zs, pl, key, fcnt, ffirst,
                          sn, sj, sc, k, mis, bottom)
                if q < 0:
                    if sp >= fu.shape[0]:
                        st[2] = 1
                        break
                    fu[sp] = v
                    fl[sp] = not lose
                    fm[sp] = cm
                    sp += 1
                    pushed = True
                    break
                if (q == 1) != lose:
                    res = q == 1
                    break
                fj[i] += 1
            if pushed:
                continue
        record(nd, u, lose, m, res)
        sp -= 1
        ret = res
        have = True
    return ret


@njit(cache=True)
def evaluate(t0, t1, seed, tabs, zs, pl, k, horizon, mis, bottom, cap, fcnt, ffirst, out, work):
    """Root outcome codes (0 loss, 1 win, 2 undecided) for trees t0..t1-1.

    ``out[t - t0, n - 1]`` holds the code at horizon n; ``work[t - t0]`` the
    number of random draws used, or -1 if the tree hit a size cap.
    """
    nd = np.empty((cap, NCOL), np.int32)
    buf = np.empty(BUF, np.int32)
    bd = np.empty(BUF, np.int8)
    fu = np.empty(DEPTH, np.int32)
    fl = np.empty(DEPTH, np.bool_)
    fm = np.empty(DEPTH, np.int64)
    fj = np.empty(DEPTH, np.int64)
    fe = np.empty(DEPTH, np.int64)
    fx = np.empty(DEPTH, np.int64)
    sn = np.empty(DEPTH, np.int64)
    sj = np.empty(DEPTH, np.int64)
    sc = np.empty(DEPTH, np.int64)
    st = np.zeros(3, np.int64)
    full = (1 << pl.shape[0]) - 1
    for t in range(t0, t1):
        key = tree_key(seed, t)
        st[0] = 1
        st[1] = 0
        st[2] = 0
        fresh(nd, 0, full)
        nd[0, ORIG] = 0
        r = t - t0
        for n in range(1, horizon + 1):
            if solve_root(True, n, nd, st, tabs, zs, pl, key, fcnt, ffirst, k, mis, bottom,
                          buf, bd, fu, fl, fm, fj, fe, fx, sn, sj, sc):
                out[r, n - 1] = 0
            elif solve_root(False, n, nd, st, tabs, zs, pl, key, fcnt, ffirst, k, mis, bottom,
                            buf, bd, fu, fl, fm, fj, fe, fx, sn, sj, sc):
                out[r, n - 1] = 1
            else:
                out[r, n - 1] = 2
        work[r] = st[1] if st[2] == 0 else -1
    return 0


def draw_tables(pmf, k):
    """Inversion tables for child counts and the law of the leaf depth.

    The leaf depth of a vertex is the first generation below it (0 for the
    vertex itself) holding a childless vertex; values above k are lumped into
    k + 1. Returns (tabs, zs, pl): row 0 of tabs is the offspring cdf and row
    l >= 1 the count cdf given leaf depth l; zs[j] is the chance the depth
    exceeds j and pl[l] the chance it equals l.
    """
    pmf = np.asarray(pmf, float)
    n = np.arange(len(pmf))
    chi0 = pmf[0]
    zs = [1.0 - chi0]
    for _ in range(k):
        zs.append(float(np.sum(pmf * zs[-1] ** n)) - chi0)
    zs = np.array(zs)
    pl = np.array([chi0] + [zs[l - 1] - zs[l] for l in range(1, k + 1)] + [zs[k]])
    rows = [np.cumsum(pmf)]
    for lev in range(1, k + 2):
        a = zs[lev - 2] if lev >= 2 else 1.0
        w = pmf * a**n if lev == k + 1 else pmf * (a**n - zs[lev - 1] ** n)
        w[0] = 0.0
        rows.append(np.cumsum(w) / w.sum())
    tabs = np.array(rows)
    tabs[:, -1] = 1.0
    return tabs, zs, pl
