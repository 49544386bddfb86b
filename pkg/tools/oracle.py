"""High-precision reference values, written independently of the package.

Uses mpmath at 40 digits, secant root finding for the ladder and plain
unmemoized recursion for the nested differences. Prints a Python dict that
tests/golden.py freezes.

    python tools/oracle.py > /tmp/golden.txt
"""

import mpmath as mp

mp.mp.dps = 40


def pgf_poisson(lam):
    return lambda x: mp.e ** (lam * (x - 1))


def pgf_finite(mass):
    return lambda x: sum(m * x**i for i, m in enumerate(mass))


def ladder_at(G, x, upto):
    vals = [mp.mpf(1)]
    for _ in range(upto):
        vals.append(G(vals[-1] - x))
    return vals


def fixed_points(G, chi0, k):
    cs = [mp.mpf(1)]
    for i in range(1, k + 1):
        lo, hi = mp.mpf(chi0), cs[-1]
        f = lambda x: ladder_at(G, x, i)[i] - x
        # bisection to narrow, then polish with the secant method
        for _ in range(80):
            mid = (lo + hi) / 2
            if f(mid) > 0:
                lo = mid
            else:
                hi = mid
        cs.append(mp.findroot(f, (lo, hi), solver="anderson"))
    return cs


def nested(G, args, shift):
    if len(args) == 2:
        return args[0] - args[1]
    a = nested(G, [args[0]] + args[2:], shift)
    b = nested(G, [args[1]] + args[2:], shift)
    return G(shift + a) - G(shift + b)


def H(G, k, x):
    return G(nested(G, ladder_at(G, x, k), 0))


def J(G, chi0, k, x):
    return G(chi0 + nested(G, ladder_at(G, x, k), chi0)) - chi0


def iterate(step, cap=None, eps=mp.mpf(10) ** -34, limit=200000):
    x = mp.mpf(0)
    for _ in range(limit):
        y = step(x)
        if cap is not None and y > cap:
            y = cap
        if abs(y - x) < eps:
            return y
        x = y
    return x


def chat(G, chi0, k, cs):
    f = lambda x: ladder_at(G, x, k)[k] - J(G, chi0, k, x) - chi0
    lo, hi = mp.mpf(0), cs[k - 1]
    for _ in range(130):
        mid = (lo + hi) / 2
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def row(G, chi0, k):
    cs = fixed_points(G, chi0, k)
    nl = iterate(lambda x: H(G, k, x), cap=cs[k])
    fk = ladder_at(G, nl, k)[k]
    ch = chat(G, chi0, k, cs)
    ml = iterate(lambda x: J(G, chi0, k, x), cap=ch)
    fm = ladder_at(G, ml, k)[k]
    return {
        "c": [float(c) for c in cs],
        "nl": float(nl), "nw": float(1 - fk), "nd": float(fk - nl),
        "ml": float(ml), "mw": float(1 - fm + chi0),
        "md": float(fm - J(G, chi0, k, ml) - chi0),
        "chat": float(ch),
    }


def main():
    out = {}
    for lam in (0.8, 1.5, 2, 3, 5):
        G = pgf_poisson(mp.mpf(lam))
        chi0 = mp.e ** (-mp.mpf(lam))
        for k in (1, 2, 3):
            out[("poisson", lam, k)] = row(G, chi0, k)
    mass = [mp.mpf(1) / 10, mp.mpf(3) / 10, mp.mpf(6) / 10]
    for k in (1, 2, 3):
        out[("finite", (0.1, 0.3, 0.6), k)] = row(pgf_finite(mass), mass[0], k)
    print("GOLDEN = {")
    for key, val in out.items():
        print(f"    {key!r}: {val!r},")
    print("}")


if __name__ == "__main__":
    main()
