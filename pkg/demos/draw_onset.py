"""Draw probability of the 2-jump normal game across Poisson rates.

Draws are impossible below the critical rate and switch on above it.
"""

import numpy as np

from jumpgames import GameSpec, Poisson, lambda_c, outcomes


def run():
    lc = lambda_c(2)
    print(f"critical rate for k=2: {lc:.6f}")
    print(f"{'lambda':>7} {'loss':>10} {'win':>10} {'draw':>10}")
    for lam in np.round(np.arange(1.8, 3.01, 0.1), 2):
        res = outcomes(GameSpec(2, "normal", Poisson(lam)))
        mark = "  <- above" if lam > lc else ""
        print(f"{lam:7.2f} {res.loss:10.6f} {res.win:10.6f} {res.draw:10.2e}{mark}")


if __name__ == "__main__":
    run()
