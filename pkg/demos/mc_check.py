"""Simulated root outcomes against the exact horizon sequence."""

import sys

import numpy as np

from jumpgames import GameSpec, Poisson, horizon_sequence, mc_estimate

SAMPLES = int(sys.argv[1]) if len(sys.argv) > 1 else 20000
HORIZON = 6


def run():
    spec = GameSpec(2, "normal", Poisson(3.0))
    est = mc_estimate(spec, HORIZON, SAMPLES, seed=7)
    loss, win, _ = horizon_sequence(spec, HORIZON)
    print(f"{SAMPLES} trees, k=2, Poisson(3), normal play")
    print(f"{'n':>2} {'exact loss':>11} {'mc loss':>9} {'z':>6} {'exact win':>10} {'mc win':>8} {'z':>6}")
    for n in range(HORIZON):
        zs = []
        for got, exact in ((est.loss[n], loss[n]), (est.win[n], win[n])):
            se = np.sqrt(exact * (1 - exact) / est.used)
            zs.append((got - exact) / se if se > 0 else 0.0)
        print(f"{n + 1:2d} {loss[n]:11.6f} {est.loss[n]:9.5f} {zs[0]:6.2f} "
              f"{win[n]:10.6f} {est.win[n]:8.5f} {zs[1]:6.2f}")


if __name__ == "__main__":
    run()
