import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from jumpgames import DomainError, FiniteSupport, InvalidOrder, Poisson, pgf, pgf_deriv
from jumpgames.offspring import clamp_unit

from conftest import finite_dists

GRID = np.linspace(0.0, 1.0, 257)


def test_poisson_pgf_values():
    assert pgf(Poisson(2), 1.0) == 1.0
    assert pgf(Poisson(2), 0.0) == pytest.approx(math.exp(-2), abs=1e-15)
    assert pgf(Poisson(2), 0.0) == Poisson(2).chi0


def test_finite_pgf_by_hand():
    assert pgf(FiniteSupport([0.5, 0.5]), 0.4) == pytest.approx(0.7, abs=1e-15)


def test_derivatives():
    assert pgf_deriv(Poisson(3), 1.0, 1) == pytest.approx(3.0)
    assert pgf_deriv(FiniteSupport([0.25, 0.25, 0.5]), 0.0, 1) == pytest.approx(0.25)
    assert pgf_deriv(Poisson(2), 0.5, 1) == pytest.approx(2 * math.exp(-1), abs=1e-12)
    assert pgf_deriv(Poisson(2), 0.5, 2) == pytest.approx(4 * math.exp(-1), abs=1e-12)
    assert pgf_deriv(FiniteSupport([0.25, 0.25, 0.5]), 0.3, 2) == pytest.approx(1.0)


@pytest.mark.parametrize("order", [0, 3, -1])
def test_bad_order(order):
    with pytest.raises(InvalidOrder):
        pgf_deriv(Poisson(1), 0.5, order)


def test_edge_clamp():
    d = Poisson(2)
    assert pgf(d, -5e-13) == d.chi0
    assert pgf(d, 1 + 5e-13) == 1.0
    for bad in (-1e-9, 1 + 1e-9, 2.0):
        with pytest.raises(DomainError):
            pgf(d, bad)
    assert clamp_unit(np.array([-1e-13, 0.5, 1 + 1e-13])).tolist() == [0.0, 0.5, 1.0]


@pytest.mark.parametrize(
    "mass",
    [[1.0], [0.0, 1.0], [1.0, 0.0], [0.5, 0.6], [-0.1, 1.1], [0.5, float("nan")]],
)
def test_finite_rejects(mass):
    with pytest.raises(DomainError):
        FiniteSupport(mass)


@pytest.mark.parametrize("rate", [0.0, -1.0, float("inf"), float("nan"), 800.0])
def test_poisson_rejects(rate):
    with pytest.raises(DomainError):
        Poisson(rate)


def test_pmf_mass_and_mean():
    for lam in (0.5, 3.0, 20.0):
        p = Poisson(lam).pmf()
        assert abs(p.sum() - 1.0) < 1e-14
        assert abs((np.arange(len(p)) * p).sum() - lam) < 1e-12
    assert Poisson(4).mean() == pytest.approx(4.0)
    assert FiniteSupport([0.2, 0.3, 0.5]).mean() == pytest.approx(1.3)


def _check_shape(d):
    g = d.pgf(GRID)
    g1 = d.deriv(GRID, 1)
    assert np.all(np.diff(g) >= 0)
    assert np.all(np.diff(g1) >= -1e-15)
    assert np.all((g >= d.chi0 - 1e-15) & (g <= 1 + 1e-15))
    h = 1e-6
    x = GRID[1:-1]
    fd = (d.pgf(x + h) - d.pgf(x - h)) / (2 * h)
    assert np.all(np.abs(fd - d.deriv(x, 1)) <= 1e-6 * np.maximum(np.abs(d.deriv(x, 1)), 1e-3))
    fd2 = (d.deriv(x + h, 1) - d.deriv(x - h, 1)) / (2 * h)
    assert np.all(np.abs(fd2 - d.deriv(x, 2)) <= 1e-6 * np.maximum(np.abs(d.deriv(x, 2)), 1e-3))


def test_shape_fixture(dist):
    _check_shape(dist)
    assert abs(dist.pgf(0.0) - dist.chi0) <= 1e-15


@given(finite_dists())
def test_shape_random_finite(d):
    _check_shape(d)
    assert abs(d.pgf(0.0) - d.chi0) <= 1e-15


@given(st.floats(0.05, 30.0))
def test_poisson_zero_exact(lam):
    d = Poisson(lam)
    assert d.pgf(0.0) == d.chi0
    assert d.deriv(0.7, 1) == pytest.approx(lam * d.pgf(0.7), rel=1e-15)


def test_describe_round_trip():
    assert Poisson(2.5).describe() == "poisson(2.5)"
    assert FiniteSupport([0.5, 0.5]).describe() == "finite(0.5,0.5)"
    assert Poisson(2.5) == Poisson(2.5) and hash(Poisson(2.5)) == hash(Poisson(2.5))
    assert FiniteSupport([0.5, 0.5]) != Poisson(1)
