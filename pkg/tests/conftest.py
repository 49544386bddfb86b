import numpy as np
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from jumpgames import FiniteSupport, Poisson

settings.register_profile(
    "default", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

RATES = (0.8, 1.5, 3.0, 5.0)
FINITE = FiniteSupport([0.1, 0.3, 0.6])


@st.composite
def finite_dists(draw, max_len=5):
    n = draw(st.integers(2, max_len))
    chi0 = draw(st.floats(0.02, 0.9))
    rest = np.array(draw(st.lists(st.floats(0.0, 1.0), min_size=n - 1, max_size=n - 1))) + 0.05
    rest = (1.0 - chi0) * rest / rest.sum()
    return FiniteSupport([chi0] + list(rest[:-1]) + [1.0 - chi0 - rest[:-1].sum()])


def poisson_rates(lo=0.3, hi=8.0):
    return st.floats(lo, hi, allow_nan=False)


@pytest.fixture(params=[Poisson(r) for r in RATES] + [FINITE], ids=lambda d: d.describe())
def dist(request):
    return request.param
