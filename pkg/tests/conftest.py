"""Shared test setup.

The JIT backend compiles each kernel on first call.  The session fixture
below exercises every kernel family once so compilation cost never lands
inside a timed assertion further down the suite.
"""

import random

import pytest

from unitgroups.factor import factor_poly
from unitgroups.gf import field_make
from unitgroups.poly import random_poly


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    rng = random.Random(1234)
    f2 = field_make(2)
    factor_poly(random_poly(f2, 64, rng, monic=True))
    big_a = random_poly(f2, 4000, rng)
    big_b = random_poly(f2, 4000, rng)
    assert (big_a * big_b).degree <= 8000
    f9 = field_make(3, 2)
    factor_poly(random_poly(f9, 24, rng, monic=True))
