import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from orthoset_lab.scalars import GaussianRational, RationalQuaternion


def bounded_fractions(bound=10):
    return st.builds(Fraction,
                     st.integers(min_value=-bound, max_value=bound),
                     st.integers(min_value=1, max_value=bound))


def gaussian_rationals(bound=10):
    return st.builds(GaussianRational, bounded_fractions(bound),
                     bounded_fractions(bound))


def rational_quaternions(bound=6):
    f = bounded_fractions(bound)
    return st.builds(RationalQuaternion, f, f, f, f)


@pytest.fixture
def rng():
    return random.Random(12345)
