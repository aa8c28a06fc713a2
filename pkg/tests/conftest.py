from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from stafield import algebra as ga
from stafield.algebra import Multivector

settings.register_profile("exact", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("exact")

rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))


@st.composite
def multivectors(draw, grades=None):
    masks = [m for m in ga.BLADES if grades is None or ga.grade_of(m) in grades]
    coeffs = draw(st.dictionaries(st.sampled_from(masks), rationals, max_size=8))
    return Multivector(coeffs)


@st.composite
def seeds(draw):
    return draw(st.integers(min_value=0, max_value=2**32))


def g(*idx):
    """Blade from upper indices, e.g. g(0, 1) = g^0 g^1."""
    return ga.blade_from_indices(idx)


@pytest.fixture
def half():
    return Fraction(1, 2)
