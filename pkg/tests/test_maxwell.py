import random

import pytest
from hypothesis import given

from stafield import algebra as ga
from stafield import generators as gen
from stafield.algebra import Multivector
from stafield.fields import MultivectorField, dirac, random_field
from stafield.fourier import FourierPoly
from stafield.maxwell import (GaugeError, GMESystem, SuperPotential, currents_from_potentials,
                              gamma5_commutation_identities, gme_residual, gme_split_residuals,
                              magnetic_dual_residual, superpotential_field, wave_residuals)
from stafield.spinor import GradeError

from conftest import g, seeds

ZERO = MultivectorField.zero()
x1 = FourierPoly.coord(1)


def const(mv):
    return MultivectorField.constant(mv)


def field(*pairs):
    return MultivectorField.from_blades(pairs)


def test_gme_residual_examples():
    assert gme_residual(GMESystem(const(g(2, 3)), ZERO, ZERO)).is_zero()
    f = field((x1, g(0, 1)))
    assert gme_residual(GMESystem(f, const(g(0)), ZERO)).is_zero()
    assert gme_residual(GMESystem(f, ZERO, ZERO)) == const(g(0))


def test_grades_are_checked():
    with pytest.raises(GradeError):
        GMESystem(const(g(0)), ZERO, ZERO)
    with pytest.raises(GradeError):
        GMESystem(ZERO, const(g(0, 1)), ZERO)


def test_split_residual_examples():
    assert gme_split_residuals(GMESystem(const(g(1, 3)), ZERO, ZERO)) == (ZERO, ZERO)
    f = field((x1, g(0, 1)))
    assert gme_split_residuals(GMESystem(f, const(g(0)), ZERO)) == (ZERO, ZERO)
    jm = const(g(2))
    r1, r2 = gme_split_residuals(GMESystem(ZERO, ZERO, jm))
    assert r1.is_zero() and r2 == jm.hodge()


def test_superpotential_examples():
    assert superpotential_field(SuperPotential(field((x1, g(0))), ZERO)) == const(g(1) ^ g(0))
    assert superpotential_field(SuperPotential(ZERO, field((x1, g(0))))) == const(g(2, 3))
    assert superpotential_field(SuperPotential(const(g(1)), const(g(2)))).is_zero()


def test_superpotential_requires_lorenz_gauge():
    with pytest.raises(GaugeError) as info:
        superpotential_field(SuperPotential(field((FourierPoly.coord(0), g(0))), ZERO))
    assert info.value.which == "A"
    assert info.value.residual == const(Multivector.scalar(-1))


def test_currents_examples():
    assert currents_from_potentials(SuperPotential(field((x1, g(0))), ZERO)) == (ZERO, ZERO)
    cos = FourierPoly.cos((0, 1, 0, 0))
    je, jm = currents_from_potentials(SuperPotential(field((cos, g(0))), ZERO))
    # diamond(cos(x1)) = eta^11 d1 d1 cos(x1) = cos(x1)
    assert je == field((cos, g(0))) and jm.is_zero()
    assert currents_from_potentials(SuperPotential(ZERO, ZERO)) == (ZERO, ZERO)


def test_gamma5_identity_examples():
    assert gamma5_commutation_identities(field((x1, g(0)))) == (ZERO, ZERO)
    b = field((FourierPoly.cos((0, 0, 1, 0)), g(3)))
    assert gamma5_commutation_identities(b) == (ZERO, ZERO)
    assert gamma5_commutation_identities(ZERO) == (ZERO, ZERO)


def test_wave_residual_examples():
    sp = SuperPotential(field((x1, g(0))), ZERO)
    assert wave_residuals(sp, *currents_from_potentials(sp)) == (ZERO, ZERO)
    cos = field((FourierPoly.cos((0, 1, 0, 0)), g(0)))
    assert wave_residuals(SuperPotential(cos, ZERO), cos, ZERO)[0].is_zero()
    assert wave_residuals(SuperPotential(ZERO, ZERO), ZERO, ZERO) == (ZERO, ZERO)


@given(seeds())
def test_superpotential_chain(seed):
    sp, sys_ = gen.superpotential_system(random.Random(seed), max_degree=2, max_phases=2)
    assert gme_residual(sys_).is_zero()
    assert sys_.F == dirac(sp.combined())
    assert wave_residuals(sp, sys_.Je, sys_.Jm) == (ZERO, ZERO)


@given(seeds())
def test_gamma5_identities_hold_without_gauge(seed):
    b = random_field(random.Random(seed), grades={1})
    assert gamma5_commutation_identities(b) == (ZERO, ZERO)


@given(seeds())
def test_split_matches_full_residual(seed):
    rng = random.Random(seed)
    sys_ = GMESystem(random_field(rng, grades={2}), random_field(rng, grades={1}), random_field(rng, grades={1}))
    r1, r2 = gme_split_residuals(sys_)
    full = gme_residual(sys_)
    assert full.grade(1) == -r1 and full.grade(3) == r2
    assert full.is_zero() == (r1.is_zero() and r2.is_zero())
    assert magnetic_dual_residual(sys_) == -r2.hodge()


def test_dual_residual_vanishes_on_solutions():
    for sys_ in gen.gme_family(random.Random(2), 6):
        assert magnetic_dual_residual(sys_).is_zero()
        assert ga.gamma5() * sys_.Jm == dirac(sys_.F).grade(3)
