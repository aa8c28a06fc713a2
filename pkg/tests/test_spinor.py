import random
from fractions import Fraction

import pytest
from hypothesis import given

from stafield import algebra as ga
from stafield import generators as gen
from stafield.algebra import Multivector
from stafield.fields import MultivectorField, dirac
from stafield.fourier import FourierPoly
from stafield.maxwell import GMESystem, gme_residual
from stafield.scalars import COMPLEX, ComplexQ, I
from stafield.spinor import (MAGNETIC_SIGN, DHRepresentative, IdealElement, IdempotentError,
                             IdempotentSpec, ParityError, SpinGroupError, bosonize,
                             calibrate_ideal_constant, calibrate_magnetic_sign, compose_even,
                             decompose_even, dh_residual, dh_residual_in_frame, ideal_dimension,
                             ideal_dirac_residual, project_ideal, right_eigenvalue, spin_transport,
                             standard_idempotent, weyl_project)

from conftest import g, seeds

ONE = Multivector.scalar(1)
G5 = ga.gamma5()
F = standard_idempotent().f
x0 = FourierPoly.coord(0)


def const(mv):
    return MultivectorField.constant(mv)


def cplx(mv):
    return ga.complexify(mv)


def test_idempotent_identities():
    assert F * F == F
    assert cplx(g(0)) * F == F
    assert cplx(g(2, 1)) * F == F.scale(-I)


def test_idempotent_explicit_form():
    # f = 1/2 (1 + g^0) 1/2 (1 + i g^2 g^1)
    half = Fraction(1, 2)
    p = cplx(ONE + g(0)).scale(half)
    q = (cplx(ONE) + cplx(g(2, 1)).scale(I)).scale(half)
    assert F == p * q


def test_idempotent_spec_rejects_non_idempotents():
    with pytest.raises(IdempotentError):
        IdempotentSpec(cplx(g(0)))
    with pytest.raises(IdempotentError):
        IdempotentSpec(cplx(ONE))


def test_project_ideal_examples():
    assert project_ideal(MultivectorField.zero()).is_zero()
    assert project_ideal(ONE).value == const(F)


def test_ideal_element_must_be_absorbed_by_f():
    with pytest.raises(IdempotentError):
        IdealElement(const(cplx(ONE)), standard_idempotent())


def test_ideal_dimension_is_four():
    assert ideal_dimension() == 4


def test_right_eigenvalues():
    spec = standard_idempotent()
    assert right_eigenvalue(spec, g(0)) == 1
    assert right_eigenvalue(spec, g(2, 1)) == ComplexQ(0, -1)
    assert right_eigenvalue(spec, g(1)) is None


def test_decompose_examples():
    z = MultivectorField.zero()
    assert decompose_even(const(ONE)) == (const(-ONE), z, z)
    assert decompose_even(const(g(0, 1))) == (z, const(g(0, 1)), z)
    assert decompose_even(const(G5)) == (z, z, const(-ONE))


def test_compose_examples():
    z = MultivectorField.zero()
    assert compose_even(z, z, z).psi == z
    assert compose_even(const(-ONE), z, z).psi == const(ONE)


def test_odd_field_is_not_a_representative():
    with pytest.raises(ParityError):
        DHRepresentative(const(g(0)))


def test_bosonize_constant_gives_zero_currents():
    psi = const(ONE.scale(2) + g(1, 2) - G5)
    f, je, jm = bosonize(psi)
    assert f == const(g(1, 2)) and je.is_zero() and jm.is_zero()


def test_bosonize_scalar_coordinate():
    # S = -x0 so Je = dirac(S) = -g^0
    f, je, jm = bosonize(MultivectorField.scalar_field(x0))
    assert f.is_zero() and jm.is_zero()
    assert je == const(-g(0))


def test_bosonize_null_plane_wave():
    phase = (1, 0, 0, 1)
    psi = MultivectorField.from_blades([
        (FourierPoly.cos(phase), (g(0) + g(3)) * g(1)),
        (FourierPoly.sin(phase), (g(0) + g(3)) * g(1) * g(2, 1)),
    ])
    assert dirac(psi).is_zero()
    assert gme_residual(GMESystem(*bosonize(psi))).is_zero()


def test_bosonize_pseudoscalar_sign():
    # psi = -g5 x1 has P = x1 and Jm = MAGNETIC_SIGN * g^1
    psi = MultivectorField.from_blades([(FourierPoly.coord(1), -G5)])
    _, _, jm = bosonize(psi)
    assert jm == const(g(1).scale(MAGNETIC_SIGN))
    assert gme_residual(GMESystem(*bosonize(psi))) == dirac(psi)


def test_magnetic_sign_calibration_is_decisive():
    rng = random.Random(5)
    assert calibrate_magnetic_sign(gen.massless_family(rng, 8)) == MAGNETIC_SIGN


def test_flipped_magnetic_sign_breaks_bosonization():
    rng = random.Random(11)
    bad = [psi for psi in gen.massless_family(rng, 12)
           if gme_residual(GMESystem(*bosonize(psi, -MAGNETIC_SIGN)))]
    assert bad


def test_dh_residual_examples():
    assert dh_residual(gen.rest_solution(1), 1).is_zero()
    assert dh_residual(const(ONE), 3) == const(g(0).scale(-3))
    assert dh_residual(const(ONE), 0).is_zero()


def test_ideal_residual_examples():
    rest = project_ideal(gen.rest_solution(2))
    assert ideal_dirac_residual(rest, 2).is_zero()
    psi_f = IdealElement(const(F), standard_idempotent())
    assert ideal_dirac_residual(psi_f, 0).is_zero()
    assert ideal_dirac_residual(psi_f, 1).value == const(-F)


def test_ideal_constant_calibration_selects_right_placement():
    rng = random.Random(3)
    samples = [(gen.random_even_field(rng, max_degree=1, max_phases=1), Fraction(rng.randint(1, 3)))
               for _ in range(6)]
    found = calibrate_ideal_constant(samples)
    assert found == {"left": None, "right": ComplexQ(1)}


def test_weyl_examples():
    half = Fraction(1, 2)
    assert weyl_project(const(ONE)) == const((ONE + G5).scale(half))
    assert weyl_project(const(G5)) == const((G5 - ONE).scale(half))
    assert dirac(weyl_project(gen.null_plane_wave())).is_zero()


def test_spin_transport_examples():
    psi = gen.rest_solution(1)
    assert spin_transport(psi, ONE, ONE).psi == psi
    assert spin_transport(psi, ONE, g(2, 1)).psi == psi * g(1, 2)


def test_spin_transport_rejects_non_rotors():
    with pytest.raises(SpinGroupError):
        spin_transport(gen.rest_solution(1), ONE, ONE.scale(2))


def test_frame_residual_follows_rotor():
    u = gen.boost_rotor(1, Fraction(5, 4), Fraction(3, 4))
    psi = gen.rest_solution(2)
    assert dh_residual_in_frame(psi * u, 2, u).is_zero()


@given(seeds())
def test_grade_redistribution_identity(seed):
    psi = gen.random_even_field(random.Random(seed))
    f, je, jm = bosonize(psi)
    assert dirac(psi) == -je + dirac(f) - G5 * jm


@given(seeds())
def test_bosonized_residual_equals_dirac(seed):
    psi = gen.random_even_field(random.Random(seed))
    assert gme_residual(GMESystem(*bosonize(psi))) == dirac(psi)


@given(seeds())
def test_even_roundtrip(seed):
    psi = gen.random_even_field(random.Random(seed))
    assert compose_even(*decompose_even(psi)).psi == psi


@given(seeds())
def test_ideal_residual_is_image_of_dh_residual(seed):
    rng = random.Random(seed)
    psi = gen.random_even_field(rng, max_degree=2, max_phases=2)
    m = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
    assert project_ideal(dh_residual(psi, m)).value == ideal_dirac_residual(project_ideal(psi), m).value


@given(seeds())
def test_projection_is_linear(seed):
    rng = random.Random(seed)
    a, b = gen.random_even_field(rng), gen.random_even_field(rng)
    assert project_ideal(a + b).value == project_ideal(a).value + project_ideal(b).value
    assert project_ideal(a).value.ring == COMPLEX


def test_frame_residual_with_fiducial_rotation():
    u = g(2, 1)
    psi = gen.rest_solution(3)
    assert dh_residual_in_frame(psi * u, 3, u).is_zero()
    # g21 commutes with both fiducial blades, so psi g21 also solves the original equation
    assert dh_residual(psi * u, 3).is_zero()
