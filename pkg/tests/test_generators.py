import random
from fractions import Fraction

import pytest

from stafield import algebra as ga
from stafield import generators as gen
from stafield.algebra import Multivector
from stafield.fields import MultivectorField, codiff, dirac
from stafield.fourier import FourierPoly
from stafield.maxwell import gme_residual
from stafield.spinor import dh_residual

from conftest import g


def test_rest_solution_closed_form():
    k = (1, 0, 0, 0)
    expected = MultivectorField.from_blades([(FourierPoly.cos(k), Multivector.scalar(1)),
                                             (FourierPoly.sin(k, -1), g(2, 1))])
    assert gen.rest_solution(1) == expected


@pytest.mark.parametrize("psi0", gen.POSITIVE_ENERGY_BASIS + gen.NEGATIVE_ENERGY_BASIS)
def test_rest_solutions_for_every_basis_spinor(psi0):
    assert dh_residual(gen.rest_solution(Fraction(3, 2), psi0), Fraction(3, 2)).is_zero()


def test_rest_solution_rejects_bad_parameters():
    with pytest.raises(gen.ParameterError):
        gen.rest_solution(0)
    with pytest.raises(gen.ParameterError):
        gen.rest_solution(1, g(0))
    with pytest.raises(gen.ParameterError):
        gen.rest_solution(1, Multivector.scalar(1) + g(0, 1))


def test_null_plane_wave_default():
    psi = gen.null_plane_wave()
    k = (1, 0, 0, 1)
    psi0 = (g(0) + g(3)) * g(1)
    assert psi == MultivectorField.from_blades([(FourierPoly.cos(k), psi0), (FourierPoly.sin(k), psi0 * g(2, 1))])
    assert dirac(psi).is_zero()


def test_null_plane_wave_rejects_timelike_vector():
    with pytest.raises(gen.ParameterError):
        gen.null_plane_wave((1, 0, 0, 0))
    with pytest.raises(gen.ParameterError):
        gen.null_plane_wave((0, 0, 0, 0))


def test_boost_preserves_solutions():
    u = gen.boost_rotor(3, Fraction(5, 4), Fraction(3, 4))
    psi = gen.lorentz_transform(gen.rest_solution(2), u)
    assert dh_residual(psi, 2).is_zero()
    assert psi != gen.rest_solution(2)


def test_rotor_validation():
    with pytest.raises(gen.ParameterError):
        gen.boost_rotor(1, 1, 1)
    with pytest.raises(gen.ParameterError):
        gen.rotation_rotor(1, 2, 1, 1)


def test_random_null_vectors_are_null():
    rng = random.Random(0)
    for _ in range(50):
        k = gen.random_null_vector(rng)
        assert k[0] != 0 and k[0] ** 2 == k[1] ** 2 + k[2] ** 2 + k[3] ** 2


def test_families_satisfy_their_equations():
    rng = random.Random(21)
    assert all(dh_residual(psi, m).is_zero() for psi, m in gen.massive_family(rng, 20))
    assert all(dirac(psi).is_zero() for psi in gen.massless_family(rng, 20))
    assert all(gme_residual(s).is_zero() for s in gen.gme_family(rng, 9))


def test_lorenz_potential_is_in_gauge():
    a = gen.lorenz_potential(random.Random(1))
    assert codiff(a).is_zero() and a.grades() <= {1}


def test_families_are_deterministic():
    a = gen.massless_family(random.Random(8), 5)
    b = gen.massless_family(random.Random(8), 5)
    assert a == b
    assert ga.is_even(gen.random_even_field(random.Random(1)).eval_at((0, 0, 0, 0)))
