"""Exact solution families and random corpora.

Every family returned here satisfies its defining equation by construction;
the suites and tests re-check that rather than trusting it.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from . import algebra as ga
from .algebra import Multivector
from .fields import MultivectorField, codiff, random_field, substitute_linear
from .fourier import FourierPoly, is_null, minkowski_square
from .hertz import HertzData, hertz_from_psi
from .linalg import inverse
from .maxwell import GMESystem, SuperPotential, currents_from_potentials, superpotential_field

FR0 = Fraction(0)
FR1 = Fraction(1)

# even constants commuting (first four) or anticommuting (last four) with g^0
POSITIVE_ENERGY_BASIS = (
    Multivector.scalar(1),
    ga.blade_from_indices((1, 2)),
    ga.blade_from_indices((2, 3)),
    ga.blade_from_indices((3, 1)),
)
NEGATIVE_ENERGY_BASIS = (
    ga.gamma5(),
    ga.blade_from_indices((0, 1)),
    ga.blade_from_indices((0, 2)),
    ga.blade_from_indices((0, 3)),
)

# Pythagorean pairs for exact rotations (a^2 + b^2 = 1) and boosts (a^2 - b^2 = 1)
ROTATION_PAIRS = ((Fraction(3, 5), Fraction(4, 5)), (Fraction(5, 13), Fraction(12, 13)), (Fraction(8, 17), Fraction(15, 17)))
BOOST_PAIRS = ((Fraction(5, 4), Fraction(3, 4)), (Fraction(13, 12), Fraction(5, 12)), (Fraction(17, 15), Fraction(8, 15)))


class ParameterError(ValueError):
    """Invalid generator parameters."""


def _mass(m) -> Fraction:
    m = Fraction(m)
    if m <= 0:
        raise ParameterError(f"mass must be a positive rational, got {m}")
    return m


def _wavevector(k: Sequence) -> tuple[Fraction, ...]:
    k = tuple(Fraction(c) for c in k)
    if len(k) != 4:
        raise ParameterError("wavevector needs 4 components")
    return k


def k_vector(k: Sequence) -> Multivector:
    """``k_mu g^mu``."""
    return sum((ga.gamma(mu).scale(Fraction(k[mu])) for mu in range(4)), Multivector.zero())


# --- massive solutions ----------------------------------------------------------

def rest_solution(m=1, psi0: Multivector | None = None) -> MultivectorField:
    """Rest-frame solution of the electron equation.

    Without ``psi0`` this is ``cos(m x0) - g^2 g^1 sin(m x0)``. With ``psi0`` even
    and either commuting or anticommuting with ``g^0``, it is ``psi0`` times the
    matching phase factor.
    """
    m = _mass(m)
    psi0 = Multivector.scalar(1) if psi0 is None else psi0
    if not ga.is_even(psi0) or psi0.ring != ga.REAL:
        raise ParameterError("psi0 must be a real even constant")
    g0 = ga.gamma(0)
    if g0 * psi0 == psi0 * g0:
        sign = -1
    elif g0 * psi0 == -(psi0 * g0):
        sign = 1
    else:
        raise ParameterError("psi0 must commute or anticommute with g^0")
    k = (m, FR0, FR0, FR0)
    g21 = ga.blade_from_indices((2, 1))
    return MultivectorField.from_blades([(FourierPoly.cos(k), psi0), (FourierPoly.sin(k, sign), psi0 * g21)])


def boost_rotor(axis: int, a, b) -> Multivector:
    """``a + b g^0 g^axis`` with ``a^2 - b^2 = 1``."""
    a, b = Fraction(a), Fraction(b)
    if a * a - b * b != 1:
        raise ParameterError("boost rotor needs a^2 - b^2 = 1")
    return Multivector.scalar(a) + ga.blade_from_indices((0, axis)).scale(b)


def rotation_rotor(i: int, j: int, a, b) -> Multivector:
    """``a + b g^i g^j`` with ``a^2 + b^2 = 1``."""
    a, b = Fraction(a), Fraction(b)
    if a * a + b * b != 1:
        raise ParameterError("rotation rotor needs a^2 + b^2 = 1")
    return Multivector.scalar(a) + ga.blade_from_indices((i, j)).scale(b)


def lorentz_transform(psi: MultivectorField, rotor: Multivector) -> MultivectorField:
    """Active Lorentz transform ``R psi(L x)`` that maps solutions to solutions.

    ``L`` is the inverse of the matrix ``M`` defined by ``~R g^mu R = M[mu][nu] g^nu``.
    """
    if rotor * ga.reverse(rotor) != Multivector.scalar(1):
        raise ParameterError("rotor must satisfy R ~R = 1")
    rows = []
    for mu in range(4):
        img = ga.reverse(rotor) * ga.gamma(mu) * rotor
        if ga.grade(img, 1) != img:
            raise ParameterError("rotor does not preserve vectors")
        rows.append([Fraction(img[1 << nu]) for nu in range(4)])
    lam = inverse(rows, FR0, FR1)
    return MultivectorField.constant(rotor) * substitute_linear(psi, lam)


# --- massless solutions ----------------------------------------------------------

def null_plane_wave(k: Sequence = (1, 0, 0, 1), a: Multivector | None = None,
                    b: Multivector | None = None) -> MultivectorField:
    """``K a cos(k.x) + K b sin(k.x)`` with ``K = k_mu g^mu`` null, so ``dirac`` annihilates it.

    ``a`` and ``b`` are odd constants. The default ``a = g^1``, ``b = g^2``
    gives ``K g^1 (cos + g^2 g^1 sin)``.
    """
    k = _wavevector(k)
    if not any(k):
        raise ParameterError("wavevector must be nonzero")
    if not is_null(k):
        raise ParameterError(f"wavevector is not null: k.k = {minkowski_square(k)}")
    a = ga.gamma(1) if a is None else a
    b = ga.gamma(2) if b is None else b
    for c in (a, b):
        if ga.even_part(c):
            raise ParameterError("a and b must be odd constants")
    kv = k_vector(k)
    return MultivectorField.from_blades([(FourierPoly.cos(k), kv * a), (FourierPoly.sin(k), kv * b)])


def null_polynomial_wave(k: Sequence, a: Multivector, power: int) -> MultivectorField:
    """``K a (k.x)^power``, also annihilated by ``dirac`` for null ``k``."""
    k = _wavevector(k)
    if not is_null(k) or not any(k):
        raise ParameterError("wavevector must be null and nonzero")
    phase = FourierPoly([(tuple(1 if nu == mu else 0 for nu in range(4)), None, None, k[mu]) for mu in range(4)])
    p = FourierPoly.const(1)
    for _ in range(power):
        p = p * phase
    return MultivectorField.constant(k_vector(k) * a).mul_poly(p)


def random_null_vector(rng: random.Random) -> tuple[Fraction, ...]:
    """``s (1, n)`` with ``n`` a rational point on the unit sphere."""
    p, q = Fraction(rng.randint(-4, 4), rng.randint(1, 3)), Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    den = p * p + q * q + 1
    n = (2 * p / den, 2 * q / den, (p * p + q * q - 1) / den)
    s = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 2))
    perm = rng.sample(range(3), 3)
    n = tuple(n[i] for i in perm)
    return (s, s * n[0], s * n[1], s * n[2])


def random_odd_constant(rng: random.Random) -> Multivector:
    return ga.random_multivector(rng, grades=(1, 3), density=0.5) or ga.gamma(rng.randrange(4))


def massless_family(rng: random.Random, count: int) -> list[MultivectorField]:
    """Null plane waves, polynomial null waves, their Weyl projections, and superpositions."""
    out: list[MultivectorField] = []
    while len(out) < count:
        kind = len(out) % 4
        k = random_null_vector(rng)
        if kind == 0:
            psi = null_plane_wave(k, random_odd_constant(rng), random_odd_constant(rng))
        elif kind == 1:
            psi = null_polynomial_wave(k, random_odd_constant(rng), rng.randint(1, 3))
        elif kind == 2:
            psi = null_plane_wave(k, random_odd_constant(rng), random_odd_constant(rng))
            psi = psi * (Multivector.scalar(1) + ga.gamma5()).scale(Fraction(1, 2))
        else:
            psi = (null_plane_wave(k, random_odd_constant(rng), random_odd_constant(rng))
                   + null_plane_wave(random_null_vector(rng), random_odd_constant(rng), random_odd_constant(rng))
                   + MultivectorField.constant(ga.random_multivector(rng, grades=(0, 2, 4), density=0.3)))
        if psi:
            out.append(psi)
    return out


def massive_family(rng: random.Random, count: int, masses=(1, 2, Fraction(1, 2), 3)):
    """``(psi, m)`` pairs: rest solutions, spin-frame rotations, boosts, rotations and superpositions."""
    out = []
    bases = [(b, True) for b in POSITIVE_ENERGY_BASIS] + [(b, False) for b in NEGATIVE_ENERGY_BASIS]
    i = 0
    while len(out) < count:
        m = Fraction(masses[i % len(masses)])
        kind = i % 5
        base = rest_solution(m, bases[i % len(bases)][0])
        if kind == 0:
            psi = base
        elif kind == 1:
            # right action by exp(theta g^2 g^1) keeps the fiducial blades fixed
            a, b = ROTATION_PAIRS[i % len(ROTATION_PAIRS)]
            psi = base * rotation_rotor(2, 1, a, b)
        elif kind == 2:
            a, b = BOOST_PAIRS[i % len(BOOST_PAIRS)]
            psi = lorentz_transform(base, boost_rotor(1 + i % 3, a, b))
        elif kind == 3:
            a, b = ROTATION_PAIRS[i % len(ROTATION_PAIRS)]
            ax = rng.sample(range(1, 4), 2)
            psi = lorentz_transform(base, rotation_rotor(ax[0], ax[1], a, b))
        else:
            other = rest_solution(m, bases[rng.randrange(len(bases))][0])
            psi = base.scale(Fraction(rng.randint(1, 5), rng.randint(1, 3))) - other.scale(Fraction(rng.randint(1, 4)))
        out.append((psi, m))
        i += 1
    return out


def hertz_family(rng: random.Random, count: int) -> list[HertzData]:
    return [hertz_from_psi(psi, m) for psi, m in massive_family(rng, count)]


def hertz_rest(m=1) -> HertzData:
    """``Pi = -g^2 g^1 sin(m x0)``, ``G = -cos(m x0)``, ``P = 0``."""
    m = _mass(m)
    k = (m, FR0, FR0, FR0)
    g21 = ga.blade_from_indices((2, 1))
    pi = MultivectorField.from_blades([(FourierPoly.sin(k, -1), g21)])
    g = MultivectorField({0: FourierPoly.cos(k, -1)})
    return HertzData(pi, g, MultivectorField.zero(), m)


# --- Maxwell families --------------------------------------------------------------

def lorenz_potential(rng: random.Random, **kw) -> MultivectorField:
    """A 1-form with vanishing codifferential: the codifferential of a random 2-form."""
    return codiff(random_field(rng, grades={2}, **kw))


def superpotential_system(rng: random.Random, **kw):
    """``(SuperPotential, GMESystem)`` with currents derived from the potentials."""
    a = lorenz_potential(rng, **kw)
    b = lorenz_potential(rng, **kw)
    sp = SuperPotential(a, b)
    je, jm = currents_from_potentials(sp)
    return sp, GMESystem(superpotential_field(sp), je, jm)


def gme_family(rng: random.Random, count: int) -> list[GMESystem]:
    """Constant vacuum fields alternating with superpotential-generated systems."""
    out = []
    for i in range(count):
        if i % 3 == 0:
            f = MultivectorField.constant(ga.random_multivector(rng, grades=(2,)))
            out.append(GMESystem(f, MultivectorField.zero(), MultivectorField.zero()))
        else:
            out.append(superpotential_system(rng, max_degree=2, max_phases=2)[1])
    return out


def random_even_field(rng: random.Random, **kw) -> MultivectorField:
    return random_field(rng, grades={0, 2, 4}, **kw)
