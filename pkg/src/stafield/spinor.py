"""Dirac-Hestenes representatives, the minimal left ideal, and the spinor/form dictionary.

Two sign conventions here are not taken on trust but fixed by exhaustive
search over small candidate sets (see :func:`calibrate_magnetic_sign` and
:func:`calibrate_ideal_constant`); the results are frozen as module constants:

``MAGNETIC_SIGN = -1``
    ``bosonize`` returns ``Jm = -dirac(P)``. Moving the pseudoscalar through
    the Dirac operator flips its sign, ``dirac(g5 P) = -g5 dirac(P)``.

``IDEAL_RESIDUAL_CONSTANT = 1`` with ``IDEAL_UNIT_PLACEMENT = "right"``
    The imaginary unit of the ideal-valued equation acts as right
    multiplication by ``g^2 g^1``. With that placement,
    ``dh_residual(psi, m) * f == ideal_dirac_residual(psi * f, m)``.
    Reading the unit as the scalar ``i`` admits no constant at all, because
    ``g^2 g^1 f = -i f``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import algebra as ga
from .algebra import Multivector
from .fields import MultivectorField, as_field, dirac
from .linalg import rank
from .scalars import COMPLEX, REAL, ComplexQ, I

MAGNETIC_SIGN = -1
IDEAL_RESIDUAL_CONSTANT = ComplexQ(1)
IDEAL_UNIT_PLACEMENT = "right"


class ParityError(ValueError):
    """An even field was required."""


class GradeError(ValueError):
    """A field has components outside the grades its role allows."""


class IdempotentError(ValueError):
    """Not an idempotent, or not the idempotent an operation expects."""


class SpinGroupError(ValueError):
    """A spin element failed ``u * reverse(u) == 1``."""


def require_grades(f: MultivectorField, allowed, what: str = "field"):
    extra = f.grades() - set(allowed)
    if extra:
        raise GradeError(f"{what} has grades {sorted(extra)}, allowed {sorted(allowed)}")


@dataclass(frozen=True)
class IdempotentSpec:
    f: Multivector

    def __post_init__(self):
        f = ga.complexify(self.f)
        object.__setattr__(self, "f", f)
        if f * f != f:
            raise IdempotentError("f * f != f")
        if f.is_zero() or f == Multivector.scalar(ComplexQ(1)):
            raise IdempotentError("trivial idempotent")


def standard_idempotent() -> IdempotentSpec:
    """``f = 1/2 (1 + g^0) * 1/2 (1 + i g^2 g^1)``."""
    one = Multivector.scalar(ComplexQ(1))
    g0 = ga.gamma(0, COMPLEX)
    g21 = ga.blade_from_indices((2, 1), COMPLEX)
    half = Fraction(1, 2)
    return IdempotentSpec(((one + g0) * half) * ((one + g21 * I) * half))


@dataclass(frozen=True)
class IdealElement:
    """A complex field with ``value * f == value``."""

    value: MultivectorField
    spec: IdempotentSpec

    def __post_init__(self):
        v = self.value.complexify()
        object.__setattr__(self, "value", v)
        if v * self.spec.f != v:
            raise IdempotentError("value is not stable under right multiplication by f")

    def __add__(self, other: "IdealElement") -> "IdealElement":
        if other.spec != self.spec:
            raise IdempotentError("ideal elements over different idempotents")
        return IdealElement(self.value + other.value, self.spec)

    def __sub__(self, other: "IdealElement") -> "IdealElement":
        if other.spec != self.spec:
            raise IdempotentError("ideal elements over different idempotents")
        return IdealElement(self.value - other.value, self.spec)

    def is_zero(self) -> bool:
        return self.value.is_zero()


@dataclass(frozen=True)
class DHRepresentative:
    """Even, real multivector field standing for a spinor in a fixed spin frame."""

    psi: MultivectorField

    def __post_init__(self):
        psi = as_field(self.psi)
        object.__setattr__(self, "psi", psi)
        if psi.ring != REAL:
            raise ParityError("Dirac-Hestenes representatives are real fields")
        if not psi.is_even():
            raise ParityError(f"odd grades present: {sorted(g for g in psi.grades() if g & 1)}")


@dataclass(frozen=True)
class SpinElement:
    u: Multivector

    def __post_init__(self):
        if self.u.ring != REAL or not ga.is_even(self.u):
            raise SpinGroupError("spin elements are real and even")
        if self.u * ga.reverse(self.u) != Multivector.scalar(1):
            raise SpinGroupError("u * reverse(u) != 1")


def _psi_field(psi) -> MultivectorField:
    return psi.psi if isinstance(psi, DHRepresentative) else DHRepresentative(psi).psi


# --- ideal -------------------------------------------------------------------

def project_ideal(c, spec: IdempotentSpec | None = None) -> IdealElement:
    """``C * f``, complexifying ``C`` on entry."""
    spec = spec or standard_idempotent()
    if isinstance(c, DHRepresentative):
        c = c.psi
    value = as_field(c).complexify() * spec.f
    return IdealElement(value, spec)


def _coeff_vector(mv: Multivector):
    return [ComplexQ.coerce(mv[b]) for b in ga.BLADES]


def ideal_dimension(spec: IdempotentSpec | None = None) -> int:
    """Complex dimension of ``Cl f``: rank of the images of the 16 basis blades."""
    spec = spec or standard_idempotent()
    rows = [_coeff_vector(Multivector({b: ComplexQ(1)}, COMPLEX) * spec.f) for b in ga.BLADES]
    return rank(rows)


def right_eigenvalue(spec: IdempotentSpec, blade: Multivector):
    """The scalar ``lam`` with ``blade * f == lam * f``, or None if there is none."""
    prod = ga.complexify(blade) * spec.f
    f = spec.f
    ref = next(iter(f.coeffs))
    lam = prod[ref] / f[ref]
    return lam if prod == f.scale(lam) else None


# --- even decomposition ----------------------------------------------------------

def decompose_even(psi) -> tuple[MultivectorField, MultivectorField, MultivectorField]:
    """Split ``psi = -S + F - g5 P`` into scalar ``S``, 2-form ``F``, scalar ``P``."""
    psi = _psi_field(psi)
    s = -psi.grade(0)
    f = psi.grade(2)
    p = MultivectorField({0: -psi[0b1111]})
    return s, f, p


def compose_even(s: MultivectorField, f: MultivectorField, p: MultivectorField) -> DHRepresentative:
    s, f, p = as_field(s), as_field(f), as_field(p)
    require_grades(s, {0}, "S")
    require_grades(f, {2}, "F")
    require_grades(p, {0}, "P")
    return DHRepresentative(-s + f - ga.gamma5() * p)


# --- bosonization -------------------------------------------------------------

def bosonize(psi, magnetic_sign: int = MAGNETIC_SIGN):
    """Map an even field to ``(F, Je, Jm)`` with ``Je = dirac(S)``, ``Jm = magnetic_sign * dirac(P)``.

    For every even ``psi``, ``dirac(F) - Je - g5 Jm == dirac(psi)``, so a
    massless solution lands on a solution of the generalized Maxwell equation.
    """
    s, f, p = decompose_even(psi)
    return f, dirac(s), dirac(p).scale(magnetic_sign)


def calibrate_magnetic_sign(corpus) -> int:
    """Pick the sign in {+1, -1} for which every ``dirac(psi) == 0`` sample bosonizes to a GME solution."""
    from .maxwell import GMESystem, gme_residual

    good = []
    for sign in (1, -1):
        ok = True
        for psi in corpus:
            if not dirac(_psi_field(psi)).is_zero():
                continue
            if not gme_residual(GMESystem(*bosonize(psi, sign))).is_zero():
                ok = False
                break
        if ok:
            good.append(sign)
    if len(good) != 1:
        raise RuntimeError(f"calibration is not decisive: {good}")
    return good[0]


def dh_residual(psi, m) -> MultivectorField:
    """``dirac(psi) g^2 g^1 - m psi g^0``."""
    psi = _psi_field(psi)
    g21 = ga.blade_from_indices((2, 1))
    return dirac(psi) * g21 - psi * ga.gamma(0).scale(Fraction(m))


def spinor_unit(Psi: IdealElement, placement: str = IDEAL_UNIT_PLACEMENT) -> IdealElement:
    """Apply the ideal's imaginary unit: right product with ``g^2 g^1``, or the scalar ``i``."""
    if placement == "right":
        return IdealElement(Psi.value * ga.blade_from_indices((2, 1), COMPLEX), Psi.spec)
    if placement == "left":
        return IdealElement(Psi.value.scale(I), Psi.spec)
    raise ValueError(f"unknown placement {placement!r}")


def ideal_dirac_residual(Psi: IdealElement, m, placement: str = IDEAL_UNIT_PLACEMENT) -> IdealElement:
    """``i dirac(Psi) - m Psi`` in the ideal, with ``i`` placed per ``placement``."""
    if Psi.spec != standard_idempotent():
        raise IdempotentError("ideal residual is defined over the standard idempotent")
    d_psi = IdealElement(dirac(Psi.value), Psi.spec)
    return IdealElement(spinor_unit(d_psi, placement).value - Psi.value.scale(Fraction(m)), Psi.spec)


def calibrate_ideal_constant(samples) -> dict:
    """Search placements and ``c`` in {1, -1, i, -i} for ``dh_residual(psi) f == c * ideal residual``.

    ``samples`` is an iterable of ``(psi, m)``. Returns ``{placement: c or None}``.
    """
    samples = list(samples)
    candidates = [ComplexQ(1), ComplexQ(-1), ComplexQ(0, 1), ComplexQ(0, -1)]
    found = {}
    for placement in ("left", "right"):
        hits = []
        for c in candidates:
            if all(
                project_ideal(dh_residual(psi, m)).value
                == ideal_dirac_residual(project_ideal(psi), m, placement).value.scale(c)
                for psi, m in samples
            ):
                hits.append(c)
        found[placement] = hits[0] if len(hits) == 1 else None
    return found


# --- chirality and spin frames ---------------------------------------------------

def weyl_project(psi) -> MultivectorField:
    """``1/2 psi (1 + g5)``."""
    psi = _psi_field(psi)
    return psi * (Multivector.scalar(1) + ga.gamma5()).scale(Fraction(1, 2))


def _spin(el) -> Multivector:
    return el.u if isinstance(el, SpinElement) else SpinElement(el).u


def spin_transport(psi, u0, u) -> DHRepresentative:
    """Representative in another spin frame: ``psi u0 reverse(u)``."""
    return DHRepresentative(_psi_field(psi) * _spin(u0) * ga.reverse(_spin(u)))


def dh_residual_in_frame(psi, m, u: SpinElement) -> MultivectorField:
    """``dirac(psi) (~u g^21 u) - m psi (~u g^0 u)``: the equation seen by ``psi * u``."""
    psi = _psi_field(psi)
    uu = _spin(u)
    g21 = ga.reverse(uu) * ga.blade_from_indices((2, 1)) * uu
    g0 = ga.reverse(uu) * ga.gamma(0) * uu
    return dirac(psi) * g21 - psi * g0.scale(Fraction(m))
