"""Hertz-potential construction of a Dirac-Hestenes solution.

Lower-index blades are expanded through the metric before use:
``g_0 = g^0``, ``g_k = -g^k``. In particular ``g_012 = g^0 g^1 g^2`` and
``g_5 = g_0 g_1 g_2 g_3 = -g5``. With this expansion the constraint

    dirac(Pi) = A + g_5 S

is tied to the electron equation by an exact identity,

    dh_residual(-G + Pi + g_5 P, m) == hertz_residual(h) * g^2 g^1,

so a vanishing Hertz residual forces a vanishing Dirac-Hestenes residual.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import algebra as ga
from .fields import MultivectorField, as_field, codiff, diamond, dirac
from .spinor import DHRepresentative, dh_residual, require_grades

G3_LOWER = ga.gamma_lower(3)
G012_LOWER = ga.lower_blade((0, 1, 2))
G5_LOWER = ga.lower_blade((0, 1, 2, 3))


@dataclass(frozen=True)
class HertzData:
    Pi: MultivectorField
    G: MultivectorField
    P: MultivectorField
    m: Fraction = field(default=Fraction(1))

    def __post_init__(self):
        for name, allowed in (("Pi", {2}), ("G", {0}), ("P", {0})):
            f = as_field(getattr(self, name))
            object.__setattr__(self, name, f)
            require_grades(f, allowed, name)
        object.__setattr__(self, "m", Fraction(self.m))

    def __add__(self, other: "HertzData") -> "HertzData":
        if other.m != self.m:
            raise ValueError("cannot superpose Hertz data with different masses")
        return HertzData(self.Pi + other.Pi, self.G + other.G, self.P + other.P, self.m)

    def scale(self, s) -> "HertzData":
        return HertzData(self.Pi.scale(s), self.G.scale(s), self.P.scale(s), self.m)


def _pi_vector(h: HertzData) -> MultivectorField:
    return (h.Pi * G012_LOWER).grade(1)


def _pi_trivector(h: HertzData) -> MultivectorField:
    return (h.Pi * G012_LOWER).grade(3)


def em_potential(h: HertzData) -> MultivectorField:
    """``A = dirac(G) + m P g_3 + m <Pi g_012>_1``."""
    return dirac(h.G) + (h.P * G3_LOWER).scale(h.m) + _pi_vector(h).scale(h.m)


def stratton_inner(h: HertzData) -> MultivectorField:
    """The 1-form ``S = dirac(P) + m G g_3 - g_5 <m Pi g_012>_3``."""
    return dirac(h.P) + (h.G * G3_LOWER).scale(h.m) - G5_LOWER * _pi_trivector(h).scale(h.m)


def stratton_potential(h: HertzData) -> MultivectorField:
    """The 3-form ``g_5 S``."""
    return G5_LOWER * stratton_inner(h)


def hertz_residual(h: HertzData) -> MultivectorField:
    return dirac(h.Pi) - em_potential(h) - stratton_potential(h)


def subsidiary_residuals(h: HertzData, je: MultivectorField | None = None):
    """Residuals of the four wave conditions on the potentials.

    The divergence ``dirac . X`` of a 1-form is taken as the left contraction
    ``g^mu _| d_mu X``. Returns ``(r4, r5, r6, r7)``.
    """
    je = MultivectorField.zero() if je is None else as_field(je)
    require_grades(je, {1}, "Je")
    r4 = diamond(em_potential(h)) - je
    r5 = diamond(stratton_potential(h))
    r6 = diamond(h.G) + _divergence(_pi_vector(h)).scale(h.m)
    r7 = diamond(h.P) - _divergence(G5_LOWER * _pi_trivector(h)).scale(h.m)
    return r4, r5, r6, r7


def _divergence(x: MultivectorField) -> MultivectorField:
    return -codiff(x)


def assemble_psi(h: HertzData) -> DHRepresentative:
    """``psi = -G + Pi + g_5 P``."""
    return DHRepresentative(-h.G + h.Pi + G5_LOWER * h.P)


def hertz_from_psi(psi, m) -> HertzData:
    """Inverse of :func:`assemble_psi` for a given mass."""
    psi = psi.psi if isinstance(psi, DHRepresentative) else DHRepresentative(psi).psi
    # g_5 = -g5, so the g5 coefficient of psi is -P
    return HertzData(psi.grade(2), -psi.grade(0), MultivectorField({0: -psi[0b1111]}), m)


@dataclass(frozen=True)
class VerificationOutcome:
    premise_holds: bool
    conclusion_holds: bool
    hertz_residual: MultivectorField
    dh_residual: MultivectorField

    @property
    def implication_holds(self) -> bool:
        return self.conclusion_holds or not self.premise_holds

    @property
    def vacuous(self) -> bool:
        return not self.premise_holds


def electron_theorem_check(h: HertzData) -> VerificationOutcome:
    hr = hertz_residual(h)
    dr = dh_residual(assemble_psi(h), h.m)
    return VerificationOutcome(hr.is_zero(), dr.is_zero(), hr, dr)
