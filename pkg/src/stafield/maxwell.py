"""Generalized Maxwell equation with electric and magnetic currents, and superpotentials.

    dirac(F) = Je + g5 Jm

``F`` is a 2-form, ``Je`` and ``Jm`` are 1-forms. A pair of Lorenz-gauge 1-forms
``(A, B)`` generates ``F = dA + *dB`` with currents ``Je = -codiff(d A)`` and
``Jm = -codiff(d B)``; the latter is recovered from ``*Jm = -d(*dB)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import algebra as ga
from .fields import MultivectorField, as_field, codiff, d, diamond, dirac
from .spinor import GradeError, require_grades


class GaugeError(ValueError):
    """The Lorenz condition ``codiff(A) == 0`` fails; ``residual`` holds the offending scalar field."""

    def __init__(self, which: str, residual: MultivectorField):
        super().__init__(f"Lorenz gauge violated by {which}: codiff = {residual!r}")
        self.which = which
        self.residual = residual


@dataclass(frozen=True)
class GMESystem:
    F: MultivectorField
    Je: MultivectorField
    Jm: MultivectorField

    def __post_init__(self):
        for name, allowed in (("F", {2}), ("Je", {1}), ("Jm", {1})):
            f = as_field(getattr(self, name))
            object.__setattr__(self, name, f)
            require_grades(f, allowed, name)


@dataclass(frozen=True)
class SuperPotential:
    A: MultivectorField
    B: MultivectorField

    def __post_init__(self):
        for name in ("A", "B"):
            f = as_field(getattr(self, name))
            object.__setattr__(self, name, f)
            require_grades(f, {1}, name)

    def combined(self) -> MultivectorField:
        """``A + g5 B``."""
        return self.A + ga.gamma5() * self.B


def gme_residual(sys: GMESystem) -> MultivectorField:
    return dirac(sys.F) - sys.Je - ga.gamma5() * sys.Jm


def gme_split_residuals(sys: GMESystem) -> tuple[MultivectorField, MultivectorField]:
    """Grade-1 and grade-3 parts: ``codiff(F) + Je`` and ``d(F) + *Jm``."""
    return codiff(sys.F) + sys.Je, d(sys.F) + sys.Jm.hodge()


def magnetic_dual_residual(sys: GMESystem) -> MultivectorField:
    """``codiff(*F) - Jm``, the magnetic half written through the dual field."""
    return codiff(sys.F.hodge()) - sys.Jm


def lorenz_residual(a: MultivectorField) -> MultivectorField:
    return codiff(as_field(a))


def _require_lorenz(sp: SuperPotential):
    for name in ("A", "B"):
        r = lorenz_residual(getattr(sp, name))
        if r:
            raise GaugeError(name, r)


def superpotential_field(sp: SuperPotential) -> MultivectorField:
    """``F = dA + *dB``; equals ``dirac(A + g5 B)`` in Lorenz gauge."""
    _require_lorenz(sp)
    return d(sp.A) + d(sp.B).hodge()


def _hodge_inverse(f: MultivectorField) -> MultivectorField:
    out = MultivectorField.zero(f.ring)
    for r in range(5):
        part = f.grade(r)
        if part:
            out = out + part.hodge().scale(ga.double_hodge_sign(4 - r))
    return out


def currents_from_potentials(sp: SuperPotential) -> tuple[MultivectorField, MultivectorField]:
    """``Je = -codiff(dA)`` and ``Jm`` with ``*Jm = -d(*dB)``."""
    _require_lorenz(sp)
    je = -codiff(d(sp.A))
    jm = _hodge_inverse(-d(d(sp.B).hodge()))
    return je, jm


def gamma5_commutation_identities(b: MultivectorField) -> tuple[MultivectorField, MultivectorField]:
    """Residuals of ``d(g5 B) = *codiff(B)`` and ``dirac _| (g5 B) = *dB``; zero for every 1-form."""
    b = as_field(b)
    require_grades(b, {1}, "B")
    g5b = ga.gamma5() * b
    wedge_part = d(g5b)
    contraction_part = -codiff(g5b)
    return wedge_part - codiff(b).hodge(), contraction_part - d(b).hodge()


def wave_residuals(sp: SuperPotential, je: MultivectorField, jm: MultivectorField):
    """``diamond(A) - Je`` and ``diamond(B) - Jm``."""
    _require_lorenz(sp)
    return diamond(sp.A) - as_field(je), diamond(sp.B) - as_field(jm)


__all__ = [
    "GMESystem", "SuperPotential", "GaugeError", "GradeError",
    "gme_residual", "gme_split_residuals", "magnetic_dual_residual", "lorenz_residual",
    "superpotential_field", "currents_from_potentials", "gamma5_commutation_identities",
    "wave_residuals",
]
