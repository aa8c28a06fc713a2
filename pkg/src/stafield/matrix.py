"""The complex 4x4 matrix face of the complexified algebra.

``rep`` sends ``g^mu`` to Dirac-basis gamma matrices and extends
multiplicatively. Column spinors are read off in a basis adapted to the
idempotent: the change of basis that turns ``rep(f)`` into the elementary
matrix ``E11`` is computed from the image and kernel of ``rep(f)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import algebra as ga
from .algebra import METRIC, Multivector
from .fields import MultivectorField
from .fourier import FourierPoly
from .linalg import inverse, nullspace, rank
from .scalars import ComplexQ
from .spinor import (IDEAL_UNIT_PLACEMENT, IdealElement, IdempotentError, IdempotentSpec,
                     standard_idempotent)

_Z = ComplexQ(0)
_O = ComplexQ(1)


class ComplexMatrix4:
    """Immutable 4x4 matrix of :class:`ComplexQ` entries."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(ComplexQ.coerce(v) for v in r) for r in rows)
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValueError("expected a 4x4 matrix")
        self.rows = rows

    @classmethod
    def identity(cls) -> "ComplexMatrix4":
        return cls([[_O if i == j else _Z for j in range(4)] for i in range(4)])

    @classmethod
    def zeros(cls) -> "ComplexMatrix4":
        return cls([[_Z] * 4 for _ in range(4)])

    @classmethod
    def elementary(cls, i: int, j: int) -> "ComplexMatrix4":
        return cls([[_O if (r, c) == (i, j) else _Z for c in range(4)] for r in range(4)])

    def __add__(self, other):
        return ComplexMatrix4([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return ComplexMatrix4([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return ComplexMatrix4([[-a for a in r] for r in self.rows])

    def scale(self, s) -> "ComplexMatrix4":
        s = ComplexQ.coerce(s)
        return ComplexMatrix4([[a * s for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, ComplexMatrix4):
            cols = list(zip(*other.rows))
            return ComplexMatrix4([[sum((a * b for a, b in zip(r, c) if a and b), _Z) for c in cols]
                                   for r in self.rows])
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        return isinstance(other, ComplexMatrix4) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def trace(self) -> ComplexQ:
        return sum((self.rows[i][i] for i in range(4)), _Z)

    def rank(self) -> int:
        return rank(self.rows)

    def inverse(self) -> "ComplexMatrix4":
        return ComplexMatrix4(inverse(self.rows, _Z, _O))

    def __repr__(self):
        return "ComplexMatrix4(" + "; ".join(" ".join(str(v) for v in r) for r in self.rows) + ")"


@dataclass(frozen=True)
class GammaRep:
    g: tuple[ComplexMatrix4, ComplexMatrix4, ComplexMatrix4, ComplexMatrix4]

    def __post_init__(self):
        ident = ComplexMatrix4.identity()
        for mu in range(4):
            for nu in range(4):
                anti = self.g[mu] * self.g[nu] + self.g[nu] * self.g[mu]
                want = ident.scale(2 * METRIC[mu]) if mu == nu else ComplexMatrix4.zeros()
                if anti != want:
                    raise ValueError(f"anticommutator fails for ({mu}, {nu})")


def _block(a, b, c, d):
    return ComplexMatrix4([a[0] + b[0], a[1] + b[1], c[0] + d[0], c[1] + d[1]])


def _pauli():
    i = ComplexQ(0, 1)
    return (
        [[_Z, _O], [_O, _Z]],
        [[_Z, -i], [i, _Z]],
        [[_O, _Z], [_Z, -_O]],
    )


@lru_cache(maxsize=1)
def standard_gamma_rep() -> GammaRep:
    """Dirac basis: ``g0 = diag(1, 1, -1, -1)``, ``g^k = [[0, s_k], [-s_k, 0]]``."""
    z2 = [[_Z, _Z], [_Z, _Z]]
    i2 = [[_O, _Z], [_Z, _O]]
    neg = lambda m: [[-v for v in r] for r in m]  # noqa: E731
    g0 = _block(i2, z2, z2, neg(i2))
    gk = [_block(z2, s, neg(s), z2) for s in _pauli()]
    return GammaRep((g0, *gk))


@lru_cache(maxsize=None)
def _blade_matrices(gr: GammaRep) -> tuple:
    out = []
    for mask in ga.BLADES:
        m = ComplexMatrix4.identity()
        for mu in range(4):
            if mask >> mu & 1:
                m = m * gr.g[mu]
        out.append(m)
    return tuple(out)


@lru_cache(maxsize=None)
def _blade_entries(gr: GammaRep) -> tuple:
    return tuple(
        tuple((i, j, v) for i, row in enumerate(m.rows) for j, v in enumerate(row) if v)
        for m in _blade_matrices(gr)
    )


def rep(a: Multivector, gr: GammaRep | None = None) -> ComplexMatrix4:
    """The algebra homomorphism extending ``g^mu -> gr.g[mu]``."""
    entries = _blade_entries(gr or standard_gamma_rep())
    acc = [[_Z] * 4 for _ in range(4)]
    for mask, c in a.coeffs.items():
        c = ComplexQ.coerce(c)
        for i, j, v in entries[mask]:
            acc[i][j] = acc[i][j] + c * v
    return ComplexMatrix4(acc)


@dataclass(frozen=True)
class AdaptedBasis:
    """Change of basis ``S`` with ``S^-1 rep(f) S = E11``."""

    S: ComplexMatrix4
    S_inv: ComplexMatrix4


@lru_cache(maxsize=None)
def adapted_basis(spec: IdempotentSpec, gr: GammaRep) -> AdaptedBasis:
    p = rep(spec.f, gr)
    if p.rank() != 1:
        raise IdempotentError(f"rep(f) has rank {p.rank()}, a minimal idempotent has rank 1")
    image = next(p.column(j) for j in range(4) if any(p.column(j)))
    kernel = nullspace(p.rows, _Z, _O)
    cols = [list(image)] + kernel
    s = ComplexMatrix4([[cols[j][i] for j in range(4)] for i in range(4)])
    return AdaptedBasis(s, s.inverse())


def adapted_rep(a: Multivector, spec: IdempotentSpec | None = None, gr: GammaRep | None = None) -> ComplexMatrix4:
    spec = spec or standard_idempotent()
    gr = gr or standard_gamma_rep()
    basis = adapted_basis(spec, gr)
    return basis.S_inv * rep(a, gr) * basis.S


@lru_cache(maxsize=None)
def _blade_columns(spec: IdempotentSpec, gr: GammaRep):
    return tuple(adapted_rep(Multivector({b: 1}), spec, gr).column(0) for b in ga.BLADES)


def column_extract(Psi: IdealElement, x=None, gr: GammaRep | None = None):
    """Column spinor of an ideal element.

    With ``x`` given, returns 4 :class:`ComplexQ` values at that point (subject
    to the exact-evaluation rule of :meth:`FourierPoly.eval_at`); otherwise 4
    complex :class:`FourierPoly` component functions.
    """
    if Psi.spec != standard_idempotent():
        raise IdempotentError("column spinors are defined over the standard idempotent")
    gr = gr or standard_gamma_rep()
    cols = _blade_columns(Psi.spec, gr)
    comps = [FourierPoly() for _ in range(4)]
    for mask, p in Psi.value.coeffs.items():
        for i in range(4):
            if cols[mask][i]:
                comps[i] = comps[i] + p.scale(cols[mask][i])
    if x is None:
        return tuple(comps)
    return tuple(ComplexQ.coerce(c.eval_at(x)) for c in comps)


def column_unit(spec: IdempotentSpec | None = None, gr: GammaRep | None = None,
                placement: str = IDEAL_UNIT_PLACEMENT) -> ComplexQ:
    """The scalar by which the spinor unit acts on columns.

    For the right placement this is ``lam`` with ``rep(f) rep(g^2 g^1) = lam rep(f)``,
    found from the matrices themselves.
    """
    if placement == "left":
        return ComplexQ(0, 1)
    spec = spec or standard_idempotent()
    gr = gr or standard_gamma_rep()
    pf = rep(spec.f, gr)
    prod = pf * rep(ga.blade_from_indices((2, 1)), gr)
    i, j = next((i, j) for i in range(4) for j in range(4) if pf.rows[i][j])
    lam = prod.rows[i][j] / pf.rows[i][j]
    if prod != pf.scale(lam):
        raise IdempotentError("g^2 g^1 does not act as a scalar on this ideal")
    return lam


@lru_cache(maxsize=None)
def _adapted_gammas(spec: IdempotentSpec, gr: GammaRep) -> tuple:
    basis = adapted_basis(spec, gr)
    return tuple(basis.S_inv * gr.g[mu] * basis.S for mu in range(4))


def matrix_dirac_residual(Psi: IdealElement, m, x=None, gr: GammaRep | None = None,
                          placement: str = IDEAL_UNIT_PLACEMENT):
    """``lam * G^mu d_mu Psi - m Psi`` on column spinors, with ``G^mu`` the adapted gamma matrices."""
    gr = gr or standard_gamma_rep()
    col = column_extract(Psi, gr=gr)
    spec = Psi.spec
    lam = column_unit(spec, gr, placement)
    gm = _adapted_gammas(spec, gr)
    m = Fraction(m)
    out = []
    for i in range(4):
        acc = col[i].scale(-m)
        for mu in range(4):
            for j in range(4):
                c = gm[mu].rows[i][j]
                if c:
                    acc = acc + col[j].partial(mu).scale(c * lam)
        out.append(acc)
    if x is None:
        return tuple(out)
    return tuple(ComplexQ.coerce(c.eval_at(x)) for c in out)


def rep_field(f: MultivectorField, x, gr: GammaRep | None = None) -> ComplexMatrix4:
    """Matrix of a field at a point."""
    return rep(f.eval_at(x), gr)
