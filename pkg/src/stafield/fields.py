"""Multivector-valued fields on Minkowski space and the flat Dirac operator.

The coframe ``g^mu = dx^mu`` is global and orthonormal, so every connection
term vanishes and the Dirac operator is ``g^mu d_mu`` acting coefficient-wise.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from . import algebra as ga
from .algebra import BLADES, N_GEN, PRODUCT_TABLE, Multivector, grade_of
from .fourier import FourierPoly
from .scalars import COMPLEX, REAL, ComplexQ, RingMismatchError, ring_of, to_ring


def _to_poly(value) -> FourierPoly:
    return value if isinstance(value, FourierPoly) else FourierPoly.const(value)


def _poly_ring_ok(p: FourierPoly, ring: str) -> bool:
    if ring == COMPLEX:
        return True
    return not any(isinstance(a, ComplexQ) for a in p.amplitudes())


class MultivectorField:
    """Immutable map from basis blades to :class:`FourierPoly` coefficients."""

    __slots__ = ("_coeffs", "ring")

    def __init__(self, coeffs: Mapping[int, object] | None = None, ring: str = REAL):
        if ring not in (REAL, COMPLEX):
            raise ValueError(f"unknown ring {ring!r}")
        clean = {}
        for mask, p in (coeffs or {}).items():
            if not 0 <= mask < 16:
                raise ValueError(f"blade mask out of range: {mask}")
            p = _to_poly(p)
            if ring == COMPLEX:
                p = p.map_amplitudes(ComplexQ.coerce)
            elif not _poly_ring_ok(p, ring):
                raise RingMismatchError("complex amplitudes in a real field")
            if p:
                clean[mask] = p
        self._coeffs = clean
        self.ring = ring

    @classmethod
    def _raw(cls, coeffs: dict, ring: str) -> "MultivectorField":
        f = object.__new__(cls)
        f._coeffs = {m: p for m, p in coeffs.items() if p}
        f.ring = ring
        return f

    @classmethod
    def zero(cls, ring: str = REAL) -> "MultivectorField":
        return cls._raw({}, ring)

    @classmethod
    def constant(cls, mv: Multivector) -> "MultivectorField":
        return cls._raw({m: FourierPoly.const(c) for m, c in mv.coeffs.items()}, mv.ring)

    @classmethod
    def scalar_field(cls, p: FourierPoly, ring: str = REAL) -> "MultivectorField":
        return cls({0: p}, ring)

    @classmethod
    def from_blades(cls, pairs, ring: str = REAL) -> "MultivectorField":
        """Build ``sum p_i * B_i`` from pairs ``(FourierPoly, Multivector)``."""
        out = cls.zero(ring)
        for p, mv in pairs:
            out = out + cls.constant(mv if mv.ring == ring else ga.complexify(mv)).mul_poly(_to_poly(p))
        return out

    # inspection -------------------------------------------------------------
    @property
    def coeffs(self) -> dict[int, FourierPoly]:
        return dict(self._coeffs)

    def __getitem__(self, mask: int) -> FourierPoly:
        return self._coeffs.get(mask, FourierPoly())

    def items(self):
        return sorted(self._coeffs.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def grades(self) -> set[int]:
        return {grade_of(m) for m in self._coeffs}

    def is_constant(self) -> bool:
        return all(p.is_constant() for p in self._coeffs.values())

    def as_constant(self) -> Multivector:
        return Multivector({m: p.constant_value() for m, p in self._coeffs.items()}, self.ring)

    # arithmetic -------------------------------------------------------------
    def _lift(self, other) -> "MultivectorField | None":
        if isinstance(other, MultivectorField):
            f = other
        elif isinstance(other, Multivector):
            f = MultivectorField.constant(other)
        elif isinstance(other, FourierPoly):
            f = MultivectorField({0: other}, self.ring if _poly_ring_ok(other, REAL) else COMPLEX)
        elif isinstance(other, (int, Fraction, ComplexQ)):
            f = MultivectorField.constant(Multivector.scalar(other))
        else:
            return None
        if f.ring != self.ring:
            if f.ring == REAL and not f:
                return MultivectorField.zero(self.ring)
            raise RingMismatchError(f"cannot combine {self.ring} and {f.ring} fields")
        return f

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._coeffs)
        for m, p in other._coeffs.items():
            out[m] = out[m] + p if m in out else p
        return MultivectorField._raw(out, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return MultivectorField._raw({m: -p for m, p in self._coeffs.items()}, self.ring)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, s) -> "MultivectorField":
        if self.ring == REAL and ring_of(s) == COMPLEX:
            raise RingMismatchError("complex scalar with a real field")
        s = to_ring(s, self.ring)
        return MultivectorField._raw({m: p.scale(s) for m, p in self._coeffs.items()}, self.ring)

    def mul_poly(self, p: FourierPoly) -> "MultivectorField":
        return MultivectorField._raw({m: q * p for m, q in self._coeffs.items()}, self.ring)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ComplexQ)):
            return self.scale(other)
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return field_product(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, ComplexQ)):
            return self.scale(other)
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return field_product(other, self)

    def __eq__(self, other):
        if isinstance(other, MultivectorField):
            return self._coeffs == other._coeffs
        lifted = self._lift(other) if not isinstance(other, MultivectorField) else None
        if lifted is None:
            return NotImplemented
        return self._coeffs == lifted._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self):
        if not self._coeffs:
            return "0"
        return " + ".join(f"({p})*{ga.blade_name(m)}" for m, p in self.items())

    # pointwise algebra --------------------------------------------------------
    def grade(self, r: int) -> "MultivectorField":
        if not isinstance(r, int) or not 0 <= r <= N_GEN:
            raise ValueError(f"grade must be in 0..4, got {r!r}")
        return MultivectorField._raw({m: p for m, p in self._coeffs.items() if grade_of(m) == r}, self.ring)

    def reverse(self) -> "MultivectorField":
        return MultivectorField._raw(
            {m: (p if ga.reverse_sign(grade_of(m)) > 0 else -p) for m, p in self._coeffs.items()}, self.ring
        )

    def even_part(self) -> "MultivectorField":
        return MultivectorField._raw({m: p for m, p in self._coeffs.items() if not grade_of(m) & 1}, self.ring)

    def is_even(self) -> bool:
        return all(not grade_of(m) & 1 for m in self._coeffs)

    def hodge(self) -> "MultivectorField":
        return self.reverse() * ga.gamma5(self.ring)

    def complexify(self) -> "MultivectorField":
        if self.ring == COMPLEX:
            return self
        return MultivectorField._raw(
            {m: p.map_amplitudes(ComplexQ.coerce) for m, p in self._coeffs.items()}, COMPLEX
        )

    def real_part(self) -> "MultivectorField":
        if self.ring == REAL:
            return self
        return MultivectorField._raw({m: p.map_amplitudes(lambda a: a.re) for m, p in self._coeffs.items()}, REAL)

    def imag_part(self) -> "MultivectorField":
        if self.ring == REAL:
            return MultivectorField.zero()
        return MultivectorField._raw({m: p.map_amplitudes(lambda a: a.im) for m, p in self._coeffs.items()}, REAL)

    # calculus ---------------------------------------------------------------
    def partial(self, mu: int) -> "MultivectorField":
        return partial(self, mu)

    def eval_at(self, x: Sequence) -> Multivector:
        return eval_at(self, x)


def _field_bilinear(a: MultivectorField, b: MultivectorField, keep) -> MultivectorField:
    if a.ring != b.ring:
        raise RingMismatchError(f"cannot combine {a.ring} and {b.ring} fields")
    out: dict[int, FourierPoly] = {}
    for ma, pa in a._coeffs.items():
        for mb, pb in b._coeffs.items():
            if not keep(ma, mb):
                continue
            sign, m = PRODUCT_TABLE[ma, mb]
            if pa.is_constant() and pb.is_constant():
                term = FourierPoly.const(pa.constant_value() * pb.constant_value())
            elif pa.is_constant():
                term = pb.scale(pa.constant_value())
            elif pb.is_constant():
                term = pa.scale(pb.constant_value())
            else:
                term = pa * pb
            if sign < 0:
                term = -term
            out[m] = out[m] + term if m in out else term
    return MultivectorField._raw(out, a.ring)


def field_product(a: MultivectorField, b: MultivectorField) -> MultivectorField:
    """Pointwise geometric product."""
    return _field_bilinear(a, b, lambda ma, mb: True)


def field_wedge(a: MultivectorField, b: MultivectorField) -> MultivectorField:
    return _field_bilinear(a, b, lambda ma, mb: not ma & mb)


def field_contract_left(a: MultivectorField, b: MultivectorField) -> MultivectorField:
    return _field_bilinear(a, b, lambda ma, mb: ma & mb == ma)


def as_field(x, ring: str | None = None) -> MultivectorField:
    if isinstance(x, MultivectorField):
        f = x
    elif isinstance(x, Multivector):
        f = MultivectorField.constant(x)
    elif isinstance(x, FourierPoly):
        f = MultivectorField({0: x}, COMPLEX if not _poly_ring_ok(x, REAL) else REAL)
    else:
        f = MultivectorField.constant(Multivector.scalar(x))
    if ring == COMPLEX:
        f = f.complexify()
    return f


def partial(f: MultivectorField, mu: int) -> MultivectorField:
    if mu not in range(N_GEN):
        raise ValueError(f"coordinate index out of range: {mu}")
    return MultivectorField._raw({m: p.partial(mu) for m, p in f._coeffs.items()}, f.ring)


def _gamma_action(f: MultivectorField, keep, sign: int = 1) -> MultivectorField:
    # sum_mu  g^mu (op) d_mu f, with the blade operation selected by `keep`
    out: dict[int, FourierPoly] = {}
    for mu in range(N_GEN):
        g = 1 << mu
        for m, p in f._coeffs.items():
            if not keep(g, m):
                continue
            dp = p.partial(mu)
            if not dp:
                continue
            s, mm = PRODUCT_TABLE[g, m]
            if s * sign < 0:
                dp = -dp
            out[mm] = out[mm] + dp if mm in out else dp
    return MultivectorField._raw(out, f.ring)


def dirac(f: MultivectorField) -> MultivectorField:
    """``g^mu d_mu f`` (left action)."""
    return _gamma_action(f, lambda g, m: True)


def d(f: MultivectorField) -> MultivectorField:
    """Exterior derivative ``g^mu ^ d_mu f``."""
    return _gamma_action(f, lambda g, m: not g & m)


def codiff(f: MultivectorField) -> MultivectorField:
    """Codifferential ``-(g^mu _| d_mu f)``."""
    return _gamma_action(f, lambda g, m: bool(g & m), sign=-1)


def diamond(f: MultivectorField) -> MultivectorField:
    """Wave operator, the square of the Dirac operator."""
    return dirac(dirac(f))


def eval_at(f: MultivectorField, x: Sequence) -> Multivector:
    return Multivector({m: p.eval_at(x) for m, p in f._coeffs.items()}, f.ring)


def substitute_linear(f: MultivectorField, lam) -> MultivectorField:
    """Compose every coefficient with the coordinate map ``x -> lam x``."""
    return MultivectorField._raw({m: p.substitute_linear(lam) for m, p in f._coeffs.items()}, f.ring)


def random_poly(rng, *, max_degree: int = 3, max_phases: int = 3, max_terms: int = 3,
                max_num: int = 5, max_den: int = 3, kmax: int = 3) -> FourierPoly:
    """Random element of the Fourier-polynomial ring, for corpora and property tests."""
    phases = [
        tuple(Fraction(rng.randint(-kmax, kmax), rng.randint(1, 2)) for _ in range(4))
        for _ in range(rng.randint(0, max_phases))
    ]
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        deg = rng.randint(0, max_degree)
        exps = [0, 0, 0, 0]
        for _ in range(deg):
            exps[rng.randrange(4)] += 1
        amp = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
        if phases and rng.random() < 0.7:
            terms.append((exps, rng.choice(phases), rng.choice(("cos", "sin")), amp))
        else:
            terms.append((exps, None, None, amp))
    return FourierPoly(terms)


def random_field(rng, *, grades=None, max_blades: int = 4, **poly_kw) -> MultivectorField:
    allowed = [b for b in BLADES if grades is None or grade_of(b) in set(grades)]
    coeffs = {}
    for _ in range(rng.randint(1, max_blades)):
        coeffs[rng.choice(allowed)] = random_poly(rng, **poly_kw)
    return MultivectorField(coeffs)
