"""Exact arithmetic in the spacetime algebra Cl(1,3).

Basis blades are 4-bit masks over the generator indices 0..3; bit ``mu`` set
means the generator ``g^mu`` is a factor, and factors are kept in ascending
order. The metric is ``diag(+1, -1, -1, -1)``.

Coefficients are exact: :class:`fractions.Fraction` over the ring ``"Q"`` or
:class:`~stafield.scalars.ComplexQ` over ``"Q(i)"``. Mixing rings in a product
or sum raises :class:`~stafield.scalars.RingMismatchError`; call
:func:`complexify` first.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping

from .scalars import COMPLEX, REAL, ComplexQ, RingMismatchError, ring_of, to_ring

N_GEN = 4
N_BLADES = 16
METRIC = (1, -1, -1, -1)
BLADES = tuple(range(N_BLADES))


def grade_of(mask: int) -> int:
    return bin(mask).count("1")


def blades_of_grade(r: int) -> tuple[int, ...]:
    return tuple(b for b in BLADES if grade_of(b) == r)


def _reorder_sign(a: int, b: int) -> int:
    # number of generator transpositions needed to bring a*b into ascending order
    a >>= 1
    swaps = 0
    while a:
        swaps += grade_of(a & b)
        a >>= 1
    return -1 if swaps & 1 else 1


def _metric_sign(common: int) -> int:
    s = 1
    for mu in range(N_GEN):
        if common >> mu & 1:
            s *= METRIC[mu]
    return s


def _build_table():
    table = {}
    for a in BLADES:
        for b in BLADES:
            table[a, b] = (_reorder_sign(a, b) * _metric_sign(a & b), a ^ b)
    return table


# (sign, mask) of the product of two basis blades
PRODUCT_TABLE: dict[tuple[int, int], tuple[int, int]] = _build_table()


def blade_product(a: int, b: int) -> tuple[int, int]:
    return PRODUCT_TABLE[a, b]


def blade_name(mask: int) -> str:
    if mask == 0:
        return "1"
    return "g" + "".join(str(mu) for mu in range(N_GEN) if mask >> mu & 1)


def _is_scalar_value(x) -> bool:
    return isinstance(x, (int, Rational, ComplexQ)) and not isinstance(x, bool)


class Multivector:
    """An element of Cl(1,3), or of its complexification, with exact coefficients.

    Instances are immutable. ``*`` is the geometric product, ``^`` the wedge
    and ``<<`` the left contraction.
    """

    __slots__ = ("_coeffs", "ring")

    def __init__(self, coeffs: Mapping[int, object] | None = None, ring: str = REAL):
        if ring not in (REAL, COMPLEX):
            raise ValueError(f"unknown ring {ring!r}")
        clean = {}
        for mask, c in (coeffs or {}).items():
            if not 0 <= mask < N_BLADES:
                raise ValueError(f"blade mask out of range: {mask}")
            c = to_ring(c, ring)
            if c:
                clean[mask] = c
        self._coeffs = clean
        self.ring = ring

    @classmethod
    def _raw(cls, coeffs: dict, ring: str) -> "Multivector":
        mv = object.__new__(cls)
        mv._coeffs = {k: v for k, v in coeffs.items() if v}
        mv.ring = ring
        return mv

    @classmethod
    def scalar(cls, value, ring: str | None = None) -> "Multivector":
        ring = ring or ring_of(value)
        return cls({0: value}, ring)

    @classmethod
    def blade(cls, mask: int, coeff=1, ring: str | None = None) -> "Multivector":
        ring = ring or ring_of(coeff)
        return cls({mask: coeff}, ring)

    @classmethod
    def zero(cls, ring: str = REAL) -> "Multivector":
        return cls._raw({}, ring)

    @property
    def coeffs(self) -> dict[int, object]:
        return dict(self._coeffs)

    def __getitem__(self, mask: int):
        return self._coeffs.get(mask, to_ring(0, self.ring))

    def items(self):
        return sorted(self._coeffs.items())

    def grades(self) -> set[int]:
        return {grade_of(m) for m in self._coeffs}

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def _check_ring(self, other: "Multivector"):
        if self.ring != other.ring:
            raise RingMismatchError(f"cannot combine {self.ring} and {other.ring} multivectors")

    def _lift(self, other):
        if isinstance(other, Multivector):
            self._check_ring(other)
            return other
        if _is_scalar_value(other):
            if self.ring == REAL and ring_of(other) == COMPLEX:
                raise RingMismatchError("complex scalar with a real multivector")
            return Multivector({0: other}, self.ring)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._coeffs)
        for m, c in other._coeffs.items():
            out[m] = out[m] + c if m in out else c
        return Multivector._raw(out, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return Multivector._raw({m: -c for m, c in self._coeffs.items()}, self.ring)

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

    def scale(self, s) -> "Multivector":
        if self.ring == REAL and ring_of(s) == COMPLEX:
            raise RingMismatchError("complex scalar with a real multivector")
        s = to_ring(s, self.ring)
        return Multivector._raw({m: c * s for m, c in self._coeffs.items()}, self.ring)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if _is_scalar_value(other):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if _is_scalar_value(other):
            return self.scale(other)
        return NotImplemented

    def __xor__(self, other):
        return wedge(self, other)

    def __lshift__(self, other):
        return contract_left(self, other)

    def __invert__(self):
        return reverse(self)

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return self._coeffs == other._coeffs
        if _is_scalar_value(other):
            return self._coeffs == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for m, c in self.items():
            name = blade_name(m)
            parts.append(str(c) if m == 0 else f"{c}*{name}")
        return " + ".join(parts)


def gamma(mu: int, ring: str = REAL) -> Multivector:
    """The generator ``g^mu`` (upper index)."""
    if not 0 <= mu < N_GEN:
        raise ValueError(f"generator index out of range: {mu}")
    return Multivector({1 << mu: 1}, ring)


def gamma_lower(mu: int, ring: str = REAL) -> Multivector:
    """``g_mu = eta_{mu mu} g^mu``."""
    return gamma(mu, ring).scale(METRIC[mu])


def blade_from_indices(indices: Iterable[int], ring: str = REAL) -> Multivector:
    """Geometric product of generators in the given order, e.g. ``(2, 1)`` is g^2 g^1."""
    out = Multivector.scalar(1, ring)
    for mu in indices:
        out = out * gamma(mu, ring)
    return out


def lower_blade(indices: Iterable[int], ring: str = REAL) -> Multivector:
    """Product of lowered generators ``g_i g_j ...`` in the given order."""
    out = Multivector.scalar(1, ring)
    for mu in indices:
        out = out * gamma_lower(mu, ring)
    return out


def _integer_coeffs(a: Multivector):
    """Clear denominators: ``(den, {mask: int or (re, im)})`` with ``coeff = value / den``."""
    if a.ring == REAL:
        den = math.lcm(*(c.denominator for c in a._coeffs.values())) if a._coeffs else 1
        return den, {m: c.numerator * (den // c.denominator) for m, c in a._coeffs.items()}
    dens = [x.denominator for c in a._coeffs.values() for x in (c.re, c.im)]
    den = math.lcm(*dens) if dens else 1
    return den, {m: (c.re.numerator * (den // c.re.denominator), c.im.numerator * (den // c.im.denominator))
                 for m, c in a._coeffs.items()}


def _bilinear(a: Multivector, b: Multivector, keep) -> Multivector:
    # products run over integers; one normalization per output blade
    a._check_ring(b)
    da, ia = _integer_coeffs(a)
    db, ib = _integer_coeffs(b)
    den = da * db
    out: dict[int, object] = {}
    if a.ring == REAL:
        for ma, ca in ia.items():
            for mb, cb in ib.items():
                if keep(ma, mb):
                    sign, m = PRODUCT_TABLE[ma, mb]
                    out[m] = out.get(m, 0) + sign * ca * cb
        return Multivector._raw({m: Fraction(v, den) for m, v in out.items() if v}, REAL)
    for ma, (ar, ai) in ia.items():
        for mb, (br, bi) in ib.items():
            if keep(ma, mb):
                sign, m = PRODUCT_TABLE[ma, mb]
                re, im = out.get(m, (0, 0))
                out[m] = (re + sign * (ar * br - ai * bi), im + sign * (ar * bi + ai * br))
    return Multivector._raw(
        {m: ComplexQ(Fraction(re, den), Fraction(im, den)) for m, (re, im) in out.items() if re or im}, COMPLEX)


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    return _bilinear(a, b, lambda ma, mb: True)


def wedge(a: Multivector, b: Multivector) -> Multivector:
    """Exterior product; on blades it is the product when no generator repeats."""
    return _bilinear(a, b, lambda ma, mb: not ma & mb)


def contract_left(a: Multivector, b: Multivector) -> Multivector:
    """Left contraction ``a _| b``: grade ``s - r`` part of the product, zero when r > s."""
    return _bilinear(a, b, lambda ma, mb: ma & mb == ma)


def grade(a: Multivector, r: int) -> Multivector:
    if not isinstance(r, int) or not 0 <= r <= N_GEN:
        raise ValueError(f"grade must be in 0..4, got {r!r}")
    return Multivector._raw({m: c for m, c in a._coeffs.items() if grade_of(m) == r}, a.ring)


def reverse_sign(r: int) -> int:
    return -1 if (r * (r - 1) // 2) & 1 else 1


def reverse(a: Multivector) -> Multivector:
    return Multivector._raw(
        {m: (c if reverse_sign(grade_of(m)) > 0 else -c) for m, c in a._coeffs.items()}, a.ring
    )


def involute(a: Multivector) -> Multivector:
    """Grade involution: negates odd grades."""
    return Multivector._raw(
        {m: (-c if grade_of(m) & 1 else c) for m, c in a._coeffs.items()}, a.ring
    )


def gamma5(ring: str = REAL) -> Multivector:
    """The volume element g^0 g^1 g^2 g^3."""
    return Multivector({0b1111: 1}, ring)


def hodge(a: Multivector) -> Multivector:
    """Hodge star as reversion followed by right multiplication with gamma5."""
    return reverse(a) * gamma5(a.ring)


def even_part(a: Multivector) -> Multivector:
    return Multivector._raw({m: c for m, c in a._coeffs.items() if not grade_of(m) & 1}, a.ring)


def odd_part(a: Multivector) -> Multivector:
    return Multivector._raw({m: c for m, c in a._coeffs.items() if grade_of(m) & 1}, a.ring)


def is_even(a: Multivector) -> bool:
    return all(not grade_of(m) & 1 for m in a._coeffs)


def complexify(a: Multivector) -> Multivector:
    if a.ring == COMPLEX:
        return a
    return Multivector._raw({m: ComplexQ(c, 0) for m, c in a._coeffs.items()}, COMPLEX)


def real_part(a: Multivector) -> Multivector:
    """Coefficient-wise real part of a complexified multivector."""
    if a.ring == REAL:
        return a
    return Multivector._raw({m: c.re for m, c in a._coeffs.items()}, REAL)


def imag_part(a: Multivector) -> Multivector:
    if a.ring == REAL:
        return Multivector.zero()
    return Multivector._raw({m: c.im for m, c in a._coeffs.items()}, REAL)


# --- combinatorial Hodge star --------------------------------------------
# Built from the forms definition  a ^ *b = <a, b> tau  on basis blades, with
# <,> the Gram determinant of the metric and tau = dx^0 ^ dx^1 ^ dx^2 ^ dx^3.
# Shares nothing with the Clifford product above.


def _permutation_sign(seq: list[int]) -> int:
    inversions = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inversions & 1 else 1


def _form_norm(mask: int) -> int:
    s = 1
    for mu in range(N_GEN):
        if mask >> mu & 1:
            s *= METRIC[mu]
    return s


def hodge_blade_combinatorial(mask: int) -> tuple[int, int]:
    """``*e_I = c e_J`` with J the complement of I; returns ``(c, J)``."""
    idx = [mu for mu in range(N_GEN) if mask >> mu & 1]
    comp = [mu for mu in range(N_GEN) if not mask >> mu & 1]
    return _form_norm(mask) * _permutation_sign(idx + comp), 0b1111 ^ mask


def hodge_combinatorial(a: Multivector) -> Multivector:
    out = {}
    for m, c in a._coeffs.items():
        sign, j = hodge_blade_combinatorial(m)
        out[j] = c if sign > 0 else -c
    return Multivector._raw(out, a.ring)


@lru_cache(maxsize=None)
def double_hodge_sign(r: int) -> int:
    """The sign ``s`` with ``**C = s C`` on grade-``r`` elements, read off the algebra."""
    b = blades_of_grade(r)[0]
    twice = hodge(hodge(Multivector({b: 1})))
    return int(twice[b])


def hodge_inverse(a: Multivector) -> Multivector:
    """Inverse of :func:`hodge`, applied grade by grade."""
    out = Multivector.zero(a.ring)
    for r in range(N_GEN + 1):
        part = grade(a, r)
        if part:
            # the preimage has grade 4 - r, and ** on it is double_hodge_sign(4 - r)
            out = out + hodge(part).scale(double_hodge_sign(N_GEN - r))
    return out


def random_multivector(rng, *, grades: Iterable[int] | None = None, max_num: int = 9,
                       max_den: int = 5, density: float = 1.0) -> Multivector:
    """Random rational multivector drawn from ``rng`` (a :class:`random.Random`)."""
    allowed = set(range(N_GEN + 1) if grades is None else grades)
    coeffs = {}
    for m in BLADES:
        if grade_of(m) in allowed and rng.random() < density:
            coeffs[m] = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
    return Multivector(coeffs)
