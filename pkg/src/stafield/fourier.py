"""Exact scalar functions on spacetime: sums of monomials times cos/sin of linear phases.

A term is ``amp * x0^e0 x1^e1 x2^e2 x3^e3 * trig(k . x)`` with ``k . x = k_mu x^mu``
(no metric; ``k`` holds the components of a 1-form). The class of such finite
sums is closed under products and under every coordinate derivative, and each
element has a canonical form, so equality is decidable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import METRIC
from .scalars import ComplexQ

COS = "cos"
SIN = "sin"


class ExactnessError(ValueError):
    """Raised when a value cannot be produced exactly (e.g. cos at a nonzero rational)."""


Exps = tuple[int, int, int, int]
Phase = tuple[Fraction, Fraction, Fraction, Fraction]
Key = tuple[Exps, "Phase | None", "str | None"]


def minkowski_square(k: Sequence) -> Fraction:
    """``eta^{mu nu} k_mu k_nu``."""
    return sum((METRIC[mu] * Fraction(k[mu]) ** 2 for mu in range(4)), Fraction(0))


def is_null(k: Sequence) -> bool:
    return minkowski_square(k) == 0


def _canon(exps: Exps, k, trig, amp):
    """Canonical (key, amp) for one term, or None when the term vanishes identically."""
    if not amp:
        return None
    if k is None or not any(k):
        if trig == SIN:
            return None
        return (exps, None, None), amp
    for c in k:
        if c:
            if c < 0:
                k = tuple(-x for x in k)
                if trig == SIN:
                    amp = -amp
            break
    return (exps, k, trig), amp


def _sort_key(key: Key):
    exps, k, trig = key
    return (exps, k is not None, k or (), trig or "")


class FourierPoly:
    """Immutable exact scalar field. Amplitudes are ``Fraction`` or ``ComplexQ``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[Sequence[int], Sequence | None, str | None, object]] = ()):
        acc: dict = {}
        for exps, k, trig, amp in terms:
            exps = tuple(int(e) for e in exps)
            if len(exps) != 4 or any(e < 0 for e in exps):
                raise ValueError(f"bad monomial exponents {exps!r}")
            if k is not None:
                k = tuple(Fraction(c) for c in k)
                if len(k) != 4:
                    raise ValueError("phase needs 4 components")
                if trig not in (COS, SIN):
                    raise ValueError(f"trig must be 'cos' or 'sin', got {trig!r}")
            elif trig is not None:
                raise ValueError("trig given without a phase")
            if not isinstance(amp, ComplexQ):
                amp = Fraction(amp)
            _accumulate(acc, _canon(exps, k, trig, amp))
        self._terms = {key: a for key, a in acc.items() if a}

    @classmethod
    def _raw(cls, terms: dict) -> "FourierPoly":
        p = object.__new__(cls)
        p._terms = {key: a for key, a in terms.items() if a}
        return p

    # constructors -----------------------------------------------------------
    @classmethod
    def const(cls, c) -> "FourierPoly":
        return cls([((0, 0, 0, 0), None, None, c)])

    @classmethod
    def coord(cls, mu: int, power: int = 1) -> "FourierPoly":
        e = [0, 0, 0, 0]
        e[mu] = power
        return cls([(e, None, None, 1)])

    @classmethod
    def monomial(cls, exps: Sequence[int], amp=1) -> "FourierPoly":
        return cls([(exps, None, None, amp)])

    @classmethod
    def cos(cls, k: Sequence, amp=1) -> "FourierPoly":
        return cls([((0, 0, 0, 0), k, COS, amp)])

    @classmethod
    def sin(cls, k: Sequence, amp=1) -> "FourierPoly":
        return cls([((0, 0, 0, 0), k, SIN, amp)])

    # inspection -------------------------------------------------------------
    def terms(self) -> list[tuple[Key, object]]:
        return sorted(self._terms.items(), key=lambda kv: _sort_key(kv[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def phases(self) -> set:
        return {k for (_, k, _) in self._terms if k is not None}

    def degree(self) -> int:
        return max((sum(e) for (e, _, _) in self._terms), default=0)

    def amplitudes(self):
        return self._terms.values()

    def is_constant(self) -> bool:
        return all(e == (0, 0, 0, 0) and k is None for (e, k, _) in self._terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("field is not constant")
        return self._terms.get(((0, 0, 0, 0), None, None), Fraction(0))

    # arithmetic -------------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, FourierPoly):
            other = FourierPoly.const(other)
        out = dict(self._terms)
        for key, a in other._terms.items():
            out[key] = out[key] + a if key in out else a
        return FourierPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return FourierPoly._raw({key: -a for key, a in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, FourierPoly):
            other = FourierPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return FourierPoly.const(other) - self

    def scale(self, s) -> "FourierPoly":
        if not s:
            return FourierPoly._raw({})
        return FourierPoly._raw({key: a * s for key, a in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, FourierPoly):
            return self.scale(other)
        acc: dict = {}
        for (e1, k1, t1), a1 in self._terms.items():
            for (e2, k2, t2), a2 in other._terms.items():
                exps = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                amp = a1 * a2
                for k, trig, a in _trig_product(k1, t1, k2, t2, amp):
                    _accumulate(acc, _canon(exps, k, trig, a))
        return FourierPoly._raw(acc)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if isinstance(other, FourierPoly):
            return self._terms == other._terms
        return self == FourierPoly.const(other)

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def map_amplitudes(self, fn) -> "FourierPoly":
        return FourierPoly._raw({key: fn(a) for key, a in self._terms.items()})

    # calculus ---------------------------------------------------------------
    def partial(self, mu: int) -> "FourierPoly":
        """Exact derivative with respect to ``x^mu``."""
        acc: dict = {}
        for (e, k, trig), a in self._terms.items():
            if e[mu]:
                e2 = list(e)
                e2[mu] -= 1
                _accumulate(acc, _canon(tuple(e2), k, trig, a * e[mu]))
            if k is not None and k[mu]:
                if trig == COS:
                    _accumulate(acc, _canon(e, k, SIN, -a * k[mu]))
                else:
                    _accumulate(acc, _canon(e, k, COS, a * k[mu]))
        return FourierPoly._raw(acc)

    def wave(self) -> "FourierPoly":
        """``eta^{mu nu} d_mu d_nu``."""
        out = FourierPoly._raw({})
        for mu in range(4):
            term = self.partial(mu).partial(mu)
            out = out + term if METRIC[mu] > 0 else out - term
        return out

    def eval_at(self, x: Sequence):
        """Exact value at the point ``x``.

        Only points where every phase ``k . x`` vanishes are admissible: for a
        nonzero rational angle neither cos nor sin is rational.
        """
        x = tuple(Fraction(c) for c in x)
        total = Fraction(0)
        for (e, k, trig), a in self._terms.items():
            v = Fraction(1)
            for mu in range(4):
                if e[mu]:
                    v *= x[mu] ** e[mu]
            if k is not None:
                theta = sum((k[mu] * x[mu] for mu in range(4)), Fraction(0))
                if theta != 0:
                    raise ExactnessError(f"{trig}({theta}) is not an exact rational")
                if trig == SIN:
                    continue
            total = a * v + total
        return total

    def substitute_linear(self, lam: Sequence[Sequence]) -> "FourierPoly":
        """Compose with the linear coordinate map ``x^mu -> lam[mu][nu] x^nu``."""
        lam = [[Fraction(c) for c in row] for row in lam]
        coords = [
            FourierPoly([((1 if j == 0 else 0, 1 if j == 1 else 0, 1 if j == 2 else 0, 1 if j == 3 else 0),
                          None, None, lam[mu][j]) for j in range(4)])
            for mu in range(4)
        ]
        out = FourierPoly._raw({})
        for (e, k, trig), a in self._terms.items():
            term = FourierPoly.const(a)
            for mu in range(4):
                for _ in range(e[mu]):
                    term = term * coords[mu]
            if k is not None:
                k2 = tuple(sum((k[mu] * lam[mu][nu] for mu in range(4)), Fraction(0)) for nu in range(4))
                term = term * FourierPoly([((0, 0, 0, 0), k2, trig, 1)])
            out = out + term
        return out

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for (e, k, trig), a in self.terms():
            factors = [str(a)]
            factors += [f"x{mu}^{e[mu]}" if e[mu] > 1 else f"x{mu}" for mu in range(4) if e[mu]]
            if k is not None:
                factors.append(f"{trig}({','.join(str(c) for c in k)})")
            parts.append("*".join(factors))
        return " + ".join(parts)


def _accumulate(acc: dict, item):
    if item is None:
        return
    key, a = item
    acc[key] = acc[key] + a if key in acc else a


_HALF = Fraction(1, 2)


def _trig_product(k1, t1, k2, t2, amp):
    """Product-to-sum expansion; yields (phase, trig, amp) with uncanonicalized phases."""
    if k1 is None:
        yield k2, t2, amp
        return
    if k2 is None:
        yield k1, t1, amp
        return
    diff = tuple(a - b for a, b in zip(k1, k2))
    tot = tuple(a + b for a, b in zip(k1, k2))
    h = amp * _HALF
    if t1 == COS and t2 == COS:
        yield diff, COS, h
        yield tot, COS, h
    elif t1 == SIN and t2 == SIN:
        yield diff, COS, h
        yield tot, COS, -h
    elif t1 == SIN and t2 == COS:
        yield tot, SIN, h
        yield diff, SIN, h
    else:
        # cos a sin b = 1/2 [sin(a+b) - sin(a-b)]
        yield tot, SIN, h
        yield diff, SIN, -h
