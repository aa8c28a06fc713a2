"""JSON documents for exact fields.

A field document looks like::

    {
      "signature": "1,3",
      "ring": "Q",
      "blades": [
        {"blade": "b0011",
         "terms": [{"monomial": [0, 1, 0, 0], "amp": "2/1"},
                   {"monomial": [0, 0, 0, 0], "k": ["1/1", "0/1", "0/1", "1/1"],
                    "trig": "cos", "amp": "-1/2"}]}
      ]
    }

``blade`` is the 4-bit generator mask written most significant bit first, so
``b0011`` is g^0 g^1. Rationals are always ``"p/q"`` strings. Over ``"Q(i)"``
an amplitude is ``{"re": "p/q", "im": "p/q"}``. Blades and terms are emitted
in canonical order so documents are byte-stable.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import Multivector
from .fields import MultivectorField
from .fourier import COS, SIN, FourierPoly
from .scalars import COMPLEX, REAL, ComplexQ, format_rational, parse_rational

SIGNATURE = "1,3"


class DocumentError(ValueError):
    """Malformed document; ``path`` locates the offending field."""

    def __init__(self, message: str, path: str = "", line: int | None = None):
        where = path or "<document>"
        if line is not None:
            where = f"line {line}: {where}"
        super().__init__(f"{where}: {message}")
        self.path = path
        self.line = line


def _amp_to_json(a, ring: str):
    if ring == COMPLEX:
        a = ComplexQ.coerce(a)
        return {"re": format_rational(a.re), "im": format_rational(a.im)}
    return format_rational(a)


def field_to_doc(f: MultivectorField) -> dict:
    blades = []
    for mask, poly in f.items():
        terms = []
        for (exps, k, trig), amp in poly.terms():
            t = {"monomial": list(exps)}
            if k is not None:
                t["k"] = [format_rational(c) for c in k]
                t["trig"] = trig
            t["amp"] = _amp_to_json(amp, f.ring)
            terms.append(t)
        blades.append({"blade": "b" + format(mask, "04b"), "terms": terms})
    return {"signature": SIGNATURE, "ring": f.ring, "blades": blades}


def _rational(v, path):
    if not isinstance(v, str):
        raise DocumentError("rationals must be strings like \"p/q\"", path)
    try:
        return parse_rational(v)
    except ValueError as exc:
        raise DocumentError(str(exc), path) from None


def doc_to_field(doc) -> MultivectorField:
    if not isinstance(doc, dict):
        raise DocumentError("expected an object")
    if doc.get("signature") != SIGNATURE:
        raise DocumentError(f"signature must be {SIGNATURE!r}", "signature")
    ring = doc.get("ring")
    if ring not in (REAL, COMPLEX):
        raise DocumentError(f"ring must be {REAL!r} or {COMPLEX!r}", "ring")
    blades = doc.get("blades")
    if not isinstance(blades, list):
        raise DocumentError("expected a list", "blades")
    coeffs: dict[int, FourierPoly] = {}
    for i, entry in enumerate(blades):
        bpath = f"blades[{i}]"
        name = entry.get("blade") if isinstance(entry, dict) else None
        if not (isinstance(name, str) and len(name) == 5 and name[0] == "b" and set(name[1:]) <= {"0", "1"}):
            raise DocumentError("blade must look like \"b0101\"", bpath + ".blade")
        mask = int(name[1:], 2)
        if mask in coeffs:
            raise DocumentError("duplicate blade", bpath + ".blade")
        terms = entry.get("terms")
        if not isinstance(terms, list):
            raise DocumentError("expected a list", bpath + ".terms")
        parsed = []
        for j, t in enumerate(terms):
            tpath = f"{bpath}.terms[{j}]"
            if not isinstance(t, dict):
                raise DocumentError("expected an object", tpath)
            mono = t.get("monomial")
            if not (isinstance(mono, list) and len(mono) == 4
                    and all(isinstance(e, int) and not isinstance(e, bool) and e >= 0 for e in mono)):
                raise DocumentError("monomial must be 4 non-negative integers", tpath + ".monomial")
            k = t.get("k")
            trig = t.get("trig")
            if k is not None:
                if not (isinstance(k, list) and len(k) == 4):
                    raise DocumentError("k must be 4 rationals", tpath + ".k")
                k = [_rational(k[n], f"{tpath}.k[{n}]") for n in range(4)]
                if trig not in (COS, SIN):
                    raise DocumentError("trig must be \"cos\" or \"sin\"", tpath + ".trig")
            elif trig is not None:
                raise DocumentError("trig given without k", tpath + ".trig")
            if "amp" not in t:
                raise DocumentError("missing amplitude", tpath + ".amp")
            amp = t["amp"]
            if ring == COMPLEX:
                if not (isinstance(amp, dict) and set(amp) == {"re", "im"}):
                    raise DocumentError("complex amplitude must be {\"re\", \"im\"}", tpath + ".amp")
                amp = ComplexQ(_rational(amp["re"], tpath + ".amp.re"), _rational(amp["im"], tpath + ".amp.im"))
            else:
                amp = _rational(amp, tpath + ".amp")
            parsed.append((mono, k, trig, amp))
        coeffs[mask] = FourierPoly(parsed)
    return MultivectorField(coeffs, ring)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def emit_field(f: MultivectorField) -> str:
    return dumps(field_to_doc(f))


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, f"column {exc.colno}", exc.lineno) from None


def parse_field(text: str) -> MultivectorField:
    return doc_to_field(_load_json(text))


def bundle_to_doc(fields: dict[str, MultivectorField], **extra) -> dict:
    doc = {"signature": SIGNATURE, "fields": {name: field_to_doc(f) for name, f in fields.items()}}
    doc.update(extra)
    return doc


def emit_bundle(fields: dict[str, MultivectorField], **extra) -> str:
    return dumps(bundle_to_doc(fields, **extra))


def parse_document(text: str) -> dict[str, MultivectorField]:
    """Parse either a single field document (returned under key ``"field"``) or a bundle."""
    doc = _load_json(text)
    if isinstance(doc, dict) and "fields" in doc:
        if doc.get("signature") != SIGNATURE:
            raise DocumentError(f"signature must be {SIGNATURE!r}", "signature")
        if not isinstance(doc["fields"], dict):
            raise DocumentError("expected an object", "fields")
        out = {}
        for name, sub in doc["fields"].items():
            try:
                out[name] = doc_to_field(sub)
            except DocumentError as exc:
                raise DocumentError(str(exc).split(": ", 1)[-1], f"fields.{name}.{exc.path}".rstrip(".")) from None
        return out
    return {"field": doc_to_field(doc)}


def canonical_text(obj) -> str:
    """Compact canonical text of a field, multivector, or nested tuple of them (for digests)."""
    if isinstance(obj, MultivectorField):
        return json.dumps(field_to_doc(obj), separators=(",", ":"))
    if isinstance(obj, Multivector):
        return json.dumps([[m, str(c)] for m, c in obj.items()], separators=(",", ":"))
    if isinstance(obj, (tuple, list)):
        return "[" + ",".join(canonical_text(x) for x in obj) + "]"
    if isinstance(obj, Fraction):
        return format_rational(obj)
    return json.dumps(str(obj))
