"""Seeded verification suites and their JSON reports.

Each suite runs a list of named checks. A check draws its corpus from a
``random.Random`` seeded with ``"<seed>:<check name>"``, so results depend only
on ``(suite, seed, count)`` and reports are byte-identical across runs.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import __version__
from . import algebra as ga
from . import generators as gen
from .algebra import Multivector
from .fields import MultivectorField, codiff, d, diamond, dirac, partial, random_field
from .hertz import (HertzData, assemble_psi, electron_theorem_check, em_potential, hertz_residual,
                    subsidiary_residuals)
from .matrix import (ComplexMatrix4, adapted_rep, column_extract, matrix_dirac_residual, rep,
                     standard_gamma_rep)
from .maxwell import (GMESystem, gamma5_commutation_identities, gme_residual, gme_split_residuals,
                      magnetic_dual_residual, superpotential_field, wave_residuals)
from .scalars import I
from .serialize import canonical_text, field_to_doc
from .spinor import (IDEAL_RESIDUAL_CONSTANT, MAGNETIC_SIGN, bosonize, calibrate_ideal_constant,
                     calibrate_magnetic_sign, compose_even, decompose_even, dh_residual,
                     dh_residual_in_frame, ideal_dimension, ideal_dirac_residual, project_ideal,
                     spin_transport, standard_idempotent, weyl_project)

PASS, FAIL, SKIP = "pass", "fail", "skip"


class UnknownSuiteError(KeyError):
    pass


@dataclass
class CheckResult:
    status: str
    cases: int
    inputs: list = field(default_factory=list)
    residual: object = None
    note: str = ""


@dataclass
class Options:
    seed: int = 1
    count: int | None = None
    magnetic_sign: int = MAGNETIC_SIGN

    def n(self, default: int) -> int:
        return default if self.count is None else self.count


def _rng(opts: Options, name: str) -> random.Random:
    return random.Random(f"{opts.seed}:{name}")


def _all_zero(pairs, inputs_of=lambda x: x):
    """Run ``pairs`` (iterable of (input, residual)); stop at the first nonzero residual."""
    inputs = []
    n = 0
    for inp, res in pairs:
        n += 1
        inputs.append(inp)
        if res:
            return CheckResult(FAIL, n, inputs, res, f"counterexample at case {n - 1}")
    return CheckResult(PASS, n, inputs)


def _bool_check(ok: bool, cases: int, inputs=(), note: str = "") -> CheckResult:
    return CheckResult(PASS if ok else FAIL, cases, list(inputs), None, note)


# --- algebra -------------------------------------------------------------------

def _generator_relations(opts, rng):
    pairs = []
    for mu in range(4):
        for nu in range(4):
            g, h = ga.gamma(mu), ga.gamma(nu)
            want = Multivector.scalar(2 * ga.METRIC[mu]) if mu == nu else Multivector.zero()
            pairs.append(((mu, nu), g * h + h * g - want))
    return _all_zero(pairs)


def _associativity(opts, rng):
    def cases():
        for _ in range(opts.n(1000)):
            a, b, c = (ga.random_multivector(rng) for _ in range(3))
            yield (a, b, c), a * (b * c) - (a * b) * c
    return _all_zero(cases())


def _reverse_antiautomorphism(opts, rng):
    def cases():
        for _ in range(opts.n(300)):
            a, b = ga.random_multivector(rng), ga.random_multivector(rng)
            yield (a, b), ga.reverse(a * b) - ga.reverse(b) * ga.reverse(a)
    return _all_zero(cases())


def _hodge_oracle(opts, rng):
    pairs = []
    for mask in ga.BLADES:
        e = Multivector({mask: 1})
        pairs.append((e, ga.hodge(e) - ga.hodge_combinatorial(e)))
    return _all_zero(pairs)


def _double_hodge(opts, rng):
    pairs = []
    for mask in ga.BLADES:
        r = ga.grade_of(mask)
        e = Multivector({mask: 1})
        expected = (-1) ** (r * (4 - r) + 1)
        pairs.append((e, ga.hodge(ga.hodge(e)) - e.scale(expected)))
        pairs.append((e, ga.hodge_combinatorial(ga.hodge_combinatorial(e)) - e.scale(expected)))
    return _all_zero(pairs)


def _product_grades(opts, rng):
    def cases():
        for _ in range(opts.n(300)):
            r, s = rng.randint(0, 4), rng.randint(0, 4)
            a = ga.random_multivector(rng, grades=(r,))
            b = ga.random_multivector(rng, grades=(s,))
            allowed = set(range(abs(r - s), r + s + 1, 2))
            prod = a * b
            bad = sum((ga.grade(prod, g) for g in prod.grades() - allowed), Multivector.zero())
            yield (a, b), bad
    return _all_zero(cases())


# --- calculus -------------------------------------------------------------------

def _calc_corpus(opts, rng, default=500):
    return [random_field(rng, max_blades=4) for _ in range(opts.n(default))]


def _dirac_split(opts, rng):
    return _all_zero((f, dirac(f) - (d(f) - codiff(f))) for f in _calc_corpus(opts, rng))


def _d_squared(opts, rng):
    return _all_zero((f, d(d(f))) for f in _calc_corpus(opts, rng))


def _codiff_squared(opts, rng):
    return _all_zero((f, codiff(codiff(f))) for f in _calc_corpus(opts, rng))


def _diamond_split(opts, rng):
    return _all_zero((f, diamond(f) + d(codiff(f)) + codiff(d(f))) for f in _calc_corpus(opts, rng))


def _diamond_grade(opts, rng):
    def cases():
        for f in _calc_corpus(opts, rng, 200):
            r = rng.randint(0, 4)
            yield f, diamond(f.grade(r)) - diamond(f).grade(r)
    return _all_zero(cases())


def _partials_commute(opts, rng):
    def cases():
        for f in _calc_corpus(opts, rng, 200):
            mu, nu = rng.randrange(4), rng.randrange(4)
            yield f, partial(partial(f, mu), nu) - partial(partial(f, nu), mu)
    return _all_zero(cases())


def _leibniz(opts, rng):
    def cases():
        for _ in range(opts.n(200)):
            f, g = random_field(rng, max_blades=3), random_field(rng, max_blades=3)
            mu = rng.randrange(4)
            yield (f, g), partial(f * g, mu) - (partial(f, mu) * g + f * partial(g, mu))
    return _all_zero(cases())


# --- ideal ---------------------------------------------------------------------

def _idempotent_identities(opts, rng):
    f = standard_idempotent().f
    g0 = ga.gamma(0, ga.COMPLEX)
    g21 = ga.blade_from_indices((2, 1), ga.COMPLEX)
    res = [f * f - f, g0 * f - f, g21 * f - f.scale(-I)]
    bad = next((r for r in res if r), None)
    return CheckResult(PASS if bad is None else FAIL, 3, [f], bad and MultivectorField.constant(bad))


def _ideal_dim(opts, rng):
    return _bool_check(ideal_dimension() == 4, 16, note=f"dimension {ideal_dimension()}")


# --- bosonization ------------------------------------------------------------------

def _bosonization_theorem(opts, rng):
    def cases():
        for psi in gen.massless_family(rng, opts.n(60)):
            if dirac(psi):
                yield psi, dirac(psi)
                continue
            yield psi, gme_residual(GMESystem(*bosonize(psi, opts.magnetic_sign)))
    return _all_zero(cases())


def _grade_redistribution(opts, rng):
    def cases():
        for _ in range(opts.n(200)):
            psi = gen.random_even_field(rng)
            f, je, jm = bosonize(psi, opts.magnetic_sign)
            yield psi, dirac(psi) - (-je + dirac(f) - ga.gamma5() * jm)
    return _all_zero(cases())


def _magnetic_sign_calibration(opts, rng):
    corpus = gen.massless_family(rng, 20) + [gen.null_plane_wave()]
    found = calibrate_magnetic_sign(corpus)
    return _bool_check(found == opts.magnetic_sign, len(corpus), note=f"calibrated sign {found}")


def _weyl_commutation(opts, rng):
    return _all_zero((psi, dirac(weyl_project(psi))) for psi in gen.massless_family(rng, opts.n(40)))


def _right_module(opts, rng):
    def cases():
        for _ in range(opts.n(100)):
            psi = random_field(rng)
            a = ga.random_multivector(rng, density=0.4)
            yield (psi, a), dirac(psi * a) - dirac(psi) * a
    return _all_zero(cases())


def _even_roundtrip(opts, rng):
    def cases():
        for _ in range(opts.n(100)):
            psi = gen.random_even_field(rng)
            yield psi, compose_even(*decompose_even(psi)).psi - psi
    return _all_zero(cases())


# --- fermionization -----------------------------------------------------------------

def _fermionization(opts, rng):
    f = standard_idempotent().f
    g5 = ga.gamma5(ga.COMPLEX)

    def cases():
        for sys in gen.gme_family(rng, opts.n(60)):
            psi_ideal = project_ideal(sys.F).value
            je_f = sys.Je.complexify() * f
            jm_f = sys.Jm.complexify() * f
            yield (sys.F, sys.Je, sys.Jm), dirac(psi_ideal) - je_f - g5 * jm_f
    return _all_zero(cases())


def _fermionization_detects(opts, rng):
    # a GME violation survives right multiplication by f
    f = standard_idempotent().f

    def cases():
        for _ in range(opts.n(30)):
            sys = GMESystem(random_field(rng, grades={2}), random_field(rng, grades={1}), MultivectorField.zero())
            res = gme_residual(sys)
            if res and not (res.complexify() * f):
                yield sys.F, res
            else:
                yield sys.F, MultivectorField.zero()
    return _all_zero(cases())


# --- gme ----------------------------------------------------------------------------

def _superpotential_chain(opts, rng):
    def cases():
        for _ in range(opts.n(100)):
            sp, sys = gen.superpotential_system(rng, max_degree=2, max_phases=2)
            f = superpotential_field(sp)
            ra, rb = wave_residuals(sp, sys.Je, sys.Jm)
            res = (f - dirac(sp.combined())) + gme_residual(sys) + ra + rb.hodge()
            yield (sp.A, sp.B), res
    return _all_zero(cases())


def _gamma5_identities(opts, rng):
    def cases():
        for _ in range(opts.n(200)):
            b = random_field(rng, grades={1})
            r1, r2 = gamma5_commutation_identities(b)
            yield b, r1 + r2
    return _all_zero(cases())


def _split_equivalence(opts, rng):
    inputs = []
    n = 0
    for _ in range(opts.n(100)):
        if rng.random() < 0.5:
            sys = gen.superpotential_system(rng, max_degree=1, max_phases=1)[1]
        else:
            sys = GMESystem(random_field(rng, grades={2}), random_field(rng, grades={1}), random_field(rng, grades={1}))
        n += 1
        inputs.append((sys.F, sys.Je, sys.Jm))
        full = gme_residual(sys)
        r1, r2 = gme_split_residuals(sys)
        r3 = magnetic_dual_residual(sys)
        if full != r2 - r1 or r3 != -r2.hodge():
            return CheckResult(FAIL, n, inputs, full - (r2 - r1), "split residuals disagree")
    return CheckResult(PASS, n, inputs)


# --- hertz --------------------------------------------------------------------------

def _hertz_rest(opts, rng):
    pairs = []
    for m in (1, 2, Fraction(1, 3), 5):
        h = gen.hertz_rest(m)
        pairs.append((h.Pi, hertz_residual(h) + em_potential(h) + dh_residual(assemble_psi(h), m)))
    return _all_zero(pairs)


def _hertz_family(opts, rng):
    inputs = []
    n = 0
    for h in gen.hertz_family(rng, opts.n(40)):
        out = electron_theorem_check(h)
        n += 1
        inputs.append((h.Pi, h.G, h.P, h.m))
        if not out.premise_holds or not out.implication_holds:
            return CheckResult(FAIL, n, inputs, out.hertz_residual + out.dh_residual,
                               "family member violates the premise or the implication")
    return CheckResult(PASS, n, inputs)


def _hertz_identity(opts, rng):
    g21 = ga.blade_from_indices((2, 1))

    def cases():
        for _ in range(opts.n(60)):
            h = HertzData(random_field(rng, grades={2}), random_field(rng, grades={0}),
                          random_field(rng, grades={0}), Fraction(rng.randint(1, 5), rng.randint(1, 3)))
            yield (h.Pi, h.G, h.P, h.m), dh_residual(assemble_psi(h), h.m) - hertz_residual(h) * g21
    return _all_zero(cases())


def _hertz_linearity(opts, rng):
    def cases():
        for _ in range(opts.n(40)):
            m = Fraction(rng.randint(1, 4))
            h1, h2 = (HertzData(random_field(rng, grades={2}), random_field(rng, grades={0}),
                                random_field(rng, grades={0}), m) for _ in range(2))
            res = hertz_residual(h1 + h2) - hertz_residual(h1) - hertz_residual(h2)
            for a, b, c in zip(subsidiary_residuals(h1 + h2), subsidiary_residuals(h1), subsidiary_residuals(h2)):
                res = res + (a - b - c)
            yield (h1.Pi, h2.Pi), res
    return _all_zero(cases())


def _hertz_subsidiary_rest(opts, rng):
    pairs = []
    for m in (1, 2, Fraction(1, 2)):
        r4, r5, r6, r7 = subsidiary_residuals(gen.hertz_rest(m))
        pairs.append((m, r4 + r6 + r7))
    return _all_zero(pairs)


def _hertz_stratton_wave(opts, rng):
    r5 = subsidiary_residuals(gen.hertz_rest(1))[1]
    if r5:
        return CheckResult(SKIP, 1, [Fraction(1)], r5,
                           "wave condition on the Stratton 3-form is nonzero for the rest data; reported as is")
    return CheckResult(PASS, 1, [Fraction(1)])


def _spin_covariance(opts, rng):
    def cases():
        for psi, m in gen.massive_family(rng, opts.n(20)):
            a, b = gen.BOOST_PAIRS[rng.randrange(3)]
            u = gen.boost_rotor(rng.randint(1, 3), a, b)
            moved = spin_transport(psi, Multivector.scalar(1), ga.reverse(u))
            ident = spin_transport(psi, u, u).psi - psi
            yield psi, dh_residual_in_frame(moved.psi, m, u) + ident
    return _all_zero(cases())


# --- matrix --------------------------------------------------------------------------

def _complexq_mv(rng):
    re = ga.random_multivector(rng)
    im = ga.random_multivector(rng, density=0.5)
    return ga.complexify(re) + ga.complexify(im).scale(I)


def _rep_homomorphism(opts, rng):
    inputs = []
    n = 0
    for _ in range(opts.n(1000)):
        a, b = _complexq_mv(rng), _complexq_mv(rng)
        n += 1
        inputs.append((a, b))
        if rep(a * b) != rep(a) * rep(b):
            return CheckResult(FAIL, n, inputs, MultivectorField.constant(a * b), "rep(ab) != rep(a) rep(b)")
    ok = rep(Multivector.scalar(1)) == ComplexMatrix4.identity()
    return CheckResult(PASS if ok else FAIL, n, inputs)


def _rep_injective(opts, rng):
    from .linalg import rank

    rows = [[v for row in rep(Multivector({b: 1})).rows for v in row] for b in ga.BLADES]
    return _bool_check(rank(rows) == 16, 16)


def _gamma_anticommutation(opts, rng):
    gr = standard_gamma_rep()
    ok = all(
        gr.g[mu] * gr.g[nu] + gr.g[nu] * gr.g[mu]
        == (ComplexMatrix4.identity().scale(2 * ga.METRIC[mu]) if mu == nu else ComplexMatrix4.zeros())
        for mu in range(4) for nu in range(4)
    )
    ok = ok and all(gr.g[mu] == rep(ga.gamma(mu)) for mu in range(4))
    return _bool_check(ok, 16)


def _idempotent_matrix(opts, rng):
    f = standard_idempotent().f
    ok = rep(f).rank() == 1 and adapted_rep(f) == ComplexMatrix4.elementary(0, 0)
    return _bool_check(ok, 1)


def _columns_field(cols) -> MultivectorField:
    # column component j is stored on the blade g^j so it can be reported as a field
    return MultivectorField({1 << j: c for j, c in enumerate(cols) if c}, ga.COMPLEX)


def _three_residuals_solutions(opts, rng):
    def cases():
        for psi, m in gen.massive_family(rng, opts.n(30)):
            Psi = project_ideal(psi)
            res = dh_residual(psi, m).complexify() + ideal_dirac_residual(Psi, m).value
            yield (psi, m), res + _columns_field(matrix_dirac_residual(Psi, m))
    return _all_zero(cases())


def _three_residuals_nonsolutions(opts, rng):
    c = IDEAL_RESIDUAL_CONSTANT

    def cases():
        for _ in range(opts.n(100)):
            psi = gen.random_even_field(rng, max_degree=2, max_phases=2)
            m = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            Psi = project_ideal(psi)
            ideal_res = ideal_dirac_residual(Psi, m)
            res = project_ideal(dh_residual(psi, m)).value - ideal_res.value.scale(c)
            diff = [a - b for a, b in zip(column_extract(ideal_res), matrix_dirac_residual(Psi, m))]
            yield (psi, m), res + _columns_field(diff)
    return _all_zero(cases())


def _ideal_constant_calibration(opts, rng):
    samples = [(gen.random_even_field(rng, max_degree=1, max_phases=1), Fraction(rng.randint(1, 4)))
               for _ in range(12)]
    found = calibrate_ideal_constant(samples)
    ok = found.get("right") == IDEAL_RESIDUAL_CONSTANT and found.get("left") is None
    return _bool_check(ok, len(samples), note=f"calibration {({k: str(v) for k, v in found.items()})}")


SUITES: dict[str, list[tuple[str, Callable]]] = {
    "algebra": [
        ("generator_relations", _generator_relations),
        ("associativity", _associativity),
        ("reverse_antiautomorphism", _reverse_antiautomorphism),
        ("hodge_matches_oracle", _hodge_oracle),
        ("double_hodge_signs", _double_hodge),
        ("product_grades", _product_grades),
    ],
    "calculus": [
        ("dirac_equals_d_minus_codiff", _dirac_split),
        ("d_squared_zero", _d_squared),
        ("codiff_squared_zero", _codiff_squared),
        ("diamond_equals_minus_laplace_de_rham", _diamond_split),
        ("diamond_preserves_grade", _diamond_grade),
        ("partials_commute", _partials_commute),
        ("leibniz_rule", _leibniz),
    ],
    "ideal": [
        ("idempotent_identities", _idempotent_identities),
        ("ideal_dimension_four", _ideal_dim),
    ],
    "bosonize": [
        ("bosonization_theorem", _bosonization_theorem),
        ("grade_redistribution", _grade_redistribution),
        ("magnetic_sign_calibration", _magnetic_sign_calibration),
        ("weyl_projection_commutes", _weyl_commutation),
        ("right_module_compatibility", _right_module),
        ("even_decomposition_roundtrip", _even_roundtrip),
    ],
    "fermionize": [
        ("fermionized_gme_solutions", _fermionization),
        ("fermionization_keeps_violations", _fermionization_detects),
    ],
    "gme": [
        ("superpotential_chain", _superpotential_chain),
        ("gamma5_commutation_identities", _gamma5_identities),
        ("split_equivalence", _split_equivalence),
    ],
    "hertz": [
        ("rest_solution", _hertz_rest),
        ("generated_family_implication", _hertz_family),
        ("residual_identity", _hertz_identity),
        ("linearity", _hertz_linearity),
        ("subsidiary_conditions_rest", _hertz_subsidiary_rest),
        ("stratton_wave_condition_rest", _hertz_stratton_wave),
        ("spin_frame_covariance", _spin_covariance),
    ],
    "matrix": [
        ("rep_homomorphism", _rep_homomorphism),
        ("rep_injective", _rep_injective),
        ("gamma_anticommutation", _gamma_anticommutation),
        ("idempotent_rank_one", _idempotent_matrix),
        ("ideal_constant_calibration", _ideal_constant_calibration),
        ("three_residuals_on_solutions", _three_residuals_solutions),
        ("three_residuals_on_nonsolutions", _three_residuals_nonsolutions),
    ],
}
SUITE_NAMES = tuple(SUITES) + ("all",)


def _digest(inputs) -> str:
    h = hashlib.sha256()
    for item in inputs:
        h.update(canonical_text(item).encode())
        h.update(b"\n")
    return h.hexdigest()


def _residual_doc(res):
    if res is None:
        return None
    if isinstance(res, Multivector):
        res = MultivectorField.constant(res)
    return field_to_doc(res)


def run_check(suite: str, name: str, fn: Callable, opts: Options) -> dict:
    result = fn(opts, _rng(opts, f"{suite}.{name}"))
    record = {
        "name": f"{suite}.{name}",
        "status": result.status,
        "cases": result.cases,
        "residual": _residual_doc(result.residual) if result.status != PASS else None,
        "inputs_digest": _digest(result.inputs),
        "seed": opts.seed,
    }
    if result.note:
        record["note"] = result.note
    return record


def run_suite(name: str, seed: int = 1, count: int | None = None, *,
              magnetic_sign: int = MAGNETIC_SIGN) -> dict:
    """Run a suite (or ``"all"``) and return the report as a JSON-ready dict."""
    if name not in SUITE_NAMES:
        raise UnknownSuiteError(name)
    opts = Options(seed=seed, count=count, magnetic_sign=magnetic_sign)
    names = list(SUITES) if name == "all" else [name]
    checks = [run_check(s, cname, fn, opts) for s in names for cname, fn in SUITES[s]]
    checks.sort(key=lambda r: r["name"])
    summary = {s: sum(1 for c in checks if c["status"] == s) for s in (PASS, FAIL, SKIP)}
    return {
        "suite": name,
        "seed": seed,
        "count": count,
        "engine_version": __version__,
        "checks": checks,
        "summary": summary,
    }


def report_failed(report: dict) -> bool:
    return report["summary"][FAIL] > 0
