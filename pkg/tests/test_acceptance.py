"""Acceptance criteria, each at zero tolerance and within its time budget.

Every test prints one ``CRITERION n: PASS|FAIL`` line.
"""

import random
import time
from contextlib import contextmanager

import pytest

from stafield import generators as gen
from stafield.fields import MultivectorField, random_field
from stafield.hertz import assemble_psi, em_potential, hertz_residual
from stafield.serialize import dumps, emit_bundle, emit_field, parse_document, parse_field
from stafield.spinor import dh_residual
from stafield.suites import SUITES, Options, run_check, run_suite


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(number, title, budget):
        start = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            in_time = elapsed < budget
            status = "PASS" if ok and in_time else "FAIL"
            with capsys.disabled():
                print(f"\nCRITERION {number}: {status} ({elapsed:.2f}s of {budget}s) {title}")
        assert in_time, f"criterion {number} took {elapsed:.2f}s, budget {budget}s"

    return run


def checks(suite, names, at_least=None, seed=1):
    at_least = at_least or {}
    opts = Options(seed=seed)
    table = dict(SUITES[suite])
    records = {}
    for name in names:
        rec = run_check(suite, name, table[name], opts)
        assert rec["status"] == "pass", rec
        assert rec["cases"] >= at_least.get(name, 1), rec
        records[name] = rec
    return records


def test_criterion_1_algebra(criterion):
    with criterion(1, "algebra: generator relations, associativity, Hodge oracle, double Hodge", 5):
        checks("algebra", ["generator_relations", "associativity", "hodge_matches_oracle", "double_hodge_signs"],
               {"generator_relations": 16, "associativity": 1000, "hodge_matches_oracle": 16})


def test_criterion_2_calculus(criterion):
    with criterion(2, "calculus: dirac = d - codiff, d^2 = 0, codiff^2 = 0, diamond split", 30):
        names = ["dirac_equals_d_minus_codiff", "d_squared_zero", "codiff_squared_zero",
                 "diamond_equals_minus_laplace_de_rham"]
        checks("calculus", names, {n: 500 for n in names})


def test_criterion_3_ideal(criterion):
    with criterion(3, "ideal: f^2 = f, g0 f = f, g21 f = -i f, dimension 4", 1):
        checks("ideal", ["idempotent_identities", "ideal_dimension_four"])


def test_criterion_4_bosonization(criterion):
    with criterion(4, "bosonization theorem and grade redistribution", 60):
        checks("bosonize", ["bosonization_theorem", "grade_redistribution"],
               {"bosonization_theorem": 50, "grade_redistribution": 200})


def test_criterion_5_fermionization(criterion):
    with criterion(5, "fermionization of Maxwell solutions", 60):
        checks("fermionize", ["fermionized_gme_solutions"], {"fermionized_gme_solutions": 50})


def test_criterion_6_superpotential(criterion):
    with criterion(6, "superpotential chain and gamma5 commutation identities", 60):
        checks("gme", ["superpotential_chain", "gamma5_commutation_identities"],
               {"superpotential_chain": 100, "gamma5_commutation_identities": 200})


def test_criterion_7_hertz(criterion):
    with criterion(7, "Hertz rest solution and implication on the generated family", 10):
        for m in (1, 2, 3):
            h = gen.hertz_rest(m)
            assert hertz_residual(h).is_zero()
            assert em_potential(h).is_zero()
            assert dh_residual(assemble_psi(h), m).is_zero()
        checks("hertz", ["rest_solution", "generated_family_implication", "spin_frame_covariance"],
               {"generated_family_implication": 40})


def test_criterion_8_matrix(criterion):
    with criterion(8, "rep homomorphism and the three Dirac residuals", 30):
        checks("matrix", ["rep_homomorphism", "three_residuals_on_solutions", "three_residuals_on_nonsolutions",
                          "ideal_constant_calibration"],
               {"rep_homomorphism": 1000, "three_residuals_on_nonsolutions": 100})


def test_criterion_9_determinism_and_roundtrip(criterion):
    with criterion(9, "byte-exact round-trip and reproducible reports", 5):
        rng = random.Random(0)
        sp, sys_ = gen.superpotential_system(rng)
        h = gen.hertz_rest(2)
        docs = [emit_field(gen.rest_solution(3)), emit_field(gen.null_plane_wave()),
                emit_bundle({"A": sp.A, "B": sp.B, "F": sys_.F, "Je": sys_.Je, "Jm": sys_.Jm}),
                emit_bundle({"Pi": h.Pi, "G": h.G, "P": h.P})]
        docs += [emit_field(random_field(rng)) for _ in range(40)]
        for text in docs:
            fields = parse_document(text)
            again = emit_field(fields["field"]) if set(fields) == {"field"} else emit_bundle(fields)
            assert again == text
            for f in fields.values():
                assert isinstance(f, MultivectorField)
        assert parse_field(docs[0]) == gen.rest_solution(3)
        for suite in ("ideal", "hertz"):
            assert dumps(run_suite(suite, seed=7, count=3)) == dumps(run_suite(suite, seed=7, count=3))
        assert dumps(run_suite("algebra", seed=7, count=200)) == dumps(run_suite("algebra", seed=7, count=200))
