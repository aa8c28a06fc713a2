import json

import pytest
from click.testing import CliRunner

from stafield import algebra as ga
from stafield import generators as gen
from stafield.cli import main
from stafield.fields import MultivectorField
from stafield.fourier import FourierPoly
from stafield.serialize import emit_bundle, emit_field, parse_document
from stafield.spinor import standard_idempotent

from conftest import g


@pytest.fixture
def runner():
    return CliRunner()


def test_verify_writes_report(runner, tmp_path):
    out = tmp_path / "report.json"
    result = runner.invoke(main, ["verify", "ideal", "--seed", "3", "--out", str(out)])
    assert result.exit_code == 0
    report = json.loads(out.read_text())
    assert report["seed"] == 3 and report["summary"]["fail"] == 0


def test_verify_is_deterministic(runner):
    a = runner.invoke(main, ["verify", "algebra", "--count", "5"])
    b = runner.invoke(main, ["verify", "algebra", "--count", "5"])
    assert a.exit_code == 0 and a.stdout == b.stdout


def test_verify_unknown_suite_is_usage_error(runner):
    assert runner.invoke(main, ["verify", "topology"]).exit_code == 2


def test_verify_bad_count(runner):
    assert runner.invoke(main, ["verify", "algebra", "--count", "0"]).exit_code == 2


def test_generate_rest_solution(runner):
    result = runner.invoke(main, ["generate", "rest-solution", "--mass", "1"])
    assert result.exit_code == 0
    assert parse_document(result.stdout)["psi"] == gen.rest_solution(1)
    assert json.loads(result.stdout)["check"] == {"dh_residual_zero": True}


def test_generate_null_plane_wave(runner):
    result = runner.invoke(main, ["generate", "null-plane-wave", "--k", "1,0,0,1"])
    assert result.exit_code == 0
    assert parse_document(result.stdout)["psi"] == gen.null_plane_wave()


def test_generate_rejects_non_null_wavevector(runner):
    result = runner.invoke(main, ["generate", "null-plane-wave", "--k", "1,0,0,0"])
    assert result.exit_code == 2
    assert "not null" in result.output


@pytest.mark.parametrize("args", [["rest-solution", "--mass", "0.5"], ["rest-solution", "--mass", "-1"],
                                  ["null-plane-wave", "--k", "1,0,1"], ["wormhole"]])
def test_generate_bad_parameters(runner, args):
    assert runner.invoke(main, ["generate", *args]).exit_code == 2


@pytest.mark.parametrize("kind,key", [("superpotential", "gme_residual_zero"),
                                      ("hertz-rest", "hertz_residual_zero")])
def test_generate_checked_kinds(runner, kind, key):
    result = runner.invoke(main, ["generate", kind, "--mass", "2/3"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["check"] == {key: True}


def test_generate_random_field_roundtrips(runner):
    result = runner.invoke(main, ["generate", "random-field", "--seed", "9"])
    assert result.exit_code == 0
    assert emit_field(parse_document(result.stdout)["field"]) == result.stdout


def _write(tmp_path, text):
    p = tmp_path / "in.json"
    p.write_text(text)
    return str(p)


def test_transcribe_bosonize_solution(runner, tmp_path):
    path = _write(tmp_path, emit_field(gen.null_plane_wave()))
    result = runner.invoke(main, ["transcribe", "bosonize", "--in", path])
    assert result.exit_code == 0
    out = parse_document(result.stdout)
    assert set(out) == {"F", "Je", "Jm", "residual"} and out["residual"].is_zero()


def test_transcribe_bosonize_constant_has_zero_currents(runner, tmp_path):
    path = _write(tmp_path, emit_field(MultivectorField.constant(ga.gamma5() + g(0, 2))))
    out = parse_document(runner.invoke(main, ["transcribe", "bosonize", "--in", path]).stdout)
    assert out["Je"].is_zero() and out["Jm"].is_zero()


def test_transcribe_bosonize_non_solution_fails(runner, tmp_path):
    path = _write(tmp_path, emit_field(gen.rest_solution(1)))
    result = runner.invoke(main, ["transcribe", "bosonize", "--in", path])
    assert result.exit_code == 1
    assert json.loads(result.stdout)["status"] == "fail"


def test_transcribe_bosonize_rejects_odd_field(runner, tmp_path):
    path = _write(tmp_path, emit_field(MultivectorField.constant(g(1))))
    assert runner.invoke(main, ["transcribe", "bosonize", "--in", path]).exit_code == 2


def test_transcribe_fermionize_constant(runner, tmp_path):
    path = _write(tmp_path, emit_bundle({"F": MultivectorField.constant(g(0, 1))}))
    result = runner.invoke(main, ["transcribe", "fermionize", "--in", path])
    assert result.exit_code == 0
    out = parse_document(result.stdout)
    assert out["Psi"] == MultivectorField.constant(ga.complexify(g(0, 1)) * standard_idempotent().f)
    assert out["residual"].is_zero()


def test_transcribe_fermionize_with_current(runner, tmp_path):
    f = MultivectorField.from_blades([(FourierPoly.coord(1), g(0, 1))])
    path = _write(tmp_path, emit_bundle({"F": f, "Je": MultivectorField.constant(g(0))}))
    assert runner.invoke(main, ["transcribe", "fermionize", "--in", path]).exit_code == 0
    path = _write(tmp_path, emit_bundle({"F": f}))
    assert runner.invoke(main, ["transcribe", "fermionize", "--in", path]).exit_code == 1


def test_transcribe_parse_error_is_usage_error(runner, tmp_path):
    path = _write(tmp_path, '{"signature": "1,3", "ring": "Q", "blades": [{"blade": "bx"}]}')
    result = runner.invoke(main, ["transcribe", "bosonize", "--in", path])
    assert result.exit_code == 2
    assert "blades[0].blade" in result.output


def test_transcribe_unknown_idempotent(runner, tmp_path):
    path = _write(tmp_path, emit_field(gen.null_plane_wave()))
    assert runner.invoke(main, ["transcribe", "bosonize", "--in", path, "--idempotent", "other"]).exit_code == 2
