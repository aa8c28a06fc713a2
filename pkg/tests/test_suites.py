import pytest

from stafield import __version__
from stafield.serialize import doc_to_field, dumps
from stafield.suites import SUITE_NAMES, SUITES, UnknownSuiteError, run_suite


def test_report_shape():
    report = run_suite("ideal", seed=1)
    assert report["suite"] == "ideal" and report["engine_version"] == __version__
    names = [c["name"] for c in report["checks"]]
    assert names == sorted(names)
    for c in report["checks"]:
        assert set(c) >= {"name", "status", "cases", "residual", "inputs_digest", "seed"}
        assert len(c["inputs_digest"]) == 64
    assert report["summary"] == {"pass": 2, "fail": 0, "skip": 0}


def test_algebra_suite_passes():
    assert run_suite("algebra", seed=1, count=50)["summary"]["fail"] == 0


def test_reports_are_reproducible():
    a = dumps(run_suite("calculus", seed=4, count=10))
    b = dumps(run_suite("calculus", seed=4, count=10))
    assert a == b
    assert a != dumps(run_suite("calculus", seed=5, count=10))


def test_all_runs_every_suite():
    report = run_suite("all", seed=7, count=2)
    suites = {c["name"].split(".")[0] for c in report["checks"]}
    assert suites == set(SUITES)
    assert report["summary"]["fail"] == 0
    assert dumps(report) == dumps(run_suite("all", seed=7, count=2))


def test_unknown_suite():
    assert "all" in SUITE_NAMES
    with pytest.raises(UnknownSuiteError):
        run_suite("topology")


def test_flipped_magnetic_sign_is_caught():
    report = run_suite("bosonize", seed=1, count=8, magnetic_sign=1)
    failed = {c["name"]: c for c in report["checks"] if c["status"] == "fail"}
    assert "bosonize.bosonization_theorem" in failed
    assert "bosonize.magnetic_sign_calibration" in failed
    residual = doc_to_field(failed["bosonize.bosonization_theorem"]["residual"])
    assert not residual.is_zero()


def test_stratton_condition_reported_as_skip():
    report = run_suite("hertz", seed=1, count=3)
    check = next(c for c in report["checks"] if c["name"] == "hertz.stratton_wave_condition_rest")
    assert check["status"] == "skip"
    assert not doc_to_field(check["residual"]).is_zero()
