import dataclasses

import pytest

from idemalg.core.types_ import Suite
from idemalg.reports import RunReport
from idemalg.settings_type import IdemAlgSettings
from idemalg.verify import DRAZIN_MS, SUITES, classifier_cases, run_verification

FAST_SUITES = [
    Suite.DIMS,
    Suite.RADICAL,
    Suite.LAMBDA,
    Suite.COUNTZERO,
    Suite.EXAMPLE,
    Suite.COUPLING,
]


def test_every_suite_is_registered():
    assert set(SUITES) == set(Suite) - {Suite.ALL}


@pytest.mark.parametrize("suite", FAST_SUITES)
def test_fast_suites_pass(small_settings, suite):
    report = run_verification(suite, small_settings)
    assert report.passed, [c.as_dict() for c in report.failures]
    assert report.results[suite.value]["failed"] == 0
    assert report.results[suite.value]["passed"] > 0


@pytest.mark.oracle
@pytest.mark.parametrize("suite", [Suite.CLASSIFY, Suite.SPECTRUM, Suite.INDEX])
def test_classifier_suites_pass(small_settings, suite):
    report = run_verification(suite, small_settings)
    assert report.passed, [c.as_dict() for c in report.failures]
    if suite is Suite.CLASSIFY:
        assert report.results["psi_thresholds"]["6"]["y1=0"] == 2


@pytest.mark.oracle
def test_drazin_suite_passes(small_settings):
    settings = dataclasses.replace(small_settings, ORACLE_SAMPLES=2)
    report = run_verification(Suite.DRAZIN, settings)
    assert report.passed, [c.as_dict() for c in report.failures]
    names = [c.name for c in report.checks if "((a^D)^D)^D = a^D" in c.name]
    assert len(names) == 4 * len(DRAZIN_MS)
    assert any(name.endswith("on F1(4) model") for name in names)


def test_example_suite_checks():
    names = [c.name for c in run_verification(Suite.EXAMPLE, IdemAlgSettings(SAMPLES=1)).checks]
    assert "Q1 P1 = 0" in names
    assert "internal unit is diag(1, 1, 0)" in names


def test_reports_are_deterministic(small_settings):
    first = run_verification(Suite.COUNTZERO, small_settings).to_json()
    second = run_verification(Suite.COUNTZERO, small_settings).to_json()
    assert first == second
    assert "timing" not in first


def test_classifier_cases_follow_the_seed(small_settings):
    first = [(m, s, [p.as_dict() for p in ps]) for m, s, ps in classifier_cases(small_settings)]
    second = [(m, s, [p.as_dict() for p in ps]) for m, s, ps in classifier_cases(small_settings)]
    assert first == second
    assert len(first) == 4 * 4


def test_results_are_added_to_a_given_report(small_settings):
    report = RunReport("custom")
    returned = run_verification(Suite.COUPLING, small_settings, report)
    assert returned is report
    assert report.inputs["suite"] == "coupling"
    assert report.summary()["failed"] == 0


def test_report_written_with_timing(tmp_path, small_settings):
    report = run_verification(Suite.EXAMPLE, small_settings)
    target = report.write(str(tmp_path / "reports"))
    assert target.name == "verify.json"
    assert '"timing"' in target.read_text(encoding="utf-8")


@pytest.mark.slow
def test_all_suites(small_settings):
    report = run_verification(Suite.ALL, small_settings)
    assert report.passed, [c.as_dict() for c in report.failures]
    assert set(report.results) >= {s.value for s in SUITES}
