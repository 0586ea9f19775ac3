from dataclasses import replace

import pytest

from app.core.errors import DomainError, InputError
from app.models import SuiteName
from app.services import VerificationRunner
from app.services import verification
from app.services.verification import SUITES, Suite, run_trial

RANDOMIZED = [
    SuiteName.SNF,
    SuiteName.HOMOLOGY,
    SuiteName.EULER,
    SuiteName.K0_ISO,
    SuiteName.SES,
    SuiteName.HOVEY,
    SuiteName.KS,
    SuiteName.SPLIT,
]


def _build_runner(**kwargs) -> VerificationRunner:
    return VerificationRunner(workers=1, **kwargs)


@pytest.mark.parametrize("suite", RANDOMIZED)
def test_randomized_suites_pass(suite):
    report = _build_runner().run(suite, 4, 42)

    assert report.trials == 4
    assert report.failures == 0, report.failure_witnesses
    assert report.suite == suite.value


def test_ext_vanish_walks_every_pair():
    report = _build_runner().run(SuiteName.EXT_VANISH, 1, 0)

    assert report.trials == 12 * 34 * 34
    assert report.passed


def test_local_covers_posets_up_to_five_points():
    report = _build_runner().run("local", 0, 0)

    assert report.trials == 1 + 3 + 19 + 219 + 4231
    assert report.passed


def test_reports_are_reproducible():
    first = _build_runner().run(SuiteName.HOMOLOGY, 6, 2024)
    second = _build_runner().run(SuiteName.HOMOLOGY, 6, 2024)

    assert replace(first, wall_time_ms=0) == replace(second, wall_time_ms=0)


def test_process_pool_matches_serial_run():
    serial = _build_runner().run(SuiteName.SES, 8, 7)
    pooled = VerificationRunner(workers=2).run(SuiteName.SES, 8, 7)

    assert replace(serial, wall_time_ms=0) == replace(pooled, wall_time_ms=0)


def test_all_reports_a_breakdown():
    report = _build_runner().run(SuiteName.ALL, 1, 42)

    assert report.suite == "all"
    assert [tally.suite for tally in report.breakdown] == [
        s.value for s in SuiteName if s is not SuiteName.ALL
    ]
    assert report.trials == sum(tally.trials for tally in report.breakdown)
    assert report.failures == 0, report.failure_witnesses


def test_failures_are_counted_and_witnesses_capped(monkeypatch):
    monkeypatch.setitem(SUITES, SuiteName.SNF, Suite(SuiteName.SNF, lambda sampler: "boom"))

    report = _build_runner(witness_limit=2).run(SuiteName.SNF, 5, 1)

    assert report.failures == 5
    assert report.failure_witnesses == ("snf #0: boom", "snf #1: boom")
    assert not report.passed


def test_raised_errors_become_witnesses(monkeypatch):
    def explode(sampler):
        raise DomainError("no class")

    monkeypatch.setitem(SUITES, SuiteName.SES, Suite(SuiteName.SES, explode))

    assert run_trial("ses", 0, 0) == "raised DomainError: no class"


def test_invalid_runs_are_rejected():
    runner = _build_runner()

    with pytest.raises(InputError):
        runner.run(SuiteName.SNF, -1, 0)
    with pytest.raises(InputError):
        runner.run(SuiteName.SNF, 1, 2**64)
    with pytest.raises(InputError):
        runner.run("no-such-suite", 1, 0)
    with pytest.raises(InputError):
        VerificationRunner(workers=0)


def test_suite_aliases():
    assert SuiteName.from_raw("K0") is SuiteName.K0_ISO
    assert SuiteName.from_raw(" ext ") is SuiteName.EXT_VANISH
    assert verification.SUITES[SuiteName.LOCAL].exhaustive
    assert not verification.SUITES[SuiteName.KS].exhaustive
