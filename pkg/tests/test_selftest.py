import pytest

from modules import selftest
from modules.selftest import CheckFailed, expect, run_selftest


def test_quick_checks_pass():
    report = run_selftest(quick=True, only=['e-matrix', 'cells', 'cyclic', 'burnside-brauer', 'prook-semisimple'])
    assert report.passed, report.to_text()


@pytest.mark.slow
def test_full_selftest():
    report = run_selftest()
    assert report.passed, report.to_text()


def test_failures_are_reported(monkeypatch):
    def broken(quick):
        expect(False, "deliberately broken")

    monkeypatch.setitem(selftest.CHECKS, 'broken', broken)
    report = run_selftest(quick=True, only=['e-matrix', 'broken'])
    assert not report.passed
    assert report.failures == ['broken']
    assert "deliberately broken" in report.to_text()


def test_unknown_check():
    with pytest.raises(KeyError):
        run_selftest(only=['nope'])


def test_expect():
    with pytest.raises(CheckFailed):
        expect(1 == 2, "math")
