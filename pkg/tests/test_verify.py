# tests/test_verify.py

"""
Tests for the verification service.
"""

import pytest

from moykr.core.verify import GROUPS, Verifier
from moykr.exceptions import UsageError, VerificationError
from moykr.models.results import VerificationGroup, VerificationReport


@pytest.fixture(scope="function")
def verifier(small_config):
    return Verifier(small_config)


@pytest.mark.parametrize("group", GROUPS)
def test_group_passes(verifier, group):
    report = verifier.run([group])
    assert [g.name for g in report.groups] == [group]
    result = report.groups[0]
    assert result.failures == []
    assert result.passed
    assert result.checks > 0
    report.raise_for_failures()


def test_mismatching_closures_are_notes(verifier):
    """Unconfirmed crossing counts are reported without failing the group."""
    result = verifier.run(["adm"]).groups[0]
    assert result.passed
    assert any("n=2, k=3" in note for note in result.notes)


def test_unknown_group(verifier):
    with pytest.raises(UsageError):
        verifier.run(["ring", "colours"])


def test_group_order_follows_request(verifier):
    report = verifier.run(["euler", "ring"])
    assert [g.name for g in report.groups] == ["euler", "ring"]
    assert report.passed


def test_torus_complexes_are_cached(verifier):
    first = verifier._torus(3, 2)
    assert verifier._torus(3, 2) is first


def test_failed_report():
    report = VerificationReport(groups=[
        VerificationGroup(name="ring", passed=True, checks=3),
        VerificationGroup(name="euler", passed=False, checks=2, failures=["n=2, k=1"]),
    ])
    assert not report.passed
    assert report.failed_groups() == ["euler"]
    with pytest.raises(VerificationError) as excinfo:
        report.raise_for_failures()
    assert excinfo.value.failures == ["euler"]


@pytest.mark.slow
def test_run_all_with_defaults():
    report = Verifier().run_all()
    assert [g.name for g in report.groups] == list(GROUPS)
    assert report.passed


def test_ring_group_reaches_twelve():
    result = Verifier().run(["ring"]).groups[0]
    assert result.passed
    assert result.checks == 2 * 2 + 4 * 11 + 3


def test_reidemeister_covers_both_orders(verifier):
    result = verifier.run(["reidemeister"]).groups[0]
    assert result.passed
    assert result.checks == 2 * (2 * 2 + 2)
