# tests/test_adm.py

"""
Tests for closures in the bracket ring and their comparison with Poincaré polynomials.
"""

import logging

import pytest

from moykr.core.adm import (
    ADM_VARS,
    CONFIRMED_CROSSINGS,
    adm_braiding,
    adm_check,
    adm_close,
    adm_compare,
    adm_sigma_power,
    adm_torus2_representative,
    realize,
    square_coefficient,
)
from moykr.core.closure_homology import kr_poincare_torus2
from moykr.core.diagram import Sign
from moykr.core.ring import LaurentPoly
from moykr.exceptions import UsageError, ValidationError


def _m(q=0, t=0, bn=0, bn1=0, coeff=1):
    return LaurentPoly.monomial(ADM_VARS, (q, t, bn, bn1), coeff)


def test_braidings():
    assert adm_braiding(Sign.PLUS, 3) == (_m(q=2), _m(q=3, t=1))
    assert adm_braiding(Sign.MINUS, 3) == (_m(q=-2), _m(q=-3, t=-1))
    assert str(square_coefficient()) == "-q^-1*t^-1 + q"


def test_sigma_squared():
    """(σ⁺)² = (q^{2n-2}, q^{2n-1} t + q^{2n+1} t²)."""
    a, b = adm_sigma_power(2, 2)
    assert a == _m(q=2)
    assert b == _m(q=3, t=1) + _m(q=5, t=2)


def test_close_before_rewriting():
    assert adm_close((_m(), _m())) == _m(bn=2) + _m(bn=1, bn1=1)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_one_crossing_is_unknot(n):
    assert adm_torus2_representative(1, n) == _m(bn=1)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("k", CONFIRMED_CROSSINGS)
def test_confirmed_crossings_match(k, n):
    comparison = adm_compare(k, n)
    assert comparison.confirmed
    assert comparison.matches
    assert comparison.realized == kr_poincare_torus2(k, n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_three_crossings_differ(n):
    """The single rewrite leaves extra terms for the trefoil."""
    comparison = adm_compare(3, n)
    assert not comparison.confirmed
    assert not comparison.matches
    expected = _m(q=2 * n - 2, bn=1) + (_m(q=3 * n, t=2) + _m(q=3 * n + 2, t=3)) * _m(bn=1, bn1=1)
    assert comparison.representative == expected


def test_realize_rejects_negative_brackets():
    with pytest.raises(UsageError):
        realize(_m(bn=-1), 2)


def test_check_logs_mismatches(caplog):
    with caplog.at_level(logging.DEBUG, logger="moykr.core.adm"):
        comparisons = adm_check(3, 2)
    assert [c.k for c in comparisons] == [1, 2, 3]
    assert [c.matches for c in comparisons] == [True, True, False]
    assert "k=3, n=2" in caplog.text


def test_expected_mismatches_stay_below_warning(caplog):
    with caplog.at_level(logging.WARNING, logger="moykr.core.adm"):
        adm_check(4, 3)
    assert not [r for r in caplog.records if r.name == "moykr.core.adm"]


def test_check_validates_ranges():
    with pytest.raises(ValidationError):
        adm_check(0, 2)
