# tests/test_homfly.py

"""
Tests for HOMFLY-PT values of 2-strand braid closures.
"""

import pytest

from moykr.core.diagram import BraidWord, Sign
from moykr.core.homfly import (
    HomflyLadder,
    bracket_identities,
    homfly,
    homfly_braiding,
    homfly_bracket,
    homfly_compose,
    homfly_partial_trace,
    homfly_skein_difference,
    homfly_to_jones,
    homfly_torus2,
    homfly_torus2_closed_form,
    jones_assignment,
    mirror_zeta,
    square_coefficient,
    z_variable,
)
from moykr.core.moy_eval import braiding, jones, jones_torus2
from moykr.core.ring import AZ_VARS, LaurentPoly, LocalizedScalar, q_integer
from moykr.exceptions import UnsupportedWidthError, UsageError


def test_z_variable():
    assert str(z_variable()) == "zeta^-1 - zeta"
    assert mirror_zeta(z_variable()) == z_variable()


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_bracket_identities(n):
    identities = bracket_identities(n)
    assert len(identities) == 3
    assert all(identities.values())


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_bracket_specializes_to_q_integer(n):
    for k in range(0, n + 1):
        assert homfly_to_jones(homfly_bracket(k, n), n) == q_integer(k)


def test_braiding_specializes_to_jones_braiding():
    """α ↦ -q^{-n}, ζ ↦ -q sends the braidings to the level-n braidings."""
    for n in (2, 3, 5):
        for sign in Sign:
            assert homfly_braiding(sign, n).specialize(jones_assignment(n)) == braiding(sign, n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_ladder_relations(n):
    plus, minus = homfly_braiding(Sign.PLUS, n), homfly_braiding(Sign.MINUS, n)
    assert homfly_compose(plus, minus) == HomflyLadder.identity(n)
    assert homfly_skein_difference(n) == HomflyLadder.identity(n).scale(z_variable())
    assert homfly_partial_trace(plus) == 1
    assert homfly_partial_trace(minus) == 1


def test_square_coefficient():
    """-(ζ + ζ⁻¹) specializes to [2]."""
    assert square_coefficient().specialize(jones_assignment(2)) == q_integer(2)


def test_compose_rejects_mixed_levels():
    with pytest.raises(UsageError):
        homfly_compose(HomflyLadder.identity(2), HomflyLadder.identity(3))


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
def test_torus_closed_form(k, n):
    assert homfly_torus2(k, n) == homfly_torus2_closed_form(k, n)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("k", [1, 2, 3, 6])
def test_specializes_to_jones(k, n):
    assert homfly_to_jones(homfly_torus2(k, n), n) == jones_torus2(k, n)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_depends_on_zeta_through_z(k):
    value = homfly_torus2(k, 3)
    assert mirror_zeta(value) == value


def test_unknot():
    assert homfly_torus2(1, 4) == homfly_bracket(4, 4)
    assert homfly(BraidWord(width=1), 4) == homfly_bracket(4, 4)


def test_braid_input():
    b = BraidWord(width=2, letters=(1, -1, -1))
    assert homfly_to_jones(homfly(b, 3), 3) == jones(b, 3)
    with pytest.raises(UnsupportedWidthError):
        homfly(BraidWord(width=3), 2)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_hopf_link_value(n):
    """(2, 2) torus link: α⁻²([n] + zα)[n]."""
    alpha = LocalizedScalar(LaurentPoly.variable(AZ_VARS, "alpha"))
    inverse_square = LocalizedScalar(LaurentPoly.monomial(AZ_VARS, (-2, 0)))
    bracket = homfly_bracket(n, n)
    assert homfly_torus2(2, n) == inverse_square * (bracket + z_variable() * alpha) * bracket
