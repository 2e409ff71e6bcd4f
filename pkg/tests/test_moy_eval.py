# tests/test_moy_eval.py

"""
Tests for the MOY ladder calculus and level-n Jones polynomials.
"""

import pytest

from moykr.core.diagram import BraidWord, DiagramWord, Sign, close, tensor, wide_word
from moykr.core.moy_eval import (
    LadderElement,
    braiding,
    eval_closed_ladder,
    evaluate_closed,
    jones,
    jones_torus2,
    ladder_mul,
    ladder_power,
    ladder_product,
    partial_trace,
    sigma_power,
    sigma_power_closed_form,
    skein_difference,
)
from moykr.core.ring import q_integer, q_power
from moykr.exceptions import StuckEvaluationError, UnsupportedWidthError, UsageError


def test_wide_squares_to_two():
    """S∘S = [2] S."""
    wide = LadderElement.wide()
    assert wide * wide == LadderElement.wide().scale(q_integer(2))


def test_ladder_product_is_generic():
    """The same product rule works over plain integers."""
    assert ladder_product((1, 2), (3, 4), 5) == (3, 4 + 6 + 5 * 8)
    assert ladder_power((1, 1), 2, 2) == (1, 4)


def test_braidings_invert():
    for n in range(2, 6):
        assert ladder_mul(braiding(Sign.PLUS, n), braiding(Sign.MINUS, n)) == LadderElement.identity()


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_skein_relation(n):
    """q^{-n} σ⁺ - q^n σ⁻ = (q⁻¹ - q) id₂."""
    expected = LadderElement.identity().scale(q_power(-1) - q_power(1))
    assert skein_difference(n) == expected


@pytest.mark.parametrize("n", [2, 3, 4])
def test_partial_trace(n):
    """Closing one strand of a braiding leaves a single strand."""
    assert partial_trace(braiding(Sign.PLUS, n), n) == 1
    assert partial_trace(braiding(Sign.MINUS, n), n) == 1
    assert partial_trace(LadderElement.wide(), n) == q_integer(n - 1)


@pytest.mark.parametrize("n", [2, 3, 4, 6])
@pytest.mark.parametrize("k", [1, 2, 3, 4, 7, 10])
def test_sigma_power_closed_form(k, n):
    assert sigma_power(k, n) == sigma_power_closed_form(k, n)


def test_eval_closed_ladder_unlink():
    """The closure of id₂ is two circles."""
    assert eval_closed_ladder(LadderElement.identity(), 3) == q_integer(3) * q_integer(3)


def test_jones_values_at_level_two():
    assert str(jones_torus2(1, 2)) == "q^-1 + q"
    assert str(jones_torus2(2, 2)) == "1 + q^2 + q^4 + q^6"
    assert str(jones_torus2(3, 2)) == "q + q^3 + q^5 - q^9"


@pytest.mark.parametrize("n", [2, 3, 5])
def test_torus_knot_with_one_crossing_is_unknot(n):
    assert jones_torus2(1, n) == q_integer(n)


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("k", [1, 2, 3, 5, 8])
def test_jones_matches_closed_form(k, n):
    assert jones(BraidWord(width=2, letters=(1,) * k), n) == jones_torus2(k, n)


def test_jones_small_widths():
    assert jones(BraidWord(width=1), 4) == q_integer(4)
    assert jones(BraidWord(width=2), 2) == q_integer(2) * q_integer(2)


def test_jones_cancelling_pair():
    """A canceling σ⁺σ⁻ pair does not change the value."""
    shortened = jones(BraidWord(width=2, letters=(1, 1)), 3)
    assert jones(BraidWord(width=2, letters=(1, -1, 1, 1)), 3) == shortened


def test_jones_rejects_wide_braids():
    with pytest.raises(UnsupportedWidthError):
        jones(BraidWord(width=3, letters=(1, 2)), 2)


@pytest.mark.parametrize("letters", [(), (1,), (1, 1), (1, -1, -1), (-1, -1, -1), (1, 1, 1, 1)])
def test_evaluate_closed_diagram(letters):
    """Evaluating the closed diagram word agrees with the ladder computation."""
    b = BraidWord(width=2, letters=letters)
    assert evaluate_closed(close(b), 3) == jones(b, 3)


def test_evaluate_closed_split_union():
    """Stacked closures multiply."""
    word = close(BraidWord(width=1))
    stacked = DiagramWord(source=(), slices=word.slices + close(BraidWord(width=2)).slices)
    assert evaluate_closed(stacked, 2) == q_integer(2) ** 3


def test_evaluate_closed_errors():
    with pytest.raises(UsageError):
        evaluate_closed(wide_word(), 2)
    side_by_side = tensor(close(BraidWord(width=1)), close(BraidWord(width=1)))
    with pytest.raises(StuckEvaluationError):
        evaluate_closed(side_by_side, 2)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_hopf_link_jones(n):
    """q^{2(n-1)} (q^{1-n} + q³[n-1]) [n]."""
    expected = q_power(2 * (n - 1)) * (q_power(1 - n) + q_power(3) * q_integer(n - 1)) * q_integer(n)
    assert jones_torus2(2, n) == expected
    assert jones(BraidWord(width=2, letters=(1, 1)), n) == expected
