# tests/test_kr.py

"""
Tests for formal complexes: composition, splitting and Gaussian elimination.
"""

import pytest

from moykr.config import PivotOrder
from moykr.core.diagram import Sign
from moykr.core.kr import (
    KRComplex,
    PairedComplex,
    ShiftedAtom,
    check_d_squared,
    check_homogeneity,
    check_invariants,
    compose,
    gaussian_eliminate,
    graded_summands,
    identity_complex,
    normalize_signs,
    render,
    same_graded_summands,
    shift,
    sigma_complex,
    split_ss,
    totalize,
    torus2_complex,
    zigzag_complex,
)
from moykr.core.morphisms import AtomKind, BasisMor, Mor
from moykr.exceptions import ComplexInvariantError, UsageError


ID2, S, SS = AtomKind.ID2, AtomKind.S, AtomKind.SS


@pytest.fixture(scope="function")
def plus():
    return sigma_complex(Sign.PLUS, 2)


@pytest.fixture(scope="function")
def minus():
    return sigma_complex(Sign.MINUS, 2)


def test_shifted_atom():
    atom = ShiftedAtom(S, 1)
    assert str(atom) == "S{1}"
    assert atom.shifted(2) == ShiftedAtom(S, 3)


def test_sigma_complexes(plus, minus):
    assert plus.degrees() == [0, 1]
    assert plus.summands(0) == (ShiftedAtom(ID2, 1),)
    assert plus.summands(1) == (ShiftedAtom(S, 2),)
    assert plus.entry(0, 0, 0) == Mor.basis(BasisMor.CHI0)
    assert minus.degrees() == [-1, 0]
    assert minus.summands(-1) == (ShiftedAtom(S, -2),)
    check_invariants(plus)
    check_invariants(minus)


def test_construction_drops_empty_degrees():
    c = KRComplex({0: [ShiftedAtom(ID2, 0)], 1: []}, {0: {}})
    assert c.degrees() == [0]
    assert c.differential_degrees() == []
    assert c == identity_complex()


def test_construction_rejects_dangling_entries():
    with pytest.raises(UsageError):
        KRComplex({0: [ShiftedAtom(ID2, 0)]}, {0: {(0, 0): Mor.basis(BasisMor.CHI0)}})


def test_d_squared_violation():
    """χ0∘χ1 = α is not zero."""
    c = KRComplex(
        {0: [ShiftedAtom(S, 0)], 1: [ShiftedAtom(ID2, 1)], 2: [ShiftedAtom(S, 2)]},
        {0: {(0, 0): Mor.basis(BasisMor.CHI1)}, 1: {(0, 0): Mor.basis(BasisMor.CHI0)}},
    )
    check_homogeneity(c)
    with pytest.raises(ComplexInvariantError) as excinfo:
        check_d_squared(c)
    assert excinfo.value.degree == 0


def test_inhomogeneous_entry():
    c = KRComplex({0: [ShiftedAtom(ID2, 0)], 1: [ShiftedAtom(S, 3)]},
                  {0: {(0, 0): Mor.basis(BasisMor.CHI0)}})
    with pytest.raises(ComplexInvariantError):
        check_homogeneity(c)


def test_shift(plus):
    shifted = shift(plus, 3)
    assert shifted.summands(0) == (ShiftedAtom(ID2, 4),)
    assert shifted.entry(0, 0, 0) == Mor.basis(BasisMor.CHI0)


def test_totalize(plus, minus):
    """The total complex keeps both factors and is a complex."""
    paired = totalize(plus, minus)
    assert isinstance(paired, PairedComplex)
    assert paired.degrees() == [-1, 0, 1]
    assert [len(paired.summands(i)) for i in paired.degrees()] == [1, 2, 1]
    assert paired.summands(0)[1].atom is SS
    check_invariants(paired)


def test_compose_before_elimination(plus, minus):
    """σ⁺∘σ⁻ has middle term Id2 ⊕ S{-1} ⊕ S{1}."""
    c = compose(plus, minus, check=True)
    assert c.summands(0) == (ShiftedAtom(ID2, 0), ShiftedAtom(S, -1), ShiftedAtom(S, 1))
    assert c.summands(-1) == (ShiftedAtom(S, -1),)
    assert c.summands(1) == (ShiftedAtom(S, 1),)
    assert split_ss(totalize(plus, minus)) == c


@pytest.mark.parametrize("n", [2, 3, 4])
def test_second_move(n):
    """σ⁺∘σ⁻ reduces to the identity complex."""
    c = compose(sigma_complex(Sign.PLUS, n), sigma_complex(Sign.MINUS, n), check=True)
    for order in PivotOrder:
        assert gaussian_eliminate(c, order, check=True) == identity_complex()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_second_move_reversed(n):
    """σ⁻∘σ⁺ also reduces to the identity complex."""
    c = compose(sigma_complex(Sign.MINUS, n), sigma_complex(Sign.PLUS, n), check=True)
    assert [len(c.summands(i)) for i in c.degrees()] == [1, 3, 1]
    for order in PivotOrder:
        assert gaussian_eliminate(c, order, check=True) == identity_complex()


@pytest.mark.parametrize("sign", list(Sign))
@pytest.mark.parametrize("n", [2, 3])
def test_identity_is_a_unit(sign, n):
    c = sigma_complex(sign, n)
    assert compose(identity_complex(), c, check=True) == c
    assert compose(c, identity_complex(), check=True) == c


def test_eliminate_cancels_unit_entry():
    c = KRComplex({0: [ShiftedAtom(S, 1)], 1: [ShiftedAtom(S, 1)]},
                  {0: {(0, 0): Mor.one(2)}})
    assert gaussian_eliminate(c).is_empty()
    assert render(gaussian_eliminate(c)) == "0"


def test_eliminate_leaves_zigzag_alone():
    c = zigzag_complex(4, 2)
    assert gaussian_eliminate(c) == c


def test_zigzag_rendering():
    assert render(zigzag_complex(3, 2)).splitlines() == [
        "deg 0: Id2{3}",
        "  d0[0,0] = chi0",
        "deg 1: S{4}",
        "  d1[0,0] = alpha",
        "deg 2: S{6}",
        "  d2[0,0] = gamma",
        "deg 3: S{8}",
    ]


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6, 7])
def test_torus_normal_form(k, n):
    """The reduced complex of (σ⁺)^k is the zigzag."""
    assert torus2_complex(k, n) == zigzag_complex(k, n)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_pivot_order_independence(k):
    complexes = [torus2_complex(k, 3, order=order) for order in PivotOrder]
    assert same_graded_summands(complexes)
    assert graded_summands(complexes[0])[k] == (ShiftedAtom(S, 2 * k + 2 * k - 1),)


def test_normalize_signs():
    c = KRComplex({0: [ShiftedAtom(ID2, 0)], 1: [ShiftedAtom(S, 1)]},
                  {0: {(0, 0): Mor.basis(BasisMor.CHI0, -1)}})
    assert normalize_signs(c).entry(0, 0, 0) == Mor.basis(BasisMor.CHI0)


@pytest.mark.slow
def test_torus_normal_form_long():
    for k in range(8, 13):
        assert torus2_complex(k, 6) == zigzag_complex(k, 6)
