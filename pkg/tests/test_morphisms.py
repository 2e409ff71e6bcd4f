# tests/test_morphisms.py

"""
Tests for the morphism algebra between width-2 atoms.
"""

from fractions import Fraction

import pytest

from moykr.core.morphisms import AtomKind, BasisMor, Mor, TensorMor, compose_basis
from moykr.exceptions import UndefinedCompositeError, UsageError


def test_degrees():
    assert BasisMor.ONE.degree == 0
    assert BasisMor.CHI0.degree == 1
    assert BasisMor.CHI1.degree == 1
    assert BasisMor.ALPHA.degree == 2
    assert BasisMor.GAMMA.degree == 2


def test_connects():
    assert BasisMor.CHI0.connects(AtomKind.ID2, AtomKind.S)
    assert not BasisMor.CHI0.connects(AtomKind.S, AtomKind.ID2)
    assert BasisMor.ONE.connects(AtomKind.S, AtomKind.S)
    assert not BasisMor.ONE.connects(AtomKind.S, AtomKind.ID2)


@pytest.mark.parametrize("outer,inner,expected", [
    (BasisMor.CHI0, BasisMor.CHI1, BasisMor.ALPHA),
    (BasisMor.CHI1, BasisMor.CHI0, None),
    (BasisMor.ALPHA, BasisMor.CHI0, None),
    (BasisMor.CHI1, BasisMor.ALPHA, None),
    (BasisMor.GAMMA, BasisMor.ALPHA, None),
    (BasisMor.ALPHA, BasisMor.GAMMA, None),
    (BasisMor.GAMMA, BasisMor.ONE, BasisMor.GAMMA),
    (BasisMor.ONE, BasisMor.CHI1, BasisMor.CHI1),
])
def test_composition_table(outer, inner, expected):
    assert compose_basis(outer, inner) is expected


@pytest.mark.parametrize("outer,inner", [
    (BasisMor.GAMMA, BasisMor.CHI0),
    (BasisMor.CHI1, BasisMor.GAMMA),
    (BasisMor.GAMMA, BasisMor.GAMMA),
])
def test_undefined_composites(outer, inner):
    with pytest.raises(UndefinedCompositeError):
        compose_basis(outer, inner)


def test_mismatched_atoms_raise():
    with pytest.raises(UsageError):
        compose_basis(BasisMor.CHI0, BasisMor.CHI0)


def test_mor_arithmetic():
    """Morphisms are rational linear combinations."""
    x = Mor.basis(BasisMor.ALPHA, 2) + Mor.basis(BasisMor.GAMMA)
    assert x.coefficient(BasisMor.ALPHA) == 2
    assert (x - x).is_zero()
    assert x.scale(Fraction(1, 2)).coefficient(BasisMor.GAMMA) == Fraction(1, 2)
    assert Mor.one(3).unit_coefficient() == 3
    assert x.unit_coefficient() is None


def test_mor_composition_is_bilinear():
    chi1 = Mor.basis(BasisMor.CHI1, 2)
    chi0 = Mor.basis(BasisMor.CHI0, -1)
    assert chi0.after(chi1) == Mor.basis(BasisMor.ALPHA, -2)
    assert chi1.after(chi0).is_zero()
    assert Mor.one(5).after(chi0) == Mor.basis(BasisMor.CHI0, -5)


def test_mor_rendering():
    assert str(Mor()) == "0"
    assert str(Mor.basis(BasisMor.CHI0)) == "chi0"
    assert str(Mor.basis(BasisMor.ALPHA, -1)) == "-alpha"
    assert str(Mor.basis(BasisMor.GAMMA, Fraction(1, 2))) == "1/2*gamma"
    assert str(Mor.one(2)) == "2"


def test_tensor_composition():
    """Tensor morphisms compose componentwise."""
    upper = TensorMor.pair(BasisMor.CHI0, BasisMor.ONE)
    lower = TensorMor.pair(BasisMor.CHI1, BasisMor.ONE, -1)
    assert upper.after(lower) == TensorMor.pair(BasisMor.ALPHA, BasisMor.ONE, -1)
    assert lower.after(upper).is_zero()
    assert str(upper) == "chi0o1"
    assert str(lower) == "-chi1o1"
