# tests/test_closure_homology.py

"""
Tests for closures of complexes, bigraded homology and Poincaré polynomials.
"""

import pytest

from moykr.core.closure_homology import (
    GradedVS,
    close_atom,
    close_complex,
    close_morphism,
    closed_euler,
    euler,
    homology,
    homology_table,
    hopf_expanded,
    kr_poincare_from_complex,
    kr_poincare_torus2,
    partial_close_one_strand,
    poincare,
    trefoil_closed_form,
)
from moykr.core.diagram import Sign
from moykr.core.kr import (
    KRComplex,
    ShiftedAtom,
    compose,
    identity_complex,
    sigma_complex,
    torus2_complex,
)
from moykr.core.moy_eval import jones_torus2
from moykr.core.morphisms import AtomKind, BasisMor, Mor
from moykr.core.ring import q_integer
from moykr.exceptions import UnsupportedMorphismError, UsageError


ID2, S = AtomKind.ID2, AtomKind.S


def test_close_atom_dimensions():
    """Id2 closes to [n]², S to [n][n-1]."""
    assert close_atom(ShiftedAtom(ID2, 0), 3).graded_dimension() == q_integer(3) ** 2
    assert close_atom(ShiftedAtom(S, 0), 3).graded_dimension() == q_integer(3) * q_integer(2)
    assert close_atom(ShiftedAtom(S, 0), 3).total() == 6
    assert close_atom(ShiftedAtom(ID2, 2), 2).dims == {0: 1, 2: 2, 4: 1}


def test_close_atom_rejects_unsplit_summands():
    with pytest.raises(UsageError):
        close_atom(ShiftedAtom(AtomKind.SS, 0), 2)


def test_graded_vs():
    space = GradedVS({-1: 1, 1: 1})
    assert space.graded_dimension() == q_integer(2)
    assert space.total() == 2


def test_close_morphism_chi0_is_surjective():
    """The closure of χ0 is onto in every q-degree."""
    blocks = close_morphism(Mor.basis(BasisMor.CHI0), ShiftedAtom(ID2, 0), ShiftedAtom(S, 1), 2)
    assert sum(block.rank() for block in blocks.values() if 0 not in block.shape) == 2
    assert blocks[-2].shape == (0, 1)


def test_close_morphism_alpha_is_zero():
    blocks = close_morphism(Mor.basis(BasisMor.ALPHA), ShiftedAtom(S, 0), ShiftedAtom(S, 2), 3)
    assert all(block.is_zero_matrix for block in blocks.values())


def test_identity_closure_is_unlink():
    h = homology(close_complex(identity_complex(), 2))
    assert h == {(0, -2): 1, (0, 0): 2, (0, 2): 1}


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("sign", list(Sign))
def test_partial_closure_of_crossing_is_one_strand(sign, n):
    """Closing one strand of either crossing leaves a single generator in bidegree (0, 0)."""
    g = partial_close_one_strand(sigma_complex(sign, n), n)
    g.check_d_squared()
    assert homology(g) == {(0, 0): 1}


def test_partial_closure_rejects_gamma():
    c = KRComplex({0: [ShiftedAtom(S, 0)], 1: [ShiftedAtom(S, 2)]},
                  {0: {(0, 0): Mor.basis(BasisMor.GAMMA)}})
    with pytest.raises(UnsupportedMorphismError):
        partial_close_one_strand(c, 3)


def test_hopf_link_at_level_two():
    h, p = kr_poincare_from_complex(torus2_complex(2, 2), 2)
    assert str(p) == "1 + q^2 + q^4*t^2 + q^6*t^2"
    assert homology_table(h) == [(0, 0, 1), (0, 2, 1), (2, 4, 1), (2, 6, 1)]
    assert str(euler(p)) == "1 + q^2 + q^4 + q^6"


def test_trefoil_at_level_two():
    _, p = kr_poincare_from_complex(torus2_complex(3, 2), 2)
    assert str(p) == "q + q^3 + q^5*t^2 + q^9*t^3"


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
def test_poincare_closed_form(k, n):
    h, p = kr_poincare_from_complex(torus2_complex(k, n), n)
    assert p == kr_poincare_torus2(k, n)
    assert all(dim > 0 for dim in h.values())
    if k % 2 and k > 1:
        assert all(hdeg != 1 for hdeg, _ in h)


@pytest.mark.parametrize("n", [2, 3, 5, 8, 11])
def test_hopf_and_trefoil_closed_forms(n):
    assert kr_poincare_torus2(2, n) == hopf_expanded(n)
    assert kr_poincare_torus2(3, n) == trefoil_closed_form(n)


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_euler_characteristic_is_jones(k, n):
    assert euler(kr_poincare_torus2(k, n)) == jones_torus2(k, n)
    assert closed_euler(torus2_complex(k, n), n) == jones_torus2(k, n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_elimination_preserves_closed_homology(n):
    """The unreduced σ⁺∘σ⁺ closes to the same homology as its normal form."""
    unreduced = compose(sigma_complex(Sign.PLUS, n), sigma_complex(Sign.PLUS, n))
    closed = close_complex(unreduced, n)
    closed.check_d_squared()
    assert homology(closed) == kr_poincare_from_complex(torus2_complex(2, n), n)[0]


def test_poincare_from_homology():
    assert str(poincare({(0, 0): 1, (2, 4): 3})) == "1 + 3*q^4*t^2"


@pytest.mark.slow
@pytest.mark.parametrize("n", [6, 8, 11])
def test_hopf_at_scale(n):
    _, p = kr_poincare_from_complex(torus2_complex(2, n), n)
    assert p == hopf_expanded(n)
