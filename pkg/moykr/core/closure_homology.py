"""
Closing width-2 complexes to complexes of graded vector spaces and computing their
bigraded homology.

The closure of Id2{m} is [n] ⊗ [n] shifted by m and the closure of S{m} is [n-1] ⊗ [n]
shifted by m. A basis vector is a label (i, j) with i, j running over the degrees of the two
brackets; its q-degree is i + j + m. Differentials preserve q-degree, so every complex splits
into one matrix complex per q-degree and ranks are computed with sympy.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Optional, Tuple

from sympy import Rational
from sympy.matrices import Matrix

from ..exceptions import ComplexInvariantError, UnsupportedMorphismError, UsageError
from ..utils.validation import ValidationUtils
from .kr import KRComplex, ShiftedAtom
from .morphisms import AtomKind, BasisMor, Mor
from .ring import QT_VARS, Q_VARS, LaurentPoly, q_integer


logger = logging.getLogger(__name__)

Label = Tuple[int, ...]
Bigrading = Tuple[int, int]


@dataclass(frozen=True)
class GradedVS:
    """Finite graded vector space: q-degree -> dimension."""

    dims: Mapping[int, int] = field(default_factory=dict)

    def graded_dimension(self) -> LaurentPoly:
        return LaurentPoly(Q_VARS, {(q,): d for q, d in self.dims.items()})

    def total(self) -> int:
        return sum(self.dims.values())


class GVSComplex:
    """Complex of graded vector spaces with one exact matrix per (degree, q-degree).

    ``differentials[h][q]`` maps the q-degree-q part of degree h to that of degree h + 1.
    """

    def __init__(self, objects: Mapping[int, GradedVS],
                 differentials: Mapping[int, Mapping[int, Matrix]]):
        self.objects: Dict[int, GradedVS] = {h: v for h, v in objects.items() if v.total()}
        self.differentials: Dict[int, Dict[int, Matrix]] = {
            h: dict(blocks) for h, blocks in differentials.items()
        }

    def matrix(self, h: int, q: int) -> Optional[Matrix]:
        return self.differentials.get(h, {}).get(q)

    def rank(self, h: int, q: int) -> int:
        block = self.matrix(h, q)
        if block is None or 0 in block.shape:
            return 0
        return int(block.rank())

    def check_d_squared(self) -> None:
        for h, blocks in self.differentials.items():
            for q, first in blocks.items():
                second = self.matrix(h + 1, q)
                if second is not None and not (second * first).is_zero_matrix:
                    raise ComplexInvariantError(
                        f"Closed differential squares to a nonzero map in q-degree {q}",
                        degree=h,
                    )


# Closure rules

def _bracket_degrees(m: int) -> range:
    """Degrees of [m]: 1-m, 3-m, ..., m-1."""
    return range(1 - m, m, 2)


def _full_basis(summand: ShiftedAtom, n: int) -> List[Tuple[Label, int]]:
    first = _first_bracket(summand, n)
    return [((i, j), i + j + summand.shift) for i in first for j in _bracket_degrees(n)]


def _strand_basis(summand: ShiftedAtom, n: int) -> List[Tuple[Label, int]]:
    return [((i,), i + summand.shift) for i in _first_bracket(summand, n)]


def _first_bracket(summand: ShiftedAtom, n: int) -> range:
    if summand.atom is AtomKind.ID2:
        return _bracket_degrees(n)
    if summand.atom is AtomKind.S:
        return _bracket_degrees(n - 1)
    raise UsageError(f"Cannot close {summand}; split it first")


def _full_image(kind: BasisMor, label: Label, n: int) -> Optional[Label]:
    """Image of a basis vector under the closure of a basis morphism, None for zero."""
    i, j = label
    if kind is BasisMor.ONE:
        return label
    if kind is BasisMor.CHI0:
        return (i - 1, j) if abs(i - 1) <= n - 2 else None
    if kind is BasisMor.CHI1:
        return (i - 1, j)
    if kind is BasisMor.GAMMA:
        # ε on the closed strand: overlap identity [n]{-1} -> [n]{1}
        return (i, j - 2) if j - 2 >= 1 - n else None
    return None


def _strand_image(kind: BasisMor, label: Label, n: int) -> Optional[Label]:
    (i,) = label
    if kind is BasisMor.ONE:
        return label
    if kind is BasisMor.CHI0:
        return (i - 1,) if abs(i - 1) <= n - 2 else None
    if kind is BasisMor.CHI1:
        return (i - 1,)
    if kind is BasisMor.GAMMA:
        raise UnsupportedMorphismError(morphism=kind.value)
    return None


def close_atom(a: ShiftedAtom, n: int) -> GradedVS:
    """Graded dimension of the braid closure of a shifted atom."""
    ValidationUtils.validate_level(n)
    dims: Dict[int, int] = {}
    for _, q in _full_basis(a, n):
        dims[q] = dims.get(q, 0) + 1
    return GradedVS(dims)


def _blocks(mor: Mor, source: ShiftedAtom, target: ShiftedAtom, n: int,
            basis_of: Callable, image_of: Callable) -> Dict[int, Matrix]:
    source_basis, target_basis = basis_of(source, n), basis_of(target, n)
    source_index, source_sizes = _index(source_basis)
    target_index, target_sizes = _index(target_basis)
    blocks = {q: Matrix.zeros(target_sizes.get(q, 0), size) for q, size in source_sizes.items()}
    for label, q in source_basis:
        for kind, coeff in mor.items():
            image = image_of(kind, label, n)
            if image is None:
                continue
            target_q, row = target_index[image]
            if target_q != q:
                raise ComplexInvariantError(f"{kind.value} moves q-degree {q} to {target_q}")
            blocks[q][row, source_index[label][1]] += _rational(coeff)
    return blocks


def _index(basis: List[Tuple[Label, int]]) -> Tuple[Dict[Label, Tuple[int, int]], Dict[int, int]]:
    index, sizes = {}, {}
    for label, q in basis:
        index[label] = (q, sizes.get(q, 0))
        sizes[q] = sizes.get(q, 0) + 1
    return index, sizes


def _rational(value: Fraction) -> Rational:
    return Rational(value.numerator, value.denominator)


def close_morphism(entry: Mor, source: ShiftedAtom, target: ShiftedAtom,
                   n: int) -> Dict[int, Matrix]:
    """Per-q-degree matrices of the closure of one differential entry."""
    ValidationUtils.validate_level(n)
    return _blocks(entry, source, target, n, _full_basis, _full_image)


def _close(c: KRComplex, n: int, basis_of: Callable, image_of: Callable) -> GVSComplex:
    ValidationUtils.validate_level(n)
    objects: Dict[int, GradedVS] = {}
    offsets: Dict[int, List[Dict[int, int]]] = {}
    for h in c.degrees():
        dims: Dict[int, int] = {}
        offsets[h] = []
        for summand in c.summands(h):
            offset = dict(dims)
            offsets[h].append(offset)
            for _, q in basis_of(summand, n):
                dims[q] = dims.get(q, 0) + 1
        objects[h] = GradedVS(dims)

    differentials: Dict[int, Dict[int, Matrix]] = {}
    for h in c.differential_degrees():
        source_dims, target_dims = objects[h].dims, objects[h + 1].dims
        blocks = {q: Matrix.zeros(target_dims.get(q, 0), size) for q, size in source_dims.items()}
        for (row, col), mor in c.differential(h).items():
            source, target = c.summands(h)[col], c.summands(h + 1)[row]
            for q, block in _blocks(mor, source, target, n, basis_of, image_of).items():
                top, left = offsets[h + 1][row].get(q, 0), offsets[h][col].get(q, 0)
                for r in range(block.rows):
                    for s in range(block.cols):
                        if block[r, s]:
                            blocks[q][top + r, left + s] += block[r, s]
        differentials[h] = blocks
    return GVSComplex(objects, differentials)


def close_complex(c: KRComplex, n: int) -> GVSComplex:
    """Braid closure of a width-2 complex."""
    return _close(c, n, _full_basis, _full_image)


def partial_close_one_strand(c: KRComplex, n: int) -> GVSComplex:
    """Close the right strand only: Id2 -> [n]·id₁ and S -> [n-1]·id₁.

    Raises:
        UnsupportedMorphismError: If a differential contains γ.
    """
    return _close(c, n, _strand_basis, _strand_image)


# Homology

def homology(g: GVSComplex) -> Dict[Bigrading, int]:
    """Nonzero dimensions of H^h in q-degree q, keyed by (h, q)."""
    result: Dict[Bigrading, int] = {}
    for h, space in sorted(g.objects.items()):
        for q, dim in sorted(space.dims.items()):
            value = dim - g.rank(h, q) - g.rank(h - 1, q)
            if value < 0:
                raise ComplexInvariantError(f"Negative homology in q-degree {q}", degree=h)
            if value:
                result[(h, q)] = value
    return result


def poincare(h: Mapping[Bigrading, int]) -> LaurentPoly:
    """Σ dim H^j_i q^i t^j."""
    return LaurentPoly(QT_VARS, {(q, hdeg): dim for (hdeg, q), dim in h.items()})


def euler(p: LaurentPoly) -> LaurentPoly:
    """Specialization t = -1."""
    return p.substitute({"t": LaurentPoly.constant(Q_VARS, -1)})


def homology_table(h: Mapping[Bigrading, int]) -> List[Tuple[int, int, int]]:
    """(hdeg, qdeg, dim) rows in bigrading order."""
    return [(hdeg, q, dim) for (hdeg, q), dim in sorted(h.items())]


def closed_euler(c: KRComplex, n: int) -> LaurentPoly:
    """Σ (-1)^i graded dimension of the closed summands in degree i."""
    total = LaurentPoly.zero(Q_VARS)
    for i in c.degrees():
        for summand in c.summands(i):
            total = total + close_atom(summand, n).graded_dimension().scale((-1) ** abs(i))
    return total


# Closed forms

def _qt(p: LaurentPoly) -> LaurentPoly:
    return p.substitute({"q": LaurentPoly.variable(QT_VARS, "q")})


def _qt_monomial(q: int, t: int = 0) -> LaurentPoly:
    return LaurentPoly.monomial(QT_VARS, (q, t))


def kr_poincare_torus2(k: int, n: int) -> LaurentPoly:
    """Poincaré polynomial of the closure of σ₁^k at level n.

    For k = 2m + 1: q^{(n-1)k} (q^{1-n}[n] + (q^{-n} + t q^n) Σ_{j=1..m} (t²q⁴)^j [n-1]).
    For k = 2m the sum stops at m - 1 and t^{2m} q^{4m-1} [n][n-1] is added.
    """
    ValidationUtils.validate_crossings(k)
    ValidationUtils.validate_level(n)
    bracket, lower = _qt(q_integer(n)), _qt(q_integer(n - 1))
    half, odd = divmod(k, 2)
    last = half if odd else half - 1
    geometric = LaurentPoly(QT_VARS, {(4 * j, 2 * j): 1 for j in range(1, last + 1)})
    body = (_qt_monomial(1 - n) * bracket
            + (_qt_monomial(-n) + _qt_monomial(n, 1)) * geometric * lower)
    if not odd:
        body = body + _qt_monomial(4 * half - 1, 2 * half) * bracket * lower
    return _qt_monomial((n - 1) * k) * body


def hopf_expanded(n: int) -> LaurentPoly:
    """q^{n-1}[n] + q^{2n}[n]²t² - q^{n+1}[n]t²."""
    ValidationUtils.validate_level(n)
    bracket = _qt(q_integer(n))
    return (_qt_monomial(n - 1) * bracket
            + _qt_monomial(2 * n, 2) * bracket * bracket
            - _qt_monomial(n + 1, 2) * bracket)


def trefoil_closed_form(n: int) -> LaurentPoly:
    """q^{2n-2}([n] + [n-1] q⁻¹ (1 + t q^{2n}) t² q⁴)."""
    ValidationUtils.validate_level(n)
    bracket, lower = _qt(q_integer(n)), _qt(q_integer(n - 1))
    tail = lower * _qt_monomial(-1) * (1 + _qt_monomial(2 * n, 1)) * _qt_monomial(4, 2)
    return _qt_monomial(2 * n - 2) * (bracket + tail)


def kr_poincare_from_complex(c: KRComplex, n: int) -> Tuple[Dict[Bigrading, int], LaurentPoly]:
    """Homology and Poincaré polynomial of the closure of ``c``."""
    closed = close_complex(c, n)
    closed.check_d_squared()
    h = homology(closed)
    logger.debug("Closed homology at n=%d has %d nonzero bigradings", n, len(h))
    return h, poincare(h)



def kr_poincare_unknot(n: int) -> Tuple[Dict[Bigrading, int], LaurentPoly]:
    """Homology of the one-strand closure: [n] in homological degree 0."""
    ValidationUtils.validate_level(n)
    h = {(0, q): 1 for q in _bracket_degrees(n)}
    return h, poincare(h)
