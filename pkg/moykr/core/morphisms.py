"""
The finite morphism algebra between width-2 atoms.

Basis morphisms compose by a closed table; morphisms are rational linear combinations of
basis morphisms. Tensor morphisms pair a morphism of the upper factor with one of the lower
factor and compose componentwise.
"""

import enum
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from ..exceptions import UndefinedCompositeError, UsageError


Coefficient = Union[int, Fraction]


class AtomKind(str, enum.Enum):
    """Width-2 atoms. SS only exists between composition and splitting."""
    ID2 = "Id2"
    S = "S"
    SS = "SS"


class BasisMor(str, enum.Enum):
    """Basis morphisms between atoms."""
    ONE = "1"
    CHI0 = "chi0"
    CHI1 = "chi1"
    ALPHA = "alpha"
    GAMMA = "gamma"

    @property
    def degree(self) -> int:
        return _SIGNATURES[self][2] if self in _SIGNATURES else 0

    def connects(self, source: AtomKind, target: AtomKind) -> bool:
        if self is BasisMor.ONE:
            return source == target
        return _SIGNATURES[self][:2] == (source, target)


# (source atom, target atom, q-degree); ONE is the identity on every atom.
_SIGNATURES: Dict[BasisMor, Tuple[AtomKind, AtomKind, int]] = {
    BasisMor.CHI0: (AtomKind.ID2, AtomKind.S, 1),
    BasisMor.CHI1: (AtomKind.S, AtomKind.ID2, 1),
    BasisMor.ALPHA: (AtomKind.S, AtomKind.S, 2),
    BasisMor.GAMMA: (AtomKind.S, AtomKind.S, 2),
}

# outer ∘ inner for every composable pair of non-unit basis morphisms; None is zero.
_TABLE: Dict[Tuple[BasisMor, BasisMor], Optional[BasisMor]] = {
    (BasisMor.CHI1, BasisMor.CHI0): None,
    (BasisMor.CHI0, BasisMor.CHI1): BasisMor.ALPHA,
    (BasisMor.ALPHA, BasisMor.CHI0): None,
    (BasisMor.CHI1, BasisMor.ALPHA): None,
    (BasisMor.ALPHA, BasisMor.ALPHA): None,
    (BasisMor.GAMMA, BasisMor.ALPHA): None,
    (BasisMor.ALPHA, BasisMor.GAMMA): None,
}

_UNDEFINED = {
    (BasisMor.GAMMA, BasisMor.CHI0),
    (BasisMor.CHI1, BasisMor.GAMMA),
    (BasisMor.GAMMA, BasisMor.GAMMA),
}


def compose_basis(outer: BasisMor, inner: BasisMor) -> Optional[BasisMor]:
    """outer ∘ inner, or None when the composite is zero.

    Raises:
        UndefinedCompositeError: For composites the relations leave open.
        UsageError: If the atoms do not match.
    """
    if inner is BasisMor.ONE:
        return outer
    if outer is BasisMor.ONE:
        return inner
    key = (outer, inner)
    if key in _UNDEFINED:
        raise UndefinedCompositeError(outer=outer.value, inner=inner.value)
    if key not in _TABLE:
        raise UsageError(f"{outer.value} cannot follow {inner.value}")
    return _TABLE[key]


class _Combination:
    """Rational linear combination over hashable basis keys."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping] = None):
        self._terms = {key: Fraction(c) for key, c in (terms or {}).items() if c}

    def items(self) -> Iterator:
        return iter(sorted(self._terms.items(), key=lambda item: str(item[0])))

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __add__(self, other):
        terms = dict(self._terms)
        for key, c in other._terms.items():
            terms[key] = terms.get(key, Fraction(0)) + c
        return type(self)(terms)

    def __neg__(self):
        return type(self)({key: -c for key, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor: Coefficient):
        return type(self)({key: c * Fraction(factor) for key, c in self._terms.items()})

    def after(self, inner):
        """self ∘ inner, expanded bilinearly."""
        terms: Dict = {}
        for outer_key, c1 in self._terms.items():
            for inner_key, c2 in inner._terms.items():
                key = self._compose_keys(outer_key, inner_key)
                if key is not None:
                    terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return type(self)(terms)

    @staticmethod
    def _compose_keys(outer, inner):
        raise NotImplementedError

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))


def _format_term(coeff: Fraction, name: str) -> str:
    if coeff == 1:
        return name
    if coeff == -1:
        return f"-{name}"
    return f"{coeff}*{name}"


class Mor(_Combination):
    """A morphism between two atoms: Σ c·basis."""

    @classmethod
    def basis(cls, kind: BasisMor, coeff: Coefficient = 1) -> "Mor":
        return cls({kind: coeff})

    @classmethod
    def one(cls, coeff: Coefficient = 1) -> "Mor":
        return cls.basis(BasisMor.ONE, coeff)

    @staticmethod
    def _compose_keys(outer: BasisMor, inner: BasisMor) -> Optional[BasisMor]:
        return compose_basis(outer, inner)

    def unit_coefficient(self) -> Optional[Fraction]:
        """c when the morphism is exactly c·1, else None."""
        if len(self._terms) == 1 and BasisMor.ONE in self._terms:
            return self._terms[BasisMor.ONE]
        return None

    def leading_coefficient(self) -> Fraction:
        return next(self.items())[1] if self._terms else Fraction(0)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = [str(c) if key is BasisMor.ONE else _format_term(c, key.value)
                 for key, c in self.items()]
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Mor('{self}')"


class TensorMor(_Combination):
    """Σ c·(upper ⊗ lower) between composite atoms."""

    @classmethod
    def pair(cls, upper: BasisMor, lower: BasisMor, coeff: Coefficient = 1) -> "TensorMor":
        return cls({(upper, lower): coeff})

    @staticmethod
    def _compose_keys(outer: Tuple[BasisMor, BasisMor],
                      inner: Tuple[BasisMor, BasisMor]) -> Optional[Tuple[BasisMor, BasisMor]]:
        upper = compose_basis(outer[0], inner[0])
        lower = compose_basis(outer[1], inner[1])
        if upper is None or lower is None:
            return None
        return upper, lower

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = [_format_term(c, f"{upper.value}o{lower.value}")
                 for (upper, lower), c in self.items()]
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"TensorMor('{self}')"
