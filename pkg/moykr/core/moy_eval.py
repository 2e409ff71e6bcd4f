"""
Evaluation of closed MOY diagrams on at most two strands.

Width-2 endomorphisms are ladder elements a·id₂ + b·S. They compose with the rule
S∘S = [2]_q S and close to scalars with ev∘coev = [n] and the bigon closure [n][n-1].
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Tuple

from ..exceptions import StuckEvaluationError, UnsupportedWidthError, UsageError
from ..utils.validation import ValidationUtils
from .diagram import (BraidWord, DiagramWord, Direction, Generator, GeneratorKind, Sign,
                      identity_piece, normalize)
from .ring import LaurentPoly, Q_VARS, exact_div, q_integer, q_power


logger = logging.getLogger(__name__)


def ladder_product(x: Tuple[Any, Any], y: Tuple[Any, Any], square: Any) -> Tuple[Any, Any]:
    """(a₁, b₁)(a₂, b₂) = (a₁a₂, a₁b₂ + b₁a₂ + square·b₁b₂) over any commutative ring.

    ``square`` is the scalar c in S∘S = c·S.
    """
    a1, b1 = x
    a2, b2 = y
    return a1 * a2, a1 * b2 + b1 * a2 + square * (b1 * b2)


def ladder_power(base: Tuple[Any, Any], k: int, square: Any) -> Tuple[Any, Any]:
    """k-fold product of ``base`` with itself, k ≥ 1."""
    ValidationUtils.validate_crossings(k)
    result = base
    for _ in range(k - 1):
        result = ladder_product(result, base, square)
    return result


@dataclass(frozen=True)
class LadderElement:
    """a·id₂ + b·S with coefficients in ℚ[q^±]."""

    a: LaurentPoly
    b: LaurentPoly

    @classmethod
    def identity(cls) -> "LadderElement":
        return cls(LaurentPoly.one(Q_VARS), LaurentPoly.zero(Q_VARS))

    @classmethod
    def wide(cls) -> "LadderElement":
        return cls(LaurentPoly.zero(Q_VARS), LaurentPoly.one(Q_VARS))

    def pair(self) -> Tuple[LaurentPoly, LaurentPoly]:
        return self.a, self.b

    def __mul__(self, other: "LadderElement") -> "LadderElement":
        return ladder_mul(self, other)

    def __add__(self, other: "LadderElement") -> "LadderElement":
        return LadderElement(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "LadderElement") -> "LadderElement":
        return LadderElement(self.a - other.a, self.b - other.b)

    def scale(self, factor: LaurentPoly) -> "LadderElement":
        return LadderElement(factor * self.a, factor * self.b)

    def __str__(self) -> str:
        return f"({self.a})·id2 + ({self.b})·S"


def ladder_mul(x: LadderElement, y: LadderElement) -> LadderElement:
    return LadderElement(*ladder_product(x.pair(), y.pair(), q_integer(2)))


def braiding(sign: Sign, n: int) -> LadderElement:
    """σ⁺ = q^{n-1} id₂ - q^n S and σ⁻ = q^{1-n} id₂ - q^{-n} S."""
    ValidationUtils.validate_level(n)
    if Sign(sign) is Sign.PLUS:
        return LadderElement(q_power(n - 1), -q_power(n))
    return LadderElement(q_power(1 - n), -q_power(-n))


def sigma_power(k: int, n: int) -> LadderElement:
    """(σ⁺)^k by iterated ladder multiplication."""
    return LadderElement(*ladder_power(braiding(Sign.PLUS, n).pair(), k, q_integer(2)))


def _alternating_tail(k: int) -> LaurentPoly:
    """(1 - (-q²)^k) / (1 + q²)."""
    return exact_div(1 - (-q_power(2)) ** k, 1 + q_power(2))


def sigma_power_closed_form(k: int, n: int) -> LadderElement:
    """(q^{k(n-1)}, -q^{k(n-1)} q (1 - (-q²)^k)/(1 + q²))."""
    ValidationUtils.validate_level(n)
    ValidationUtils.validate_crossings(k)
    lead = q_power(k * (n - 1))
    return LadderElement(lead, -lead * q_power(1) * _alternating_tail(k))


def eval_closed_ladder(x: LadderElement, n: int) -> LaurentPoly:
    """Braid closure of a·id₂ + b·S: a[n]² + b[n][n-1]."""
    ValidationUtils.validate_level(n)
    bracket = q_integer(n)
    return x.a * bracket * bracket + x.b * bracket * q_integer(n - 1)


def partial_trace(x: LadderElement, n: int) -> LaurentPoly:
    """Scalar of the closure of the right strand: a[n] + b[n-1]."""
    ValidationUtils.validate_level(n)
    return x.a * q_integer(n) + x.b * q_integer(n - 1)


def skein_difference(n: int) -> LadderElement:
    """q^{-n} σ⁺ - q^n σ⁻, which equals (q⁻¹ - q) id₂."""
    return braiding(Sign.PLUS, n).scale(q_power(-n)) - braiding(Sign.MINUS, n).scale(q_power(n))


def jones_torus2(k: int, n: int) -> LaurentPoly:
    """Level-n Jones polynomial of the closure of σ₁^k in closed form.

    q^{k(n-1)} [n] ((q² + (-q²)^k)/(1 + q²) [n] + q^{1-n} (1 - (-q²)^k)/(1 + q²))
    """
    ValidationUtils.validate_level(n)
    ValidationUtils.validate_crossings(k)
    alternating = (-q_power(2)) ** k
    head = exact_div(q_power(2) + alternating, 1 + q_power(2))
    bracket = q_integer(n)
    inner = head * bracket + q_power(1 - n) * _alternating_tail(k)
    return q_power(k * (n - 1)) * bracket * inner


def _word_ladder(letters: Iterable[int], n: int) -> LadderElement:
    result = LadderElement.identity()
    for letter in letters:
        result = ladder_mul(result, braiding(Sign.of_letter(letter), n))
    return result


def jones(b: BraidWord, n: int) -> LaurentPoly:
    """Level-n Jones polynomial of the closure of a braid on at most two strands.

    Raises:
        UnsupportedWidthError: If the braid has more than two strands.
    """
    ValidationUtils.validate_level(n)
    if b.width > 2:
        raise UnsupportedWidthError(width=b.width)
    if b.width == 1:
        return q_integer(n)
    return eval_closed_ladder(_word_ladder(b.letters, n), n)


# Closed diagram words

_CUP = Generator(kind=GeneratorKind.CUP)
_CAP = Generator(kind=GeneratorKind.CAP)
_INNER_CUP = (identity_piece(Direction.UP), _CUP, identity_piece(Direction.DOWN))
_INNER_CAP = (identity_piece(Direction.UP), _CAP, identity_piece(Direction.DOWN))
_SPECTATORS = (identity_piece(Direction.DOWN), identity_piece(Direction.DOWN))

_LADDER_PIECES: Dict[GeneratorKind, Callable[[int], LadderElement]] = {
    GeneratorKind.CROSS_POS: lambda n: braiding(Sign.PLUS, n),
    GeneratorKind.CROSS_NEG: lambda n: braiding(Sign.MINUS, n),
    GeneratorKind.WIDE: lambda n: LadderElement.wide(),
}


def _ladder_factor(pieces: Tuple[Generator, ...], n: int) -> LadderElement:
    if len(pieces) == 3 and pieces[1:] == _SPECTATORS and pieces[0].kind in _LADDER_PIECES:
        return _LADDER_PIECES[pieces[0].kind](n)
    raise StuckEvaluationError(f"No ladder rule for slice {' '.join(p.token() for p in pieces)}")


def evaluate_closed(word: DiagramWord, n: int) -> LaurentPoly:
    """Evaluate a closed word made of stacked closures of width-1 and width-2 ladders.

    Raises:
        UsageError: If the word has a nonempty boundary.
        StuckEvaluationError: If the word leaves the ladder fragment.
    """
    ValidationUtils.validate_level(n)
    if not word.is_closed():
        raise UsageError("Only closed diagram words evaluate to scalars")

    layers: List[Tuple[Generator, ...]] = [layer.pieces for layer in normalize(word).slices]
    result = LaurentPoly.one(Q_VARS)
    position = 0
    while position < len(layers):
        if layers[position] != (_CUP,):
            raise StuckEvaluationError(f"Expected a circle to open at slice {position}")
        position += 1
        if position < len(layers) and layers[position] == (_CAP,):
            result = result * q_integer(n)
            position += 1
            continue
        if position >= len(layers) or layers[position] != _INNER_CUP:
            raise StuckEvaluationError(f"Unrecognized closure at slice {position}")
        position += 1

        ladder = LadderElement.identity()
        while position < len(layers) and layers[position] != _INNER_CAP:
            ladder = ladder_mul(ladder, _ladder_factor(layers[position], n))
            position += 1
        if layers[position + 1:position + 2] != [(_CAP,)]:
            raise StuckEvaluationError(f"Unclosed ladder ending at slice {position}")
        result = result * eval_closed_ladder(ladder, n)
        position += 2

    logger.debug("Evaluated closed word with %d slices at n=%d", len(layers), n)
    return result
