"""
The MOY calculus with parameters α, ζ: brackets, braidings and HOMFLY-PT values of
closures of braids on at most two strands.

Scalars live in ℚ[α^±, ζ^±] localized at ζ - ζ⁻¹. The skein variable z = ζ⁻¹ - ζ is never
a separate variable.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable

from ..exceptions import UnsupportedWidthError, UsageError
from ..utils.validation import ValidationUtils
from .diagram import BraidWord, Sign
from .moy_eval import LadderElement, ladder_power, ladder_product
from .ring import AZ_VARS, Q_VARS, LaurentPoly, LocalizedScalar, exact_div


logger = logging.getLogger(__name__)


def _az(alpha: int, zeta: int, coeff: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial(AZ_VARS, (alpha, zeta), coeff)


def _minus_zeta_power(exponent: int) -> LaurentPoly:
    """(-ζ)^exponent."""
    return _az(0, exponent, (-1) ** abs(exponent))


def z_variable() -> LocalizedScalar:
    """z = ζ⁻¹ - ζ."""
    return LocalizedScalar(_az(0, -1) - _az(0, 1))


def square_coefficient() -> LocalizedScalar:
    """S∘S = -(ζ + ζ⁻¹) S."""
    return LocalizedScalar(-(_az(0, 1) + _az(0, -1)))


def homfly_bracket(k: int, n: int) -> LocalizedScalar:
    """[k]_{α,ζ} = (α⁻¹(-ζ)^{k-n} - α(-ζ)^{n-k}) / (ζ - ζ⁻¹)."""
    ValidationUtils.validate_nonnegative(k, field="k")
    ValidationUtils.validate_level(n)
    numerator = _az(-1, 0) * _minus_zeta_power(k - n) - _az(1, 0) * _minus_zeta_power(n - k)
    return LocalizedScalar(numerator, 1)


def jones_assignment(n: int) -> Dict[str, LaurentPoly]:
    """α ↦ -q^{-n}, ζ ↦ -q."""
    ValidationUtils.validate_level(n)
    return {
        "alpha": LaurentPoly.monomial(Q_VARS, (-n,), -1),
        "zeta": LaurentPoly.monomial(Q_VARS, (1,), -1),
    }


def homfly_to_jones(value: LocalizedScalar, n: int) -> LaurentPoly:
    """Specialize a HOMFLY-PT value to the level-n Jones polynomial."""
    return value.specialize(jones_assignment(n))


def mirror_zeta(value: LocalizedScalar) -> LocalizedScalar:
    """Apply ζ ↦ -ζ⁻¹, which fixes z."""
    return value.substitute_within({"zeta": _az(0, -1, -1)})


@dataclass(frozen=True)
class HomflyLadder:
    """a·id₂ + b·S at level n with localized coefficients."""

    a: LocalizedScalar
    b: LocalizedScalar
    n: int

    @classmethod
    def identity(cls, n: int) -> "HomflyLadder":
        return cls(LocalizedScalar.coerce(1), LocalizedScalar.coerce(0), n)

    def pair(self):
        return self.a, self.b

    def __add__(self, other: "HomflyLadder") -> "HomflyLadder":
        _same_level(self, other)
        return HomflyLadder(self.a + other.a, self.b + other.b, self.n)

    def __sub__(self, other: "HomflyLadder") -> "HomflyLadder":
        _same_level(self, other)
        return HomflyLadder(self.a - other.a, self.b - other.b, self.n)

    def scale(self, factor) -> "HomflyLadder":
        return HomflyLadder(self.a * factor, self.b * factor, self.n)

    def specialize(self, assignment: Dict[str, LaurentPoly]) -> LadderElement:
        return LadderElement(self.a.specialize(assignment), self.b.specialize(assignment))

    def __str__(self) -> str:
        return f"({self.a})·id2 + ({self.b})·S"


def _same_level(x: HomflyLadder, y: HomflyLadder) -> None:
    if x.n != y.n:
        raise UsageError(f"Ladders at different levels: {x.n} vs {y.n}")


def homfly_compose(x: HomflyLadder, y: HomflyLadder) -> HomflyLadder:
    _same_level(x, y)
    a, b = ladder_product(x.pair(), y.pair(), square_coefficient())
    return HomflyLadder(a, b, x.n)


def homfly_braiding(sign: Sign, n: int) -> HomflyLadder:
    """σ⁺ = α⁻¹(ζ⁻¹ id₂ + S) and σ⁻ = α(ζ id₂ + S)."""
    ValidationUtils.validate_level(n)
    if Sign(sign) is Sign.PLUS:
        return HomflyLadder(LocalizedScalar(_az(-1, -1)), LocalizedScalar(_az(-1, 0)), n)
    return HomflyLadder(LocalizedScalar(_az(1, 1)), LocalizedScalar(_az(1, 0)), n)


def homfly_close(x: HomflyLadder) -> LocalizedScalar:
    """a[n]² + b[n][n-1]."""
    bracket = homfly_bracket(x.n, x.n)
    return x.a * bracket * bracket + x.b * bracket * homfly_bracket(x.n - 1, x.n)


def homfly_partial_trace(x: HomflyLadder) -> LocalizedScalar:
    """a[n] + b[n-1]; both braidings trace to 1."""
    return x.a * homfly_bracket(x.n, x.n) + x.b * homfly_bracket(x.n - 1, x.n)


def homfly_skein_difference(n: int) -> HomflyLadder:
    """α σ⁺ - α⁻¹ σ⁻, which equals z·id₂."""
    alpha = LocalizedScalar(_az(1, 0))
    alpha_inverse = LocalizedScalar(_az(-1, 0))
    return (homfly_braiding(Sign.PLUS, n).scale(alpha)
            - homfly_braiding(Sign.MINUS, n).scale(alpha_inverse))


def _word_ladder(letters: Iterable[int], n: int) -> HomflyLadder:
    result = HomflyLadder.identity(n)
    for letter in letters:
        result = homfly_compose(result, homfly_braiding(Sign.of_letter(letter), n))
    return result


def homfly(b: BraidWord, n: int) -> LocalizedScalar:
    """HOMFLY-PT value of the closure of a braid on at most two strands.

    Raises:
        UnsupportedWidthError: If the braid has more than two strands.
    """
    ValidationUtils.validate_level(n)
    if b.width > 2:
        raise UnsupportedWidthError(width=b.width)
    if b.width == 1:
        return homfly_bracket(n, n)
    return homfly_close(_word_ladder(b.letters, n))


def homfly_torus2(k: int, n: int) -> LocalizedScalar:
    """Closure of (σ⁺)^k by iterated composition."""
    ValidationUtils.validate_crossings(k)
    base = homfly_braiding(Sign.PLUS, n)
    a, b = ladder_power(base.pair(), k, square_coefficient())
    value = homfly_close(HomflyLadder(a, b, n))
    logger.debug("HOMFLY-PT of the (2,%d) torus link at n=%d: %s", k, n, value)
    return value


def homfly_torus2_closed_form(k: int, n: int) -> LocalizedScalar:
    """α^{-k}ζ^{-k} ((ζ² + (-ζ²)^k)/(1 + ζ²) [n] + (1 - (-ζ²)^k)/(1 + ζ²) αζ) [n]."""
    ValidationUtils.validate_crossings(k)
    ValidationUtils.validate_level(n)
    alternating = _az(0, 2, -1) ** k
    one_plus = 1 + _az(0, 2)
    head = LocalizedScalar(exact_div(_az(0, 2) + alternating, one_plus))
    tail = LocalizedScalar(exact_div(1 - alternating, one_plus) * _az(1, 1))
    bracket = homfly_bracket(n, n)
    return LocalizedScalar(_az(-k, -k)) * (head * bracket + tail) * bracket


def bracket_identities(n: int) -> Dict[str, bool]:
    """The three linear relations between consecutive brackets at level n."""
    top, middle = homfly_bracket(n, n), homfly_bracket(n - 1, n)
    zeta, zeta_inverse = LocalizedScalar(_az(0, 1)), LocalizedScalar(_az(0, -1))
    checks = {
        "zeta^-1 [n] + [n-1] = alpha": zeta_inverse * top + middle == LocalizedScalar(_az(1, 0)),
        "zeta [n] + [n-1] = alpha^-1": zeta * top + middle == LocalizedScalar(_az(-1, 0)),
    }
    bottom = homfly_bracket(n - 2, n)
    checks["[n] + (zeta + zeta^-1)[n-1] + [n-2] = 0"] = (
        top + (zeta + zeta_inverse) * middle + bottom
    ).is_zero()
    return checks
