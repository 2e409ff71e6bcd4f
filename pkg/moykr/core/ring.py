"""
Exact arithmetic for multivariate Laurent polynomials with rational coefficients,
q-integers and their factorials, and the localized scalars of the HOMFLY-PT ring.

Values are immutable; every operation returns a new value.
"""

import logging
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple, Union

from ..exceptions import NotDivisibleError, UsageError, ValidationError
from ..utils.validation import ValidationUtils


logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]
Coefficient = Union[int, Fraction]

Q_VARS = ("q",)
QT_VARS = ("q", "t")
AZ_VARS = ("alpha", "zeta")


class LaurentPoly:
    """A Laurent polynomial over the rationals in a fixed, ordered set of variables.

    Terms map exponent vectors to nonzero ``Fraction`` coefficients and are kept sorted
    lexicographically, so equality and rendering are structural.

    >>> str(LaurentPoly(("q",), {(-2,): 1, (0,): 2, (2,): 1}))
    'q^-2 + 2 + q^2'
    """

    __slots__ = ("_vars", "_terms", "_hash")

    def __init__(self, vars: Sequence[str], terms: Optional[Mapping[Exponent, Coefficient]] = None):
        self._vars: Tuple[str, ...] = tuple(vars)
        if len(set(self._vars)) != len(self._vars):
            raise UsageError(f"Repeated variable names: {self._vars}")
        normalized: Dict[Exponent, Fraction] = {}
        for exponent, coeff in (terms or {}).items():
            exponent = tuple(int(e) for e in exponent)
            if len(exponent) != len(self._vars):
                raise UsageError(
                    f"Exponent {exponent} does not match variables {self._vars}"
                )
            value = Fraction(coeff)
            if value:
                normalized[exponent] = value
        self._terms: Dict[Exponent, Fraction] = dict(sorted(normalized.items()))
        self._hash: Optional[int] = None

    # Constructors

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "LaurentPoly":
        return cls(vars)

    @classmethod
    def one(cls, vars: Sequence[str]) -> "LaurentPoly":
        return cls.constant(vars, 1)

    @classmethod
    def constant(cls, vars: Sequence[str], value: Coefficient) -> "LaurentPoly":
        return cls(vars, {(0,) * len(tuple(vars)): value})

    @classmethod
    def monomial(cls, vars: Sequence[str], exponent: Union[Exponent, Mapping[str, int]],
                 coeff: Coefficient = 1) -> "LaurentPoly":
        """Build ``coeff * x1^e1 * ... * xm^em``; exponents by position or by name."""
        vars = tuple(vars)
        if isinstance(exponent, Mapping):
            unknown = set(exponent) - set(vars)
            if unknown:
                raise UsageError(f"Unknown variables {sorted(unknown)} for ring {vars}")
            exponent = tuple(int(exponent.get(v, 0)) for v in vars)
        return cls(vars, {tuple(exponent): coeff})

    @classmethod
    def variable(cls, vars: Sequence[str], name: str) -> "LaurentPoly":
        return cls.monomial(vars, {name: 1})

    # Inspection

    @property
    def vars(self) -> Tuple[str, ...]:
        return self._vars

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exponent, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0,) * len(self._vars)}

    def coefficient(self, exponent: Exponent) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def min_degrees(self) -> Exponent:
        """Per-variable lowest exponent."""
        if self.is_zero():
            raise UsageError("The zero polynomial has no degrees")
        return tuple(min(e[i] for e in self._terms) for i in range(len(self._vars)))

    def max_degrees(self) -> Exponent:
        """Per-variable highest exponent."""
        if self.is_zero():
            raise UsageError("The zero polynomial has no degrees")
        return tuple(max(e[i] for e in self._terms) for i in range(len(self._vars)))

    def evaluate_at_one(self) -> Fraction:
        """Value at x1 = ... = xm = 1."""
        return sum(self._terms.values(), Fraction(0))

    def is_palindromic(self) -> bool:
        """Invariant under negating every exponent."""
        return all(
            self._terms.get(tuple(-e for e in exponent)) == coeff
            for exponent, coeff in self._terms.items()
        )

    # Arithmetic

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other._vars != self._vars:
                raise UsageError(f"Variable mismatch: {self._vars} vs {other._vars}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return LaurentPoly.constant(self._vars, other)
        raise UsageError(f"Cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other) -> "LaurentPoly":
        if not _is_operand(other):
            return NotImplemented
        other = self._coerce(other)
        terms = dict(self._terms)
        for exponent, coeff in other._terms.items():
            terms[exponent] = terms.get(exponent, Fraction(0)) + coeff
        return LaurentPoly(self._vars, terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self._vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        if not _is_operand(other):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self).__add__(other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        other = self._coerce(other)
        terms: Dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exponent = tuple(a + b for a, b in zip(e1, e2))
                terms[exponent] = terms.get(exponent, Fraction(0)) + c1 * c2
        return LaurentPoly(self._vars, terms)

    def __rmul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            if not self.is_monomial():
                raise UsageError(f"Only monomials are invertible, not {self}")
            ((e, c),) = self._terms.items()
            return LaurentPoly(self._vars, {tuple(x * exponent for x in e): c ** exponent})
        result = LaurentPoly.one(self._vars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: Coefficient) -> "LaurentPoly":
        factor = Fraction(factor)
        return LaurentPoly(self._vars, {e: c * factor for e, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._vars == other._vars and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == LaurentPoly.constant(self._vars, other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        # Constants hash like the numbers they compare equal to.
        if self._hash is None:
            if not self._terms:
                self._hash = hash(0)
            elif self.is_constant():
                self._hash = hash(self._terms[(0,) * len(self._vars)])
            else:
                self._hash = hash((self._vars, tuple(self._terms.items())))
        return self._hash

    # Substitution

    def substitute(self, assignment: Mapping[str, "LaurentPoly"]) -> "LaurentPoly":
        """Ring homomorphism sending each assigned variable to an invertible monomial.

        Unassigned variables map to the variable of the same name in the target ring,
        which is the common ring of the assigned values.

        Raises:
            UsageError: If a value is not a monomial, the values live in different rings,
                or an unassigned variable is missing from the target ring.
        """
        if not assignment:
            raise UsageError("Empty assignment")
        unknown = set(assignment) - set(self._vars)
        if unknown:
            raise UsageError(f"Unknown variables {sorted(unknown)} for ring {self._vars}")
        target_vars = {value.vars for value in assignment.values()}
        if len(target_vars) != 1:
            raise UsageError(f"Assigned values live in different rings: {sorted(target_vars)}")
        (target,) = target_vars

        images = []
        for position, name in enumerate(self._vars):
            if name in assignment:
                value = assignment[name]
                if not value.is_monomial():
                    raise UsageError(f"non-invertible assignment {name} -> {value}")
                ((exponent, coeff),) = value.items()
                images.append((exponent, coeff))
            elif name in target:
                unit = [0] * len(target)
                unit[target.index(name)] = 1
                images.append((tuple(unit), Fraction(1)))
            else:
                raise UsageError(f"Variable {name} has no image in ring {target}")

        terms: Dict[Exponent, Fraction] = {}
        for exponent, coeff in self._terms.items():
            image_exponent = [0] * len(target)
            image_coeff = coeff
            for power, (unit_exponent, unit_coeff) in zip(exponent, images):
                image_coeff *= unit_coeff ** power
                for i, x in enumerate(unit_exponent):
                    image_exponent[i] += x * power
            key = tuple(image_exponent)
            terms[key] = terms.get(key, Fraction(0)) + image_coeff
        return LaurentPoly(target, terms)

    # Rendering

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exponent, coeff in self._terms.items():
            factors = []
            for name, power in zip(self._vars, exponent):
                if power == 1:
                    factors.append(name)
                elif power:
                    factors.append(f"{name}^{power}")
            magnitude = abs(coeff)
            if not factors:
                body = _format_coefficient(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([_format_coefficient(magnitude)] + factors)
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if coeff > 0 else f" - {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self._vars!r}, '{self}')"


def _is_operand(value) -> bool:
    return isinstance(value, (LaurentPoly, int, Fraction)) and not isinstance(value, bool)


def _format_coefficient(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def try_exact_div(p: LaurentPoly, d: LaurentPoly) -> Optional[LaurentPoly]:
    """Quotient p / d, or None when d does not divide p.

    Runs lexicographic leading-term division. Degrees in each variable add under
    multiplication, so every quotient exponent lies in the box
    [min(p) - min(d), max(p) - max(d)]; leaving it means d does not divide p.
    """
    if p.vars != d.vars:
        raise UsageError(f"Variable mismatch: {p.vars} vs {d.vars}")
    if d.is_zero():
        raise NotDivisibleError(dividend=str(p), divisor="0")
    if p.is_zero():
        return LaurentPoly.zero(p.vars)

    low = tuple(a - b for a, b in zip(p.min_degrees(), d.min_degrees()))
    high = tuple(a - b for a, b in zip(p.max_degrees(), d.max_degrees()))
    if any(lo > hi for lo, hi in zip(low, high)):
        return None

    divisor_terms = list(d.items())
    lead_exponent, lead_coeff = divisor_terms[-1]
    remainder: Dict[Exponent, Fraction] = p.terms
    quotient: Dict[Exponent, Fraction] = {}
    while remainder:
        top = max(remainder)
        step = tuple(a - b for a, b in zip(top, lead_exponent))
        if any(s < lo or s > hi for s, lo, hi in zip(step, low, high)):
            return None
        factor = remainder[top] / lead_coeff
        quotient[step] = factor
        for exponent, coeff in divisor_terms:
            key = tuple(a + b for a, b in zip(exponent, step))
            value = remainder.get(key, Fraction(0)) - factor * coeff
            if value:
                remainder[key] = value
            else:
                remainder.pop(key, None)
    return LaurentPoly(p.vars, quotient)


def exact_div(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Exact quotient p / d in the Laurent ring.

    Raises:
        NotDivisibleError: If d does not divide p.
    """
    quotient = try_exact_div(p, d)
    if quotient is None:
        raise NotDivisibleError(dividend=str(p), divisor=str(d))
    return quotient


# q-combinatorics

def q_power(exponent: int) -> LaurentPoly:
    """The monomial q^exponent."""
    return LaurentPoly.monomial(Q_VARS, (exponent,))


def q_integer(m: int) -> LaurentPoly:
    """[m]_q = q^{1-m} + q^{3-m} + ... + q^{m-1}; zero for m = 0."""
    ValidationUtils.validate_nonnegative(m, field="m")
    return LaurentPoly(Q_VARS, {(1 - m + 2 * i,): 1 for i in range(m)})


def q_factorial(m: int) -> LaurentPoly:
    """[m]_q! = [1]_q [2]_q ... [m]_q."""
    ValidationUtils.validate_nonnegative(m, field="m")
    result = LaurentPoly.one(Q_VARS)
    for i in range(1, m + 1):
        result = result * q_integer(i)
    return result


def q_binomial(j: int, k: int) -> LaurentPoly:
    """Quantum binomial [j]! / ([k]! [j-k]!) by exact division."""
    ValidationUtils.validate_nonnegative(j, field="j")
    ValidationUtils.validate_nonnegative(k, field="k")
    if k > j:
        raise ValidationError(f"q_binomial needs k <= j, got j={j}, k={k}", field="k")
    return exact_div(q_factorial(j), q_factorial(k) * q_factorial(j - k))


# Localized scalars

class LocalizedScalar:
    """An element a / (ζ - ζ⁻¹)^m of ℚ[α^±, ζ^±] localized at ζ - ζ⁻¹.

    The constructor reduces greedily, so the numerator is divisible by ζ - ζ⁻¹ only
    when the denominator power is zero. Equality is checked by cross-multiplication.
    """

    __slots__ = ("_numerator", "_denom_power")

    def __init__(self, numerator: LaurentPoly, denom_power: int = 0):
        if numerator.vars != AZ_VARS:
            raise UsageError(f"Localized scalars live over {AZ_VARS}, not {numerator.vars}")
        ValidationUtils.validate_nonnegative(denom_power, field="denom_power")
        base = self.denominator_base()
        while denom_power and not numerator.is_zero():
            quotient = try_exact_div(numerator, base)
            if quotient is None:
                break
            numerator, denom_power = quotient, denom_power - 1
        if numerator.is_zero():
            denom_power = 0
        self._numerator = numerator
        self._denom_power = denom_power

    @staticmethod
    def denominator_base() -> LaurentPoly:
        """ζ - ζ⁻¹."""
        return LaurentPoly(AZ_VARS, {(0, 1): 1, (0, -1): -1})

    @classmethod
    def coerce(cls, value) -> "LocalizedScalar":
        if isinstance(value, LocalizedScalar):
            return value
        if isinstance(value, LaurentPoly):
            return cls(value)
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return cls(LaurentPoly.constant(AZ_VARS, value))
        raise UsageError(f"Cannot combine LocalizedScalar with {type(value).__name__}")

    @property
    def numerator(self) -> LaurentPoly:
        return self._numerator

    @property
    def denom_power(self) -> int:
        return self._denom_power

    def denominator(self) -> LaurentPoly:
        return self.denominator_base() ** self._denom_power

    def is_zero(self) -> bool:
        return self._numerator.is_zero()

    def _lifted(self, power: int) -> LaurentPoly:
        return self._numerator * self.denominator_base() ** (power - self._denom_power)

    def __add__(self, other) -> "LocalizedScalar":
        other = self.coerce(other)
        power = max(self._denom_power, other._denom_power)
        return LocalizedScalar(self._lifted(power) + other._lifted(power), power)

    __radd__ = __add__

    def __neg__(self) -> "LocalizedScalar":
        return LocalizedScalar(-self._numerator, self._denom_power)

    def __sub__(self, other) -> "LocalizedScalar":
        return self + (-self.coerce(other))

    def __rsub__(self, other) -> "LocalizedScalar":
        return self.coerce(other) - self

    def __mul__(self, other) -> "LocalizedScalar":
        other = self.coerce(other)
        return LocalizedScalar(self._numerator * other._numerator,
                               self._denom_power + other._denom_power)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        try:
            other = self.coerce(other)
        except UsageError:
            return NotImplemented
        return (self._numerator * other.denominator()
                == other._numerator * self.denominator())

    def __hash__(self) -> int:
        if self._denom_power == 0:
            return hash(self._numerator)
        return hash((self._numerator, self._denom_power))

    def specialize(self, assignment: Mapping[str, LaurentPoly]) -> LaurentPoly:
        """Image under a monomial substitution, divided out in the target ring."""
        image = self._numerator.substitute(assignment)
        denominator = self.denominator_base().substitute(assignment) ** self._denom_power
        return exact_div(image, denominator)

    def cross_equals(self, target: LaurentPoly, assignment: Mapping[str, LaurentPoly]) -> bool:
        """Compare the specialization with ``target`` without dividing."""
        image = self._numerator.substitute(assignment)
        denominator = self.denominator_base().substitute(assignment) ** self._denom_power
        return image == target * denominator

    def substitute_within(self, assignment: Mapping[str, LaurentPoly]) -> "LocalizedScalar":
        """Change of variables inside ℚ[α^±, ζ^±] fixing ζ - ζ⁻¹ up to sign."""
        base = self.denominator_base()
        image_base = base.substitute(assignment)
        if image_base == base:
            sign = 1
        elif image_base == -base:
            sign = (-1) ** self._denom_power
        else:
            raise UsageError(f"Substitution moves the denominator to {image_base}")
        return LocalizedScalar(self._numerator.substitute(assignment).scale(sign),
                               self._denom_power)

    def __str__(self) -> str:
        if self._denom_power == 0:
            return str(self._numerator)
        power = "" if self._denom_power == 1 else f"^{self._denom_power}"
        return f"({self._numerator}) / ({self.denominator_base()}){power}"

    def __repr__(self) -> str:
        return f"LocalizedScalar('{self}')"
