"""
Custom exceptions for the moykr engine.
"""

from typing import List, Optional


class MoyKrError(Exception):
    """Base exception for all moykr errors."""

    def __init__(self, message: str = None, *args, **kwargs):
        self.message = message or "An error occurred in the moykr engine"
        super().__init__(self.message, *args, **kwargs)


class ConfigurationError(MoyKrError):
    """Raised when there is an error in the configuration."""

    def __init__(self, message: str = None, *args, **kwargs):
        self.message = message or "Invalid configuration"
        super().__init__(self.message, *args, **kwargs)


class UsageError(MoyKrError):
    """Raised when an operation is called outside its domain."""

    def __init__(self, message: str = None, *args, **kwargs):
        self.message = message or "Invalid usage"
        super().__init__(self.message, *args, **kwargs)


class ValidationError(UsageError):
    """Raised when a parameter fails validation."""

    def __init__(self, message: str = None, field: str = None, *args, **kwargs):
        self.field = field
        if field:
            self.message = message or f"Validation error in field: {field}"
        else:
            self.message = message or "Validation error"
        super().__init__(self.message, *args, **kwargs)


class ParseError(UsageError):
    """Raised when braid text cannot be parsed."""

    def __init__(self, message: str = None, position: int = None, *args, **kwargs):
        self.position = position
        if position is not None:
            message = f"{message or 'Parse error'} (at position {position})"
        super().__init__(message or "Parse error", *args, **kwargs)


class UnsupportedWidthError(UsageError):
    """Raised when a braid or diagram is wider than the engine supports."""

    def __init__(self, message: str = None, width: int = None, *args, **kwargs):
        self.width = width
        if width is not None:
            self.message = message or f"Unsupported width: {width} (at most 2 strands)"
        else:
            self.message = message or "Unsupported width"
        super().__init__(self.message, *args, **kwargs)


class NotDivisibleError(MoyKrError):
    """Raised when an exact division leaves a remainder."""

    def __init__(self, message: str = None, dividend: str = None, divisor: str = None,
                 *args, **kwargs):
        self.dividend = dividend
        self.divisor = divisor
        if dividend is not None and divisor is not None:
            self.message = message or f"not divisible: ({dividend}) / ({divisor})"
        else:
            self.message = message or "not divisible"
        super().__init__(self.message, *args, **kwargs)


class StuckEvaluationError(MoyKrError):
    """Raised when a closed diagram lies outside the ladder fragment."""

    def __init__(self, message: str = None, *args, **kwargs):
        self.message = message or "Evaluation is stuck: diagram is not a ladder closure"
        super().__init__(self.message, *args, **kwargs)


class UndefinedCompositeError(MoyKrError):
    """Raised when two basis morphisms have no determined composite."""

    def __init__(self, message: str = None, outer: str = None, inner: str = None,
                 *args, **kwargs):
        self.outer = outer
        self.inner = inner
        if outer and inner:
            self.message = message or f"Undefined composite: {outer} o {inner}"
        else:
            self.message = message or "Undefined composite"
        super().__init__(self.message, *args, **kwargs)


class UnsplittableEntryError(MoyKrError):
    """Raised when an entry adjacent to an S∘S summand has no splitting rule."""

    def __init__(self, message: str = None, entry: str = None, *args, **kwargs):
        self.entry = entry
        if entry:
            self.message = message or f"unsplittable entry: {entry}"
        else:
            self.message = message or "unsplittable entry"
        super().__init__(self.message, *args, **kwargs)


class ComplexInvariantError(MoyKrError):
    """Raised when a complex violates d² = 0 or degree homogeneity."""

    def __init__(self, message: str = None, degree: int = None, *args, **kwargs):
        self.degree = degree
        if degree is not None:
            self.message = message or f"Complex invariant violated at degree {degree}"
        else:
            self.message = message or "Complex invariant violated"
        super().__init__(self.message, *args, **kwargs)


class UnsupportedMorphismError(MoyKrError):
    """Raised when a morphism has no image under a closure."""

    def __init__(self, message: str = None, morphism: str = None, *args, **kwargs):
        self.morphism = morphism
        if morphism:
            self.message = message or f"Morphism {morphism} has no image under this closure"
        else:
            self.message = message or "Unsupported morphism"
        super().__init__(self.message, *args, **kwargs)


class VerificationError(MoyKrError):
    """Raised when one or more verification groups fail."""

    def __init__(self, message: str = None, failures: Optional[List[str]] = None,
                 *args, **kwargs):
        self.failures = failures or []
        if self.failures:
            self.message = message or f"Verification failed: {', '.join(self.failures)}"
        else:
            self.message = message or "Verification failed"
        super().__init__(self.message, *args, **kwargs)
