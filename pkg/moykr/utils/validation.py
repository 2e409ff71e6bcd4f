"""
Validation utilities for moykr parameters.
"""

import re
from typing import Tuple, Union

from ..exceptions import ValidationError


_RANGE_PATTERN = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


class ValidationUtils:
    """Utilities for validating engine parameters."""

    @staticmethod
    def validate_level(n: int, field: str = "n") -> int:
        """Validate the level parameter n.

        Args:
            n: The level (rank of the quantum group)
            field: Field name reported on failure

        Returns:
            int: The validated level

        Raises:
            ValidationError: If n is not an integer at least 2
        """
        if isinstance(n, bool) or not isinstance(n, int):
            raise ValidationError(f"Level must be an integer, got {n!r}", field=field)
        if n < 2:
            raise ValidationError(f"Level must be at least 2, got {n}", field=field)
        return n

    @staticmethod
    def validate_crossings(k: int, field: str = "k", minimum: int = 1) -> int:
        """Validate a crossing count.

        Args:
            k: Number of crossings
            field: Field name reported on failure
            minimum: Smallest accepted value

        Returns:
            int: The validated crossing count

        Raises:
            ValidationError: If k is not an integer at least ``minimum``
        """
        if isinstance(k, bool) or not isinstance(k, int):
            raise ValidationError(f"Crossing count must be an integer, got {k!r}", field=field)
        if k < minimum:
            raise ValidationError(
                f"Crossing count must be at least {minimum}, got {k}", field=field
            )
        return k

    @staticmethod
    def validate_nonnegative(m: int, field: str) -> int:
        """Validate a nonnegative integer argument."""
        if isinstance(m, bool) or not isinstance(m, int) or m < 0:
            raise ValidationError(f"{field} must be a nonnegative integer, got {m!r}", field=field)
        return m

    @staticmethod
    def parse_range(value: Union[str, Tuple[int, int]], field: str) -> Tuple[int, int]:
        """Parse an inclusive ``A..B`` range.

        Args:
            value: Range text such as ``"2..5"`` or an ``(a, b)`` pair
            field: Field name reported on failure

        Returns:
            Tuple[int, int]: The bounds, low first

        Raises:
            ValidationError: If the text is malformed or the range is empty
        """
        if isinstance(value, str):
            match = _RANGE_PATTERN.match(value)
            if not match:
                raise ValidationError(f"Range must look like A..B, got {value!r}", field=field)
            low, high = int(match.group(1)), int(match.group(2))
        else:
            try:
                low, high = (int(v) for v in value)
            except (TypeError, ValueError):
                raise ValidationError(f"Range must be a pair of integers, got {value!r}",
                                      field=field)
        if low > high:
            raise ValidationError(f"Empty range {low}..{high}", field=field)
        return low, high
