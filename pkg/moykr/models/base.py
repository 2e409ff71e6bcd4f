"""
Base model classes for moykr.
"""

from typing import Any, Dict

from pydantic import BaseModel


class MoyKrModel(BaseModel):
    """Base model for all moykr result models."""

    def to_dict(self) -> Dict[str, Any]:
        """Plain dictionary in field declaration order."""
        return self.dict()


class FrozenModel(MoyKrModel):
    """Immutable, hashable value model."""

    class Config:
        """Pydantic configuration."""
        frozen = True
