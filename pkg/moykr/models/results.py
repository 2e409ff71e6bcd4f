"""
Result models for command output and verification reports.
"""

import json
from typing import Any, Dict, List

from pydantic import Field

from ..exceptions import VerificationError
from .base import MoyKrModel


class HomologyEntry(MoyKrModel):
    """One nonzero bigraded homology dimension."""
    hdeg: int = Field(description="Homological degree")
    qdeg: int = Field(description="Quantum degree")
    dim: int = Field(description="Dimension")


class KRResult(MoyKrModel):
    """Output of the kr command."""
    complex: str = Field(description="Rendered normal-form complex")
    euler: str = Field(description="Poincaré polynomial at t = -1")
    homology: List[HomologyEntry] = Field(default_factory=list)
    poincare: str = Field(description="Poincaré polynomial in q, t")


class TableRow(MoyKrModel):
    """One cell of the Poincaré table."""
    n: int
    k: int
    poincare: str


class VerificationGroup(MoyKrModel):
    """Outcome of one verification group."""
    name: str
    passed: bool
    checks: int = Field(default=0, description="Number of checks run")
    failures: List[str] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list, description="Reported, not failed")


class VerificationReport(MoyKrModel):
    """All verification groups of one run."""
    groups: List[VerificationGroup] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(group.passed for group in self.groups)

    def failed_groups(self) -> List[str]:
        return [group.name for group in self.groups if not group.passed]

    def raise_for_failures(self) -> None:
        """Raise VerificationError naming every failed group."""
        failed = self.failed_groups()
        if failed:
            raise VerificationError(failures=failed)


class CommandOutput(MoyKrModel):
    """Top-level JSON document printed by the CLI."""
    command: str
    params: Dict[str, Any] = Field(default_factory=dict)
    result: Any = None

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)
