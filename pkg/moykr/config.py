"""
Configuration management for moykr.
Loads and validates engine settings from environment variables and configuration files,
and validates the per-invocation settings of the command-line interface.
"""

import enum
import json
import os
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

import dotenv
from pydantic import BaseModel, Field, root_validator, validator

from .exceptions import ConfigurationError, ValidationError
from .utils.validation import ValidationUtils

# Load environment variables
dotenv.load_dotenv()


class Command(str, enum.Enum):
    """CLI commands."""
    JONES = "jones"
    HOMFLY = "homfly"
    KR = "kr"
    VERIFY = "verify"
    TABLE = "table"


class OutputFormat(str, enum.Enum):
    """Rendering of command results."""
    TEXT = "text"
    JSON = "json"


class PivotOrder(str, enum.Enum):
    """Scan order used to pick Gaussian elimination pivots."""
    LEFTMOST = "leftmost"
    RIGHTMOST = "rightmost"


COMPUTATION_COMMANDS = (Command.JONES, Command.HOMFLY, Command.KR)


class Config(BaseModel):
    """Engine configuration.

    Values come from keyword arguments, ``MOYKR_*`` environment variables (a ``.env``
    file is honoured) or a JSON file, in that order of precedence.
    """

    # Defaults for computations
    default_level: int = Field(
        default=2,
        description="Level n used when a command does not specify one"
    )
    default_crossings: int = Field(
        default=2,
        description="Crossing count k used when a command specifies neither k nor a braid"
    )

    # Formal complex engine
    pivot_order: PivotOrder = Field(
        default=PivotOrder.LEFTMOST,
        description="Pivot scan order for Gaussian elimination"
    )
    check_invariants: bool = Field(
        default=True,
        description="Check d² = 0 and degree homogeneity after every pipeline stage"
    )

    # Logging
    log_level: str = Field(
        default="WARNING",
        description="Level for the moykr logger"
    )

    # Verification ranges
    verify_max_level: int = Field(default=6, description="Largest n in the KR suites")
    verify_max_crossings: int = Field(default=9, description="Largest k in the KR suites")
    normal_form_max_crossings: int = Field(
        default=12,
        description="Largest k checked against the zigzag normal form"
    )
    scale_max_level: int = Field(
        default=11,
        description="Largest n for the Hopf and trefoil checks"
    )
    ring_max_level: int = Field(default=12, description="Largest m in the quantum integer checks")
    homfly_max_level: int = Field(default=8, description="Largest n in the HOMFLY suite")
    homfly_max_crossings: int = Field(default=8, description="Largest k in the HOMFLY suite")
    adm_max_level: int = Field(default=5, description="Largest n in the bracket-ring check")
    adm_max_crossings: int = Field(default=8, description="Largest k in the bracket-ring check")

    class Config:
        """Pydantic configuration."""
        env_prefix = "MOYKR_"
        case_sensitive = False
        validate_assignment = True

    @validator("default_level", "verify_max_level", "scale_max_level",
               "ring_max_level", "homfly_max_level", "adm_max_level")
    def validate_levels(cls, v):
        """Levels start at 2."""
        return ValidationUtils.validate_level(v, field="level")

    @validator("default_crossings", "verify_max_crossings", "normal_form_max_crossings",
               "homfly_max_crossings", "adm_max_crossings")
    def validate_crossings(cls, v):
        """Crossing counts start at 1."""
        return ValidationUtils.validate_crossings(v, field="crossings")

    @validator("log_level", pre=True)
    def validate_log_level(cls, v):
        """Normalize the log level name."""
        level = str(v).upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValidationError(f"Unknown log level: {v}", field="log_level")
        return level

    @root_validator(pre=True)
    def load_from_env(cls, values):
        """Load configuration from environment variables."""
        for field in cls.__fields__:
            env_var = f"MOYKR_{field.upper()}"
            if env_var in os.environ and field not in values:
                values[field] = os.environ[env_var]
        return values

    @classmethod
    def from_file(cls, file_path: Union[str, Path]) -> "Config":
        """Load configuration from a JSON file."""
        file_path = Path(file_path)
        if not file_path.exists():
            raise ConfigurationError(f"Config file not found: {file_path}")
        if file_path.suffix.lower() != ".json":
            raise ConfigurationError(f"Unsupported config file format: {file_path.suffix}")
        try:
            with open(file_path, "r") as f:
                config_data = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigurationError(f"Invalid JSON in {file_path}: {e}")
        return cls(**config_data)

    def to_dict(self) -> Dict[str, Any]:
        """Convert configuration to a dictionary."""
        return {key: (value.value if isinstance(value, enum.Enum) else value)
                for key, value in self.dict().items()}

    def to_json(self) -> str:
        """Convert configuration to a JSON string."""
        return json.dumps(self.to_dict(), indent=2)

    def save_to_file(self, file_path: Union[str, Path]) -> None:
        """Save configuration to a JSON file."""
        file_path = Path(file_path)
        if file_path.suffix.lower() != ".json":
            raise ConfigurationError(f"Unsupported config file format: {file_path.suffix}")
        with open(file_path, "w") as f:
            f.write(self.to_json())


class RunConfig(BaseModel):
    """Settings of a single CLI invocation."""

    command: Command = Field(description="The command to run")
    n: int = Field(default=2, description="Level n")
    k: Optional[int] = Field(default=None, description="Crossing count of the torus closure")
    braid: Optional[str] = Field(default=None, description='Braid text, e.g. "w=2: 1 1 1"')
    output_format: OutputFormat = Field(default=OutputFormat.TEXT, description="Output format")
    n_range: Tuple[int, int] = Field(default=(2, 4), description="Levels covered by table")
    k_range: Tuple[int, int] = Field(default=(1, 4), description="Crossings covered by table")
    spec_jones: bool = Field(
        default=False,
        description="Also specialize the HOMFLY-PT value to the level-n Jones polynomial"
    )

    @validator("n")
    def validate_n(cls, v):
        """n ≥ 2."""
        return ValidationUtils.validate_level(v)

    @validator("k")
    def validate_k(cls, v):
        """k ≥ 1 when given."""
        if v is None:
            return v
        return ValidationUtils.validate_crossings(v)

    @validator("n_range", pre=True)
    def parse_n_range(cls, v):
        """Accept ``A..B`` text."""
        low, high = ValidationUtils.parse_range(v, field="n_range")
        ValidationUtils.validate_level(low, field="n_range")
        return low, high

    @validator("k_range", pre=True)
    def parse_k_range(cls, v):
        low, high = ValidationUtils.parse_range(v, field="k_range")
        ValidationUtils.validate_crossings(low, field="k_range")
        return low, high

    @root_validator(pre=True)
    def exactly_one_input(cls, values):
        """Computation commands take exactly one of k / braid; k defaults to 2."""
        command = values.get("command")
        if command is not None and Command(command) in COMPUTATION_COMMANDS:
            has_k = values.get("k") is not None
            has_braid = values.get("braid") is not None
            if has_k and has_braid:
                raise ValidationError("Give either k or a braid, not both", field="braid")
            if not has_k and not has_braid:
                values["k"] = 2
        return values

    def params(self) -> Dict[str, Any]:
        """Parameters echoed in command output."""
        params: Dict[str, Any] = {"n": self.n}
        if self.command in COMPUTATION_COMMANDS:
            if self.braid is not None:
                params["braid"] = self.braid
            else:
                params["k"] = self.k
        elif self.command == Command.TABLE:
            params["n_range"] = f"{self.n_range[0]}..{self.n_range[1]}"
            params["k_range"] = f"{self.k_range[0]}..{self.k_range[1]}"
        return params
