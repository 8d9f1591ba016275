"""
Configuration models for the symplectic index CLI.
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from ..core.novikov.lattice import to_rational


SUITE_NAMES = [
    "rotation_oracles",
    "maslov_properties",
    "index_theorem",
    "reflection",
    "diagonal",
    "hormander",
    "monotonicity",
    "seidel_pushforward",
]


class NumericsConfig(BaseModel):
    """Tolerances and resolution of the crossing search."""

    tol: float = Field(default=1e-9, gt=0.0, lt=1e-3, description="Base tolerance; crossings are decided at √tol")
    grid: int = Field(default=4096, ge=64, le=1_000_000, description="Scan points along a path")
    nondegeneracy_margin: float = Field(default=1e-6, gt=0.0, description="Margin for transversality and 1 - F₂")
    perturbation_eps: float = Field(default=1e-4, gt=0.0, lt=0.1, description="Length of the retry perturbation")
    hormander_attempts: int = Field(default=32, ge=1, description="Auxiliary draws before giving up")


class SuiteConfig(BaseModel):
    """Randomized verification suites."""

    seed: int = Field(default=0xC0FFEE, ge=0, description="Master seed")
    trials: Optional[int] = Field(
        default=None, ge=0, description="Trials per suite and dimension; unset uses each suite's default"
    )
    dims: Optional[List[int]] = Field(
        default=None, description="Half-dimensions n (or m) to test; unset uses each suite's default"
    )
    skip_budget: float = Field(default=0.2, gt=0.0, le=1.0, description="Largest tolerated skip fraction")
    suites: List[str] = Field(default_factory=lambda: list(SUITE_NAMES), description="Suites to run")

    @field_validator("dims")
    @classmethod
    def validate_dims(cls, v: Optional[List[int]]) -> Optional[List[int]]:
        if v is None:
            return v
        if not v or any(n < 1 or n > 4 for n in v):
            raise ValueError("dims must be a non-empty list of integers in 1..4")
        return v

    @field_validator("suites")
    @classmethod
    def validate_suites(cls, v: List[str]) -> List[str]:
        unknown = [name for name in v if name not in SUITE_NAMES]
        if unknown:
            raise ValueError(f"Unknown suite(s): {', '.join(unknown)}")
        return v


class NovikovConfig(BaseModel):
    """Exact-arithmetic settings."""

    sample_lambdas: List[str] = Field(
        default=["5/4", "3/2", "2"], description="Area ratios λ ∈ (1, 2] for the monotonicity suite"
    )

    @field_validator("sample_lambdas")
    @classmethod
    def validate_lambdas(cls, v: List[str]) -> List[str]:
        for text in v:
            try:
                value = to_rational(text)
            except (ValueError, TypeError):
                raise ValueError(f"λ must be a rational number, got {text!r}")
            if value <= 1:
                raise ValueError(f"λ must exceed 1, got {text}")
        return v


class OutputConfig(BaseModel):
    """Output configuration."""

    format: str = Field(default="text", description="Output format: text, records")
    show_crossings: bool = Field(default=True, description="List crossings under an index")
    color_enabled: bool = Field(default=True, description="Enable colored output")
    console_width: Optional[int] = Field(default=None, description="Console width (auto-detect if None)")

    @field_validator("format")
    @classmethod
    def validate_format(cls, v: str) -> str:
        if v not in ["text", "records"]:
            raise ValueError("Format must be one of: text, records")
        return v


class Config(BaseSettings):
    """Main configuration model."""

    model_config = SettingsConfigDict(
        env_prefix="SYMPIDX_",
        env_nested_delimiter="__",
        extra="forbid",
        validate_assignment=True,
    )

    numerics: NumericsConfig = Field(default_factory=NumericsConfig, description="Numerical settings")
    suite: SuiteConfig = Field(default_factory=SuiteConfig, description="Suite settings")
    novikov: NovikovConfig = Field(default_factory=NovikovConfig, description="Novikov settings")
    output: OutputConfig = Field(default_factory=OutputConfig, description="Output configuration")

    log_level: str = Field(default="WARNING", description="Logging level")
    version: str = Field(default="1.0.0", description="Configuration version")

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        v = v.upper()
        if v not in ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]:
            raise ValueError("log_level must be one of: DEBUG, INFO, WARNING, ERROR, CRITICAL")
        return v

    def with_overrides(self, **sections: Dict[str, Any]) -> "Config":
        """Copy with per-section overrides; ``None`` values are ignored."""
        data = self.model_dump()
        for section, values in sections.items():
            data[section].update({k: v for k, v in values.items() if v is not None})
        return Config(**data)


class RunConfig(BaseModel):
    """
    One CLI invocation: the command, its input and every flag that affects output.

    Two identical run configurations produce identical report bytes.
    """

    model_config = ConfigDict(extra="forbid")

    command: str
    input_path: Optional[str] = None
    seed: Optional[int] = Field(None, ge=0)
    trials: Optional[int] = Field(None, ge=0)
    tol: Optional[float] = Field(None, gt=0.0)
    grid: Optional[int] = Field(None, ge=64)
    output: Optional[str] = None
    format: Optional[str] = None
    flavor: Optional[str] = None
    duration: Optional[float] = Field(None, gt=0.0)
    golden: bool = False
    require_nondegenerate: bool = False

    @field_validator("flavor")
    @classmethod
    def validate_flavor(cls, v: Optional[str]) -> Optional[str]:
        if v is not None and v not in ("lagrangian", "periodic"):
            raise ValueError("flavor must be one of: lagrangian, periodic")
        return v

    def apply(self, config: Config) -> Config:
        """Configuration with this run's flags layered over ``config``."""
        return config.with_overrides(
            numerics={"tol": self.tol, "grid": self.grid},
            suite={"seed": self.seed, "trials": self.trials},
            output={"format": self.format},
        )
