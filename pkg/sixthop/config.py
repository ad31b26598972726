"""Validated command-line configuration."""

from __future__ import annotations

import argparse
from enum import Enum
from fractions import Fraction
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from sixthop.exceptions import ExprSyntaxError, UsageError
from sixthop.levicivita import DEFAULT_INTERVAL_PRECISION, DEFAULT_WINDOW, FieldConfig
from sixthop.numerics.rational import parse_rational

DEFAULT_DIGITS = 20
DEFAULT_TERMS = 6
MAX_DIGITS = 10_000


class OutputMode(str, Enum):
    PLAIN = "plain"
    JSON = "json"


class CliConfig(BaseModel):
    """Options shared by the subcommands; expression arguments stay on the namespace."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    command: str
    output: OutputMode = OutputMode.PLAIN
    window: Fraction = DEFAULT_WINDOW
    precision: Optional[int] = Field(default=None, ge=1)
    tolerance: Optional[Fraction] = None
    interval: bool = False
    terms: int = Field(default=DEFAULT_TERMS, ge=1)
    digits: int = Field(default=DEFAULT_DIGITS, ge=0, le=MAX_DIGITS)
    verbose: bool = False

    @field_validator("window", "tolerance", mode="before")
    @classmethod
    def _parse_rational(cls, v: Any) -> Any:
        if v is None or isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        try:
            return parse_rational(str(v))
        except ExprSyntaxError as e:
            raise ValueError(e.message) from e

    @field_validator("window", "tolerance")
    @classmethod
    def _positive(cls, v: Optional[Fraction]) -> Optional[Fraction]:
        if v is not None and v <= 0:
            raise ValueError(f"must be positive, got {v}")
        return v

    @property
    def is_json(self) -> bool:
        return self.output is OutputMode.JSON

    def field_config(self) -> FieldConfig:
        """FieldConfig for the LC-based subcommands."""
        if self.interval:
            return FieldConfig.interval(self.precision or DEFAULT_INTERVAL_PRECISION, self.window)
        return FieldConfig(window=self.window)

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> CliConfig:
        """Build from parsed arguments.

        Raises:
            UsageError: If any value fails validation.
        """
        values = {
            "command": ns.command,
            "output": OutputMode.JSON if getattr(ns, "json", False) else OutputMode.PLAIN,
            "verbose": getattr(ns, "verbose", False),
        }
        for name in ("window", "precision", "tolerance", "interval", "terms", "digits"):
            value = getattr(ns, name, None)
            if value is not None:
                values[name] = value
        try:
            return cls(**values)
        except ValidationError as e:
            details = "; ".join(f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in e.errors())
            raise UsageError(f"invalid option value: {details}") from e
