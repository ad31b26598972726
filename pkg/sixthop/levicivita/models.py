"""Pydantic report models for Levi-Civita inspections (shadow, adequality)."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, Field

from sixthop.levicivita.coefficients import Coefficient
from sixthop.numerics.interval import RatInterval, format_interval_decimal
from sixthop.numerics.rational import format_rational, to_decimal

DEFAULT_DIGITS = 20


def render_exact(value: Coefficient) -> str:
    """``p/q`` for rationals and point intervals, ``[p/q, r/s]`` otherwise."""
    if isinstance(value, RatInterval):
        return format_rational(value.lo) if value.is_point() else str(value)
    return format_rational(Fraction(value))


def render_decimal(value: Coefficient, digits: int = DEFAULT_DIGITS) -> str:
    if isinstance(value, RatInterval):
        if value.is_point():
            return to_decimal(value.lo, digits)
        return format_interval_decimal(value, digits)
    return to_decimal(Fraction(value), digits)


class ShadowReport(BaseModel):
    expr: str
    value: str
    decimal: str
    classification: str
    lc_expansion: list[str] = Field(default_factory=list)
    validity: Optional[str] = None
    status: str = "ok"


class AdequalityReport(BaseModel):
    left: str
    right: str
    adequal: bool
    difference: str
    difference_class: Optional[str] = None
    shadow_left: Optional[str] = None
    shadow_right: Optional[str] = None
    status: str = "ok"
