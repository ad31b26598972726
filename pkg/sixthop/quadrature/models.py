"""Pydantic report models for Gregory quadrature runs."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field


class HistoryRecord(BaseModel):
    n: int
    I_lo: str
    I_hi: str
    C_lo: str
    C_hi: str
    I_decimal: Optional[str] = None
    C_decimal: Optional[str] = None


class QuadratureReport(BaseModel):
    preset: Optional[str] = None
    start_inscribed: str
    start_circumscribed: str
    tolerance: str
    precision: int
    iterations: int
    value: str  # exact hull "[lo, hi]"
    decimal: str  # lower endpoint, truncated
    enclosure_decimal: str
    width: str
    width_decimal: str
    rates: list[Optional[str]] = Field(default_factory=list)
    history: list[HistoryRecord] = Field(default_factory=list)
    status: str = "ok"
