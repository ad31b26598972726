"""Pydantic report models for limits and closed-form terminations."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field


class EpsilonWitness(BaseModel):
    eps: str
    verdict: str  # "confirmed", "refuted", "inconclusive"
    witness: int
    distance: str


class LimitReport(BaseModel):
    expr: str
    method: str  # "shadow" or "epsilontic"
    value: str
    decimal: str
    lc_expansion: list[str] = Field(default_factory=list)
    lc_text: Optional[str] = None
    status: str = "ok"
    witnesses: Optional[list[EpsilonWitness]] = None


class TerminationReport(BaseModel):
    lower: str
    upper: str
    value: str
    decimal: str
    status: str = "ok"
