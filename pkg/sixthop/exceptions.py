"""Exception hierarchy for exact and non-Archimedean computations.

Every class carries the CLI exit code it maps to; the library never exits on its own.
"""

from __future__ import annotations

from typing import Any


class SixthOpError(Exception):
    """Base exception for all sixthop errors."""

    exit_code: int = 2

    def __init__(self, message: str, subterm: str | None = None):
        self.message = message
        self.subterm = subterm
        super().__init__(message)

    def __str__(self) -> str:
        if self.subterm:
            return f"{self.message} (in subterm '{self.subterm}')"
        return self.message


class ExprSyntaxError(SixthOpError):
    """Expression text does not conform to the grammar."""

    exit_code = 1

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} at offset {position}"
        super().__init__(message)


class ExprLimitError(ExprSyntaxError):
    """Expression exceeds the depth, size or exponent limits."""


class UsageError(ExprSyntaxError):
    """Command line or configuration values are invalid."""


class DomainError(SixthOpError):
    """Operation is undefined for its arguments (zero divisor, negative radicand, ...)."""


class ModeError(DomainError):
    """Operation needs the interval-coefficient mode."""


class UndecidableError(DomainError):
    """A sign or classification cannot be decided from the available enclosure."""

    def __init__(self, message: str, term: Any = None, subterm: str | None = None):
        self.term = term
        if term is not None:
            message = f"{message}: {term}"
        super().__init__(message, subterm)


class NotFiniteError(DomainError):
    """The standard part was requested for an infinite number."""


class DivergesError(NotFiniteError):
    """A sequence evaluates to an infinite number at the infinite index."""


class NotAdequalError(DomainError):
    """Lower and upper sequences differ by an appreciable amount at the infinite index."""

    def __init__(self, message: str, gap: Any = None):
        self.gap = gap
        super().__init__(message)


class BudgetExceededError(SixthOpError):
    """Iteration budget exhausted before the tolerance was met."""

    exit_code = 3

    def __init__(self, message: str, width_floor: Any = None, precision: int | None = None):
        self.width_floor = width_floor
        self.precision = precision
        super().__init__(message)


class InvariantViolationError(SixthOpError):
    """An internal invariant failed; indicates a bug."""

    exit_code = 4
