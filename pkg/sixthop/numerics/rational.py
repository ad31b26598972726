"""Exact rational arithmetic, parsing and decimal rendering."""

from __future__ import annotations

from enum import Enum
from fractions import Fraction

from sixthop.exceptions import DomainError, ExprSyntaxError

Rational = Fraction

TRUNCATION_MARKER = "…"


class ArithOp(str, Enum):
    """Binary arithmetic operations shared by rationals and intervals."""

    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"


class Rounding(str, Enum):
    """Direction used when an exact value is cut to a fixed number of digits."""

    TRUNCATE = "truncate"
    DOWN = "down"
    UP = "up"


def rat_arith(a: Fraction, b: Fraction, op: ArithOp) -> Fraction:
    """Exact rational arithmetic; the result is always in lowest terms."""
    match ArithOp(op):
        case ArithOp.ADD:
            return a + b
        case ArithOp.SUB:
            return a - b
        case ArithOp.MUL:
            return a * b
        case ArithOp.DIV:
            if b == 0:
                raise DomainError(f"division by zero: {format_rational(a)} / 0")
            return a / b
    raise AssertionError(op)


def parse_rational(text: str) -> Fraction:
    """Parse ``p``, ``p/q``, decimals and decimal-scientific strings (``1e-30``) exactly."""
    cleaned = text.strip()
    if not cleaned:
        raise ExprSyntaxError("empty rational literal", 0)
    try:
        return Fraction(cleaned)
    except (ValueError, ZeroDivisionError) as e:
        raise ExprSyntaxError(f"invalid rational literal '{text}': {e}") from e


def format_rational(q: Fraction) -> str:
    """Serialize as ``p/q`` (just ``p`` for integers)."""
    return str(q)


def ceil_log2(q: Fraction) -> int:
    """Smallest integer k with 2**k >= q, for q > 0."""
    if q <= 0:
        raise DomainError(f"ceil_log2 needs a positive argument, got {q}")
    k = q.numerator.bit_length() - q.denominator.bit_length()
    while Fraction(2) ** k < q:
        k += 1
    while Fraction(2) ** (k - 1) >= q:
        k -= 1
    return k


def bits_for(tol: Fraction) -> int:
    """Number of fractional bits needed so that 2**-bits <= tol."""
    return max(1, ceil_log2(1 / tol))


def to_decimal(q: Fraction, digits: int, rounding: Rounding = Rounding.TRUNCATE) -> str:
    """Exact rational to decimal with ``digits`` fractional digits.

    The truncation marker is appended whenever the printed digits are not the exact value.
    """
    if digits < 0:
        raise DomainError(f"digits must be non-negative, got {digits}")
    scale = 10**digits
    scaled = q * scale
    match rounding:
        case Rounding.DOWN:
            units = scaled.numerator // scaled.denominator
        case Rounding.UP:
            units = -((-scaled.numerator) // scaled.denominator)
        case _:
            units = abs(scaled.numerator) // scaled.denominator
            if scaled < 0:
                units = -units
    exact = Fraction(units, scale) == q

    sign = "-" if units < 0 or (units == 0 and q < 0) else ""
    int_part, frac_part = divmod(abs(units), scale)
    text = f"{sign}{int_part}"
    if digits:
        text += "." + str(frac_part).rjust(digits, "0")
    return text if exact else text + TRUNCATION_MARKER
