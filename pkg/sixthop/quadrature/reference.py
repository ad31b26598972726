"""Certified enclosure of pi from Machin's arctangent formula.

pi = 16*atan(1/5) - 4*atan(1/239), summed in scaled integers with floor division. Each
included term is off by less than one unit and the alternating tail is smaller than one
unit, so the error bound is counted rather than estimated.
"""

from __future__ import annotations

from fractions import Fraction

from loguru import logger

from sixthop.exceptions import DomainError
from sixthop.numerics.interval import RatInterval

GUARD_DIGITS = 10
MAX_DIGITS = 1000


def _arctan_inverse(x: int, scale: int) -> tuple[int, int]:
    """Return (S, K) with |S - scale*atan(1/x)| < K + 1 after K series terms."""
    power = scale // x
    total = power
    x_squared = x * x
    k = 0
    while power:
        k += 1
        power //= x_squared
        term = power // (2 * k + 1)
        total += -term if k % 2 else term
    return total, k + 1


def pi_reference(digits: int) -> RatInterval:
    """Enclosure of pi of width below 10**-digits.

    The result is rounded outward onto the 10**-(digits+1) grid with one grid step of
    margin on both sides, which makes pi_reference(d') a subset of pi_reference(d) for d' > d.
    """
    if not 1 <= digits <= MAX_DIGITS:
        raise DomainError(f"digits must lie in 1..{MAX_DIGITS}, got {digits}")
    scale = 10 ** (digits + GUARD_DIGITS)
    a, terms_a = _arctan_inverse(5, scale)
    b, terms_b = _arctan_inverse(239, scale)
    total = 16 * a - 4 * b
    error = 16 * (terms_a + 1) + 4 * (terms_b + 1)
    tight = RatInterval(Fraction(total - error, scale), Fraction(total + error, scale))

    grid = 10 ** (digits + 1)
    lo_units = (tight.lo.numerator * grid) // tight.lo.denominator - 1
    hi_units = -((-tight.hi.numerator * grid) // tight.hi.denominator) + 1
    result = RatInterval(Fraction(lo_units, grid), Fraction(hi_units, grid))
    logger.debug(f"pi reference at {digits} digits from {terms_a}+{terms_b} arctangent terms")
    return result
