"""Closed rational intervals with certified enclosures.

Endpoints are exact rationals, so addition, subtraction, multiplication and division
need no outward rounding. Only ``ival_sqrt`` and ``ival_compress`` widen, and both
report their added width in bits of precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from sixthop.exceptions import DomainError
from sixthop.numerics.rational import ArithOp, Rounding, format_rational, to_decimal


@dataclass(frozen=True)
class RatInterval:
    """Closed interval [lo, hi] with rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise DomainError(f"empty interval: lo {self.lo} > hi {self.hi}")

    @classmethod
    def point(cls, q: Fraction | int) -> RatInterval:
        return cls(Fraction(q), Fraction(q))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x: Fraction | int | RatInterval) -> bool:
        if isinstance(x, RatInterval):
            return self.lo <= x.lo and x.hi <= self.hi
        return self.lo <= x <= self.hi

    def intersects(self, other: RatInterval) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def straddles_zero(self) -> bool:
        """True when the sign of the enclosed value cannot be decided."""
        return self.lo <= 0 <= self.hi and not self.lo == self.hi == 0

    def sign(self) -> int | None:
        """+1, -1 or 0 when determinate, None when the interval straddles zero."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None

    def __str__(self) -> str:
        return f"[{format_rational(self.lo)}, {format_rational(self.hi)}]"

    def __neg__(self) -> RatInterval:
        return RatInterval(-self.hi, -self.lo)

    def __add__(self, other: RatInterval | Fraction | int) -> RatInterval:
        return ival_arith(self, _as_interval(other), ArithOp.ADD)

    def __radd__(self, other: Fraction | int) -> RatInterval:
        return ival_arith(_as_interval(other), self, ArithOp.ADD)

    def __sub__(self, other: RatInterval | Fraction | int) -> RatInterval:
        return ival_arith(self, _as_interval(other), ArithOp.SUB)

    def __rsub__(self, other: Fraction | int) -> RatInterval:
        return ival_arith(_as_interval(other), self, ArithOp.SUB)

    def __mul__(self, other: RatInterval | Fraction | int) -> RatInterval:
        return ival_arith(self, _as_interval(other), ArithOp.MUL)

    def __rmul__(self, other: Fraction | int) -> RatInterval:
        return ival_arith(_as_interval(other), self, ArithOp.MUL)

    def __truediv__(self, other: RatInterval | Fraction | int) -> RatInterval:
        return ival_arith(self, _as_interval(other), ArithOp.DIV)

    def __rtruediv__(self, other: Fraction | int) -> RatInterval:
        return ival_arith(_as_interval(other), self, ArithOp.DIV)


def _as_interval(x: RatInterval | Fraction | int) -> RatInterval:
    return x if isinstance(x, RatInterval) else RatInterval.point(x)


def ival_arith(x: RatInterval, y: RatInterval, op: ArithOp) -> RatInterval:
    """Exact endpoint arithmetic; the result contains every x∘y with x∈X, y∈Y."""
    match ArithOp(op):
        case ArithOp.ADD:
            return RatInterval(x.lo + y.lo, x.hi + y.hi)
        case ArithOp.SUB:
            return RatInterval(x.lo - y.hi, x.hi - y.lo)
        case ArithOp.MUL:
            products = (x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi)
            return RatInterval(min(products), max(products))
        case ArithOp.DIV:
            if y.lo <= 0 <= y.hi:
                raise DomainError(f"division by an interval containing zero: {x} / {y}")
            return ival_arith(x, RatInterval(1 / y.hi, 1 / y.lo), ArithOp.MUL)
    raise AssertionError(op)


def ival_pow(x: RatInterval, k: int) -> RatInterval:
    """Integer power with sign-case analysis (tight for even powers of straddling intervals)."""
    if k < 0:
        if x.lo <= 0 <= x.hi:
            raise DomainError(f"negative power of an interval containing zero: {x}^{k}")
        return ival_arith(RatInterval.point(1), ival_pow(x, -k), ArithOp.DIV)
    if k == 0:
        return RatInterval.point(1)
    lo_k, hi_k = x.lo**k, x.hi**k
    if k % 2 == 1 or x.lo >= 0:
        return RatInterval(lo_k, hi_k)
    if x.hi <= 0:
        return RatInterval(hi_k, lo_k)
    return RatInterval(Fraction(0), max(lo_k, hi_k))


def ival_hull(*xs: RatInterval) -> RatInterval:
    return RatInterval(min(x.lo for x in xs), max(x.hi for x in xs))


def ival_intersect(x: RatInterval, y: RatInterval) -> RatInterval:
    if not x.intersects(y):
        raise DomainError(f"disjoint intervals: {x} and {y}")
    return RatInterval(max(x.lo, y.lo), min(x.hi, y.hi))


def _exact_sqrt(q: Fraction) -> Fraction | None:
    """Square root of q if q is the square of a rational, else None."""
    if q < 0:
        return None
    num_root = math.isqrt(q.numerator)
    den_root = math.isqrt(q.denominator)
    if num_root * num_root == q.numerator and den_root * den_root == q.denominator:
        return Fraction(num_root, den_root)
    return None


def _sqrt_floor(q: Fraction, p: int) -> Fraction:
    """Largest dyadic m/2**p with m/2**p <= sqrt(q)."""
    # integer Newton (math.isqrt) on the scaled radicand, bracket [m, m+1]/2**p
    return Fraction(math.isqrt((q.numerator << (2 * p)) // q.denominator), 1 << p)


def _sqrt_ceil(q: Fraction, p: int) -> Fraction:
    """Smallest dyadic m/2**p with m/2**p >= sqrt(q)."""
    floor = _sqrt_floor(q, p)
    return floor if floor * floor == q else floor + Fraction(1, 1 << p)


def ival_sqrt(x: RatInterval, p: int) -> RatInterval:
    """Enclosure of {sqrt(v) : v in X} with added width at most 2**(1-p).

    Endpoints are rounded outward onto the 2**-p grid, so X ⊆ X' implies
    ival_sqrt(X, p) ⊆ ival_sqrt(X', p). Roots that lie on the grid come out exact; a point
    interval holding the square of a rational gives the exact point root.
    """
    if p < 1:
        raise DomainError(f"precision must be at least 1 bit, got {p}")
    if x.lo < 0:
        raise DomainError(f"square root of an interval with negative lower endpoint: {x}")
    if x.is_point():
        exact = _exact_sqrt(x.lo)
        if exact is not None:
            return RatInterval.point(exact)
    return RatInterval(_sqrt_floor(x.lo, p), _sqrt_ceil(x.hi, p))


def _fits(q: Fraction, p: int) -> bool:
    return q.denominator <= (1 << p)


def ival_compress(x: RatInterval, p: int) -> RatInterval:
    """Outward-round endpoints onto the 2**-p grid unless their denominators already fit."""
    if p < 1:
        raise DomainError(f"precision must be at least 1 bit, got {p}")
    scale = 1 << p
    lo = x.lo if _fits(x.lo, p) else Fraction((x.lo.numerator * scale) // x.lo.denominator, scale)
    hi = x.hi if _fits(x.hi, p) else Fraction(-((-x.hi.numerator * scale) // x.hi.denominator), scale)
    return RatInterval(lo, hi)


def format_interval_decimal(x: RatInterval, digits: int) -> str:
    """Outward-rounded decimal rendering ``[lo…, hi…]``."""
    return f"[{to_decimal(x.lo, digits, Rounding.DOWN)}, {to_decimal(x.hi, digits, Rounding.UP)}]"
