"""Tests for rational interval arithmetic and certified square roots."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from sixthop.exceptions import DomainError
from sixthop.numerics import (
    ArithOp,
    RatInterval,
    format_interval_decimal,
    ival_arith,
    ival_compress,
    ival_hull,
    ival_intersect,
    ival_pow,
    ival_sqrt,
)
from tests.strategies import intervals, points_in, positive_rationals, rationals


class TestRatInterval:
    """Construction and predicates."""

    def test_empty_interval_rejected(self):
        """lo > hi is a domain error."""
        with pytest.raises(DomainError, match="empty interval"):
            RatInterval(Fraction(2), Fraction(1))

    def test_point(self, interval):
        """A point interval has zero width and contains its value."""
        x = interval(Fraction(1, 3))
        assert x.is_point()
        assert x.width == 0
        assert x.contains(Fraction(1, 3))

    def test_sign(self, interval):
        """sign is None exactly when the interval straddles zero."""
        assert interval(1, 2).sign() == 1
        assert interval(-2, -1).sign() == -1
        assert interval(0).sign() == 0
        assert interval(-1, 1).sign() is None
        assert interval(0, 1).sign() is None

    def test_straddles_zero(self, interval):
        """The exact zero does not straddle."""
        assert not interval(0).straddles_zero()
        assert interval(0, 1).straddles_zero()
        assert not interval(1, 2).straddles_zero()

    def test_str(self, interval):
        """Intervals print as [lo, hi] with p/q endpoints."""
        assert str(interval(Fraction(1, 2), 3)) == "[1/2, 3]"

    def test_operators_with_rationals(self, interval):
        """Operators accept plain rationals on either side."""
        x = interval(1, 2)
        assert x + 1 == interval(2, 3)
        assert 1 - x == interval(-1, 0)
        assert 2 * x == interval(2, 4)
        assert 1 / x == interval(Fraction(1, 2), 1)


class TestIntervalArithmetic:
    """Enclosure soundness of the four operations."""

    @given(st.data(), intervals(), intervals(), st.sampled_from([ArithOp.ADD, ArithOp.SUB, ArithOp.MUL]))
    def test_ring_enclosure(self, data, x, y, op):
        """For a in X and b in Y, a op b lies in X op Y."""
        a, b = data.draw(points_in(x)), data.draw(points_in(y))
        result = ival_arith(x, y, op)
        exact = {ArithOp.ADD: a + b, ArithOp.SUB: a - b, ArithOp.MUL: a * b}[op]
        assert result.contains(exact)

    @given(st.data(), intervals(), intervals())
    def test_division_enclosure(self, data, x, y):
        """Division encloses a/b whenever Y excludes zero."""
        assume(not y.lo <= 0 <= y.hi)
        a, b = data.draw(points_in(x)), data.draw(points_in(y))
        assert ival_arith(x, y, ArithOp.DIV).contains(a / b)

    def test_division_by_straddling_interval(self, interval):
        """Dividing by an interval containing zero is a domain error."""
        with pytest.raises(DomainError, match="containing zero"):
            ival_arith(interval(1), interval(-1, 1), ArithOp.DIV)

    @given(st.data(), intervals(), st.integers(-4, 5))
    def test_power_enclosure(self, data, x, k):
        """a**k lies in X**k."""
        assume(k >= 0 or not x.lo <= 0 <= x.hi)
        a = data.draw(points_in(x))
        assert ival_pow(x, k).contains(a**k)

    def test_even_power_of_straddling_interval(self, interval):
        """Even powers of straddling intervals start at zero."""
        assert ival_pow(interval(-2, 1), 2) == interval(0, 4)

    def test_negative_power_of_straddling_interval(self, interval):
        """Negative powers of intervals containing zero are rejected."""
        with pytest.raises(DomainError):
            ival_pow(interval(-1, 1), -1)

    def test_hull_and_intersect(self, interval):
        """Hull spans, intersection narrows, disjoint intersection fails."""
        assert ival_hull(interval(0, 1), interval(3, 4)) == interval(0, 4)
        assert ival_intersect(interval(0, 2), interval(1, 3)) == interval(1, 2)
        with pytest.raises(DomainError, match="disjoint"):
            ival_intersect(interval(0, 1), interval(2, 3))


class TestIntervalSqrt:
    """Certified square roots."""

    @given(intervals(elements=positive_rationals), st.integers(1, 200))
    def test_encloses_squares(self, x, p):
        """Squaring the enclosure of sqrt(X) contains X."""
        root = ival_sqrt(x, p)
        squared = ival_pow(root, 2)
        assert squared.contains(x)

    @given(positive_rationals, st.integers(1, 200))
    def test_added_width(self, q, p):
        """A point input gives width at most 2**-p."""
        assert ival_sqrt(RatInterval.point(q), p).width <= Fraction(1, 2**p)

    def test_exact_for_rational_squares(self, interval):
        """Squares of rationals give point results."""
        assert ival_sqrt(interval(Fraction(9, 4)), 10) == interval(Fraction(3, 2))
        assert ival_sqrt(interval(Fraction(1, 4), 4), 3) == interval(Fraction(1, 2), 2)

    def test_irrational_root_strictly_inside(self, interval):
        """sqrt(2) lies strictly between the dyadic endpoints."""
        root = ival_sqrt(interval(2), 60)
        assert root.lo**2 < 2 < root.hi**2
        assert root.width == Fraction(1, 2**60)

    @given(st.integers(2, 10**6), st.integers(2, 10**6), st.integers(8, 80))
    def test_monotone(self, a, b, p):
        """a < b implies the enclosure of sqrt(a) starts no later than that of sqrt(b)."""
        assume(a != b)
        a, b = min(a, b), max(a, b)
        ra, rb = ival_sqrt(RatInterval.point(a), p), ival_sqrt(RatInterval.point(b), p)
        assert ra.lo <= rb.lo
        assert ra.hi <= rb.hi

    @given(st.lists(positive_rationals, min_size=4, max_size=4), st.integers(1, 40))
    def test_inclusion_monotone(self, ends, p):
        """X inside X' gives sqrt(X) inside sqrt(X'), for rational endpoints too."""
        a, b, c, d = sorted(ends)
        inner, outer = RatInterval(b, c), RatInterval(a, d)
        assert ival_sqrt(outer, p).contains(ival_sqrt(inner, p))

    def test_inclusion_with_off_grid_square(self, interval):
        """1/9 has root 1/3, which is off the dyadic grid; the enclosures still nest."""
        outer = ival_sqrt(interval(Fraction(1, 9), Fraction(1, 4)), 4)
        inner = ival_sqrt(interval(Fraction(1, 9) + Fraction(1, 10**6), Fraction(1, 4)), 4)
        assert outer.contains(inner)
        assert outer == interval(Fraction(5, 16), Fraction(1, 2))

    def test_point_square_is_exact_off_grid(self, interval):
        """A point interval holding a rational square keeps its exact root."""
        assert ival_sqrt(interval(Fraction(1, 9)), 4) == interval(Fraction(1, 3))

    def test_negative_argument(self, interval):
        """Negative lower endpoints are rejected."""
        with pytest.raises(DomainError):
            ival_sqrt(interval(-1, 4), 10)

    def test_precision_must_be_positive(self, interval):
        """Zero bits of precision are rejected."""
        with pytest.raises(DomainError, match="precision"):
            ival_sqrt(interval(2), 0)


class TestIntervalCompress:
    """Outward rounding onto the dyadic grid."""

    @given(intervals(), st.integers(1, 64))
    def test_compress_contains_input(self, x, p):
        """Compression only widens."""
        compressed = ival_compress(x, p)
        assert compressed.contains(x)
        assert compressed.width <= x.width + Fraction(2, 2**p)

    def test_small_denominators_kept(self, interval):
        """Endpoints whose denominators fit are left untouched."""
        x = interval(Fraction(1, 3), Fraction(2, 3))
        assert ival_compress(x, 8) == x

    def test_rounds_outward(self, interval):
        """Endpoints with large denominators move outward onto the grid."""
        x = interval(Fraction(1, 1000), Fraction(999, 1000))
        compressed = ival_compress(x, 4)
        assert compressed == interval(0, 1)

    @given(rationals)
    def test_compress_point_denominator(self, q):
        """Compressed endpoints have denominators at most 2**p."""
        compressed = ival_compress(RatInterval.point(q), 5)
        assert compressed.lo.denominator <= 32 and compressed.hi.denominator <= 32


class TestFormatIntervalDecimal:
    """Outward-rounded decimal text."""

    def test_outward(self, interval):
        """The lower end rounds down and the upper end rounds up."""
        assert format_interval_decimal(interval(Fraction(1, 3), Fraction(2, 3)), 3) == "[0.333…, 0.667…]"

    def test_exact_endpoints(self, interval):
        """Exactly representable endpoints have no marker."""
        assert format_interval_decimal(interval(Fraction(1, 2), 1), 2) == "[0.50, 1.00]"
