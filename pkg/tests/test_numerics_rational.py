"""Tests for exact rational helpers."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given

from sixthop.exceptions import DomainError, ExprSyntaxError
from sixthop.numerics import (
    ArithOp,
    Rounding,
    bits_for,
    ceil_log2,
    format_rational,
    parse_rational,
    rat_arith,
    to_decimal,
)
from tests.strategies import nonzero_rationals, positive_rationals, rationals


class TestRatArith:
    """rat_arith on the four operations."""

    @pytest.mark.parametrize(
        "a,b,op,expected",
        [
            (Fraction(1, 2), Fraction(1, 3), ArithOp.ADD, Fraction(5, 6)),
            (Fraction(1, 2), Fraction(1, 3), ArithOp.SUB, Fraction(1, 6)),
            (Fraction(2, 3), Fraction(3, 4), ArithOp.MUL, Fraction(1, 2)),
            (Fraction(2, 3), Fraction(4, 9), ArithOp.DIV, Fraction(3, 2)),
        ],
    )
    def test_operations(self, a, b, op, expected):
        """Results are exact and reduced."""
        assert rat_arith(a, b, op) == expected

    def test_division_by_zero(self):
        """Dividing by zero is a domain error."""
        with pytest.raises(DomainError, match="division by zero"):
            rat_arith(Fraction(1), Fraction(0), ArithOp.DIV)

    @given(rationals, nonzero_rationals)
    def test_division_inverts_multiplication(self, a, b):
        """(a*b)/b == a exactly."""
        assert rat_arith(rat_arith(a, b, ArithOp.MUL), b, ArithOp.DIV) == a


class TestParseRational:
    """Parsing rational literals."""

    @pytest.mark.parametrize(
        "text,expected",
        [
            ("3", Fraction(3)),
            ("-7/4", Fraction(-7, 4)),
            ("6/8", Fraction(3, 4)),
            ("0.125", Fraction(1, 8)),
            ("1e-30", Fraction(1, 10**30)),
            ("  2/3 ", Fraction(2, 3)),
        ],
    )
    def test_valid(self, text, expected):
        """Integers, fractions, decimals and scientific notation parse exactly."""
        assert parse_rational(text) == expected

    @pytest.mark.parametrize("text", ["", "abc", "1/0", "1//2"])
    def test_invalid(self, text):
        """Malformed literals raise ExprSyntaxError."""
        with pytest.raises(ExprSyntaxError):
            parse_rational(text)

    @given(rationals)
    def test_format_parses_back(self, q):
        """format_rational output is accepted by parse_rational."""
        assert parse_rational(format_rational(q)) == q


class TestFormatRational:
    """Canonical p/q rendering."""

    def test_integer(self):
        """Integers print without a denominator."""
        assert format_rational(Fraction(4, 2)) == "2"

    def test_fraction(self):
        """Fractions print in lowest terms."""
        assert format_rational(Fraction(-6, 8)) == "-3/4"


class TestLog2Helpers:
    """ceil_log2 and bits_for."""

    @pytest.mark.parametrize(
        "q,expected",
        [(Fraction(1), 0), (Fraction(2), 1), (Fraction(3), 2), (Fraction(1, 2), -1), (Fraction(1, 3), -1), (Fraction(1024), 10)],
    )
    def test_ceil_log2(self, q, expected):
        """Smallest k with 2**k >= q."""
        assert ceil_log2(q) == expected

    def test_ceil_log2_non_positive(self):
        """Non-positive arguments are rejected."""
        with pytest.raises(DomainError):
            ceil_log2(Fraction(0))

    @given(positive_rationals)
    def test_ceil_log2_bracket(self, q):
        """2**(k-1) < q <= 2**k."""
        k = ceil_log2(q)
        assert Fraction(2) ** (k - 1) < q <= Fraction(2) ** k

    def test_bits_for(self):
        """2**-bits_for(tol) never exceeds tol."""
        for tol in (Fraction(1, 10), Fraction(1, 10**30), Fraction(1, 2)):
            assert Fraction(1, 2 ** bits_for(tol)) <= tol

    def test_bits_for_large_tolerance(self):
        """At least one bit is always requested."""
        assert bits_for(Fraction(10)) == 1


class TestToDecimal:
    """Decimal rendering with the truncation marker."""

    def test_exact_value(self):
        """Values representable in the digits carry no marker."""
        assert to_decimal(Fraction(1, 4), 2) == "0.25"

    def test_truncated_value(self):
        """Truncated values end with the marker."""
        assert to_decimal(Fraction(1, 3), 5) == "0.33333…"

    def test_negative_truncation_is_toward_zero(self):
        """Truncation of negatives keeps the sign and drops digits."""
        assert to_decimal(Fraction(-2, 3), 3) == "-0.666…"

    def test_small_negative(self):
        """Negative values that truncate to zero keep the minus sign."""
        assert to_decimal(Fraction(-1, 3000), 2) == "-0.00…"

    def test_rounding_directions(self):
        """DOWN floors and UP ceils at the last digit."""
        assert to_decimal(Fraction(2, 3), 2, Rounding.DOWN) == "0.66…"
        assert to_decimal(Fraction(2, 3), 2, Rounding.UP) == "0.67…"
        assert to_decimal(Fraction(-2, 3), 2, Rounding.DOWN) == "-0.67…"

    def test_zero_digits(self):
        """With zero digits no decimal point is printed."""
        assert to_decimal(Fraction(7, 2), 0) == "3…"
        assert to_decimal(Fraction(3), 0) == "3"

    def test_negative_digits(self):
        """A negative digit count is rejected."""
        with pytest.raises(DomainError):
            to_decimal(Fraction(1), -1)
