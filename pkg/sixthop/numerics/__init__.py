"""Exact numerics: rationals and rational intervals with certified square roots."""

from sixthop.numerics.interval import (
    RatInterval,
    format_interval_decimal,
    ival_arith,
    ival_compress,
    ival_hull,
    ival_intersect,
    ival_pow,
    ival_sqrt,
)
from sixthop.numerics.rational import (
    ArithOp,
    Rational,
    Rounding,
    bits_for,
    ceil_log2,
    format_rational,
    parse_rational,
    rat_arith,
    to_decimal,
)

__all__ = [
    "ArithOp",
    "Rational",
    "RatInterval",
    "Rounding",
    "bits_for",
    "ceil_log2",
    "format_interval_decimal",
    "format_rational",
    "ival_arith",
    "ival_compress",
    "ival_hull",
    "ival_intersect",
    "ival_pow",
    "ival_sqrt",
    "parse_rational",
    "rat_arith",
    "to_decimal",
]
