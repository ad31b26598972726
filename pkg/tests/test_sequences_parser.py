"""Tests for the sequence parser and canonical printer."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings

from sixthop.exceptions import ExprLimitError, ExprSyntaxError
from sixthop.sequences import (
    MAX_INPUT_LENGTH,
    Add,
    Const,
    Div,
    Eps,
    Index,
    Mul,
    Neg,
    Omega,
    Pow,
    Sqrt,
    Sub,
    parse_seq_expr,
    print_seq_expr,
    tokenize,
)
from tests.strategies import seq_exprs


class TestTokenize:
    """Regex tokenizer."""

    def test_positions(self):
        """Tokens carry their character offsets."""
        tokens = tokenize("n + 12")
        assert [(t.kind, t.text, t.position) for t in tokens] == [
            ("name", "n", 0),
            ("op", "+", 2),
            ("num", "12", 4),
            ("end", "", 6),
        ]

    def test_unknown_identifier(self):
        """Only n, sqrt, eps and omega are identifiers."""
        with pytest.raises(ExprSyntaxError, match="unknown identifier 'x' at offset 2"):
            tokenize("2*x")

    def test_unexpected_character(self):
        """Characters outside the grammar are rejected with their offset."""
        with pytest.raises(ExprSyntaxError, match="unexpected character '&' at offset 1"):
            tokenize("n&1")


class TestParse:
    """Parsing closed-form sequences."""

    def test_quotient(self):
        """(n+1)/n parses into a division tree."""
        assert parse_seq_expr("(n+1)/n") == Div(Add(Index(), Const(1)), Index())

    def test_precedence(self):
        """Multiplication binds tighter than addition, powers tighter than both."""
        assert parse_seq_expr("1 + 2*n^2") == Add(Const(1), Mul(Const(2), Pow(Index(), 2)))

    def test_left_associative(self):
        """Subtraction and division associate to the left."""
        assert parse_seq_expr("n-1-2") == Sub(Sub(Index(), Const(1)), Const(2))
        assert parse_seq_expr("n/n/n") == Div(Div(Index(), Index()), Index())

    def test_rational_literal(self):
        """INT/INT is a single rational constant."""
        assert parse_seq_expr("3/4") == Const(Fraction(3, 4))
        assert parse_seq_expr("6/8") == Const(Fraction(3, 4))

    def test_negative_literal(self):
        """A minus before a numeral folds into the constant."""
        assert parse_seq_expr("-3/4") == Const(Fraction(-3, 4))
        assert parse_seq_expr("-2*n") == Mul(Const(-2), Index())

    def test_negation(self):
        """A minus before anything else is a negation node."""
        assert parse_seq_expr("-n") == Neg(Index())
        assert parse_seq_expr("-(2)") == Neg(Const(2))
        assert parse_seq_expr("-2^2") == Neg(Pow(Const(2), 2))

    def test_negative_exponent(self):
        """Integer exponents may be negative."""
        assert parse_seq_expr("n^-2") == Pow(Index(), -2)

    def test_sqrt(self):
        """sqrt takes a parenthesized expression."""
        assert parse_seq_expr("sqrt(n^2+n)-n") == Sub(Sqrt(Add(Pow(Index(), 2), Index())), Index())

    def test_whitespace_insensitive(self):
        """Whitespace between tokens is ignored."""
        assert parse_seq_expr(" ( n + 1 ) / n ") == parse_seq_expr("(n+1)/n")

    def test_infinitesimals(self):
        """eps, omega and rational exponents parse in the Levi-Civita grammar."""
        assert parse_seq_expr("eps^(1/2)", allow_infinitesimals=True) == Pow(Eps(), Fraction(1, 2))
        assert parse_seq_expr("omega^(-3/2)", allow_infinitesimals=True) == Pow(Omega(), Fraction(-3, 2))
        assert parse_seq_expr("1 + eps", allow_infinitesimals=True) == Add(Const(1), Eps())


class TestParseErrors:
    """Malformed input and limits."""

    def test_trailing_operator(self):
        """A dangling operator fails at the end of input."""
        with pytest.raises(ExprSyntaxError, match="expected an operand, found end of input at offset 3") as info:
            parse_seq_expr("n +")
        assert info.value.position == 3

    def test_unbalanced_parenthesis(self):
        """A missing closing parenthesis is reported."""
        with pytest.raises(ExprSyntaxError, match=r"expected '\)', found end of input at offset 2"):
            parse_seq_expr("(n")

    def test_extra_parenthesis(self):
        """Leftover input is reported."""
        with pytest.raises(ExprSyntaxError, match=r"unexpected '\)' at offset 1"):
            parse_seq_expr("n)")

    def test_zero_denominator(self):
        """Rational literals cannot have a zero denominator."""
        with pytest.raises(ExprSyntaxError, match="zero denominator"):
            parse_seq_expr("1/0")

    def test_eps_outside_lc_grammar(self):
        """eps is rejected in plain sequences."""
        with pytest.raises(ExprSyntaxError, match="only allowed in Levi-Civita expressions"):
            parse_seq_expr("1 + eps")

    def test_rational_exponent_on_index(self):
        """Rational exponents are reserved for eps and omega."""
        with pytest.raises(ExprSyntaxError, match="rational exponents"):
            parse_seq_expr("n^(1/2)", allow_infinitesimals=True)

    def test_exponent_limit(self):
        """Exponents above the limit are rejected."""
        with pytest.raises(ExprLimitError, match="exponent 65"):
            parse_seq_expr("n^65")

    def test_depth_limit(self):
        """Deeply nested parentheses are rejected before recursion gets deep."""
        with pytest.raises(ExprLimitError, match="depth"):
            parse_seq_expr("(" * 200 + "n" + ")" * 200)

    def test_node_limit(self):
        """Long chains hit the depth or node limit."""
        with pytest.raises(ExprLimitError):
            parse_seq_expr("+".join(["n"] * 5000))

    def test_length_limit(self):
        """Overlong input is rejected before tokenizing."""
        with pytest.raises(ExprLimitError, match="input longer"):
            parse_seq_expr("n" + " " * MAX_INPUT_LENGTH)

    def test_limit_errors_are_syntax_errors(self):
        """Limit violations share the syntax exit code."""
        with pytest.raises(ExprSyntaxError):
            parse_seq_expr("n^100")


class TestPrint:
    """Canonical printing."""

    @pytest.mark.parametrize(
        "text",
        ["(n+1)/n", "sqrt(n^2+n)-n", "1-1/n", "(1+1/n)^2", "-n/2", "5-2/n^2", "3*n^2", "(n^2)^3", "-(-n)"],
    )
    def test_canonical_text_is_stable(self, text):
        """Canonical text prints back unchanged."""
        assert print_seq_expr(parse_seq_expr(text)) == text

    def test_negative_operands_are_parenthesized(self):
        """Negative constants keep their parentheses outside the leftmost position."""
        assert print_seq_expr(Add(Index(), Const(-2))) == "n+(-2)"
        assert print_seq_expr(Sub(Const(-2), Index())) == "-2-n"
        assert print_seq_expr(Pow(Const(-2), 2)) == "(-2)^2"

    def test_division_after_integer_literal(self):
        """A numeral after a trailing integer is parenthesized so it is not read as a fraction."""
        assert print_seq_expr(Div(Const(-2), Const(3))) == "-2/(3)"
        assert print_seq_expr(Div(Div(Index(), Const(2)), Const(3))) == "n/2/(3)"
        assert print_seq_expr(Div(Pow(Const(2), 2), Const(3))) == "2^2/3"

    def test_rational_constant(self):
        """Fractional constants are parenthesized in products."""
        assert print_seq_expr(Mul(Index(), Const(Fraction(1, 2)))) == "n*(1/2)"

    def test_lc_atoms(self):
        """eps, omega and rational exponents print in the LC grammar."""
        assert print_seq_expr(Pow(Eps(), Fraction(1, 2))) == "eps^(1/2)"
        assert print_seq_expr(Omega()) == "omega"

    @settings(max_examples=500, deadline=None)
    @given(seq_exprs)
    def test_round_trip(self, tree):
        """print(parse(print(e))) == print(e), with a structurally identical tree."""
        text = print_seq_expr(tree)
        reparsed = parse_seq_expr(text)
        assert reparsed == tree
        assert print_seq_expr(reparsed) == text


class TestTreeHelpers:
    """Depth bookkeeping on constructed trees."""

    def test_depth(self):
        """Depth counts the longest root-to-leaf path."""
        assert parse_seq_expr("sqrt(n^2+n)-n").depth == 5
        assert Index().depth == 1
