"""Expression trees over the index symbol n, and their canonical printer."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

MAX_DEPTH = 128
MAX_NODES = 4096
MAX_EXPONENT = 64

# Precedence levels used by the printer
PREC_ADD = 1
PREC_MUL = 2
PREC_UNARY = 3
PREC_POW = 4
PREC_ATOM = 5


@dataclass(frozen=True)
class Const:
    value: Fraction
    depth: int = field(default=1, init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", Fraction(self.value))


@dataclass(frozen=True)
class Index:
    """The index symbol n; at the infinite index it becomes omega."""

    depth: int = field(default=1, init=False, compare=False, repr=False)


@dataclass(frozen=True)
class Eps:
    depth: int = field(default=1, init=False, compare=False, repr=False)


@dataclass(frozen=True)
class Omega:
    depth: int = field(default=1, init=False, compare=False, repr=False)


@dataclass(frozen=True)
class _Binary:
    left: SeqExpr
    right: SeqExpr
    depth: int = field(default=1, init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "depth", 1 + max(self.left.depth, self.right.depth))


@dataclass(frozen=True)
class Add(_Binary):
    pass


@dataclass(frozen=True)
class Sub(_Binary):
    pass


@dataclass(frozen=True)
class Mul(_Binary):
    pass


@dataclass(frozen=True)
class Div(_Binary):
    pass


@dataclass(frozen=True)
class Pow:
    """base^exponent; exponents are integers except on eps/omega atoms."""

    base: SeqExpr
    exponent: Fraction
    depth: int = field(default=1, init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponent", Fraction(self.exponent))
        object.__setattr__(self, "depth", 1 + self.base.depth)


@dataclass(frozen=True)
class Sqrt:
    arg: SeqExpr
    depth: int = field(default=1, init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "depth", 1 + self.arg.depth)


@dataclass(frozen=True)
class Neg:
    arg: SeqExpr
    depth: int = field(default=1, init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "depth", 1 + self.arg.depth)


SeqExpr = Union[Const, Index, Eps, Omega, Add, Sub, Mul, Div, Pow, Sqrt, Neg]

_BINARY_SYMBOL: dict[type, str] = {Add: "+", Sub: "-", Mul: "*", Div: "/"}
_BINARY_PREC: dict[type, int] = {Add: PREC_ADD, Sub: PREC_ADD, Mul: PREC_MUL, Div: PREC_MUL}

# trailing integer literal that is not an exponent
_TRAILING_EXPONENT = re.compile(r"(\^-?)?\d+$")


def _precedence(e: SeqExpr) -> int:
    match e:
        case Const(value=v):
            if v < 0:
                return PREC_UNARY if v.denominator == 1 else PREC_MUL
            return PREC_ATOM if v.denominator == 1 else PREC_MUL
        case Neg():
            return PREC_UNARY
        case Pow():
            return PREC_POW
        case _Binary():
            return _BINARY_PREC[type(e)]
    return PREC_ATOM


def _is_negative(e: SeqExpr) -> bool:
    return isinstance(e, Neg) or (isinstance(e, Const) and e.value < 0)


def _format_exponent(k: Fraction) -> str:
    if k.denominator == 1:
        return str(k.numerator)
    return f"({k})"


def _wrap(e: SeqExpr, min_prec: int, leftmost: bool) -> str:
    """Print e, parenthesized when its precedence is below min_prec or a sign would be ambiguous."""
    if _precedence(e) < min_prec or (_is_negative(e) and not leftmost):
        return f"({_print(e, leftmost=True)})"
    return _print(e, leftmost)


def _print(e: SeqExpr, leftmost: bool) -> str:
    match e:
        case Const(value=v):
            return str(v)
        case Index():
            return "n"
        case Eps():
            return "eps"
        case Omega():
            return "omega"
        case Sqrt(arg=arg):
            return f"sqrt({_print(arg, leftmost=True)})"
        case Neg(arg=arg):
            if isinstance(arg, Const):
                return f"-({arg.value})"
            return f"-{_wrap(arg, PREC_UNARY, leftmost=False)}"
        case Pow(base=base, exponent=k):
            return f"{_wrap(base, PREC_ATOM, leftmost)}^{_format_exponent(k)}"
        case _Binary(left=left, right=right):
            prec = _BINARY_PREC[type(e)]
            left_text = _wrap(left, prec, leftmost)
            right_text = _wrap(right, prec + 1, leftmost=False)
            if isinstance(e, Div) and right_text[0].isdigit():
                trailing = _TRAILING_EXPONENT.search(left_text)
                if trailing is not None and not trailing.group(1):
                    # "a/b" after an integer literal would lex as a rational literal
                    right_text = f"({right_text})"
            return f"{left_text}{_BINARY_SYMBOL[type(e)]}{right_text}"
    raise TypeError(f"not an expression node: {e!r}")


def print_seq_expr(e: SeqExpr) -> str:
    """Canonical text; parsing it gives back a structurally identical tree."""
    return _print(e, leftmost=True)
