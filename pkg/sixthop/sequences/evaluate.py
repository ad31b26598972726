"""Evaluation of sequences at finite indices and at the infinite index omega.

The law of continuity is applied literally: the index symbol is replaced by omega and the
tree is evaluated with Levi-Civita arithmetic. Limits and terminations are then read off
as standard parts.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, TypeVar

from loguru import logger

from sixthop.exceptions import (
    DivergesError,
    DomainError,
    NotAdequalError,
    NotFiniteError,
    SixthOpError,
    UndecidableError,
)
from sixthop.levicivita import (
    DEFAULT_CONFIG,
    AtomKind,
    Coefficient,
    FieldConfig,
    LCNumber,
    format_lc,
    lc_add,
    lc_adequal,
    lc_atom,
    lc_div,
    lc_monomial,
    lc_mul,
    lc_neg,
    lc_pow,
    lc_sqrt,
    lc_st,
    lc_sub,
    render_exact,
)
from sixthop.numerics.interval import RatInterval, ival_arith, ival_intersect, ival_pow, ival_sqrt
from sixthop.numerics.rational import ArithOp
from sixthop.sequences.ast import (
    Add,
    Const,
    Div,
    Eps,
    Index,
    Mul,
    Neg,
    Omega,
    Pow,
    SeqExpr,
    Sqrt,
    Sub,
    print_seq_expr,
)

DEFAULT_FINITE_PRECISION = 64

T = TypeVar("T")

_ARITH_OPS: dict[type, ArithOp] = {Add: ArithOp.ADD, Sub: ArithOp.SUB, Mul: ArithOp.MUL, Div: ArithOp.DIV}


def _blame(node: SeqExpr, compute: Callable[[], T]) -> T:
    """Run compute; errors that do not name a subterm yet are attributed to node."""
    try:
        return compute()
    except SixthOpError as e:
        if e.subterm is None:
            e.subterm = print_seq_expr(node)
        raise


# ── Finite indices ────────────────────────────────────────────────────


def _finite_divide(numerator: RatInterval, divisor: RatInterval) -> RatInterval:
    if divisor.is_point() and divisor.lo == 0:
        raise DomainError("division by zero")
    if divisor.straddles_zero():
        raise UndecidableError("divisor enclosure contains zero; raise the precision", term=divisor)
    return ival_arith(numerator, divisor, ArithOp.DIV)


def _finite_sqrt(radicand: RatInterval, p: int) -> RatInterval:
    if radicand.hi < 0:
        raise DomainError(f"square root of a negative number {radicand}")
    if radicand.lo < 0:
        raise UndecidableError("radicand enclosure reaches below zero; raise the precision", term=radicand)
    return ival_sqrt(radicand, p)


def _finite_power(base: RatInterval, k: Fraction) -> RatInterval:
    if k.denominator != 1:
        raise DomainError(f"rational exponent {k} at a finite index")
    return ival_pow(base, int(k))


def _no_finite_value() -> RatInterval:
    raise DomainError("eps and omega have no value at a finite index")


def _finite(e: SeqExpr, n0: RatInterval, p: int) -> RatInterval:
    match e:
        case Const(value=v):
            return RatInterval.point(v)
        case Index():
            return n0
        case Eps() | Omega():
            return _blame(e, _no_finite_value)
        case Div(left=left, right=right):
            a, b = _finite(left, n0, p), _finite(right, n0, p)
            return _blame(e, lambda: _finite_divide(a, b))
        case Add(left=left, right=right) | Sub(left=left, right=right) | Mul(left=left, right=right):
            a, b = _finite(left, n0, p), _finite(right, n0, p)
            return ival_arith(a, b, _ARITH_OPS[type(e)])
        case Pow(base=base, exponent=k):
            a = _finite(base, n0, p)
            return _blame(e, lambda: _finite_power(a, k))
        case Sqrt(arg=arg):
            a = _finite(arg, n0, p)
            return _blame(e, lambda: _finite_sqrt(a, p))
        case Neg(arg=arg):
            return -_finite(arg, n0, p)
    raise TypeError(f"not an expression node: {e!r}")


def eval_finite(e: SeqExpr, n0: Fraction | int, p: int = DEFAULT_FINITE_PRECISION) -> RatInterval:
    """Certified enclosure of e(n0); a point interval when no sqrt occurs.

    Raises:
        DomainError: For a zero divisor or negative radicand, naming the failing subterm.
    """
    n0 = Fraction(n0)
    if n0 < 1:
        raise DomainError(f"finite index must be at least 1, got {n0}")
    return _finite(e, RatInterval.point(n0), p)


# ── The infinite index ────────────────────────────────────────────────


def _rational_power(base: SeqExpr, k: Fraction, cfg: FieldConfig) -> LCNumber:
    if isinstance(base, Eps):
        return lc_monomial(1, k, cfg.domain)
    if isinstance(base, Omega):
        return lc_monomial(1, -k, cfg.domain)
    raise DomainError(f"rational exponent {k} is only defined on eps and omega")


def _hyper(e: SeqExpr, cfg: FieldConfig) -> LCNumber:
    match e:
        case Const(value=v):
            return lc_atom(AtomKind.CONST, v, cfg.domain)
        case Index() | Omega():
            return lc_atom(AtomKind.OMEGA, domain=cfg.domain)
        case Eps():
            return lc_atom(AtomKind.EPS, domain=cfg.domain)
        case Add(left=left, right=right):
            return lc_add(_hyper(left, cfg), _hyper(right, cfg))
        case Sub(left=left, right=right):
            return lc_sub(_hyper(left, cfg), _hyper(right, cfg))
        case Mul(left=left, right=right):
            return lc_mul(_hyper(left, cfg), _hyper(right, cfg))
        case Div(left=left, right=right):
            a, b = _hyper(left, cfg), _hyper(right, cfg)
            return _blame(e, lambda: lc_div(a, b, cfg))
        case Pow(base=base, exponent=k):
            if k.denominator != 1:
                return _blame(e, lambda: _rational_power(base, k, cfg))
            a = _hyper(base, cfg)
            return _blame(e, lambda: lc_pow(a, int(k), cfg))
        case Sqrt(arg=arg):
            a = _hyper(arg, cfg)
            return _blame(e, lambda: lc_sqrt(a, cfg))
        case Neg(arg=arg):
            return lc_neg(_hyper(arg, cfg))
    raise TypeError(f"not an expression node: {e!r}")


def eval_hyperfinite(e: SeqExpr, cfg: FieldConfig = DEFAULT_CONFIG) -> LCNumber:
    """e(omega): substitute the infinite index for n and evaluate in the Levi-Civita field."""
    value = _hyper(e, cfg)
    logger.debug(f"{print_seq_expr(e)} at omega = {format_lc(value)}")
    return value


def _shadow(e: SeqExpr, value: LCNumber) -> Coefficient:
    try:
        return lc_st(value)
    except NotFiniteError as exc:
        raise DivergesError(
            f"sequence diverges: value at the infinite index is {format_lc(value)}",
            subterm=print_seq_expr(e),
        ) from exc


def limit_with_value(e: SeqExpr, cfg: FieldConfig = DEFAULT_CONFIG) -> tuple[Coefficient, LCNumber]:
    """The limit of e together with e(omega), from a single evaluation.

    Raises:
        DivergesError: When e(omega) is infinite.
        UndecidableError: When interval coefficients cannot settle the classification.
    """
    value = eval_hyperfinite(e, cfg)
    shadow = _shadow(e, value)
    logger.debug(f"limit of {print_seq_expr(e)} is {render_exact(shadow)}")
    return shadow, value


def limit_shadow(e: SeqExpr, cfg: FieldConfig = DEFAULT_CONFIG) -> Coefficient:
    """The limit of e as the standard part of e(omega); see limit_with_value."""
    return limit_with_value(e, cfg)[0]


def _as_interval(c: Coefficient) -> RatInterval:
    return c if isinstance(c, RatInterval) else RatInterval.point(c)


def _gap(lower: Coefficient, upper: Coefficient) -> Coefficient:
    if isinstance(lower, RatInterval) or isinstance(upper, RatInterval):
        return _as_interval(upper) - _as_interval(lower)
    return upper - lower


def terminate_closed_form(lower: SeqExpr, upper: SeqExpr, cfg: FieldConfig = DEFAULT_CONFIG) -> Coefficient:
    """Termination of a double sequence given in closed form: the common shadow of both
    sequences at the infinite index, provided they are adequal there.

    Raises:
        NotAdequalError: With ``gap`` = st(upper) - st(lower) when the difference is appreciable.
        DivergesError: When either sequence is infinite at omega.
    """
    lower_value = eval_hyperfinite(lower, cfg)
    upper_value = lower_value if upper == lower else eval_hyperfinite(upper, cfg)
    lower_shadow = _shadow(lower, lower_value)
    upper_shadow = _shadow(upper, upper_value)

    if not lc_adequal(lower_value, upper_value):
        gap = _gap(lower_shadow, upper_shadow)
        raise NotAdequalError(
            f"lower and upper sequences differ appreciably at the infinite index: gap {render_exact(gap)}",
            gap=gap,
        )

    if isinstance(lower_shadow, RatInterval) or isinstance(upper_shadow, RatInterval):
        termination: Coefficient = ival_intersect(_as_interval(lower_shadow), _as_interval(upper_shadow))
    else:
        termination = lower_shadow
    logger.info(f"termination of ({print_seq_expr(lower)}, {print_seq_expr(upper)}) = {render_exact(termination)}")
    return termination
