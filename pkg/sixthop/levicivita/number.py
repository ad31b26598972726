"""Truncated Levi-Civita numbers: finite series in an infinitesimal eps with rational exponents.

A number is a sorted tuple of ``(exponent, coefficient)`` terms plus an optional validity
bound Omega. Without Omega the series is exact; with Omega only the terms below Omega are
trusted and the number prints with a trailing ``+ o(eps^Omega)``.

omega = eps^-1 stands for an infinite number, eps for an infinitesimal one.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable

from loguru import logger

from sixthop.exceptions import DomainError, NotFiniteError, UndecidableError
from sixthop.levicivita.coefficients import (
    DEFAULT_INTERVAL_PRECISION,
    EXACT,
    Coefficient,
    CoefficientDomain,
    create_domain,
)
from sixthop.numerics.interval import RatInterval

Term = tuple[Fraction, Coefficient]

DEFAULT_WINDOW = Fraction(16)


class Ordering(str, Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


class MagnitudeClass(str, Enum):
    ZERO = "zero"
    INFINITESIMAL = "infinitesimal"
    FINITE = "finite-appreciable"
    INFINITE = "infinite"


class AtomKind(str, Enum):
    CONST = "const"
    EPS = "eps"
    OMEGA = "omega"


@dataclass(frozen=True)
class FieldConfig:
    """Truncation policy and coefficient domain for inverse and square root.

    Series produced by ``lc_inv`` / ``lc_sqrt`` are valid up to leading exponent + window,
    intersected with the validity propagated from the input.
    """

    window: Fraction = DEFAULT_WINDOW
    domain: CoefficientDomain = EXACT

    def __post_init__(self) -> None:
        object.__setattr__(self, "window", Fraction(self.window))
        if self.window <= 0:
            raise DomainError(f"window must be positive, got {self.window}")

    @classmethod
    def interval(
        cls, precision: int = DEFAULT_INTERVAL_PRECISION, window: Fraction | int = DEFAULT_WINDOW
    ) -> FieldConfig:
        return cls(window=Fraction(window), domain=create_domain("interval", precision=precision))


DEFAULT_CONFIG = FieldConfig()


def _min_opt(a: Fraction | None, b: Fraction | None) -> Fraction | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


@dataclass(frozen=True)
class LCNumber:
    """Element of the truncated Levi-Civita field."""

    terms: tuple[Term, ...] = ()
    validity: Fraction | None = None
    domain: CoefficientDomain = EXACT

    def __post_init__(self) -> None:
        previous: Fraction | None = None
        for exponent, coefficient in self.terms:
            if previous is not None and exponent <= previous:
                raise ValueError(f"exponents must be strictly increasing: {previous} then {exponent}")
            if self.domain.is_zero(coefficient):
                raise ValueError(f"zero coefficient stored at exponent {exponent}")
            if self.validity is not None and exponent >= self.validity:
                raise ValueError(f"term at exponent {exponent} lies beyond validity {self.validity}")
            previous = exponent

    @property
    def lead_exponent(self) -> Fraction | None:
        return self.terms[0][0] if self.terms else None

    @property
    def lead_coefficient(self) -> Coefficient | None:
        return self.terms[0][1] if self.terms else None

    def is_zero(self) -> bool:
        """Exactly zero: no terms and no unknown tail."""
        return not self.terms and self.validity is None

    def coefficient(self, exponent: Fraction | int) -> Coefficient:
        for e, c in self.terms:
            if e == exponent:
                return c
        return self.domain.from_rational(Fraction(0))

    def expansion(self, k: int) -> list[str]:
        """Text of the first k terms."""
        return [_format_term(e, c, self.domain, leading=True) for e, c in self.terms[:k]]

    def evaluate_at(self, index: Fraction | int) -> Fraction:
        """Substitute eps = 1/index into an exact, validity-free number with integer exponents."""
        if self.validity is not None or self.domain.certified:
            raise DomainError("only exact numbers without a validity bound can be evaluated at a finite index")
        total = Fraction(0)
        n0 = Fraction(index)
        for e, c in self.terms:
            if e.denominator != 1:
                raise DomainError(f"exponent {e} is not an integer; substitution would be irrational")
            total += Fraction(c) * n0 ** (-int(e))
        return total

    def __str__(self) -> str:
        return format_lc(self)

    def __neg__(self) -> LCNumber:
        return lc_neg(self)

    def __add__(self, other: LCNumber | Fraction | int) -> LCNumber:
        return lc_add(self, _coerce(other, self.domain))

    def __radd__(self, other: Fraction | int) -> LCNumber:
        return lc_add(_coerce(other, self.domain), self)

    def __sub__(self, other: LCNumber | Fraction | int) -> LCNumber:
        return lc_sub(self, _coerce(other, self.domain))

    def __rsub__(self, other: Fraction | int) -> LCNumber:
        return lc_sub(_coerce(other, self.domain), self)

    def __mul__(self, other: LCNumber | Fraction | int) -> LCNumber:
        return lc_mul(self, _coerce(other, self.domain))

    def __rmul__(self, other: Fraction | int) -> LCNumber:
        return lc_mul(_coerce(other, self.domain), self)

    def __truediv__(self, other: LCNumber | Fraction | int) -> LCNumber:
        return lc_div(self, _coerce(other, self.domain), FieldConfig(domain=self.domain))

    def __rtruediv__(self, other: Fraction | int) -> LCNumber:
        return lc_div(_coerce(other, self.domain), self, FieldConfig(domain=self.domain))

    def __pow__(self, k: int) -> LCNumber:
        return lc_pow(self, k, FieldConfig(domain=self.domain))

    def __lt__(self, other: LCNumber | Fraction | int) -> bool:
        return lc_cmp(self, _coerce(other, self.domain)) is Ordering.LESS

    def __le__(self, other: LCNumber | Fraction | int) -> bool:
        return lc_cmp(self, _coerce(other, self.domain)) is not Ordering.GREATER

    def __gt__(self, other: LCNumber | Fraction | int) -> bool:
        return lc_cmp(self, _coerce(other, self.domain)) is Ordering.GREATER

    def __ge__(self, other: LCNumber | Fraction | int) -> bool:
        return lc_cmp(self, _coerce(other, self.domain)) is not Ordering.LESS


def _coerce(x: LCNumber | Fraction | int, domain: CoefficientDomain) -> LCNumber:
    if isinstance(x, LCNumber):
        return x
    return lc_atom(AtomKind.CONST, Fraction(x), domain)


def _make(
    acc: dict[Fraction, Coefficient] | Iterable[Term], validity: Fraction | None, domain: CoefficientDomain
) -> LCNumber:
    items = acc.items() if isinstance(acc, dict) else acc
    terms = tuple(
        (e, c)
        for e, c in sorted(items, key=lambda t: t[0])
        if not domain.is_zero(c) and (validity is None or e < validity)
    )
    return LCNumber(terms=terms, validity=validity, domain=domain)


# ── Construction ──────────────────────────────────────────────────────


def lc_atom(kind: AtomKind, q: Fraction | int | None = None, domain: CoefficientDomain = EXACT) -> LCNumber:
    """const(q), eps or omega; always exact (no validity bound)."""
    match AtomKind(kind):
        case AtomKind.CONST:
            value = Fraction(q if q is not None else 0)
            if value == 0:
                return LCNumber(domain=domain)
            return LCNumber(terms=((Fraction(0), domain.from_rational(value)),), domain=domain)
        case AtomKind.EPS:
            return LCNumber(terms=((Fraction(1), domain.from_rational(Fraction(1))),), domain=domain)
        case AtomKind.OMEGA:
            return LCNumber(terms=((Fraction(-1), domain.from_rational(Fraction(1))),), domain=domain)
    raise AssertionError(kind)


def lc_monomial(coefficient: Fraction | int, exponent: Fraction | int, domain: CoefficientDomain = EXACT) -> LCNumber:
    """coefficient * eps^exponent with a rational exponent."""
    return _make([(Fraction(exponent), domain.from_rational(Fraction(coefficient)))], None, domain)


# ── Ring structure ────────────────────────────────────────────────────


def lc_add(x: LCNumber, y: LCNumber) -> LCNumber:
    domain = x.domain.join(y.domain)
    acc: dict[Fraction, Coefficient] = {e: domain.coerce(c) for e, c in x.terms}
    for e, c in y.terms:
        acc[e] = domain.add(acc[e], c) if e in acc else domain.coerce(c)
    return _make(acc, _min_opt(x.validity, y.validity), domain)


def lc_neg(x: LCNumber) -> LCNumber:
    return LCNumber(terms=tuple((e, x.domain.neg(c)) for e, c in x.terms), validity=x.validity, domain=x.domain)


def lc_sub(x: LCNumber, y: LCNumber) -> LCNumber:
    return lc_add(x, lc_neg(y))


def _lead_or_bound(x: LCNumber) -> Fraction | None:
    return x.terms[0][0] if x.terms else x.validity


def lc_mul(x: LCNumber, y: LCNumber, bound: Fraction | None = None) -> LCNumber:
    """Convolution of the term lists.

    Validity is min(Ωx + lead(y), Ωy + lead(x)); ``bound`` additionally truncates the
    result (used by the series expansions).
    """
    domain = x.domain.join(y.domain)
    if x.is_zero() or y.is_zero():
        return LCNumber(domain=domain)

    lead_x, lead_y = _lead_or_bound(x), _lead_or_bound(y)
    validity = _min_opt(
        x.validity + lead_y if x.validity is not None and lead_y is not None else None,
        y.validity + lead_x if y.validity is not None and lead_x is not None else None,
    )
    validity = _min_opt(validity, bound)

    acc: dict[Fraction, Coefficient] = {}
    for ex, cx in x.terms:
        for ey, cy in y.terms:
            e = ex + ey
            if validity is not None and e >= validity:
                break
            product = domain.mul(cx, cy)
            acc[e] = domain.add(acc[e], product) if e in acc else product
    return _make(acc, validity, domain)


def lc_pow(x: LCNumber, k: int, cfg: FieldConfig = DEFAULT_CONFIG) -> LCNumber:
    """Integer power by repeated squaring; negative powers go through ``lc_inv``."""
    if k < 0:
        return lc_pow(lc_inv(x, cfg), -k, cfg)
    result = lc_atom(AtomKind.CONST, 1, x.domain)
    base = x
    while k:
        if k & 1:
            result = lc_mul(result, base)
        k >>= 1
        if k:
            base = lc_mul(base, base)
    return result


# ── Series expansions ─────────────────────────────────────────────────


def _split_leading(x: LCNumber, cfg: FieldConfig) -> tuple[CoefficientDomain, Fraction, Coefficient, LCNumber, Fraction | None]:
    """Factor x = c * eps^q * (1 + u); return (domain, q, c, u, relative validity R)."""
    domain = x.domain.join(cfg.domain)
    q, c = x.terms[0]
    c_inv = domain.inv(c)
    u_terms = [(e - q, domain.mul(ci, c_inv)) for e, ci in x.terms[1:]]
    input_bound = x.validity - q if x.validity is not None else None
    if u_terms:
        relative = _min_opt(cfg.window, input_bound)
    else:
        relative = input_bound
    u = _make(u_terms, None, domain)
    return domain, q, c, u, relative


def _binomial_series(u: LCNumber, alpha: Fraction, bound: Fraction | None, domain: CoefficientDomain) -> LCNumber:
    """(1 + u)^alpha for infinitesimal u, truncated below ``bound``."""
    one = lc_atom(AtomKind.CONST, 1, domain)
    if not u.terms:
        return LCNumber(terms=one.terms, validity=bound, domain=domain)
    assert bound is not None
    total = one
    power = one
    binomial = Fraction(1)
    k = 0
    while True:
        k += 1
        binomial = binomial * (alpha - k + 1) / k
        power = lc_mul(power, u, bound=bound)
        if not power.terms:
            break
        if binomial:
            scaled = LCNumber(
                terms=tuple((e, domain.mul(c, domain.from_rational(binomial))) for e, c in power.terms),
                validity=power.validity,
                domain=domain,
            )
            total = lc_add(total, scaled)
    logger.debug(f"binomial series (1+u)^{alpha}: {k - 1} powers below eps^{bound}")
    return _make(total.terms, bound, domain)


def _shift(series: LCNumber, exponent: Fraction, factor: Coefficient, domain: CoefficientDomain) -> LCNumber:
    terms = [(e + exponent, domain.mul(c, factor)) for e, c in series.terms]
    validity = series.validity + exponent if series.validity is not None else None
    return _make(terms, validity, domain)


def lc_inv(x: LCNumber, cfg: FieldConfig = DEFAULT_CONFIG) -> LCNumber:
    """1/x as c^-1 * eps^-q * (1+u)^-1, valid to -q + W and capped by Ωx - 2q."""
    if not x.terms:
        if x.validity is None:
            raise DomainError("reciprocal of zero")
        raise UndecidableError("cannot invert a number known only up to its validity bound", term=format_lc(x))
    domain, q, c, u, relative = _split_leading(x, cfg)
    series = _binomial_series(u, Fraction(-1), relative, domain)
    return _shift(series, -q, domain.inv(c), domain)


def lc_div(x: LCNumber, y: LCNumber, cfg: FieldConfig = DEFAULT_CONFIG) -> LCNumber:
    return lc_mul(x, lc_inv(y, cfg))


def lc_sqrt(x: LCNumber, cfg: FieldConfig = DEFAULT_CONFIG) -> LCNumber:
    """sqrt(c) * eps^(q/2) * (1+u)^(1/2), valid to q/2 + W and capped by Ωx - q/2."""
    if not x.terms:
        if x.validity is None:
            raise DomainError("square root of zero is outside the positive domain")
        raise UndecidableError("cannot take the square root of a number known only up to its validity bound")
    domain = x.domain.join(cfg.domain)
    if domain.sign(x.terms[0][1]) <= 0:
        raise DomainError(f"square root of a negative number: {format_lc(x)}")
    root = domain.sqrt(x.terms[0][1])
    domain, q, _, u, relative = _split_leading(x, cfg)
    series = _binomial_series(u, Fraction(1, 2), relative, domain)
    return _shift(series, q / 2, root, domain)


# ── Order and the infinitesimal procedures ────────────────────────────


def _leading_sign(d: LCNumber) -> int:
    if not d.terms:
        if d.validity is None:
            return 0
        raise UndecidableError(
            "difference vanishes below its validity bound; increase the window", term=format_lc(d)
        )
    e, c = d.terms[0]
    try:
        return d.domain.sign(c)
    except UndecidableError as exc:
        raise UndecidableError(
            "sign of leading term is undecidable", term=_format_term(e, c, d.domain, leading=True)
        ) from exc


def lc_cmp(x: LCNumber, y: LCNumber) -> Ordering:
    """Order by the sign of the leading coefficient of x - y."""
    s = _leading_sign(lc_sub(x, y))
    if s < 0:
        return Ordering.LESS
    if s > 0:
        return Ordering.GREATER
    return Ordering.EQUAL


def _class_of(exponent: Fraction) -> MagnitudeClass:
    if exponent > 0:
        return MagnitudeClass.INFINITESIMAL
    if exponent == 0:
        return MagnitudeClass.FINITE
    return MagnitudeClass.INFINITE


def lc_classify(x: LCNumber) -> MagnitudeClass:
    """zero, infinitesimal, finite-appreciable or infinite, read off the leading exponent."""
    if x.is_zero():
        return MagnitudeClass.ZERO
    for e, c in x.terms:
        if x.domain.certified and x.domain.coerce(c).straddles_zero():  # type: ignore[union-attr]
            if e <= 0:
                raise UndecidableError(
                    "classification undecidable: leading term may vanish",
                    term=_format_term(e, c, x.domain, leading=True),
                )
            continue
        return _class_of(e)
    raise UndecidableError("cannot tell zero from infinitesimal", term=format_lc(x))


def lc_st(x: LCNumber) -> Coefficient:
    """Shadow: the coefficient at exponent 0; infinitesimal terms are discarded."""
    for e, c in x.terms:
        if e >= 0:
            break
        if x.domain.certified and x.domain.coerce(c).straddles_zero():  # type: ignore[union-attr]
            raise UndecidableError(
                "cannot exclude an infinite part", term=_format_term(e, c, x.domain, leading=True)
            )
        raise NotFiniteError(f"standard part of an infinite number: {format_lc(x)}")
    if x.validity is not None and x.validity <= 0:
        raise UndecidableError(
            "validity bound too low to read the standard part; increase the window", term=format_lc(x)
        )
    return x.coefficient(0)


def lc_adequal(x: LCNumber, y: LCNumber) -> bool:
    """True iff x - y is zero or infinitesimal (infinitely close)."""
    if x == y:
        return True
    d = lc_sub(x, y)
    undecided = False
    for e, c in d.terms:
        if e > 0:
            break
        if d.domain.certified and d.domain.coerce(c).straddles_zero():  # type: ignore[union-attr]
            undecided = True
            continue
        return False
    if undecided:
        raise UndecidableError("cannot decide adequality: appreciable terms may vanish", term=format_lc(d))
    if d.validity is not None and d.validity <= 0:
        raise UndecidableError(
            "difference is known only above a non-positive exponent; increase the window", term=format_lc(d)
        )
    return True


def lc_tlh(x: LCNumber) -> LCNumber:
    """Transcendental law of homogeneity: keep only the leading monomial."""
    if not x.terms:
        raise DomainError("no leading term to retain")
    return LCNumber(terms=(x.terms[0],), domain=x.domain)


# ── Text ──────────────────────────────────────────────────────────────


def _eps_power(e: Fraction) -> str:
    if e == 1:
        return "eps"
    if e.denominator == 1:
        return f"eps^{e.numerator}"
    return f"eps^({e})"


def _format_term(e: Fraction, c: Coefficient, domain: CoefficientDomain, leading: bool) -> str:
    if isinstance(c, RatInterval) and not c.is_point():
        body = str(c) if e == 0 else f"{c}*{_eps_power(e)}"
        return body if leading else f"+ {body}"
    q = Fraction(c.lo) if isinstance(c, RatInterval) else Fraction(c)
    magnitude = abs(q)
    if e == 0:
        body = domain.format(magnitude)
    elif magnitude == 1:
        body = _eps_power(e)
    else:
        body = f"{domain.format(magnitude)}*{_eps_power(e)}"
    if leading:
        return f"-{body}" if q < 0 else body
    return f"- {body}" if q < 0 else f"+ {body}"


def format_lc(x: LCNumber, max_terms: int | None = None) -> str:
    """Sum of ``c*eps^(p/q)`` terms in increasing exponent, then ``+ o(eps^Ω)``.

    With ``max_terms`` only that many terms are printed and a cut series ends in ``+ …``.
    """
    shown = x.terms if max_terms is None else x.terms[:max_terms]
    parts = [_format_term(e, c, x.domain, leading=(i == 0)) for i, (e, c) in enumerate(shown)]
    if len(shown) < len(x.terms):
        parts.append("+ …")
    elif x.validity is not None:
        tail = f"o({_eps_power(x.validity)})"
        parts.append(tail if not parts else f"+ {tail}")
    return " ".join(parts) if parts else "0"
