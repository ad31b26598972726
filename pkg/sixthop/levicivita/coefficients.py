"""Coefficient domains for Levi-Civita numbers and their registry.

Usage::

    domain = create_domain("interval", precision=96)
    domain.sqrt(domain.from_rational(Fraction(2)))
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from sixthop.exceptions import DomainError, ModeError, UndecidableError
from sixthop.numerics.interval import RatInterval, ival_compress, ival_sqrt
from sixthop.numerics.rational import format_rational

Coefficient = Fraction | RatInterval

DEFAULT_INTERVAL_PRECISION = 128

_DOMAIN_REGISTRY: dict[str, type[CoefficientDomain]] = {}


def register_domain(name: str) -> Callable[[type[CoefficientDomain]], type[CoefficientDomain]]:
    """Decorator to register a coefficient domain class.

    Usage::

        @register_domain("exact")
        class ExactDomain(CoefficientDomain):
            ...
    """

    def decorator(cls: type[CoefficientDomain]) -> type[CoefficientDomain]:
        _DOMAIN_REGISTRY[name.lower()] = cls
        cls.name = name.lower()
        return cls

    return decorator


def create_domain(name: str, **kwargs: Any) -> CoefficientDomain:
    """Create a coefficient domain by name.

    Raises:
        ValueError: If the domain is not registered.
    """
    name_lower = name.lower()
    if name_lower not in _DOMAIN_REGISTRY:
        available = ", ".join(list_domains())
        raise ValueError(f"Unknown coefficient domain '{name}'. Available: {available}")
    return _DOMAIN_REGISTRY[name_lower](**kwargs)


def list_domains() -> list[str]:
    """Return a sorted list of registered domain names."""
    return sorted(_DOMAIN_REGISTRY.keys())


class CoefficientDomain(ABC):
    """Arithmetic on the coefficients of a Levi-Civita number."""

    name: str = ""

    @property
    def certified(self) -> bool:
        """True when coefficients are enclosures rather than exact values."""
        return False

    @abstractmethod
    def from_rational(self, q: Fraction) -> Coefficient:
        """Embed an exact rational."""

    @abstractmethod
    def coerce(self, c: Coefficient) -> Coefficient:
        """Bring a coefficient of a compatible domain into this one."""

    @abstractmethod
    def is_zero(self, c: Coefficient) -> bool:
        """True only for the exact zero (such terms are never stored)."""

    @abstractmethod
    def add(self, a: Coefficient, b: Coefficient) -> Coefficient: ...

    @abstractmethod
    def neg(self, a: Coefficient) -> Coefficient: ...

    @abstractmethod
    def mul(self, a: Coefficient, b: Coefficient) -> Coefficient: ...

    @abstractmethod
    def inv(self, a: Coefficient) -> Coefficient:
        """Reciprocal; DomainError for zero, UndecidableError when zero cannot be excluded."""

    @abstractmethod
    def sqrt(self, a: Coefficient) -> Coefficient:
        """Square root of a positive coefficient."""

    @abstractmethod
    def sign(self, a: Coefficient) -> int:
        """-1, 0 or +1; UndecidableError when undetermined."""

    @abstractmethod
    def format(self, c: Coefficient) -> str: ...

    def join(self, other: CoefficientDomain) -> CoefficientDomain:
        """Common domain for mixed operands; certified domains absorb exact ones."""
        if self == other or not other.certified:
            return self
        if not self.certified:
            return other
        assert isinstance(self, IntervalDomain) and isinstance(other, IntervalDomain)
        return self if self.precision >= other.precision else other


@register_domain("exact")
@dataclass(frozen=True)
class ExactDomain(CoefficientDomain):
    """Exact rational coefficients."""

    def from_rational(self, q: Fraction) -> Fraction:
        return Fraction(q)

    def coerce(self, c: Coefficient) -> Fraction:
        if isinstance(c, RatInterval):
            if not c.is_point():
                raise ModeError(f"interval coefficient {c} cannot be used in exact mode")
            return c.lo
        return c

    def is_zero(self, c: Coefficient) -> bool:
        return c == 0

    def add(self, a: Coefficient, b: Coefficient) -> Fraction:
        return self.coerce(a) + self.coerce(b)

    def neg(self, a: Coefficient) -> Fraction:
        return -self.coerce(a)

    def mul(self, a: Coefficient, b: Coefficient) -> Fraction:
        return self.coerce(a) * self.coerce(b)

    def inv(self, a: Coefficient) -> Fraction:
        q = self.coerce(a)
        if q == 0:
            raise DomainError("reciprocal of zero")
        return 1 / q

    def sqrt(self, a: Coefficient) -> Fraction:
        q = self.coerce(a)
        if q <= 0:
            raise DomainError(f"square root of non-positive coefficient {format_rational(q)}")
        num_root, den_root = math.isqrt(q.numerator), math.isqrt(q.denominator)
        if num_root * num_root != q.numerator or den_root * den_root != q.denominator:
            raise ModeError(
                f"leading coefficient {format_rational(q)} is not the square of a rational; "
                "switch to interval coefficients (--interval)"
            )
        return Fraction(num_root, den_root)

    def sign(self, a: Coefficient) -> int:
        q = self.coerce(a)
        return (q > 0) - (q < 0)

    def format(self, c: Coefficient) -> str:
        return format_rational(self.coerce(c))


@register_domain("interval")
@dataclass(frozen=True)
class IntervalDomain(CoefficientDomain):
    """Rational-interval coefficients; ``precision`` bits bound each rounding step."""

    precision: int = DEFAULT_INTERVAL_PRECISION

    def __post_init__(self) -> None:
        if self.precision < 1:
            raise DomainError(f"precision must be at least 1 bit, got {self.precision}")

    @property
    def certified(self) -> bool:
        return True

    def _tidy(self, x: RatInterval) -> RatInterval:
        return ival_compress(x, self.precision)

    def from_rational(self, q: Fraction) -> RatInterval:
        return RatInterval.point(q)

    def coerce(self, c: Coefficient) -> RatInterval:
        return c if isinstance(c, RatInterval) else RatInterval.point(c)

    def is_zero(self, c: Coefficient) -> bool:
        x = self.coerce(c)
        return x.lo == x.hi == 0

    def add(self, a: Coefficient, b: Coefficient) -> RatInterval:
        return self._tidy(self.coerce(a) + self.coerce(b))

    def neg(self, a: Coefficient) -> RatInterval:
        return -self.coerce(a)

    def mul(self, a: Coefficient, b: Coefficient) -> RatInterval:
        return self._tidy(self.coerce(a) * self.coerce(b))

    def inv(self, a: Coefficient) -> RatInterval:
        x = self.coerce(a)
        if self.is_zero(x):
            raise DomainError("reciprocal of zero")
        if x.straddles_zero():
            raise UndecidableError("cannot invert a coefficient whose enclosure contains zero", term=x)
        return self._tidy(1 / x)

    def sqrt(self, a: Coefficient) -> RatInterval:
        x = self.coerce(a)
        if x.hi <= 0:
            raise DomainError(f"square root of non-positive coefficient {x}")
        if x.lo <= 0:
            raise UndecidableError("cannot take the square root of a coefficient that may be non-positive", term=x)
        return ival_sqrt(x, self.precision)

    def sign(self, a: Coefficient) -> int:
        x = self.coerce(a)
        s = x.sign()
        if s is None:
            raise UndecidableError("sign of coefficient is undecidable", term=x)
        return s

    def format(self, c: Coefficient) -> str:
        x = self.coerce(c)
        return format_rational(x.lo) if x.is_point() else str(x)


EXACT = ExactDomain()
