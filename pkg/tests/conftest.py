"""Shared fixtures for the sixthop test suite."""

from __future__ import annotations

from fractions import Fraction

import pytest

from sixthop.levicivita import EXACT, AtomKind, FieldConfig, LCNumber, lc_atom, lc_monomial
from sixthop.numerics import RatInterval
from sixthop.quadrature import QuadratureState

# ── numerics fixtures ─────────────────────────────────────────────────


@pytest.fixture()
def interval():
    """Factory fixture: interval(lo, hi) or interval(q) for a point."""

    def _make(lo, hi=None):
        lo = Fraction(lo)
        return RatInterval(lo, Fraction(hi) if hi is not None else lo)

    return _make


# ── levi-civita fixtures ──────────────────────────────────────────────


@pytest.fixture()
def lc():
    """Factory fixture building exact LC numbers from {exponent: coefficient} dicts."""

    def _make(terms=None, validity=None, domain=EXACT):
        terms = terms or {}
        pairs = tuple(
            (Fraction(e), domain.from_rational(Fraction(c))) for e, c in sorted(terms.items(), key=lambda t: Fraction(t[0]))
        )
        return LCNumber(terms=pairs, validity=Fraction(validity) if validity is not None else None, domain=domain)

    return _make


@pytest.fixture()
def eps():
    return lc_atom(AtomKind.EPS)


@pytest.fixture()
def omega():
    return lc_atom(AtomKind.OMEGA)


@pytest.fixture()
def one():
    return lc_atom(AtomKind.CONST, 1)


@pytest.fixture()
def monomial():
    """Factory fixture: monomial(c, q) = c*eps^q."""
    return lc_monomial


@pytest.fixture()
def window3():
    return FieldConfig(window=Fraction(3))


@pytest.fixture()
def interval_config():
    return FieldConfig.interval(precision=96)


# ── quadrature fixtures ───────────────────────────────────────────────


@pytest.fixture()
def quadrature_state():
    """Factory fixture returning a QuadratureState with point or interval enclosures."""

    def _make(i=2, c=4, n=0):
        i = i if isinstance(i, RatInterval) else RatInterval.point(Fraction(i))
        c = c if isinstance(c, RatInterval) else RatInterval.point(Fraction(c))
        return QuadratureState(n=n, inscribed=i, circumscribed=c)

    return _make


# ── logging ───────────────────────────────────────────────────────────


@pytest.fixture(autouse=True)
def _reset_logging():
    """Drop sinks bound to captured streams once a test is done."""
    yield
    from loguru import logger

    logger.remove()
    logger.disable("sixthop")
