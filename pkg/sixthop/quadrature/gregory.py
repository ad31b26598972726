"""Gregory's double sequence of inscribed and circumscribed polygon areas.

From a pair (I, C) the next pair is the geometric mean I' = sqrt(C*I) followed by the
harmonic mean C' = 2*C*I'/(C + I'). Both are computed on rational intervals, so every
state is a certified enclosure of the exact recursion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from loguru import logger

from sixthop.exceptions import BudgetExceededError, DomainError, InvariantViolationError
from sixthop.numerics.interval import RatInterval, ival_compress, ival_sqrt
from sixthop.numerics.rational import bits_for, ceil_log2, format_rational

DEFAULT_MAX_ITER = 1000
PRECISION_PER_DOUBLING = 8

_PRESETS: dict[str, Callable[[int], tuple[RatInterval, RatInterval]]] = {}


@dataclass(frozen=True)
class QuadratureState:
    """Step n of the double sequence: enclosures of the inscribed and circumscribed areas."""

    n: int
    inscribed: RatInterval
    circumscribed: RatInterval

    @property
    def width(self) -> Fraction:
        """Width of the hull [I.lo, C.hi], the certified bracket of the termination."""
        return self.circumscribed.hi - self.inscribed.lo

    @property
    def hull(self) -> RatInterval:
        return RatInterval(
            min(self.inscribed.lo, self.circumscribed.lo), max(self.inscribed.hi, self.circumscribed.hi)
        )

    @property
    def midgap(self) -> Fraction:
        return self.circumscribed.midpoint - self.inscribed.midpoint


def _as_interval(x: RatInterval | Fraction | int) -> RatInterval:
    return x if isinstance(x, RatInterval) else RatInterval.point(Fraction(x))


def _harmonic(c: Fraction, i: Fraction) -> Fraction:
    return 2 * c * i / (c + i)


def _check_invariants(before: QuadratureState, after: QuadratureState) -> None:
    problems = []
    if after.inscribed.lo <= 0:
        problems.append(f"inscribed enclosure {after.inscribed} is not positive")
    if after.inscribed.lo < before.inscribed.lo:
        problems.append("inscribed lower bound decreased")
    if after.circumscribed.hi > before.circumscribed.hi:
        problems.append("circumscribed upper bound increased")
    if after.inscribed.midpoint > after.circumscribed.midpoint:
        problems.append("inscribed midpoint above circumscribed midpoint")
    if problems:
        raise InvariantViolationError(f"step {after.n}: " + "; ".join(problems))


def gregory_step(s: QuadratureState, p: int) -> QuadratureState:
    """One step of the recursion at precision p, contracted by I <= I' <= C' <= C."""
    i, c = s.inscribed, s.circumscribed
    if i.lo <= 0 or c.lo <= 0:
        raise DomainError(f"Gregory recursion needs positive areas, got I={i}, C={c}")

    i_raw = ival_compress(ival_sqrt(c * i, p), p)
    i_lo = max(i_raw.lo, i.lo)
    c_raw = ival_compress(
        RatInterval(_harmonic(c.lo, i_lo), _harmonic(c.hi, max(i_raw.hi, i_lo))),
        p,
    )
    c_hi = min(c_raw.hi, c.hi)
    i_hi = min(i_raw.hi, c_hi)
    c_lo = max(c_raw.lo, i_lo)
    if i_lo > i_hi or c_lo > c_hi:
        raise InvariantViolationError(f"step {s.n + 1}: contracted enclosures are empty")

    nxt = QuadratureState(n=s.n + 1, inscribed=RatInterval(i_lo, i_hi), circumscribed=RatInterval(c_lo, c_hi))
    _check_invariants(s, nxt)
    logger.debug(f"step {nxt.n}: width {float(nxt.width):.3e}")
    return nxt


def expected_iterations(i0: RatInterval | Fraction | int, c0: RatInterval | Fraction | int, tol: Fraction) -> int:
    """Steps needed when the gap shrinks fourfold per step, plus two."""
    i0, c0 = _as_interval(i0), _as_interval(c0)
    gap = c0.hi - i0.lo
    if gap < tol:
        return 0
    return ceil_log2(gap / tol) // 2 + 2


def default_precision(i0: RatInterval | Fraction | int, c0: RatInterval | Fraction | int, tol: Fraction) -> int:
    """bits(tol) + 8*ceil(log2(expected iterations + 1))."""
    expected = expected_iterations(i0, c0, tol)
    return bits_for(Fraction(tol)) + PRECISION_PER_DOUBLING * max(0, ceil_log2(Fraction(expected + 1)))


def terminate_numeric(
    i0: RatInterval | Fraction | int,
    c0: RatInterval | Fraction | int,
    tol: Fraction,
    max_iter: int = DEFAULT_MAX_ITER,
    p: Optional[int] = None,
) -> tuple[RatInterval, list[QuadratureState]]:
    """Iterate until C.hi - I.lo < tol; return the hull [I.lo, C.hi] and the full history.

    Raises:
        BudgetExceededError: When max_iter steps do not reach tol (the width floor is set by p).
        InvariantViolationError: On a bracketing or monotonicity failure.
    """
    i0, c0 = _as_interval(i0), _as_interval(c0)
    tol = Fraction(tol)
    if tol <= 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    if i0.lo <= 0:
        raise DomainError(f"inscribed start must be positive, got {i0}")
    if i0.midpoint > c0.midpoint:
        raise DomainError(f"inscribed start {i0} exceeds circumscribed start {c0}")
    precision = p if p is not None else default_precision(i0, c0, tol)
    if precision < 1:
        raise DomainError(f"precision must be at least 1 bit, got {precision}")

    state = QuadratureState(n=0, inscribed=i0, circumscribed=c0)
    history = [state]
    logger.debug(f"terminating from I0={i0}, C0={c0} to tol {format_rational(tol)} at {precision} bits")
    while True:
        if state.width < tol:
            logger.info(f"terminated after {state.n} steps, width {float(state.width):.3e}")
            return RatInterval(state.inscribed.lo, state.circumscribed.hi), history
        if state.n >= max_iter:
            raise BudgetExceededError(
                f"no termination within {max_iter} steps: width stalled at {float(state.width):.3e} "
                f"at {precision} bits of precision; raise --precision",
                width_floor=state.width,
                precision=precision,
            )
        state = gregory_step(state, precision)
        history.append(state)


def rate_estimate(history: list[QuadratureState]) -> list[Optional[Fraction]]:
    """Ratios midgap(n+1)/midgap(n); None marks a zero midgap."""
    if len(history) < 3:
        raise DomainError(f"rate estimate needs at least 3 states, got {len(history)}")
    ratios: list[Optional[Fraction]] = []
    for before, after in zip(history, history[1:]):
        ratios.append(None if before.midgap == 0 else after.midgap / before.midgap)
    return ratios


# ── Presets ───────────────────────────────────────────────────────────


def register_preset(
    name: str,
) -> Callable[[Callable[[int], tuple[RatInterval, RatInterval]]], Callable[[int], tuple[RatInterval, RatInterval]]]:
    """Decorator to register a named start (I0, C0) built at a given precision."""

    def decorator(
        fn: Callable[[int], tuple[RatInterval, RatInterval]],
    ) -> Callable[[int], tuple[RatInterval, RatInterval]]:
        _PRESETS[name.lower()] = fn
        return fn

    return decorator


@register_preset("squares")
def _squares(p: int) -> tuple[RatInterval, RatInterval]:
    """Unit circle: inscribed and circumscribed squares."""
    return RatInterval.point(2), RatInterval.point(4)


@register_preset("hexagons")
def _hexagons(p: int) -> tuple[RatInterval, RatInterval]:
    """Unit circle: inscribed hexagon 3*sqrt(3)/2, circumscribed hexagon 2*sqrt(3)."""
    return ival_sqrt(RatInterval.point(Fraction(27, 4)), p), ival_sqrt(RatInterval.point(12), p)


def preset_start(name: str, p: int) -> tuple[RatInterval, RatInterval]:
    """Look up a named start.

    Raises:
        DomainError: If the preset is unknown.
    """
    key = name.lower()
    if key not in _PRESETS:
        raise DomainError(f"Unknown preset '{name}'. Available: {', '.join(list_presets())}")
    return _PRESETS[key](p)


def list_presets() -> list[str]:
    return sorted(_PRESETS)
