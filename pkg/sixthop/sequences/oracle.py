"""Sampling epsilon-N oracle, independent of the Levi-Civita machinery.

This checks a proposed limit the Weierstrass way on a finite sample of indices. It can
refute a wrong limit but never proves a right one; it is a test oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from loguru import logger

from sixthop.exceptions import DomainError
from sixthop.numerics.interval import RatInterval
from sixthop.numerics.rational import bits_for
from sixthop.sequences.ast import SeqExpr, print_seq_expr
from sixthop.sequences.evaluate import eval_finite

DENSE_LIMIT = 10_000
GUARD_BITS = 16
SHRINK_RATIO = Fraction(7, 8)
MAX_REFINED_PRECISION = 4096

DEFAULT_EPS = (Fraction(1, 10**3), Fraction(1, 10**6), Fraction(1, 10**9))
DEFAULT_NMAX = 10**6

# (expression, limit) pairs with known answers
CORPUS: tuple[tuple[str, Fraction], ...] = (
    ("(n+1)/n", Fraction(1)),
    ("(2*n^2+n)/(n^2+3)", Fraction(2)),
    ("sqrt(n^2+n)-n", Fraction(1, 2)),
    ("1/n", Fraction(0)),
    ("(n^2+1)/(3*n^2-n)", Fraction(1, 3)),
    ("(n-1)/n", Fraction(1)),
    ("(3*n^3-n)/(n^3+5*n^2+1)", Fraction(3)),
    ("n/sqrt(n^2+1)", Fraction(1)),
    ("(1+1/n)^2", Fraction(1)),
    ("sqrt(4*n^2+3*n)-2*n", Fraction(3, 4)),
    ("5-2/n^2", Fraction(5)),
    ("(n^2-1)/(n^2+1)", Fraction(1)),
    ("n*(sqrt(n^2+1)-n)", Fraction(1, 2)),
)


class EpsilonticVerdict(str, Enum):
    CONFIRMED = "confirmed"
    REFUTED = "refuted"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class EpsilonProbe:
    """Outcome for one epsilon.

    ``witness`` is the last sampled index that still violated ``|e(n) - L| < eps``
    (0 when none did); ``distance`` is the certified upper bound of ``|e(n_max) - L|``.
    """

    eps: Fraction
    verdict: EpsilonticVerdict
    witness: int
    distance: Fraction


def sample_indices(n_max: int) -> list[int]:
    """Every integer up to 10**4, then steps of n//8, always ending at n_max."""
    samples = list(range(1, min(DENSE_LIMIT, n_max) + 1))
    n = samples[-1]
    while n < n_max:
        n = min(n_max, n + max(1, n // 8))
        samples.append(n)
    return samples


def _distance_bounds(x: RatInterval, limit: Fraction) -> tuple[Fraction, Fraction]:
    """(lower, upper) bounds of |v - limit| over v in x."""
    d = x - limit
    upper = max(abs(d.lo), abs(d.hi))
    lower = Fraction(0) if d.contains(0) else min(abs(d.lo), abs(d.hi))
    return lower, upper


def _refined_bounds(
    e: SeqExpr, n: int, limit: Fraction, p: int, eps_list: Sequence[Fraction]
) -> tuple[Fraction, Fraction]:
    """Distance bounds at n, re-evaluated with doubled precision while some eps lies inside them."""
    lower, upper = _distance_bounds(eval_finite(e, n, p), limit)
    while p < MAX_REFINED_PRECISION and any(lower < eps <= upper for eps in eps_list):
        p *= 2
        lower, upper = _distance_bounds(eval_finite(e, n, p), limit)
        logger.debug(f"n={n}: refined to {p} bits, distance in [{float(lower):.3g}, {float(upper):.3g}]")
    return lower, upper


def epsilontic_probe(
    e: SeqExpr,
    limit: Fraction | int,
    eps_list: Sequence[Fraction],
    n_max: int = DEFAULT_NMAX,
    precision: int | None = None,
) -> list[EpsilonProbe]:
    """Per-epsilon verdicts for the claim lim e(n) = limit.

    Confirmed when every sampled index above n_max//2 is within eps; inconclusive when it
    is not, but the distance is still shrinking between n_max//2 and n_max; refuted otherwise.
    Samples whose certified distance straddles an eps are re-evaluated at doubled precision
    (up to MAX_REFINED_PRECISION bits) before they count as violations.
    """
    if not eps_list:
        raise DomainError("eps list must not be empty")
    if any(eps <= 0 for eps in eps_list):
        raise DomainError("every eps must be positive")
    if n_max < 1:
        raise DomainError(f"n_max must be at least 1, got {n_max}")

    limit = Fraction(limit)
    p = precision if precision is not None else bits_for(min(eps_list)) + GUARD_BITS
    samples = sample_indices(n_max)
    bounds = [_refined_bounds(e, n, limit, p, eps_list) for n in samples]

    half = n_max // 2
    half_bounds = [b for n, b in zip(samples, bounds) if n <= half]
    distance_at_max = bounds[-1][1]

    probes = []
    for eps in eps_list:
        witness = 0
        for n, (_, upper) in zip(samples, bounds):
            if upper >= eps:
                witness = n
        if witness <= half:
            verdict = EpsilonticVerdict.CONFIRMED
        elif half_bounds and distance_at_max <= SHRINK_RATIO * half_bounds[-1][0]:
            verdict = EpsilonticVerdict.INCONCLUSIVE
        else:
            verdict = EpsilonticVerdict.REFUTED
        logger.debug(f"eps {eps}: {verdict.value}, last violation at n={witness}")
        probes.append(EpsilonProbe(eps=Fraction(eps), verdict=verdict, witness=witness, distance=distance_at_max))

    if any(p.verdict is EpsilonticVerdict.INCONCLUSIVE for p in probes):
        logger.warning(f"epsilontic probe of {print_seq_expr(e)} inconclusive up to n={n_max}")
    return probes


def epsilontic_check(
    e: SeqExpr, limit: Fraction | int, eps_list: Sequence[Fraction], n_max: int = DEFAULT_NMAX
) -> bool:
    """True iff the sampled epsilon-N condition holds for every eps in eps_list."""
    return all(
        probe.verdict is EpsilonticVerdict.CONFIRMED for probe in epsilontic_probe(e, limit, eps_list, n_max)
    )
