"""Probability that a sample misses at least one factory.

For l equal-size factories of N serials each and k draws without
replacement, the exact miss probability is an inclusion-exclusion sum over
the sets of factories that could be entirely unsampled.  Its N -> infinity
limit replaces the hypergeometric ratios with multinomial cell
probabilities, which also yields the mean and variance of the limiting
fraction of empty factories.

Alternating binomial sums like these cancel catastrophically in floating
point once l is even moderately large (at l = k = 200 a double-precision
accumulation is off by nine orders of magnitude), so every sum here is
accumulated exactly over the integers and only converted to float at the
boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, NamedTuple

from .combinat import binomial
from .errors import InputError, RegimeError


def _check_query(factory_size: int, factories: int, samples: int) -> None:
    if factory_size < 1 or factories < 1:
        raise InputError(
            f"need factory_size >= 1 and factories >= 1, got "
            f"{factory_size} and {factories}"
        )
    if not 1 <= samples <= factory_size * factories:
        raise InputError(
            f"need 1 <= samples <= factory_size * factories, got "
            f"samples={samples} with {factories} factories of {factory_size}"
        )


def p_miss_exact(factory_size: int, factories: int, samples: int) -> Fraction:
    """Exact probability that k draws miss at least one of l factories.

    Inclusion-exclusion over which factories are empty:
    ``sum((-1)**(i+1) * C(l, i) * C(N(l-i), k) for i in 1..l-1) / C(Nl, k)``.
    A single factory can never be missed, so the result is 0 for l = 1.
    """
    _check_query(factory_size, factories, samples)
    n, l, k = factory_size, factories, samples
    num = sum(
        (-1) ** (i + 1) * binomial(l, i) * binomial(n * (l - i), k)
        for i in range(1, l)
    )
    return Fraction(num, binomial(n * l, k))


def p_miss_limit_exact(factories: int, samples: int) -> Fraction:
    """Large-factory limit of the miss probability, as an exact rational.

    With N -> infinity, sampling without replacement converges to i.i.d.
    uniform placement over the l factories, and each hypergeometric ratio
    becomes ((l - i)/l)**k.
    """
    if factories < 1 or samples < 1:
        raise InputError(
            f"need factories >= 1 and samples >= 1, got "
            f"{factories} and {samples}"
        )
    l, k = factories, samples
    num = sum(
        (-1) ** (i + 1) * binomial(l, i) * (l - i) ** k for i in range(1, l)
    )
    return Fraction(num, l**k)


def p_miss_limit(factories: int, samples: int) -> float:
    """Large-factory limit of the miss probability, as a float in [0, 1]."""
    return float(p_miss_limit_exact(factories, samples))


def q_expectation(factories: int, samples: int) -> float:
    """Expected limiting fraction of factories left unsampled: (1 - 1/l)**k."""
    if factories < 1 or samples < 0:
        raise InputError(
            f"need factories >= 1 and samples >= 0, got "
            f"{factories} and {samples}"
        )
    return float(Fraction(factories - 1, factories) ** samples)


def q_variance(factories: int, samples: int) -> float:
    """Variance of the limiting fraction of unsampled factories.

    Splits into a 1/l-scaled difference of occupancy powers plus the excess
    of the pairwise term over the squared mean:
    ``(1/l)((1-1/l)^k - (1-2/l)^k) + ((1-2/l)^k - (1-1/l)^(2k))``.
    Rejects l < 2, where the pairwise (1 - 2/l) factor is meaningless.
    """
    if factories < 2:
        raise InputError(f"need factories >= 2, got {factories}")
    if samples < 0:
        raise InputError(f"need samples >= 0, got {samples}")
    l, k = factories, samples
    one = Fraction(l - 1, l) ** k
    two = Fraction(l - 2, l) ** k
    rho = Fraction(1, l) * (one - two)
    sigma = two - one**2
    return float(rho + sigma)


@dataclass(frozen=True)
class GrowthRegime:
    """Coupled growth law between factory count and sample count.

    ``scale`` and ``exponent`` define l = floor(scale * k**exponent) when
    factories are derived from samples, and the inverse map
    k = ceil(l**(1/exponent) / scale) when samples are derived from
    factories.
    """

    scale: float
    exponent: float

    def __post_init__(self) -> None:
        if self.scale <= 0 or self.exponent <= 0:
            raise InputError(
                f"need scale > 0 and exponent > 0, got "
                f"scale={self.scale}, exponent={self.exponent}"
            )

    def factories_for(self, samples: int) -> int:
        return math.floor(self.scale * samples**self.exponent)

    def samples_for(self, factories: int) -> int:
        return math.ceil(factories ** (1.0 / self.exponent) / self.scale)


class CurveMapping(Enum):
    """Which variable of the growth law the input values feed."""

    L_OF_K = "l_of_k"
    K_OF_L = "k_of_l"


class CurvePoint(NamedTuple):
    samples: int
    factories: int
    p_miss: float


def regime_curve(
    regime: GrowthRegime,
    mapping: CurveMapping,
    values: Iterable[int],
    factory_size: int | None = None,
) -> list[CurvePoint]:
    """Miss probability along a growth-law curve, ordered by sample count.

    ``values`` are sample counts for ``L_OF_K`` and factory counts for
    ``K_OF_L``.  With ``factory_size=None`` each point uses the
    large-factory limit; otherwise the exact finite-size probability.
    Points whose derived pair is inadmissible (fewer than one factory or
    sample, or more samples than serials exist) are collected and reported
    in a single error.
    """
    points: list[tuple[int, int]] = []
    bad: list[int] = []
    for value in values:
        if mapping is CurveMapping.L_OF_K:
            k, l = value, regime.factories_for(value)
        else:
            k, l = regime.samples_for(value), value
        admissible = k >= 1 and l >= 1
        if admissible and factory_size is not None:
            admissible = k <= factory_size * l
        if not admissible:
            bad.append(value)
        else:
            points.append((k, l))
    if bad:
        raise RegimeError(bad, "derived point violates 1 <= k <= N*l, l >= 1")
    out = []
    for k, l in sorted(points):
        if factory_size is None:
            p = p_miss_limit(l, k)
        else:
            p = float(p_miss_exact(factory_size, l, k))
        out.append(CurvePoint(k, l, p))
    return out
