"""Serial-number samples and the single-interval estimators built on them.

Two estimators live here.  The classical one assumes serials run 1..N and
scales the observed maximum; the unknown-minimum variant assumes serials run
a..a+N-1 for an unknown start a and scales the observed spread instead.
Alongside them sit the exact distributional facts used by the test oracles:
the probability mass function of the spread and the closed-form moments and
variances, all as exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Any, Iterable, NamedTuple

from .errors import EmptySampleError, InputError, InsufficientSampleError


class Method(str, Enum):
    """Tag identifying which estimator produced an :class:`Estimate`."""

    GTP = "GTP"
    GTP_UM = "GTP_UM"
    MFP = "MFP"
    FIXED_GAP_EXACT_K1 = "FIXED_GAP_EXACT_K1"
    FIXED_GAP_APPROX = "FIXED_GAP_APPROX"
    FIXED_GAP_INVERT = "FIXED_GAP_INVERT"


@dataclass(frozen=True)
class Sample:
    """A duplicate-free draw of serial numbers, stored sorted ascending.

    The constructor expects an already strictly increasing tuple; use
    :meth:`from_serials` to sort and validate arbitrary input order.
    """

    serials: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.serials) == 0:
            raise EmptySampleError("sample must contain at least one serial")
        prev = 0
        for s in self.serials:
            if not isinstance(s, int):
                raise InputError(f"serials must be integers, got {s!r}")
            if s <= prev:
                raise InputError(
                    "serials must be strictly increasing positive integers"
                )
            prev = s

    @classmethod
    def from_serials(cls, values: Iterable[int]) -> "Sample":
        """Sort ``values`` and build a sample, rejecting duplicates."""
        ordered = sorted(values)
        for a, b in zip(ordered, ordered[1:]):
            if a == b:
                raise InputError(f"duplicate serial {a}")
        return cls(tuple(ordered))

    @property
    def size(self) -> int:
        return len(self.serials)

    @property
    def maximum(self) -> int:
        return self.serials[-1]

    @property
    def minimum(self) -> int:
        return self.serials[0]

    @property
    def spread(self) -> int:
        """Maximum minus minimum; at least ``size - 1`` for distinct ints."""
        return self.serials[-1] - self.serials[0]


@dataclass(frozen=True)
class Estimate:
    """An estimator output: finite real value, method tag, diagnostics."""

    value: float
    method: Method
    diagnostics: dict[str, Any] | None = None


def gtp_exact(sample: Sample) -> Fraction:
    """Exact rational value of the classical estimate, M(1 + 1/k) - 1."""
    k = sample.size
    return Fraction(sample.maximum * (k + 1) - k, k)


def gtp_um_exact(sample: Sample) -> Fraction:
    """Exact rational value of the unknown-minimum estimate.

    S(1 + 2/(k-1)) - 1 with S the spread; needs at least two observations.
    """
    k = sample.size
    if k < 2:
        raise InsufficientSampleError(
            "unknown-minimum estimator needs at least 2 serials"
        )
    return Fraction(sample.spread * (k + 1) - (k - 1), k - 1)


def gtp_estimate(sample: Sample) -> Estimate:
    """Classical estimate of N from a sample of {1..N}.

    Accepts singletons (value 2M - 1): the multi-factory pipeline applies
    this to a first factory that may have contributed only one serial.
    """
    value = gtp_exact(sample)
    return Estimate(
        value=float(value),
        method=Method.GTP,
        diagnostics={"k": sample.size, "max": sample.maximum},
    )


def gtp_um_estimate(sample: Sample) -> Estimate:
    """Estimate of N from a sample of {a..a+N-1} with unknown start a."""
    value = gtp_um_exact(sample)
    return Estimate(
        value=float(value),
        method=Method.GTP_UM,
        diagnostics={
            "k": sample.size,
            "min": sample.minimum,
            "max": sample.maximum,
            "spread": sample.spread,
        },
    )


def _check_spread_range(population: int, sample_size: int) -> None:
    if not 2 <= sample_size <= population:
        raise InputError(
            f"need 2 <= sample_size <= population, got "
            f"sample_size={sample_size}, population={population}"
        )


def spread_pmf(population: int, sample_size: int, spread: int) -> Fraction:
    """P(spread = s) for k draws without replacement from an interval of N.

    Equals ``(N - s) * C(s - 1, k - 2) / C(N, k)`` on s in {k-1, .., N-1}
    and 0 elsewhere: N - s placements of the min/max pair, times the ways to
    choose the remaining k - 2 serials strictly between them.
    """
    _check_spread_range(population, sample_size)
    if spread < sample_size - 1 or spread > population - 1:
        return Fraction(0)
    return Fraction(
        (population - spread) * comb(spread - 1, sample_size - 2),
        comb(population, sample_size),
    )


class SpreadMoments(NamedTuple):
    """First two moments and variance of the spread, as exact rationals."""

    mean: Fraction
    second_moment: Fraction
    variance: Fraction

    def as_floats(self) -> tuple[float, float, float]:
        return float(self.mean), float(self.second_moment), float(self.variance)


def spread_moments(population: int, sample_size: int) -> SpreadMoments:
    """Closed-form E[S], E[S^2] and Var(S) of the spread."""
    _check_spread_range(population, sample_size)
    n, k = population, sample_size
    mean = Fraction((n + 1) * (k - 1), k + 1)
    second = Fraction(k * (k - 1) * (n + 1) * (n + 2), (k + 1) * (k + 2)) - mean
    variance = Fraction(
        2 * (k - 1) * (n + 1) * (n - k), (k + 1) ** 2 * (k + 2)
    )
    return SpreadMoments(mean, second, variance)


def gtp_variance(population: int, sample_size: int) -> Fraction:
    """Variance of the classical estimator: (N+1)(N-k) / (k(k+2))."""
    n, k = population, sample_size
    if not 1 <= k <= n:
        raise InputError(
            f"need 1 <= sample_size <= population, got {k} and {n}"
        )
    return Fraction((n + 1) * (n - k), k * (k + 2))


def gtp_um_variance(population: int, sample_size: int) -> Fraction:
    """Variance of the unknown-minimum estimator: 2(N+1)(N-k)/((k-1)(k+2)).

    This is 2k/(k-1) times the classical estimator's variance, reflecting
    uncertainty at both ends of the interval instead of one.
    """
    n, k = population, sample_size
    if not 2 <= k <= n:
        raise InputError(
            f"need 2 <= sample_size <= population, got {k} and {n}"
        )
    return Fraction(2 * (n + 1) * (n - k), (k - 1) * (k + 2))
