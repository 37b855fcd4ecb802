"""Estimators for equal factory sizes with a fixed, known gap.

With l factories of common size N separated by a known gap G, any valid
serial m decomposes as ``m = x + G * f`` where f is the 0-based factory
index and x is the gap-free serial m would carry if the factories were
packed contiguously onto {1..lN}.  The distribution of the sample maximum
then factors through the classical problem on {1..lN} plus the expected
cumulative offset E[H] of the maximum, which has an exact closed form via
the hockey stick identity and a Faulhaber-style leading-term approximation
for the small-sample regime.

Offsets here index factories from the serial's position in its interval,
i.e. H(x) = G * floor((x - 1) / N) on gap-free serials.  The alternative
floor(x / N) differs exactly at factory right-endpoints and is inconsistent
with the decomposition above; the exhaustive pmf-weighted tests pin this
choice down.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinat import binomial
from .errors import InputError, InvalidSerialError
from .estimators import Estimate, Method


@dataclass(frozen=True)
class FixedGapModel:
    """l equal factories of size N with constant gap G between them."""

    factories: int
    factory_size: int
    gap: int

    def __post_init__(self) -> None:
        if self.factories < 1 or self.factory_size < 1 or self.gap < 0:
            raise InputError(
                f"need factories >= 1, factory_size >= 1, gap >= 0; got "
                f"{self.factories}, {self.factory_size}, {self.gap}"
            )

    @property
    def total(self) -> int:
        """Total number of valid serials, l * N."""
        return self.factories * self.factory_size

    @property
    def period(self) -> int:
        return self.factory_size + self.gap

    def serials(self) -> list[int]:
        """All valid serials in increasing order."""
        out = []
        for f in range(self.factories):
            base = f * self.period
            out.extend(range(base + 1, base + self.factory_size + 1))
        return out

    def factory_index(self, serial: int) -> int:
        """0-based factory containing ``serial``; rejects gap serials."""
        if serial < 1:
            raise InvalidSerialError(f"serial {serial} is not positive")
        f, pos = divmod(serial - 1, self.period)
        if f >= self.factories or pos >= self.factory_size:
            raise InvalidSerialError(
                f"serial {serial} falls in a gap or beyond the last factory"
            )
        return f

    def gap_free(self, serial: int) -> int:
        """Serial with all preceding gaps removed, mapping onto {1..lN}."""
        return serial - self.gap * self.factory_index(serial)

    def offset(self, serial: int) -> int:
        """Cumulative gap below ``serial``: G times its factory index."""
        return self.gap * self.factory_index(serial)


def _check_sample_size(model: FixedGapModel, sample_size: int) -> None:
    if not 1 <= sample_size <= model.total:
        raise InputError(
            f"need 1 <= sample_size <= {model.total}, got {sample_size}"
        )


def max_pmf(model: FixedGapModel, sample_size: int, serial: int) -> Fraction:
    """P(sample maximum = serial) for k draws without replacement.

    The maximum is ``serial`` iff the other k - 1 draws all precede it,
    and the count of valid predecessors is its gap-free value minus 1:
    ``C(gap_free(serial) - 1, k - 1) / C(lN, k)``.
    """
    _check_sample_size(model, sample_size)
    x = model.gap_free(serial)
    return Fraction(
        binomial(x - 1, sample_size - 1), binomial(model.total, sample_size)
    )


def expected_offset_exact(model: FixedGapModel, sample_size: int) -> Fraction:
    """Exact E[H], the expected cumulative gap below the sample maximum.

    Hockey-stick summation of the maximum's pmf over each factory block
    collapses to ``G*l - G * sum(C(t*N, k) for t in 1..l) / C(l*N, k)``,
    valid for every 1 <= k <= lN thanks to the C(n, k) = 0 convention.
    """
    _check_sample_size(model, sample_size)
    l, n, g, k = model.factories, model.factory_size, model.gap, sample_size
    tail = sum(binomial(t * n, k) for t in range(1, l + 1))
    return g * l - Fraction(g * tail, binomial(l * n, k))


def expected_offset_approx(model: FixedGapModel, sample_size: int) -> float:
    """Leading-order E[H] for k much smaller than lN: G(kl/(k+1) - 1/2).

    Comes from expanding the binomial ratio and keeping the two leading
    Faulhaber terms of the power sum.  No error is raised outside the
    intended regime; use :func:`approx_in_regime` to flag k > N.
    """
    if sample_size < 1:
        raise InputError(f"need sample_size >= 1, got {sample_size}")
    k, l, g = sample_size, model.factories, model.gap
    return g * (k * l / (k + 1) - 0.5)


def approx_in_regime(model: FixedGapModel, sample_size: int) -> bool:
    """Whether the leading-order approximation is trustworthy (k <= N)."""
    return sample_size <= model.factory_size


def expected_max_exact(model: FixedGapModel, sample_size: int) -> Fraction:
    """Exact E[M]: gap-free expectation k(lN+1)/(k+1) plus exact E[H]."""
    _check_sample_size(model, sample_size)
    k = sample_size
    gap_free_mean = Fraction(k * (model.total + 1), k + 1)
    return gap_free_mean + expected_offset_exact(model, sample_size)


def fixed_gap_estimate_k1(factories: int, gap: int, maximum: int) -> Estimate:
    """Exactly unbiased single-sample estimate of the common factory size.

    ``(2M - G(l-1) - 1) / l``, from solving E[M] = M for N at k = 1.  Small
    maxima can make the raw value negative; it is returned unclamped because
    unbiasedness requires it, with ``max(value, 1)`` in the diagnostics as a
    clamped convenience.
    """
    if factories < 1 or gap < 0 or maximum < 1:
        raise InputError(
            f"need factories >= 1, gap >= 0, maximum >= 1; got "
            f"{factories}, {gap}, {maximum}"
        )
    value = (2 * maximum - gap * (factories - 1) - 1) / factories
    return Estimate(
        value=value,
        method=Method.FIXED_GAP_EXACT_K1,
        diagnostics={
            "factories": factories,
            "gap": gap,
            "max": maximum,
            "clamped": max(value, 1.0),
        },
    )


def fixed_gap_estimate(
    factories: int, gap: int, sample_size: int, maximum: int
) -> Estimate:
    """Approximate factory-size estimate from the sample maximum alone.

    Inverts the approximate expectation of the maximum:
    ``((k+1)M/k - Gl + G(k+1)/(2k) - 1) / l``.  At k = 1 this coincides
    algebraically with the exact single-sample estimator.  Best in the
    regime k much smaller than lN; large gaps amplify the approximation
    error, since only the offset term depends on G.
    """
    if factories < 1 or gap < 0:
        raise InputError(
            f"need factories >= 1 and gap >= 0, got {factories} and {gap}"
        )
    if sample_size < 1 or maximum < sample_size:
        raise InputError(
            f"need 1 <= sample_size <= maximum, got "
            f"sample_size={sample_size}, maximum={maximum}"
        )
    k, l, g, m = sample_size, factories, gap, maximum
    value = ((k + 1) * m / k - g * l + g * (k + 1) / (2 * k) - 1) / l
    return Estimate(
        value=value,
        method=Method.FIXED_GAP_APPROX,
        diagnostics={
            "factories": l,
            "gap": g,
            "k": k,
            "max": m,
            "approx_in_regime_requires": "k <= factory_size",
        },
    )


def fixed_gap_estimate_invert(
    factories: int, gap: int, sample_size: int, maximum: int
) -> Estimate:
    """Integer factory size whose exact E[M] comes closest to the maximum.

    Bisects E[M](N) over integers.  E[M] is dominated by the linearly
    increasing gap-free term; for gaps enormously larger than the factories
    it can dip locally, so after bisection the neighbourhood is scanned and
    the closest candidate returned (ties to the smaller size).
    """
    if factories < 1 or gap < 0:
        raise InputError(
            f"need factories >= 1 and gap >= 0, got {factories} and {gap}"
        )
    if sample_size < 1 or maximum < sample_size:
        raise InputError(
            f"need 1 <= sample_size <= maximum, got "
            f"sample_size={sample_size}, maximum={maximum}"
        )
    k, l = sample_size, factories

    def expected(n: int) -> Fraction:
        return expected_max_exact(FixedGapModel(l, n, gap), k)

    lo = max(1, -(-k // l))  # smallest N with k <= l*N
    hi = lo
    while expected(hi) < maximum:  # E[M] >= k(lN+1)/(k+1), so this exits
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if expected(mid) < maximum:
            lo = mid + 1
        else:
            hi = mid
    floor_n = max(1, -(-k // l))
    candidates = range(max(floor_n, lo - 2), lo + 3)
    best = min(candidates, key=lambda n: (abs(expected(n) - maximum), n))
    return Estimate(
        value=float(best),
        method=Method.FIXED_GAP_INVERT,
        diagnostics={
            "factories": l,
            "gap": gap,
            "k": k,
            "max": maximum,
            "expected_max_at_value": float(expected(best)),
        },
    )
