"""Exact combinatorics: big-integer binomials and paired identity evaluators.

All arithmetic in this module is exact.  Rational values are carried by
:class:`fractions.Fraction`, which stores numerator and denominator in lowest
terms with a positive denominator, so equality checks in tests can be literal.

The identity evaluators return *both* sides of the identity instead of a
boolean so that a failed comparison carries diagnostic values.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import InputError


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), exact at any size.

    Uses the convention C(n, k) = 0 whenever k > n, which lets downstream
    sums run over their natural index ranges without clamping.
    """
    return math.comb(n, k)


def hockey_stick_sides(n: int, r: int) -> tuple[int, int]:
    """Both sides of the hockey stick identity.

    Left side is the column sum ``sum(C(i, r) for i in r..n)``; right side is
    the single coefficient ``C(n + 1, r + 1)``.  Requires ``n >= r >= 0``.
    """
    if not 0 <= r <= n:
        raise InputError(f"need n >= r >= 0, got n={n}, r={r}")
    lhs = sum(math.comb(i, r) for i in range(r, n + 1))
    rhs = math.comb(n + 1, r + 1)
    return lhs, rhs


def _check_identity_range(n: int, k: int, b: int) -> None:
    if not 1 <= b <= k <= n:
        raise InputError(f"need N >= k >= b >= 1, got N={n}, k={k}, b={b}")


def identity_i_sides(n: int, k: int, b: int) -> tuple[Fraction, Fraction]:
    """Both sides of the first-moment identity for the b-th largest draw.

    For k draws without replacement from {1..N}, the left side sums
    ``m * C(m-1, k-b) * C(N-m, b-1) / C(N, k)`` over the admissible values m
    of the b-th largest draw; the closed form on the right is
    ``(N+1)(k-b+1) / (k+1)``.
    """
    _check_identity_range(n, k, b)
    num = sum(
        m * math.comb(m - 1, k - b) * math.comb(n - m, b - 1)
        for m in range(k - b + 1, n - b + 2)
    )
    lhs = Fraction(num, math.comb(n, k))
    rhs = Fraction((n + 1) * (k - b + 1), k + 1)
    return lhs, rhs


def identity_ii_sides(n: int, k: int, b: int) -> tuple[Fraction, Fraction]:
    """Both sides of the matching second-moment identity.

    Same weights as :func:`identity_i_sides` but with ``m**2``; the closed
    form is ``(k-b+1)(k-b+2)(N+2)(N+1)/((k+2)(k+1)) - (N+1)(k-b+1)/(k+1)``.
    """
    _check_identity_range(n, k, b)
    num = sum(
        m * m * math.comb(m - 1, k - b) * math.comb(n - m, b - 1)
        for m in range(k - b + 1, n - b + 2)
    )
    lhs = Fraction(num, math.comb(n, k))
    rhs = Fraction(
        (k - b + 1) * (k - b + 2) * (n + 2) * (n + 1), (k + 2) * (k + 1)
    ) - Fraction((n + 1) * (k - b + 1), k + 1)
    return lhs, rhs


def identity_iii_sides(a: int, b: int, k: int) -> tuple[int, int]:
    """Both sides of the Vandermonde-style convolution identity.

    ``C(a+b+k+1, a+b+1) == sum(C(a+i, a) * C(b+k-i, b) for i in 0..k)``.
    All three arguments must be non-negative.
    """
    if a < 0 or b < 0 or k < 0:
        raise InputError(f"need a, b, k >= 0, got a={a}, b={b}, k={k}")
    lhs = math.comb(a + b + k + 1, a + b + 1)
    rhs = sum(
        math.comb(a + i, a) * math.comb(b + k - i, b) for i in range(k + 1)
    )
    return lhs, rhs
