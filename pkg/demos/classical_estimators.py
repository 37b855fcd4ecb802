"""Walkthrough: the two single-interval estimators and their exact facts.

Estimates the size of a serial range from a handful of observed serials,
then checks unbiasedness and the closed-form variances by brute force.
"""

from fractions import Fraction
from itertools import combinations

from tankcount import (
    Sample,
    gtp_estimate,
    gtp_exact,
    gtp_um_estimate,
    gtp_um_exact,
    gtp_um_variance,
    gtp_variance,
    spread_moments,
)

# An observed sample. If serials are known to start at 1, the classical
# estimator uses the maximum; if the start is unknown, the spread.
observed = Sample.from_serials([47, 102, 341, 288, 5])
print("observed serials:", observed.serials)
print("known minimum   :", gtp_estimate(observed).value)
print("unknown minimum :", gtp_um_estimate(observed).value)

# Unbiasedness, the long way: average the estimate over every possible
# sample of 3 serials from a true range of 9.
n, k = 9, 3
mean = Fraction(0)
count = 0
for combo in combinations(range(1, n + 1), k):
    mean += gtp_exact(Sample(combo))
    count += 1
print(f"\nexhaustive mean over all {count} samples of size {k} from 1..{n}:",
      mean / count)

# Same for the unknown-minimum estimator on a shifted range 101..109.
mean = Fraction(0)
for combo in combinations(range(101, 101 + n), k):
    mean += gtp_um_exact(Sample(combo))
print("same, spread estimator on a shifted range      :", mean / count)

# The spread's distribution is fully known; its closed-form moments are
# exact rationals.
moments = spread_moments(n, k)
print(f"\nspread moments at N={n}, k={k}: mean={moments.mean}, "
      f"var={moments.variance}")

# The price of not knowing the minimum is a 2k/(k-1) variance ratio.
print("\n  k   var(known min)   var(unknown min)   ratio")
for kk in (2, 3, 5, 10, 20):
    v1 = gtp_variance(100, kk)
    v2 = gtp_um_variance(100, kk)
    print(f"{kk:>3}   {float(v1):>14.3f}   {float(v2):>16.3f}   {float(v2 / v1):.3f}")
