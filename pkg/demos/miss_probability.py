"""Walkthrough: how likely is a sample to miss a factory entirely?

Splitting an estimate across factories only works if every factory shows up
in the sample.  This prints the exact probability of missing one, its
large-factory limit, and the threshold behaviour when the number of
factories grows with the sample size.
"""

import csv
from pathlib import Path

from tankcount import (
    CurveMapping,
    GrowthRegime,
    p_miss_exact,
    p_miss_limit,
    q_expectation,
    regime_curve,
)

# Exact beats intuition: six factories of 100, how many samples until the
# chance of missing one drops below 1%?
print("factories=6, factory size=100")
print("  k   P(miss >= 1 factory)")
for k in (6, 10, 20, 30, 40, 50):
    p = float(p_miss_exact(100, 6, k))
    print(f"{k:>3}   {p:.6f}")

# The exact value barely depends on the factory size once it is large; the
# limit drops the unknown size entirely.
print("\nconvergence to the large-factory limit (l=4, k=12):")
for size in (10, 100, 1000, 10_000):
    exact = float(p_miss_exact(size, 4, 12))
    print(f"  N={size:>6}: exact={exact:.6f}")
print(f"  limit    : {p_miss_limit(4, 12):.6f}")

# Expected fraction of empty factories in the limit.
print("\nexpected fraction of empty factories, k = l:")
for l in (5, 20, 100):
    print(f"  l={l:>3}: {q_expectation(l, l):.4f}  (e^-1 = 0.3679)")

# Threshold effect: grow the factory count like k**c.  Linear growth is
# hopeless, square-root growth is safe.
out = Path(__file__).resolve().parent / "out"
out.mkdir(exist_ok=True)
path = out / "miss_curves.csv"
with open(path, "w", newline="", encoding="utf-8") as fh:
    writer = csv.writer(fh)
    writer.writerow(["k", "l", "p_miss", "regime"])
    for exponent, label in ((1.0, "l=k"), (0.5, "l=sqrt(k)")):
        curve = regime_curve(
            GrowthRegime(scale=1, exponent=exponent),
            CurveMapping.L_OF_K,
            range(10, 201, 10),
        )
        for point in curve:
            writer.writerow([point.samples, point.factories, point.p_miss, label])
print(f"\nwrote threshold curves to {path}")
print("  l = k       at k=200:", f"{p_miss_limit(200, 200):.6f}")
print("  l = sqrt(k) at k=200:", f"{p_miss_limit(14, 200):.2e}")
