"""
Metallic means as exact integer arithmetic
==========================================

The golden mean tau, the silver mean rho = 1 + sqrt(2) and eta = 1 + sqrt(3)
all satisfy a quadratic x^2 = p*x + q with small integers, so every power of
them is again an integer combination  a*x + b.  This script prints those
power tables and the integer sequences the coefficients trace out.
"""

import numpy as np

from quasisym.algebra import (
    MetallicMean,
    QuadraticInteger,
    metallic_power,
    metallic_power_pair,
    recurrence_sequence,
)

for mean in (MetallicMean.TAU, MetallicMean.RHO, MetallicMean.ETA):
    p, q = mean.minimal_poly
    print(f"\n{mean.label}: root of x^2 = {p}x + {q},  value = {mean.value():.12f}")
    print(f"  {'k':>2}  {'power as a*x + b':<18} {'float':>16}")
    for k in range(1, 7):
        a, b = metallic_power_pair(mean, k)
        val = metallic_power(mean, k).embed()
        print(f"  {k:>2}  {a:>3}*{mean.label} + {b:<8} {val:>16.8f}")
        # the exact expansion must agree with plain floating-point powers
        assert abs(val - mean.value() ** k) < 1e-6 * mean.value() ** k

print("\ncoefficient sequences (s0=0, s1=1, s[k+1] = p*s[k] + q*s[k-1]):")
print("  tau ->", recurrence_sequence(MetallicMean.TAU, 11), "(Fibonacci)")
print("  rho ->", recurrence_sequence(MetallicMean.RHO, 10), "(Pell)")
print("  eta ->", recurrence_sequence(MetallicMean.ETA, 10))

# tau and rho are units (norm +-1), so they have exact inverse powers too
print("\nnegative powers of the unit means:")
for mean in (MetallicMean.TAU, MetallicMean.RHO):
    a, b = metallic_power_pair(mean, -3)
    print(f"  {mean.label}^-3 = {a}*{mean.label} + {b}"
          f"  ({a * mean.value() + b:.10f})")

try:
    metallic_power_pair(MetallicMean.ETA, -1)
except ValueError as e:
    print(f"  eta^-1 -> {e}")

# ring arithmetic keeps everything exact: (1 + sqrt(2))^2 = 3 + 2*sqrt(2)
silver = QuadraticInteger(1, 1, 2)
sq = silver * silver
print(f"\n(1 + sqrt(2))^2 = {sq.b} + {sq.a}*sqrt(2),  norm {silver.norm()}")
print("growth check: ratio of consecutive Pell numbers ->",
      np.round(985 / 408, 10), "vs rho =", np.round(MetallicMean.RHO.value(), 10))
