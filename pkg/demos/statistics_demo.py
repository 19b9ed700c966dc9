"""
False-positive statistics
=========================

The expected number of false positives over a full insertion run has a
closed form; check it against a Monte Carlo simulation of the same
process.
"""

import math

from bloomprim import (
    BloomParams,
    false_positive_stats,
    simulate_false_positive_counts,
)

print(f"{'inserts':>8} {'bits':>9} {'k':>2} {'mean':>8} {'stddev':>7}")
for n in (1_000, 11_000, 51_000, 101_000):
    params = BloomParams.for_capacity(n, epsilon=0.01)
    stats = false_positive_stats(n, params.bit_count, params.hash_count)
    print(f"{n:>8,} {params.bit_count:>9,} {params.hash_count:>2} "
          f"{stats.mean:>8.2f} {stats.stddev:>7.2f}")

# Simulate 11,000 insertions 200 times and compare the sample mean with
# the formula.  Each trial counts the keys whose probe bits were all
# set by earlier insertions.
n = 11_000
params = BloomParams.for_capacity(n, epsilon=0.01)
stats = false_positive_stats(n, params.bit_count, params.hash_count)
counts = simulate_false_positive_counts(
    n, params.bit_count, params.hash_count, trials=200, seed=1
)
stderr = stats.stddev / math.sqrt(len(counts))
print(f"\nformula mean       : {stats.mean:.3f}")
print(f"simulated mean     : {counts.mean():.3f} +- {stderr:.3f}")
print(f"simulated variance : {counts.var(ddof=1):.2f} (formula {stats.variance:.2f})")

# The hash count may be fractional for sensitivity checks around the
# integer rounding used by the filter itself.
fractional = params.bit_count * math.log(2) / n
print(f"\nmean with fractional k={fractional:.3f}: "
      f"{false_positive_stats(n, params.bit_count, fractional).mean:.3f}")
