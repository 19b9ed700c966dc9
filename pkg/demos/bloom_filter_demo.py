"""
Bloom filter basics
===================

Size a filter for a target false-positive rate, fill it, and measure
the rate it actually delivers.
"""

from bloomprim import BloomFilter, BloomParams

# Sizing: 1,000 keys at a 1% false-positive target.
params = BloomParams.for_capacity(1_000, epsilon=0.01)
print(f"bit_count={params.bit_count}  hash_count={params.hash_count}  "
      f"payload={params.payload_bytes} bytes")

# A plain Python set storing 1,000 small ints costs tens of kilobytes;
# the filter stores the same membership signal in ~1.2 KB.
filt = BloomFilter(params, hash_seed=0)
for key in range(1_000):
    filt.add(key)

# Added keys are always found — the filter never produces false negatives.
assert all(filt.contains(key) for key in range(1_000))
print("all 1,000 added keys report present")

# Probe keys that were never added and count how many slip through.
probes = 100_000
false_positives = sum(
    1 for key in range(10**9, 10**9 + probes) if filt.contains(key)
)
print(f"false-positive rate over {probes:,} foreign probes: "
      f"{false_positives / probes:.4f} (target 0.01)")
