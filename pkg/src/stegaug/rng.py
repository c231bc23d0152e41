"""Deterministic counter-based random streams for per-sample augmentation draws.

The generator is fixed so that outputs are reproducible bit-for-bit across
platforms, worker counts, and language bindings.  Everything reduces to one
pure function of (seed, sample index, draw counter):

    mix64(z): the SplitMix64 finalizer
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9   (mod 2**64)
        z = (z ^ (z >> 27)) * 0x94D049BB133111EB   (mod 2**64)
        z ^ (z >> 31)

    stream key for sample i under seed s:
        key(s, i) = mix64(s + GOLDEN * (i + 1))     (mod 2**64)

    draw number t of that stream:
        u64(s, i, t) = mix64(key(s, i) + GOLDEN * (t + 1))   (mod 2**64)

with GOLDEN = 0x9E3779B97F4A7C15.  The draws are the SplitMix64 output
sequence started from state key(s, i); key(0, 0) itself is the published
first SplitMix64 output for seed 0, 0xE220A8397B1DCDAF.

Derived draws, in terms of successive u64 values v:

  * uniform float in [0, 1):  (v >> 11) * 2**-53
  * unbiased integer in [0, n): rejection sampling; accept v if
    v < 2**64 - (2**64 mod n), return v mod n, else consume the next v.

Because each sample owns an independent stream, batch augmentation is
order-independent: processing samples in any order, on any number of
workers, consumes exactly the same draws per sample.
"""

from __future__ import annotations

import numpy as np

__all__ = ["GOLDEN", "MASK64", "mix64", "mix64_array", "stream_keys", "DecisionStream"]

GOLDEN = 0x9E3779B97F4A7C15
MASK64 = (1 << 64) - 1

_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB


def mix64(z: int) -> int:
    """SplitMix64 finalizer on a 64-bit integer."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * _M1) & MASK64
    z = ((z ^ (z >> 27)) * _M2) & MASK64
    return z ^ (z >> 31)


def mix64_array(z: np.ndarray) -> np.ndarray:
    """Vectorized mix64 over a uint64 array (wrapping arithmetic)."""
    z = z.astype(np.uint64, copy=True)
    with np.errstate(over="ignore"):
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_M1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_M2)
    return z ^ (z >> np.uint64(31))


def stream_keys(seed: int, indices: np.ndarray) -> np.ndarray:
    """Vectorized stream keys for an array of sample indices."""
    idx = indices.astype(np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(seed & MASK64) + np.uint64(GOLDEN) * (idx + np.uint64(1))
    return mix64_array(z)


class DecisionStream:
    """Sequential view of one sample's draw stream.

    Draws are consumed in a fixed order; the stream state is just a counter,
    so any draw can also be recomputed directly from (seed, index, t).
    """

    __slots__ = ("key", "counter")

    def __init__(self, seed: int, index: int):
        if not 0 <= seed <= MASK64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
        if index < 0:
            raise ValueError(f"sample index must be >= 0, got {index}")
        self.key = mix64(seed + GOLDEN * (index + 1))
        self.counter = 0

    def next_u64(self) -> int:
        value = mix64(self.key + GOLDEN * (self.counter + 1))
        self.counter += 1
        return value

    def uniform(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def randbelow(self, n: int) -> int:
        """Unbiased integer in [0, n) via rejection sampling."""
        if n <= 0:
            raise ValueError(f"randbelow needs n >= 1, got {n}")
        span = (1 << 64) - ((1 << 64) % n)
        while True:
            value = self.next_u64()
            if value < span:
                return value % n
