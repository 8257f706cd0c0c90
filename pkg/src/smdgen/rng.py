"""Deterministic random-stream derivation.

Every random draw in the package flows from an explicit 64-bit seed through
one documented scheme: a splitmix64 mix of (base_seed, key...) produces a
per-stream seed, which initializes a numpy PCG64 generator.  Derived streams
for distinct keys are statistically independent, and the same
(base_seed, keys) always yields the same stream, so datasets, checkpoints
and samples are reproducible across runs and machines.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def splitmix64(state: int) -> int:
    """One splitmix64 output step for a 64-bit state."""
    z = (state + _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_seed(base_seed: int, *keys: int) -> int:
    """Mix a base seed with integer keys into a single 64-bit stream seed."""
    s = base_seed & _MASK64
    for k in keys:
        s = splitmix64(s ^ (int(k) & _MASK64))
    return splitmix64(s)


def make_rng(base_seed: int, *keys: int) -> np.random.Generator:
    """PCG64 generator for the stream identified by (base_seed, keys)."""
    return np.random.Generator(np.random.PCG64(derive_seed(base_seed, *keys)))
