"""Counter-based random streams for reproducible Monte Carlo.

Each sample owns a keyed stream; draw k of stream i depends only on
(seed, i, k). Results are therefore bit-identical no matter how samples are
batched, vectorized or scheduled. The generator is the splitmix64 finalizer
over a Weyl sequence, applied twice: once to derive the per-sample key from
(seed, sample index), once per draw.
"""

from __future__ import annotations

import numpy as np

_MASK = 0xFFFFFFFFFFFFFFFF
_PHI = 0x9E3779B97F4A7C15
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)


def _mix(x: np.ndarray) -> np.ndarray:
    x = (x ^ (x >> np.uint64(30))) * _M1
    x = (x ^ (x >> np.uint64(27))) * _M2
    return x ^ (x >> np.uint64(31))


def stream_keys(seed: int, indices: np.ndarray) -> np.ndarray:
    """64-bit key per global sample index."""
    base = np.uint64(seed & _MASK)
    offsets = ((indices.astype(np.uint64) + np.uint64(1)) * np.uint64(_PHI))
    with np.errstate(over="ignore"):
        return _mix(base + offsets)


def uniforms(keys: np.ndarray, step: int) -> np.ndarray:
    """The step-th uniform in [0, 1) of each keyed stream."""
    offset = np.uint64((_PHI * (step + 1)) & _MASK)
    with np.errstate(over="ignore"):
        bits = _mix(keys + offset)
    # top 53 bits give a dyadic uniform in [0, 1)
    return (bits >> np.uint64(11)) * 2.0**-53
