"""Pure NumPy commute-time sampler, bit-compatible with the compiled kernel.

Walkers advance in vectorized batches, each walk driven by its own
splitmix64 stream derived from the master seed, so the sampled round-trip
lengths (and therefore the returned moments) are identical to the compiled
kernel's for any batch size.
"""

from __future__ import annotations

import numpy as np

_PHI = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)
_MASK32 = np.uint64(0xFFFFFFFF)
_R30 = np.uint64(30)
_R27 = np.uint64(27)
_R31 = np.uint64(31)
_R32 = np.uint64(32)

_CHUNK = 1 << 16


def _scramble(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> _R30)) * _M1
    z = (z ^ (z >> _R27)) * _M2
    return z ^ (z >> _R31)


def _draw_below(r: np.ndarray, d: np.ndarray) -> np.ndarray:
    # floor(r * d / 2**64) via a 32-bit split; exact for d < 2**32
    lo = (r & _MASK32) * d
    t = (r >> _R32) * d + (lo >> _R32)
    return t >> _R32


def commute_moments(indptr, nbrs, start, target, walks, seed):
    """Sum and sum-of-squares of round-trip lengths start->target->start."""
    indptr = np.asarray(indptr, dtype=np.int64)
    nbrs = np.asarray(nbrs, dtype=np.int64)
    total = 0
    total_sq = 0
    done_first = 0
    with np.errstate(over="ignore"):
        while done_first < walks:
            m = int(min(_CHUNK, walks - done_first))
            wid = np.arange(done_first + 1, done_first + m + 1, dtype=np.uint64)
            state = _scramble(np.uint64(seed & 0xFFFFFFFFFFFFFFFF) + wid * _PHI)
            x = np.full(m, start, dtype=np.int64)
            phase = np.zeros(m, dtype=bool)
            steps = np.zeros(m, dtype=np.int64)
            while x.size:
                state = state + _PHI
                r = _scramble(state)
                deg = (indptr[x + 1] - indptr[x]).astype(np.uint64)
                idx = _draw_below(r, deg).astype(np.int64)
                x = nbrs[indptr[x] + idx]
                steps += 1
                finished = phase & (x == start)
                phase = phase | (x == target)
                if finished.any():
                    fin = steps[finished]
                    total += int(fin.sum())
                    total_sq += int((fin * fin).sum())
                    keep = ~finished
                    state = state[keep]
                    x = x[keep]
                    phase = phase[keep]
                    steps = steps[keep]
            done_first += m
    return total, total_sq
