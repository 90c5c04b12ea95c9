# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled commute-time sampler.

One tight C loop per walk: a splitmix64 stream is derived per walk from the
master seed (counter-based), so totals are independent of batching and
bit-identical to the pure NumPy fallback.
"""

from libc.stdint cimport int32_t, int64_t, uint64_t


cdef inline uint64_t _scramble(uint64_t z) noexcept nogil:
    z ^= z >> 30
    z *= <uint64_t>0xBF58476D1CE4E5B9
    z ^= z >> 27
    z *= <uint64_t>0x94D049BB133111EB
    z ^= z >> 31
    return z


cdef inline uint64_t _next(uint64_t* state) noexcept nogil:
    state[0] += <uint64_t>0x9E3779B97F4A7C15
    return _scramble(state[0])


cdef inline uint64_t _draw_below(uint64_t r, uint64_t d) noexcept nogil:
    # floor(r * d / 2**64) via a 32-bit split; exact for d < 2**32
    cdef uint64_t lo = (r & <uint64_t>0xFFFFFFFF) * d
    cdef uint64_t t = (r >> 32) * d + (lo >> 32)
    return t >> 32


def commute_moments(int32_t[::1] indptr, int32_t[::1] nbrs, int start, int target,
                    long long walks, unsigned long long seed):
    """Sum and sum-of-squares of round-trip lengths start->target->start.

    Each walk steps to a uniformly random neighbor until it has visited
    ``target`` and then returned to ``start``.  Returns exact integer
    (total, total_sq) over ``walks`` independent walks.
    """
    cdef int64_t total = 0
    cdef int64_t total_sq = 0
    cdef int64_t w, steps
    cdef uint64_t state, deg, idx
    cdef int32_t x, s32 = <int32_t>start, t32 = <int32_t>target
    cdef int phase
    with nogil:
        for w in range(walks):
            state = _scramble(<uint64_t>seed
                              + (<uint64_t>(w + 1)) * <uint64_t>0x9E3779B97F4A7C15)
            x = s32
            phase = 0
            steps = 0
            while True:
                steps += 1
                deg = <uint64_t>(indptr[x + 1] - indptr[x])
                idx = _draw_below(_next(&state), deg)
                x = nbrs[indptr[x] + <int32_t>idx]
                if phase == 0:
                    if x == t32:
                        phase = 1
                elif x == s32:
                    break
            total += steps
            total_sq += steps * steps
    return total, total_sq
