# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled fixed-point sums modulo a prime.

Inputs are int64 arrays whose entries are already reduced into ``[0, p)``
with ``p < 2**31`` so every product fits in a signed 64-bit integer.
"""
import numpy as np

from libc.stdint cimport int64_t

IMPLEMENTATION = "cython"


cdef inline int64_t _powmod(int64_t base, int64_t e, int64_t p) noexcept nogil:
    cdef int64_t result = 1
    base %= p
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


def chern_residues(const int64_t[:, ::1] weights, const int64_t[:, ::1] parts, int64_t p):
    """Sum over cones of prod_j e_{parts[q, j]}(w) / e_n(w), modulo ``p``."""
    cdef Py_ssize_t ncones = weights.shape[0]
    cdef Py_ssize_t n = weights.shape[1]
    cdef Py_ssize_t nq = parts.shape[0]
    cdef Py_ssize_t width = parts.shape[1]
    out_arr = np.zeros(nq, dtype=np.int64)
    e_arr = np.zeros(n + 1, dtype=np.int64)
    cdef int64_t[::1] out = out_arr
    cdef int64_t[::1] e = e_arr
    cdef Py_ssize_t c, i, k, q, j
    cdef int64_t w, inv, acc, part
    with nogil:
        for c in range(ncones):
            e[0] = 1
            for k in range(1, n + 1):
                e[k] = 0
            for i in range(n):
                w = weights[c, i]
                for k in range(i + 1, 0, -1):
                    e[k] = (e[k] + e[k - 1] * w) % p
            inv = _powmod(e[n], p - 2, p)
            for q in range(nq):
                acc = inv
                for j in range(width):
                    part = parts[q, j]
                    if part == 0:
                        break
                    acc = (acc * e[part]) % p
                out[q] = (out[q] + acc) % p
    return out_arr


def monomial_residues(const int64_t[:, ::1] weights, const int64_t[:, ::1] positions,
                      const int64_t[:, ::1] exponents, int64_t p):
    """Sum over cones of prod_j w_j^{exponents[q, j]} / prod(w), modulo ``p``.

    ``positions[c, j]`` is the column of ray ``j`` in cone ``c`` or -1 when the
    ray is not in the cone (its class restricts to zero there).
    """
    cdef Py_ssize_t ncones = weights.shape[0]
    cdef Py_ssize_t n = weights.shape[1]
    cdef Py_ssize_t nq = exponents.shape[0]
    cdef Py_ssize_t m = exponents.shape[1]
    out_arr = np.zeros(nq, dtype=np.int64)
    cdef int64_t[::1] out = out_arr
    cdef Py_ssize_t c, i, q, j
    cdef int64_t den, inv, acc, ex, pos
    with nogil:
        for c in range(ncones):
            den = 1
            for i in range(n):
                den = (den * weights[c, i]) % p
            inv = _powmod(den, p - 2, p)
            for q in range(nq):
                acc = inv
                for j in range(m):
                    ex = exponents[q, j]
                    if ex == 0:
                        continue
                    pos = positions[c, j]
                    if pos < 0:
                        acc = 0
                        break
                    acc = (acc * _powmod(weights[c, pos], ex, p)) % p
                out[q] = (out[q] + acc) % p
    return out_arr
