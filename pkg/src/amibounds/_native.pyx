# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Native sieve kernels. Semantics identical to _kernels_py (see its
docstring); this is just the same integer arithmetic in C loops."""

import numpy as np

cimport numpy as cnp

BACKEND_NAME = "native"


def prime_flags(long long limit):
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    flags = np.ones(limit + 1, dtype=np.uint8)
    cdef unsigned char[::1] f = flags
    cdef long long p, q
    if limit >= 0:
        f[0] = 0
    if limit >= 1:
        f[1] = 0
    with nogil:
        p = 2
        while p * p <= limit:
            if f[p]:
                q = p * p
                while q <= limit:
                    f[q] = 0
                    q += p
            p += 1
    return flags


def sigma_proper_block(long long lo, long long hi):
    if not 1 <= lo < hi:
        raise ValueError("need 1 <= lo < hi")
    cdef Py_ssize_t length = hi - lo
    out = np.zeros(length, dtype=np.int64)
    cdef long long[::1] s = out
    cdef long long d, k0, first, val, sq, dmax, n
    cdef Py_ssize_t idx

    dmax = <long long>((hi - 1) ** 0.5)
    while (dmax + 1) * (dmax + 1) <= hi - 1:
        dmax += 1
    while dmax * dmax > hi - 1:
        dmax -= 1

    with nogil:
        # divisor 1
        n = lo if lo > 2 else 2
        while n < hi:
            s[n - lo] += 1
            n += 1
        # divisor/cofactor pairs d < k, plus lone square roots
        for d in range(2, dmax + 1):
            k0 = (lo + d - 1) // d
            if k0 < d + 1:
                k0 = d + 1
            first = d * k0
            if first < hi:
                idx = first - lo
                val = d + k0
                while idx < length:
                    s[idx] += val
                    idx += d
                    val += 1
            sq = d * d
            if sq >= lo and sq < hi:
                s[sq - lo] += d
    return out
