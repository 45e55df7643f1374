"""Numpy sieve kernels: the always-available twin of the native extension.

Both backends expose exactly two primitives with identical integer outputs:

* ``prime_flags(limit)`` — uint8 array ``f`` of length ``limit+1`` with
  ``f[n] == 1`` iff ``n`` is prime.
* ``sigma_proper_block(lo, hi)`` — int64 array of the proper-divisor sums
  ``s(n) = sigma(n) - n`` for ``n`` in ``[lo, hi)``.

The block sieve walks divisor/cofactor *pairs* ``(d, k)`` with ``d < k`` so
each pair is visited once: ``d`` contributes to ``n = d*k`` together with its
cofactor ``k`` (which is a proper divisor of ``n`` too, since ``k <= n/2``
whenever ``d >= 2``), the divisor 1 contributes to every ``n >= 2``, and the
square root contributes alone when ``n`` is a perfect square.  Total work is
``len * H(sqrt(hi))`` additions, all in exact int64 arithmetic.
"""

from __future__ import annotations

import math

import numpy as np

BACKEND_NAME = "python"


def prime_flags(limit: int) -> np.ndarray:
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    flags = np.ones(limit + 1, dtype=np.uint8)
    flags[: min(2, limit + 1)] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = 0
    return flags


def sigma_proper_block(lo: int, hi: int) -> np.ndarray:
    if not 1 <= lo < hi:
        raise ValueError("need 1 <= lo < hi")
    length = hi - lo
    s = np.zeros(length, dtype=np.int64)

    # divisor 1 (its cofactor n is not proper)
    first_with_one = max(lo, 2)
    if first_with_one < hi:
        s[first_with_one - lo :] += 1

    ramp = np.arange(length, dtype=np.int64)
    for d in range(2, math.isqrt(hi - 1) + 1):
        k0 = max(d + 1, -(-lo // d))
        first = d * k0
        if first < hi:
            view = s[first - lo :: d]
            view += d + k0
            if view.shape[0] > 1:
                view[1:] += ramp[1 : view.shape[0]]
        sq = d * d
        if lo <= sq < hi:
            s[sq - lo] += d
    return s
