"""Prime sieve wrapper: flags, counts, and prime arrays up to a limit."""

from __future__ import annotations

import functools

import numpy as np

from . import kernels
from .errors import DomainError, ResourceError

MAX_SIEVE_LIMIT = 2**31


class PrimeSieve:
    """Primality flags for 0..limit with cached prime extraction."""

    def __init__(self, limit: int, backend: str | None = None):
        if not isinstance(limit, int) or isinstance(limit, bool) or limit < 2:
            raise DomainError("sieve limit must be an int >= 2")
        if limit > MAX_SIEVE_LIMIT:
            raise ResourceError(
                "sieve limit %d exceeds the supported %d" % (limit, MAX_SIEVE_LIMIT)
            )
        self.limit = limit
        self.flags = kernels.get_backend(backend).prime_flags(limit)
        self._primes: np.ndarray | None = None

    def is_prime(self, n: int) -> bool:
        if not 0 <= n <= self.limit:
            raise DomainError("n=%d outside sieve range [0, %d]" % (n, self.limit))
        return bool(self.flags[n])

    def count(self, upto: int | None = None) -> int:
        """pi(upto): number of primes <= upto (default: the whole sieve)."""
        if upto is None:
            upto = self.limit
        if not 0 <= upto <= self.limit:
            raise DomainError("upto=%d outside sieve range" % (upto,))
        return int(np.count_nonzero(self.flags[: upto + 1]))

    def primes(self, lo: int = 2, hi: int | None = None) -> np.ndarray:
        """int64 array of primes in [lo, hi] (hi defaults to the limit)."""
        if hi is None:
            hi = self.limit
        if not 0 <= lo <= hi <= self.limit:
            raise DomainError("bad prime range [%d, %d]" % (lo, hi))
        if self._primes is None:
            self._primes = np.nonzero(self.flags)[0].astype(np.int64)
        arr = self._primes
        return arr[np.searchsorted(arr, lo) : np.searchsorted(arr, hi, side="right")]


@functools.lru_cache(maxsize=4)
def shared_sieve(limit: int = 10**6) -> PrimeSieve:
    """Process-wide sieve cache; the million-scale sieve is used everywhere."""
    return PrimeSieve(limit)


def sieve_for(cutoff: int, sieve: PrimeSieve | None = None) -> PrimeSieve:
    """Return a sieve covering ``cutoff``, reusing what is supplied/cached."""
    if sieve is not None:
        if sieve.limit < cutoff:
            raise DomainError(
                "supplied sieve covers %d < cutoff %d" % (sieve.limit, cutoff)
            )
        return sieve
    return shared_sieve(max(cutoff, 10**6))
