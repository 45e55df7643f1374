"""Prime sieve: counts, extraction, backend equivalence."""

from __future__ import annotations

import numpy as np
import pytest

import oracles
from amibounds import kernels
from amibounds.errors import DomainError, ResourceError
from amibounds.sieve import PrimeSieve, shared_sieve, sieve_for


def test_prime_counts_match_known_pi():
    sieve = shared_sieve(10**6)
    assert sieve.count(10) == 4
    assert sieve.count(1000) == 168
    assert sieve.count(10**6) == 78498


def test_prime_extraction_matches_naive():
    sieve = PrimeSieve(2000)
    assert sieve.primes(2, 2000).tolist() == oracles.primes_naive(2000)
    assert sieve.primes(100, 150).tolist() == [101, 103, 107, 109, 113, 127, 131, 137, 139, 149]


def test_is_prime_and_bounds():
    sieve = PrimeSieve(100)
    assert sieve.is_prime(97)
    assert not sieve.is_prime(91)
    with pytest.raises(DomainError):
        sieve.is_prime(101)
    with pytest.raises(DomainError):
        PrimeSieve(1)
    with pytest.raises(ResourceError):
        PrimeSieve(2**31 + 1)


def test_shared_sieve_is_cached():
    assert shared_sieve(10**6) is shared_sieve(10**6)


def test_sieve_for_reuses_or_refuses():
    big = PrimeSieve(5000)
    assert sieve_for(1000, big) is big
    with pytest.raises(DomainError):
        sieve_for(6000, big)
    assert sieve_for(100, None).limit >= 100


def test_backends_agree_bit_for_bit():
    names = kernels.available_backends()
    reference = kernels.get_backend("python")
    flags = reference.prime_flags(50_000)
    block = reference.sigma_proper_block(1, 50_000)
    for name in names:
        module = kernels.get_backend(name)
        assert np.array_equal(module.prime_flags(50_000), flags), name
        assert np.array_equal(module.sigma_proper_block(1, 50_000), block), name


def test_sigma_block_matches_naive_oracle():
    lo, hi = 1, 3000
    block = kernels.get_backend(None).sigma_proper_block(lo, hi)
    for n in range(lo, hi):
        assert block[n - lo] == oracles.sigma_proper_naive(n), n
