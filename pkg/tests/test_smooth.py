"""Exact smooth-number counting and its certified majorant."""

from __future__ import annotations

import pytest

import oracles
from amibounds.errors import DomainError, ResourceError
from amibounds.interval import Interval, LogMagnitude
from amibounds.smooth import PSI_MAX_X, PSI_MAX_Y, psi_exact, rankin_bound


def test_psi_exact_matches_naive_on_grid():
    for x in (0, 1, 2, 10, 100, 1234, 10000):
        for y in (1, 2, 3, 5, 7, 10, 30, 100, 997, 10000):
            assert psi_exact(x, y) == oracles.psi_naive(x, y), (x, y)


def test_psi_exact_edges():
    assert psi_exact(0, 10) == 0
    assert psi_exact(1, 1) == 1
    assert psi_exact(5, 1) == 1  # only n = 1 has no prime factors
    assert psi_exact(100, 100) == 100  # y >= x: everything counts
    assert psi_exact(100, 97) == 100
    assert psi_exact(100, 96) == 99  # 97 drops out


def test_psi_exact_argument_validation():
    with pytest.raises(DomainError):
        psi_exact(-1, 10)
    with pytest.raises(DomainError):
        psi_exact(10, 0)
    with pytest.raises(DomainError):
        psi_exact(True, 10)
    with pytest.raises(ResourceError):
        psi_exact(PSI_MAX_X + 1, 10)
    with pytest.raises(ResourceError):
        psi_exact(100, PSI_MAX_Y + 1)


def test_rankin_bound_dominates_exact_count_spot():
    count = psi_exact(10**4, 100)
    bound = rankin_bound(10**4, 100)
    assert bound.certainly_gt(count)


def test_rankin_bound_accepts_log_magnitude_x():
    huge = LogMagnitude.from_log(Interval.exact(10**6))  # e^(10^6)
    bound = rankin_bound(huge, 1000)
    assert bound.sign == 1
    assert bound.log_abs.certainly_gt(0)
    small = rankin_bound(10**6, 1000)
    assert bound.log_abs.certainly_gt(small.log_abs.hi_q)


def test_rankin_bound_argument_validation():
    with pytest.raises(DomainError):
        rankin_bound(0, 100)
    with pytest.raises(DomainError):
        rankin_bound(10**4, 1)
    with pytest.raises(DomainError):
        rankin_bound(1.5, 100)
    with pytest.raises(DomainError):
        rankin_bound(LogMagnitude.zero(), 100)
