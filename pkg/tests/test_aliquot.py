"""Amicable-pair enumeration, pointwise checks, and reciprocal-sum tables."""

from __future__ import annotations

from fractions import Fraction

import pytest
from gmpy2 import mpq

import oracles
from amibounds.aliquot import (
    conjecture_extrapolate,
    enumerate_amicable,
    is_amicable_pair,
    partial_sums,
    s_point,
)
from amibounds.errors import DomainError, ResourceError

FIRST_FIVE = [(220, 284), (1184, 1210), (2620, 2924), (5020, 5564), (6232, 6368)]


def test_pairs_below_ten_thousand():
    result = enumerate_amicable(10**4)
    assert [(p.smaller, p.larger) for p in result.pairs] == FIRST_FIVE
    assert all(p.both_below_limit for p in result.pairs)
    assert result.members == tuple(sorted(m for pair in FIRST_FIVE for m in pair))


def test_pairs_match_naive_oracle():
    result = enumerate_amicable(10**4)
    assert [
        (p.smaller, p.larger) for p in result.pairs
    ] == oracles.amicable_pairs_naive(10**4)
    assert list(result.members) == oracles.amicable_members_naive(10**4)


def test_partner_above_limit_is_flagged_not_dropped():
    result = enumerate_amicable(250)
    assert [(p.smaller, p.larger, p.both_below_limit) for p in result.pairs] == [
        (220, 284, False)
    ]
    assert result.members == (220,)  # 284 > limit: not a member below the cutoff


def test_no_pairs_below_one_hundred():
    result = enumerate_amicable(100)
    assert result.pairs == () and result.members == ()


def test_enumeration_invariant_to_blocking_and_workers():
    base = enumerate_amicable(10**4)
    for kwargs in ({"block_size": 4096}, {"workers": 1}, {"workers": 4}):
        other = enumerate_amicable(10**4, **kwargs)
        assert other.pairs == base.pairs
        assert other.members == base.members


def test_enumeration_argument_validation():
    with pytest.raises(DomainError):
        enumerate_amicable(0)
    with pytest.raises(DomainError):
        enumerate_amicable(10**4, block_size=1024)
    with pytest.raises(DomainError):
        enumerate_amicable(10**4, workers=0)
    with pytest.raises(ResourceError):
        enumerate_amicable(2**40)


def test_s_point_values_and_domain():
    assert s_point(220) == 284 and s_point(284) == 220
    assert s_point(1) == 0
    assert s_point(6) == 6  # perfect, not amicable
    assert s_point(97) == 1
    assert s_point(2**4 * 3**2) == oracles.sigma_proper_naive(144)
    with pytest.raises(DomainError):
        s_point(0)
    with pytest.raises(ResourceError):
        s_point(10**18 + 1)


def test_is_amicable_pair_pointwise():
    assert is_amicable_pair(220, 284)
    assert is_amicable_pair(284, 220)
    assert not is_amicable_pair(6, 6)  # perfect numbers are excluded
    assert not is_amicable_pair(220, 285)
    assert not is_amicable_pair(1, 1)


def test_partial_sums_exact_fraction_and_enclosure():
    table = partial_sums(enumerate_amicable(10**4))
    assert [r.checkpoint for r in table.rows] == [10, 100, 1000, 10000]
    row = {r.checkpoint: r for r in table.rows}
    assert row[10].member_count == 0 and row[10].fraction == 0
    assert row[1000].fraction == mpq(63, 7810)  # 1/220 + 1/284
    assert row[1000].member_count == 2
    assert row[10000].member_count == 10
    exact = oracles.reciprocal_sum_naive(10**4)
    assert row[10000].fraction == mpq(exact.numerator, exact.denominator)
    for r in table.rows:
        assert r.interval.contains(r.fraction)
        assert r.interval.width_q() < Fraction(1, 10**50)


def test_partial_sums_checkpoint_validation():
    result = enumerate_amicable(10**4)
    with pytest.raises(DomainError):
        partial_sums(result, checkpoints=(10, 10**5))
    with pytest.raises(DomainError):
        partial_sums(result, checkpoints=(1000, 100))
    with pytest.raises(DomainError):
        partial_sums(result, checkpoints=(0, 10))


def test_extrapolation_labeled_heuristic(table_e7):
    out = conjecture_extrapolate(table_e7)
    assert out.label == "heuristic-geometric-decay (not certified)"
    assert out.ratio < 1
    assert out.projected.certainly_gt(out.base)
    # projecting from three populated rows is the minimum
    small = partial_sums(enumerate_amicable(10**4))
    with pytest.raises(DomainError):
        conjecture_extrapolate(small)
