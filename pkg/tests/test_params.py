"""Anchored parameter stack: values at the anchor, domains below it."""

from __future__ import annotations

from fractions import Fraction

import pytest

from amibounds import params
from amibounds.errors import DomainError
from amibounds.interval import Interval, LogMagnitude


def test_anchor_magnitudes():
    x0 = params.anchor_x()
    y0 = params.anchor_y()
    assert x0.sign == 1 and x0.log_abs.contains(10**6)
    assert y0.sign == 1 and y0.log_abs.contains(26000)


def test_smoothness_exponent_at_anchor():
    # 1 - 1/(10 log(10**6)): tenth root is exact, the log is not.
    c = params.smoothness_exponent()
    assert c.is_subset_of(Interval.from_decimal_bracket("0.99276175", "0.99276176"))
    assert params.smoothness_exponent_floor().is_subset_of(c) or c.is_subset_of(
        params.smoothness_exponent_floor()
    )


def test_smoothness_exponent_monotone_on_grid():
    # c(x) grows with the scale; certified on a log-x grid.
    values = [
        params.smoothness_exponent(LogMagnitude.from_log(Interval.exact(lx)))
        for lx in (10**6, 2 * 10**6, 10**7, 10**9)
    ]
    for lower, higher in zip(values, values[1:]):
        assert lower.certainly_lt(higher)


def test_smoothness_exponent_below_anchor_refused():
    with pytest.raises(DomainError):
        params.smoothness_exponent(10**6)  # the *integer* 10**6 is tiny
    with pytest.raises(DomainError):
        params.smoothness_exponent(
            LogMagnitude.from_log(Interval.exact(10**6 - 1))
        )


def test_rankin_exponent_values():
    # sigma(y0) = 1 - 1/52000 exactly (log y0 = 26000 by construction).
    sigma = params.rankin_exponent()
    assert sigma.contains(Fraction(51999, 52000))
    assert sigma.width_q() < Fraction(1, 2**100)
    # at integer y the log is transcendental but well bracketed
    s1000 = params.rankin_exponent(1000)
    assert s1000.is_subset_of(Interval.from_decimal_bracket("0.9276", "0.9277"))
    with pytest.raises(DomainError):
        params.rankin_exponent(1)


def test_cut_boundaries_at_anchor():
    assert params.small_cut_log().contains(10)  # (10**6)^(1/6) exactly
    big = params.large_cut_log()
    assert big.is_subset_of(Interval.from_decimal_bracket("26000.79", "26000.80"))
    # the large cut clears the smoothness anchor: L(x0) > y0
    assert big.certainly_gt(params.ANCHOR_LOG_Y)


def test_pair_range_at_anchor():
    z = params.pair_range()
    assert z.sign == 1
    assert z.log_abs.is_subset_of(
        Interval.from_decimal_bracket("1000003.31", "1000003.32")
    )


def test_eval_param_dispatch_and_constants():
    assert params.eval_param("c0").overlaps(params.smoothness_exponent())
    assert params.eval_param("sigma").contains(Fraction(51999, 52000))
    assert params.eval_param("ell").log_abs.contains(10)
    assert params.eval_param("x0").log_abs.contains(10**6)
    with pytest.raises(DomainError):
        params.eval_param("nonsense")
    with pytest.raises(DomainError):
        params.eval_param("c0", x=params.anchor_x())
    with pytest.raises(DomainError):
        params.eval_param("x0", x=params.anchor_x())


def test_scale_coercion_rules():
    with pytest.raises(DomainError):
        params.smoothness_exponent("big")
    with pytest.raises(DomainError):
        params.smoothness_exponent(-LogMagnitude.from_exact(5))
