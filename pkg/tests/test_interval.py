"""Interval and LogMagnitude unit tests.

The heart is the seeded containment sweep: 10**5 random exact-rational
operand pairs through the field operations, at randomly drawn precisions,
with the exact result required to lie inside the computed enclosure every
single time.  Transcendental calls are checked on a smaller sweep against
independent mpmath brackets.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from gmpy2 import mpq

import oracles
from amibounds.errors import ConfigError, DomainError
from amibounds.interval import (
    CONFIRM_PRECISION,
    DEFAULT_PRECISION,
    Interval,
    LogMagnitude,
    check_precision,
    directed_decimal,
    fixed_decimal,
    to_exact,
)

SEED = 20260814


def frac(iv_attr) -> Fraction:
    q = mpq(iv_attr)
    return Fraction(int(q.numerator), int(q.denominator))


def contains_exactly(iv: Interval, value: Fraction) -> bool:
    return frac(iv.lo_q) <= value <= frac(iv.hi_q)


# ----------------------------------------------------------------------
# exact construction and rendering
# ----------------------------------------------------------------------


def test_exact_integer_is_a_point():
    iv = Interval.exact(7)
    assert iv.lo_q == iv.hi_q == 7


def test_exact_dyadic_is_a_point():
    iv = Interval.exact(Fraction(3, 2**60))
    assert iv.lo_q == iv.hi_q == Fraction(3, 2**60)


def test_exact_non_dyadic_straddles_tightly():
    iv = Interval.exact(Fraction(1, 3))
    assert iv.lo_q < Fraction(1, 3) < iv.hi_q
    assert iv.width_q() < Fraction(1, 2**120)


def test_to_exact_accepts_decimal_and_scientific_text():
    assert to_exact("0.25") == Fraction(1, 4)
    assert to_exact("4.3e-12") == Fraction(43, 10**13)
    assert to_exact("1e-17471") == Fraction(1, 10**17471)
    assert to_exact(Fraction(-7, 5)) == Fraction(-7, 5)


def test_to_exact_rejects_binary_floats():
    with pytest.raises(DomainError):
        to_exact(0.1)
    with pytest.raises(DomainError):
        to_exact(True)


def test_check_precision_bounds():
    assert check_precision(53) == 53
    with pytest.raises(ConfigError):
        check_precision(1)


def test_directed_decimal_rounds_outward():
    assert directed_decimal(mpq(1, 3), 5, -1) == "0.33333"
    assert directed_decimal(mpq(1, 3), 5, +1) == "0.33334"
    assert directed_decimal(mpq(-1, 3), 5, -1) == "-0.33334"
    assert directed_decimal(mpq(-1, 3), 5, +1) == "-0.33333"
    assert directed_decimal(mpq(5, 4), 3, -1) == "1.25"
    assert directed_decimal(mpq(5, 4), 3, +1) == "1.25"
    assert directed_decimal(0, 7, -1) == "0"


def test_fixed_decimal_rounds_outward():
    assert fixed_decimal(mpq(1, 3), 4, -1) == "0.3333"
    assert fixed_decimal(mpq(1, 3), 4, +1) == "0.3334"
    assert fixed_decimal(mpq(-1, 3), 2, -1) == "-0.34"
    assert fixed_decimal(7, 0, +1) == "7"


def test_decimal_endpoints_enclose_the_interval():
    iv = Interval.from_decimal("0.12345678901234567890123456789", 128)
    assert to_exact(iv.decimal_lo(20)) <= frac(iv.lo_q)
    assert to_exact(iv.decimal_hi(20)) >= frac(iv.hi_q)


def test_from_decimal_bracket_encloses_both_texts():
    iv = Interval.from_decimal_bracket("0.1", "0.2")
    assert frac(iv.lo_q) <= Fraction(1, 10)
    assert frac(iv.hi_q) >= Fraction(1, 5)
    with pytest.raises(DomainError):
        Interval.from_decimal_bracket("0.2", "0.1")


# ----------------------------------------------------------------------
# seeded containment sweeps
# ----------------------------------------------------------------------


def _random_fraction(rng: random.Random) -> Fraction:
    num = rng.randint(-10**6, 10**6)
    den = rng.randint(1, 10**6)
    scale = rng.randint(-12, 12)
    base = Fraction(num, den)
    return base * Fraction(10) ** scale


def test_field_operations_contain_exact_result_100k():
    rng = random.Random(SEED)
    precisions = (16, 24, 53, 128, 192)
    checked = 0
    while checked < 100_000:
        a = _random_fraction(rng)
        b = _random_fraction(rng)
        p = precisions[rng.randrange(len(precisions))]
        ia = Interval.exact(a, p)
        ib = Interval.exact(b, p)
        op = rng.randrange(4)
        if op == 0:
            out, expected = ia + ib, a + b
        elif op == 1:
            out, expected = ia - ib, a - b
        elif op == 2:
            out, expected = ia * ib, a * b
        else:
            if b == 0:
                continue
            out, expected = ia / ib, a / b
        assert contains_exactly(out, expected), (a, b, op, p)
        checked += 1


def test_transcendental_calls_contain_mpmath_bracket():
    rng = random.Random(SEED + 1)
    for _ in range(500):
        q = abs(_random_fraction(rng)) + Fraction(1, 7)
        iv = Interval.exact(q, 128)
        for name, method, bracket in (
            ("log", iv.log, oracles.log_bracket),
            ("sqrt", iv.sqrt, oracles.sqrt_bracket),
        ):
            lo, hi = bracket(q)
            out = method()
            assert frac(out.lo_q) <= lo and hi <= frac(out.hi_q), (name, q)
    for _ in range(300):
        q = Fraction(rng.randint(-300_000, 300_000), rng.randint(1, 1000))
        lo, hi = oracles.exp_bracket(q)
        out = Interval.exact(q, 128).exp()
        assert frac(out.lo_q) <= lo and hi <= frac(out.hi_q), ("exp", q)


def test_power_and_root_contain_exact_values():
    rng = random.Random(SEED + 2)
    for _ in range(2000):
        base = abs(_random_fraction(rng)) + Fraction(1, 3)
        e = rng.randint(1, 6)
        iv = Interval.exact(base, 128)
        powed = iv**e
        assert contains_exactly(powed, base**e)
        back = powed.rootn(e)
        assert contains_exactly(back, base) or back.hi_q >= base


def test_higher_precision_results_nest():
    rng = random.Random(SEED + 3)
    for _ in range(2000):
        a = _random_fraction(rng)
        b = abs(_random_fraction(rng)) + 1
        coarse = (Interval.exact(a, 64) + Interval.exact(b, 64)) / Interval.exact(
            b, 64
        )
        fine = (
            Interval.exact(a, CONFIRM_PRECISION) + Interval.exact(b, CONFIRM_PRECISION)
        ) / Interval.exact(b, CONFIRM_PRECISION)
        assert fine.is_subset_of(coarse), (a, b)


# ----------------------------------------------------------------------
# domain errors and set operations
# ----------------------------------------------------------------------


def test_division_by_zero_straddling_interval_refused():
    straddling = Interval.from_endpoints(-1, 1)
    with pytest.raises(DomainError):
        Interval.exact(1) / straddling


def test_log_of_nonpositive_refused():
    with pytest.raises(DomainError):
        Interval.from_endpoints(0, 2).log()
    with pytest.raises(DomainError):
        Interval.exact(-3).log()


def test_set_operations():
    a = Interval.from_endpoints(0, 2)
    b = Interval.from_endpoints(1, 3)
    assert a.overlaps(b)
    meet = a.intersect(b)
    assert meet.lo_q == 1 and meet.hi_q == 2
    hull = Interval.hull([a, b])
    assert hull.lo_q == 0 and hull.hi_q == 3
    assert meet.is_subset_of(hull)
    assert not Interval.from_endpoints(5, 6).overlaps(a)


def test_certified_comparisons_at_touching_endpoints():
    left = Interval.from_endpoints(1, 2)
    right = Interval.from_endpoints(2, 3)
    assert left.certainly_le(right)
    assert not left.certainly_lt(right)
    assert right.certainly_ge(left)
    assert not left.certainly_le(Interval.from_endpoints(Fraction(3, 2), 3))


def test_abs_spans_zero():
    iv = Interval.from_endpoints(-3, 2).abs()
    assert iv.lo_q == 0 and iv.hi_q == 3
    assert Interval.from_endpoints(-5, -4).abs().lo_q == 4


# ----------------------------------------------------------------------
# log-domain magnitudes
# ----------------------------------------------------------------------


def test_log_magnitude_round_trip_moderate():
    lm = LogMagnitude.from_exact(Fraction(22, 7))
    assert lm.sign == 1
    assert lm.to_interval().contains(Fraction(22, 7))
    neg = LogMagnitude.from_exact(-Fraction(22, 7))
    assert neg.sign == -1
    assert neg.to_interval().contains(-Fraction(22, 7))


def test_log_magnitude_conversion_window_is_enforced():
    huge = LogMagnitude.from_exact(10**500)
    with pytest.raises(DomainError):
        huge.to_interval()
    assert huge.log10().contains(500) or huge.log10().certainly_gt(499)


def test_log_magnitude_arithmetic_contains_exact_values():
    rng = random.Random(SEED + 4)
    for _ in range(500):
        a = abs(_random_fraction(rng)) + Fraction(1, 9)
        b = abs(_random_fraction(rng)) + Fraction(1, 9)
        la = LogMagnitude.from_exact(a)
        lb = LogMagnitude.from_exact(b)
        assert (la * lb).to_interval(cap=10**4).contains(a * b)
        assert (la / lb).to_interval(cap=10**4).contains(a / b)
        assert (la + lb).to_interval(cap=10**4).contains(a + b)
        assert (la**3).to_interval(cap=10**5).contains(a**3)


def test_log_magnitude_mixed_sign_sum():
    dominated = LogMagnitude.from_exact(100) + LogMagnitude.from_exact(-1)
    assert dominated.sign == 1
    assert dominated.to_interval().contains(99)
    with pytest.raises(DomainError):
        LogMagnitude.from_exact(1) + LogMagnitude.from_exact(-1)


def test_log_magnitude_zero_behaviour():
    zero = LogMagnitude.zero()
    assert zero.is_zero()
    assert (zero * LogMagnitude.from_exact(5)).is_zero()
    five = LogMagnitude.from_exact(5)
    assert (five + zero) is five
    assert (five + zero).certainly_le(6)
    with pytest.raises(DomainError):
        five / zero


def test_log_magnitude_certified_order():
    small = LogMagnitude.from_exact(3)
    big = LogMagnitude.from_exact(4)
    assert small.certainly_lt(big)
    assert big.certainly_ge(small)
    assert LogMagnitude.from_exact(-10).certainly_lt(small)
    giant = LogMagnitude.from_log(Interval.exact(10**6))
    assert small.certainly_lt(giant)


def test_default_precisions_exported():
    assert DEFAULT_PRECISION == 128
    assert CONFIRM_PRECISION == 256
