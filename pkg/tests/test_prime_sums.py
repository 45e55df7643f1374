"""Certified prime-indexed sums: oracles, caps, domains, tampering."""

from __future__ import annotations

from fractions import Fraction

import pytest
from gmpy2 import mpq

import oracles
from amibounds.errors import DomainError
from amibounds.interval import Interval
from amibounds.prime_sums import (
    bt_majorant,
    kc_pair_sum,
    logp_over_p_sum,
    mertens_constant,
    logp_limit_constant,
    p_sigma_sum,
    prime_recip_sum,
    residue_recip_sum,
    zeta2_style_sum,
)


def to_frac(q) -> Fraction:
    q = mpq(q)
    return Fraction(int(q.numerator), int(q.denominator))


def assert_contains_bracket(interval: Interval, bracket) -> None:
    lo, hi = bracket
    assert to_frac(interval.lo_q) <= lo and hi <= to_frac(interval.hi_q)


def test_literature_constants_bracket_known_digits():
    assert mertens_constant().is_subset_of(
        Interval.from_decimal_bracket("0.2614972128", "0.2614972129")
    )
    assert logp_limit_constant().is_subset_of(
        Interval.from_decimal_bracket("-1.3325822758", "-1.3325822757")
    )


def test_prime_recip_partial_contains_exact_sum():
    for cutoff in (286, 1000):
        ledger = prime_recip_sum(cutoff)
        exact = oracles.prime_recip_exact(cutoff)
        assert to_frac(ledger.partial.lo_q) <= exact <= to_frac(ledger.partial.hi_q)
        assert ledger.term_count == len(oracles.primes_naive(cutoff))
        assert ledger.total.lo_q == ledger.partial.lo_q


def test_prime_recip_cap_and_domain():
    ledger = prime_recip_sum(286)
    assert ledger.gating_ok()
    assert ledger.checks[0].check_id == "prime-recip-cap@286"
    with pytest.raises(DomainError):
        prime_recip_sum(285)
    bare = prime_recip_sum(100, require_bound=False)
    assert bare.checks == ()
    assert to_frac(bare.partial.lo_q) <= oracles.prime_recip_exact(100)


def test_logp_sum_contains_mpmath_bracket():
    ledger = logp_over_p_sum(1000)
    assert_contains_bracket(ledger.partial, oracles.logp_over_p_bracket(1000))
    assert ledger.gating_ok()


def test_logp_domain_boundary():
    assert logp_over_p_sum(319).gating_ok()
    with pytest.raises(DomainError):
        logp_over_p_sum(318)
    with pytest.raises(DomainError):
        logp_over_p_sum(286)


def test_p_sigma_sum_contains_mpmath_bracket():
    sigma = Interval.exact(Fraction(9, 10))
    ledger = p_sigma_sum(500, sigma=sigma)
    assert_contains_bracket(ledger.partial, oracles.p_power_recip_bracket(500, 9, 10))
    assert ledger.exponent is sigma
    with pytest.raises(DomainError):
        p_sigma_sum(500, sigma=Interval.from_endpoints(-1, 1))


def test_kc_pair_sum_small_split_structure():
    ledger = kc_pair_sum(split=3000)
    assert ledger.checks == ()  # published caps only claimed at the 10**6 split
    assert ledger.tail.lo_q == 0 and ledger.tail.hi_q > 0
    total = ledger.partial + ledger.tail
    assert total.lo_q == ledger.total.lo_q and total.hi_q == ledger.total.hi_q


def test_kc_prime_claims_hold_and_tamper_flips():
    ledger = kc_pair_sum(over="primes")
    assert [c.check_id for c in ledger.checks] == [
        "kc-prime-partial-cap",
        "kc-prime-total-cap",
    ]
    assert ledger.gating_ok()
    broken = kc_pair_sum(over="primes", tamper="kc-prime-total-cap")
    verdicts = {c.check_id: c.verdict for c in broken.checks}
    assert verdicts["kc-prime-total-cap"] == "fails"
    assert verdicts["kc-prime-partial-cap"] == "holds"


def test_zeta2_default_claims_and_printed_tail_refutation():
    ledger = zeta2_style_sum()
    verdicts = {c.check_id: (c.verdict, c.gating) for c in ledger.checks}
    assert verdicts["zeta2-partial-cap"] == ("holds", True)
    assert verdicts["zeta2-total-cap"] == ("holds", True)
    # the printed tail constant is refuted, not merely unproven: the tail
    # enclosure's *lower* endpoint clears the printed cap
    assert verdicts["zeta2-tail-printed"] == ("fails", False)
    assert to_frac(ledger.tail.lo_q) > Fraction(1, 10**7)
    assert ledger.gating_ok()


def test_residue_sum_matches_exact_oracle():
    out = residue_recip_sum(10**4, 7, -1)
    exact = oracles.residue_recip_exact(10**4, 7, -1)
    assert to_frac(out.fraction) == exact
    assert out.interval.contains(out.fraction)
    assert out.count == sum(
        1 for p in oracles.primes_naive(10**4) if p % 7 == 6
    )
    empty = residue_recip_sum(1, 7, -1)
    assert empty.count == 0 and empty.fraction == 0


def test_bt_majorant_at_and_below_floor():
    value, checks = bt_majorant(10**14, 10**14)
    assert all(c.verdict == "holds" for c in checks if c.gating)
    assert value.is_subset_of(
        Interval.from_decimal_bracket("1.4e-13", "1.5e-13")
    )
    with pytest.raises(DomainError):
        bt_majorant(10**14 - 1, 10**14)
    with pytest.raises(DomainError):
        bt_majorant(10**14, 10**13)
