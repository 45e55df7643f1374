"""Independent oracles: small, slow, obviously-correct reference code.

Nothing here imports the package under test.  Expected values produced by
these functions are either frozen into the test modules or recomputed at
test time and compared against the package's certified enclosures.  mpmath
supplies high-precision brackets for transcendental targets; the package
itself never touches mpmath, so agreement is a genuine cross-check.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath


# ----------------------------------------------------------------------
# integers: divisors, amicable pairs, smooth counts
# ----------------------------------------------------------------------


def sigma_proper_naive(n: int) -> int:
    """Sum of proper divisors by trial division up to sqrt(n)."""
    if n <= 1:
        return 0
    total = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            total += d
            other = n // d
            if other != d:
                total += other
        d += 1
    return total


def amicable_pairs_naive(limit: int) -> list:
    """All (m, n), m < n, s(m) = n, s(n) = m, with m <= limit."""
    pairs = []
    for m in range(2, limit + 1):
        n = sigma_proper_naive(m)
        if n > m and sigma_proper_naive(n) == m:
            pairs.append((m, n))
    return pairs


def amicable_members_naive(limit: int) -> list:
    """Sorted members of amicable pairs that are themselves <= limit."""
    members = set()
    for m, n in amicable_pairs_naive(limit):
        members.add(m)
        if n <= limit:
            members.add(n)
    return sorted(members)


def reciprocal_sum_naive(limit: int) -> Fraction:
    total = Fraction(0)
    for m in amicable_members_naive(limit):
        total += Fraction(1, m)
    return total


def largest_prime_factor(n: int) -> int:
    big = 1
    d = 2
    while d * d <= n:
        while n % d == 0:
            big = d
            n //= d
        d += 1
    if n > 1:
        big = max(big, n)
    return big


def psi_naive(x: int, y: int) -> int:
    """Count of n in [1, x] with every prime factor <= y (1 counts)."""
    return sum(1 for n in range(1, x + 1) if largest_prime_factor(n) <= y)


def primes_naive(limit: int) -> list:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    p = 2
    while p * p <= limit:
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
        p += 1
    return [n for n in range(2, limit + 1) if flags[n]]


def prime_recip_exact(cutoff: int) -> Fraction:
    total = Fraction(0)
    for p in primes_naive(cutoff):
        total += Fraction(1, p)
    return total


def residue_recip_exact(cutoff: int, modulus: int, residue: int) -> Fraction:
    want = residue % modulus
    total = Fraction(0)
    for p in primes_naive(cutoff):
        if p % modulus == want:
            total += Fraction(1, p)
    return total


# ----------------------------------------------------------------------
# mpmath brackets for transcendental targets
# ----------------------------------------------------------------------


def mpf_to_fraction(x) -> Fraction:
    sign, man, exp, _ = mpmath.mpf(x)._mpf_
    if man == 0:
        return Fraction(0)
    value = Fraction(man) * Fraction(2) ** exp
    return -value if sign else value


def mp_bracket(fn, dps: int = 60, slack_digits: int = 10):
    """(lo, hi) Fractions certain to bracket the true value of fn().

    Evaluates under mpmath at ``dps`` digits and pads by a relative
    10**(slack - dps), which dominates mpmath's rounding error at any
    magnitude (a zero result is exact, so a zero pad is fine there).
    """
    with mpmath.workdps(dps):
        value = mpmath.mpf(fn())
        pad = abs(value) * mpmath.mpf(10) ** (slack_digits - dps)
        return mpf_to_fraction(value - pad), mpf_to_fraction(value + pad)


def logp_over_p_bracket(cutoff: int, dps: int = 60):
    primes = primes_naive(cutoff)

    def compute():
        return mpmath.fsum(mpmath.log(p) / p for p in primes)

    return mp_bracket(compute, dps)


def p_power_recip_bracket(cutoff: int, exponent_num, exponent_den, dps=60):
    """Bracket of sum p^(-a) over p <= cutoff at exact rational a."""
    primes = primes_naive(cutoff)

    def compute():
        a = mpmath.mpf(exponent_num) / mpmath.mpf(exponent_den)
        return mpmath.fsum(mpmath.power(p, -a) for p in primes)

    return mp_bracket(compute, dps)


def gamma_tail_bracket(dps: int = 60):
    """Bracket of 6 * (upper incomplete gamma at shape 6, lower limit 10)."""

    def compute():
        return 6 * mpmath.gammainc(6, 10)

    return mp_bracket(compute, dps)


def _mp_of(q: Fraction):
    return mpmath.mpf(q.numerator) / mpmath.mpf(q.denominator)


def exp_bracket(q: Fraction, dps: int = 60):
    return mp_bracket(lambda: mpmath.exp(_mp_of(q)), dps)


def log_bracket(q: Fraction, dps: int = 60):
    return mp_bracket(lambda: mpmath.log(_mp_of(q)), dps)


def sqrt_bracket(q: Fraction, dps: int = 60):
    return mp_bracket(lambda: mpmath.sqrt(_mp_of(q)), dps)
