"""Smooth-number counts: exact small-scale recursion and a certified majorant.

``psi_exact(x, y)`` counts integers n <= x whose prime factors are all <= y
(n = 1 counts: it has no prime factors at all).  The classic two-argument
recursion

    psi(x, k) = psi(x, k-1) + psi(x // p_k, k)

is evaluated with an explicit stack and a memo table, so deep prime lists
cannot hit the interpreter recursion limit.

``rankin_bound(x, y)`` is the standard weighted majorant: for any sigma > 0,

    psi(x, y) <= x^sigma * prod_{p <= y} (1 - p^-sigma)^(-1),

evaluated here entirely in directed interval arithmetic, with the product's
log accumulated term by term.  The default exponent is
``sigma(y) = 1 - 1/(2 log y)``.
"""

from __future__ import annotations

import bisect

from gmpy2 import mpfr

from . import params
from .errors import DomainError, ResourceError
from .interval import DEFAULT_PRECISION, Interval, LogMagnitude, check_precision, _dn, _up
from .sieve import PrimeSieve, sieve_for

PSI_MAX_X = 10**8
PSI_MAX_Y = 10**6


def psi_exact(x: int, y: int, sieve: PrimeSieve | None = None) -> int:
    """Exact count of y-smooth integers in [1, x]."""
    if not isinstance(x, int) or isinstance(x, bool) or x < 0:
        raise DomainError("x must be an int >= 0")
    if not isinstance(y, int) or isinstance(y, bool) or y < 1:
        raise DomainError("y must be an int >= 1")
    if x > PSI_MAX_X:
        raise ResourceError("exact smooth counting supported only for x <= %d" % PSI_MAX_X)
    if y > PSI_MAX_Y:
        raise ResourceError("exact smooth counting supported only for y <= %d" % PSI_MAX_Y)
    if x == 0:
        return 0
    if min(x, y) < 2:
        return 1  # only n = 1 qualifies
    primes = _primes_list_cached(min(y, x), sieve)
    if not primes:
        return 1

    # Clamp the prime index: psi(x', k) = psi(x', pi(x')) once p_k > x',
    # which collapses the tall thin part of the state space.
    def clamp(xv: int, k: int) -> int:
        return min(k, bisect.bisect_right(primes, xv))

    memo: dict[tuple[int, int], int] = {}
    root = (x, clamp(x, len(primes)))
    stack = [root]
    while stack:
        xv, k = stack[-1]
        if (xv, k) in memo:
            stack.pop()
            continue
        if xv == 0:
            memo[(xv, k)] = 0
            stack.pop()
            continue
        if k == 0:
            memo[(xv, k)] = 1
            stack.pop()
            continue
        p = primes[k - 1]
        left = (xv, clamp(xv, k - 1))
        down = xv // p
        right = (down, clamp(down, k))
        lv = memo.get(left)
        rv = memo.get(right)
        if lv is not None and rv is not None:
            memo[(xv, k)] = lv + rv
            stack.pop()
        else:
            if lv is None:
                stack.append(left)
            if rv is None:
                stack.append(right)
        if len(memo) > 50_000_000:
            raise ResourceError("smooth-count memo table exceeded its budget")
    return memo[root]


_primes_cache: dict[int, list] = {}


def _primes_list_cached(cutoff: int, sieve: PrimeSieve | None) -> list:
    if sieve is None and cutoff in _primes_cache:
        return _primes_cache[cutoff]
    lst = sieve_for(cutoff, sieve).primes(2, cutoff).tolist()
    if sieve is None:
        if len(_primes_cache) > 32:
            _primes_cache.clear()
        _primes_cache[cutoff] = lst
    return lst


def rankin_bound(
    x,
    y: int,
    sigma: Interval | None = None,
    precision: int = DEFAULT_PRECISION,
    sieve: PrimeSieve | None = None,
) -> LogMagnitude:
    """Certified upper bound for psi(x, y): x^sigma * prod (1-p^-sigma)^-1.

    ``x`` may be an int or a LogMagnitude (the bound is most useful when x
    is far beyond integer range); the result is a LogMagnitude for the same
    reason.
    """
    check_precision(precision)
    if not isinstance(y, int) or y < 2:
        raise DomainError("y must be an int >= 2")
    if sigma is None:
        sigma = params.rankin_exponent(y, precision)
    if not (sigma.certainly_gt(0) and sigma.certainly_le(1)):
        raise DomainError("rankin exponent must lie in (0, 1]")

    if isinstance(x, LogMagnitude):
        if x.sign <= 0:
            raise DomainError("x must be positive")
        log_x = x.log_abs.with_precision(precision)
    elif isinstance(x, int) and not isinstance(x, bool):
        if x < 1:
            raise DomainError("x must be >= 1")
        log_x = Interval.exact(x, precision).log()
    else:
        raise DomainError("x must be an int or LogMagnitude")

    dn, up = _dn(precision), _up(precision)
    neg_lo = dn.sub(mpfr(0), sigma.hi)
    neg_hi = up.sub(mpfr(0), sigma.lo)
    acc_lo, acc_hi = mpfr(0), mpfr(0)
    for p in _primes_list_cached(y, sieve):
        lg_dn, lg_up = dn.log(p), up.log(p)
        u_lo = dn.exp(dn.mul(neg_lo, lg_up))
        u_hi = up.exp(up.mul(neg_hi, lg_dn))
        if not u_hi < 1:
            raise DomainError("p^-sigma touched 1; exponent too small")
        # term = -log(1 - u), increasing in u
        term_lo = dn.sub(mpfr(0), up.log1p(dn.sub(mpfr(0), u_lo)))
        term_hi = up.sub(mpfr(0), dn.log1p(up.sub(mpfr(0), u_hi)))
        acc_lo = dn.add(acc_lo, term_lo)
        acc_hi = up.add(acc_hi, term_hi)
    product_log = Interval(acc_lo, acc_hi, precision)
    total_log = sigma * log_x + product_log
    return LogMagnitude.from_log(total_log)
