"""Aliquot machinery: s(n) blocks, amicable enumeration, partial sums.

An amicable pair is (a, b) with b = s(a), a = s(b), a != b, where s is the
proper-divisor sum.  Enumeration up to a limit finds every pair whose
*smaller* member is within the limit:

1. sieve s(n) for all n <= limit in blocks (optionally threaded — blocks are
   independent and the kernels run outside the GIL);
2. scan each block for candidates b = s(a) > a; candidates with b <= limit
   are settled by table lookup (s(b) == a?);
3. candidates with b beyond the limit are settled by a second, sorted-query
   sweep: the block sieve is driven over just the windows that contain a
   queried partner, so nothing is ever pointwise-factored.

``members`` are the amicable numbers <= limit (a partner beyond the limit is
reported in its pair but is not a member).  Results are bit-identical for
any block size and worker count.

``s_point`` is the independent route to the same function — direct
factorization of a single integer — kept deliberately separate from the
sieve so the two can audit each other.  Primality shortcuts use the
Baillie–PSW test, which has been exhaustively verified below 2**64, safely
covering the 10**18 input cap.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass

import gmpy2
import numpy as np
from gmpy2 import mpq

from . import kernels
from .errors import DomainError, ResourceError
from .interval import Interval, check_precision

MAX_ENUM_LIMIT = 4 * 10**8  # s(n) fits uint32 comfortably below this
MAX_POINT_N = 10**18
DEFAULT_BLOCK = 1 << 20


@dataclass(frozen=True)
class AmicablePair:
    smaller: int
    larger: int
    both_below_limit: bool


@dataclass(frozen=True)
class EnumerationResult:
    limit: int
    pairs: tuple[AmicablePair, ...]
    members: tuple[int, ...]
    block_size: int
    worker_count: int
    backend: str


def _blocks(lo: int, hi: int, size: int):
    while lo < hi:
        yield lo, min(lo + size, hi)
        lo = min(lo + size, hi)


def sigma_proper_range(lo: int, hi: int, backend: str | None = None) -> np.ndarray:
    """int64 array of s(n) for n in [lo, hi); thin public kernel wrapper."""
    if not (isinstance(lo, int) and isinstance(hi, int) and 1 <= lo < hi):
        raise DomainError("need ints 1 <= lo < hi")
    if hi > MAX_ENUM_LIMIT * 3:
        raise ResourceError("range end %d beyond supported scale" % hi)
    return kernels.get_backend(backend).sigma_proper_block(lo, hi)


def enumerate_amicable(
    limit: int,
    block_size: int = DEFAULT_BLOCK,
    workers: int = 1,
    backend: str | None = None,
    progress=None,
) -> EnumerationResult:
    """Find all amicable pairs with smaller member <= limit."""
    if not isinstance(limit, int) or isinstance(limit, bool) or limit < 1:
        raise DomainError("limit must be an int >= 1")
    if limit > MAX_ENUM_LIMIT:
        raise ResourceError(
            "enumeration limit %d exceeds the supported %d" % (limit, MAX_ENUM_LIMIT)
        )
    if not isinstance(block_size, int) or block_size < 2**12:
        raise DomainError("block_size must be an int >= 4096")
    if not isinstance(workers, int) or workers < 1:
        raise DomainError("workers must be an int >= 1")
    kb = kernels.get_backend(backend)

    # -- phase 1: s(n) table for n in [1, limit] -----------------------
    store = np.zeros(limit + 1, dtype=np.uint32)
    spans = list(_blocks(1, limit + 1, block_size))

    def fill(span):
        lo, hi = span
        arr = kb.sigma_proper_block(lo, hi)
        store[lo:hi] = arr  # uint32 narrowing is safe below MAX_ENUM_LIMIT
        return None

    _run_spans(fill, spans, workers, progress, "sieve")

    # -- phase 2: candidate scan ---------------------------------------
    pairs: list[AmicablePair] = []
    far_targets: list[np.ndarray] = []
    far_askers: list[np.ndarray] = []
    for lo, hi in _blocks(1, limit + 1, block_size):
        n = np.arange(lo, hi, dtype=np.int64)
        b = store[lo:hi].astype(np.int64)
        cand = b > n
        if not cand.any():
            continue
        nc, bc = n[cand], b[cand]
        near = bc <= limit
        if near.any():
            nn, bn = nc[near], bc[near]
            hit = store[bn] == nn
            for a, p in zip(nn[hit].tolist(), bn[hit].tolist()):
                pairs.append(AmicablePair(a, p, True))
        faro = ~near
        if faro.any():
            far_targets.append(bc[faro])
            far_askers.append(nc[faro])

    # -- phase 3: partners beyond the limit ----------------------------
    if far_targets:
        targets = np.concatenate(far_targets)
        askers = np.concatenate(far_askers)
        order = np.argsort(targets, kind="stable")
        targets, askers = targets[order], askers[order]

        windows = []
        ptr = 0
        total = len(targets)
        while ptr < total:
            lo = int(targets[ptr])
            hi = min(lo + block_size, int(targets[-1]) + 1)
            end = int(np.searchsorted(targets, hi))
            windows.append((lo, hi, ptr, end))
            ptr = end

        found: dict[int, list[AmicablePair]] = {}

        def sweep(win):
            lo, hi, i0, i1 = win
            arr = kb.sigma_proper_block(lo, hi)
            t = targets[i0:i1]
            a = askers[i0:i1]
            hit = arr[t - lo] == a
            return [
                AmicablePair(int(x), int(y), False)
                for x, y in zip(a[hit].tolist(), t[hit].tolist())
            ]

        results = _run_spans(sweep, windows, workers, progress, "extend")
        for chunk in results:
            pairs.extend(chunk)

    pairs.sort(key=lambda pr: pr.smaller)
    members = sorted(
        {p.smaller for p in pairs} | {p.larger for p in pairs if p.both_below_limit}
    )
    return EnumerationResult(
        limit=limit,
        pairs=tuple(pairs),
        members=tuple(members),
        block_size=block_size,
        worker_count=workers,
        backend=kb.BACKEND_NAME,
    )


def _run_spans(fn, spans, workers, progress, phase):
    """Run fn over spans (optionally threaded), preserving span order."""
    results = [None] * len(spans)
    if workers == 1:
        for i, span in enumerate(spans):
            results[i] = fn(span)
            if progress:
                progress(phase, i + 1, len(spans))
        return results
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
        futures = {pool.submit(fn, span): i for i, span in enumerate(spans)}
        done = 0
        for fut in concurrent.futures.as_completed(futures):
            results[futures[fut]] = fut.result()
            done += 1
            if progress:
                progress(phase, done, len(spans))
    return results


# ----------------------------------------------------------------------
# pointwise route (factorization), kept independent of the sieve
# ----------------------------------------------------------------------

_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)  # increments cycling through 7 mod 30


def s_point(n: int) -> int:
    """s(n) by direct factorization; audits the sieve, never feeds it."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError("n must be an int >= 1")
    if n > MAX_POINT_N:
        raise ResourceError("pointwise s(n) supported only for n <= 10**18")
    if n == 1:
        return 0
    m = n
    sigma = 1
    for p in (2, 3, 5):
        if m % p == 0:
            pk = p
            while m % p == 0:
                m //= p
                pk *= p
            sigma *= (pk - 1) // (p - 1)
    d = 7
    wheel_idx = 0
    while m > 1:
        if gmpy2.is_prime(m):
            sigma *= m + 1
            m = 1
            break
        if d * d > m:
            # m > 1 composite with no factor <= sqrt(m) is impossible
            sigma *= m + 1
            m = 1
            break
        if m % d == 0:
            pk = d
            while m % d == 0:
                m //= d
                pk *= d
            sigma *= (pk - 1) // (d - 1)
        d += _WHEEL[wheel_idx]
        wheel_idx = (wheel_idx + 1) % 8
    return sigma - n


def is_amicable_pair(a: int, b: int) -> bool:
    """Pointwise check that (a, b) is an amicable pair."""
    if a == b:
        return False
    return s_point(a) == b and s_point(b) == a


# ----------------------------------------------------------------------
# partial sums of member reciprocals (exact, then one outward rounding)
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class PartialSumRow:
    checkpoint: int
    member_count: int
    fraction: mpq
    interval: Interval


@dataclass(frozen=True)
class PartialSumTable:
    limit: int
    precision: int
    rows: tuple[PartialSumRow, ...]


def partial_sums(
    result: EnumerationResult,
    checkpoints: tuple[int, ...] | list[int] | None = None,
    precision: int = 192,
) -> PartialSumTable:
    """Exact reciprocal sums of members at each checkpoint <= limit."""
    check_precision(precision)
    if checkpoints is None:
        checkpoints = []
        c = 10
        while c <= result.limit:
            checkpoints.append(c)
            c *= 10
    checkpoints = list(checkpoints)
    if any(
        not isinstance(c, int) or isinstance(c, bool) or c < 1 or c > result.limit
        for c in checkpoints
    ):
        raise DomainError("checkpoints must be ints within [1, limit]")
    if sorted(checkpoints) != checkpoints:
        raise DomainError("checkpoints must be ascending")

    rows = []
    total = mpq(0)
    count = 0
    idx = 0
    members = result.members
    for cp in checkpoints:
        while idx < len(members) and members[idx] <= cp:
            total += mpq(1, members[idx])
            count += 1
            idx += 1
        rows.append(
            PartialSumRow(
                checkpoint=cp,
                member_count=count,
                fraction=mpq(total),
                interval=Interval.exact(total, precision),
            )
        )
    return PartialSumTable(limit=result.limit, precision=precision, rows=tuple(rows))


@dataclass(frozen=True)
class Extrapolation:
    """Geometric-decay extrapolation of the partial-sum table.

    Heuristic, not certified: assumes the checkpoint-to-checkpoint increments
    keep shrinking by the observed ratio.  ``label`` says exactly that.
    """

    base: mpq
    projected: Interval
    ratio: mpq
    label: str


def conjecture_extrapolate(table: PartialSumTable, precision: int = 192) -> Extrapolation:
    rows = [r for r in table.rows if r.member_count > 0]
    if len(rows) < 3:
        raise DomainError("need three populated checkpoints to extrapolate")
    p2, p1, p0 = rows[-3].fraction, rows[-2].fraction, rows[-1].fraction
    d1, d0 = p1 - p2, p0 - p1
    if d1 <= 0 or d0 <= 0 or d0 >= d1:
        raise DomainError("increments are not geometrically decreasing")
    ratio = d0 / d1
    projected_q = p0 + d0 * ratio / (1 - ratio)
    return Extrapolation(
        base=p0,
        projected=Interval.exact(projected_q, precision),
        ratio=ratio,
        label="heuristic-geometric-decay (not certified)",
    )
