"""Benchmark: native sieve kernels against the numpy fallback.

Runs both backends over identical workloads, checks the outputs are
bit-identical (selection must never change results), and prints a timing
table.  Usage::

    python3 benchmarks/bench_kernels.py [--span 2000000] [--repeat 3]

The proper-divisor-sum kernel dominates enumeration time, so it is the
headline number; prime-flag sieving is included since the prime-sum
ledgers lean on it.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from amibounds import kernels


def _best_of(repeat: int, fn, *args) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def run(span: int, repeat: int) -> int:
    backends = [(name, kernels.get_backend(name))
                for name in kernels.available_backends()]
    if len(backends) < 2:
        print("note: native extension unavailable; timing the fallback only")

    lo, hi = 2, span + 2
    rows = []
    for name, module in backends:
        sigma_time = _best_of(repeat, module.sigma_proper_block, lo, hi)
        flags_time = _best_of(repeat, module.prime_flags, span)
        rows.append((name, sigma_time, flags_time))

    reference = backends[-1][1]
    expected_sigma = reference.sigma_proper_block(lo, hi)
    expected_flags = reference.prime_flags(span)
    for name, module in backends[:-1]:
        if not np.array_equal(module.sigma_proper_block(lo, hi), expected_sigma):
            print("MISMATCH: sigma_proper_block differs for backend", name)
            return 1
        if not np.array_equal(module.prime_flags(span), expected_flags):
            print("MISMATCH: prime_flags differs for backend", name)
            return 1

    print("span=%d best-of-%d, outputs bit-identical" % (span, repeat))
    print("%-8s  %-22s  %-18s" % ("backend", "sigma_proper_block [s]", "prime_flags [s]"))
    for name, sigma_time, flags_time in rows:
        print("%-8s  %-22.4f  %-18.4f" % (name, sigma_time, flags_time))
    if len(rows) == 2:
        speedup = rows[1][1] / rows[0][1]
        print("native speedup on sigma_proper_block: %.1fx" % speedup)
    return 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--span", type=int, default=2_000_000,
                        help="window width to sieve (default: 2e6)")
    parser.add_argument("--repeat", type=int, default=3,
                        help="take the best of this many runs (default: 3)")
    args = parser.parse_args()
    return run(args.span, args.repeat)


if __name__ == "__main__":
    raise SystemExit(main())
