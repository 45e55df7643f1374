"""Shared fixtures: expensive artifacts computed once per session.

The inequality suite takes ~15 s and the 10**7 enumeration ~1 s; both are
inputs to many tests, so they are session-scoped.  The enumeration fixture
also records its wall time, which the timing acceptance test asserts on —
that way the timed run and the correctness run are the same run.
"""

from __future__ import annotations

import time

import pytest

from amibounds import (
    constant_ledger,
    enumerate_amicable,
    lemma_suite,
    partial_sums,
)


@pytest.fixture(scope="session")
def suite128():
    return lemma_suite()


@pytest.fixture(scope="session")
def ledger128():
    return constant_ledger()


@pytest.fixture(scope="session")
def enum_e5():
    return enumerate_amicable(10**5)


@pytest.fixture(scope="session")
def enum_e7_timed():
    start = time.monotonic()
    result = enumerate_amicable(10**7, workers=4)
    return result, time.monotonic() - start


@pytest.fixture(scope="session")
def table_e7(enum_e7_timed):
    return partial_sums(enum_e7_timed[0])
