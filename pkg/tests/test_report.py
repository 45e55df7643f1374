"""Serialization: outward decimal enclosures, CSV goldens, nesting audit."""

from __future__ import annotations

from fractions import Fraction

import pytest
from gmpy2 import mpq

from amibounds.aliquot import AmicablePair, EnumerationResult
from amibounds.errors import DomainError
from amibounds.interval import Interval, LogMagnitude
from amibounds.report import (
    PAIRS_CSV_HEADER,
    TABLE_CSV_HEADER,
    collect_enclosures,
    document,
    dump_json,
    exact_json,
    interval_json,
    magnitude_json,
    nesting_report,
    value_json,
    write_pairs_csv,
    write_table_csv,
)


def test_interval_json_rounds_outward():
    third = Interval.exact(Fraction(1, 3))
    out = interval_json(third)
    assert set(out) == {"lo", "hi"}
    lo, hi = Fraction(out["lo"]), Fraction(out["hi"])
    assert lo <= Fraction(third.lo_q) and Fraction(third.hi_q) <= hi
    assert lo < Fraction(1, 3) < hi
    assert hi - lo < Fraction(1, 10**30)


def test_exact_json_brackets_the_rational():
    out = exact_json(mpq(1, 3))
    lo, hi = Fraction(out["lo"]), Fraction(out["hi"])
    assert lo < Fraction(1, 3) < hi
    five = exact_json(5)
    assert Fraction(five["lo"]) <= 5 <= Fraction(five["hi"])


def test_magnitude_json_zero_and_signed():
    assert magnitude_json(LogMagnitude.zero()) == {"sign": 0, "log_abs": None}
    out = magnitude_json(LogMagnitude.from_exact(-7))
    assert out["sign"] == -1
    lo, hi = Fraction(out["log_abs"]["lo"]), Fraction(out["log_abs"]["hi"])
    assert lo < hi  # log(7) is irrational: the enclosure must be open


def test_value_json_dispatch():
    assert set(value_json(Interval.exact(2))) == {"lo", "hi"}
    assert value_json(LogMagnitude.zero())["sign"] == 0
    assert set(value_json(mpq(1, 1000))) == {"lo", "hi"}
    assert set(value_json(Fraction(3, 7))) == {"lo", "hi"}
    with pytest.raises(DomainError):
        value_json(0.25)


def test_dump_json_is_order_insensitive_and_newline_terminated():
    one = dump_json(document("t", {"a": 1, "b": [1, 2]}))
    two = dump_json(document("t", dict(reversed([("a", 1), ("b", [1, 2])]))))
    assert one == two
    assert one.endswith("\n") and '"schema_version": 1' in one


def test_collect_enclosures_tags_list_items():
    doc = {
        "suite": [
            {"id": "probeq", "lhs": {"lo": "1", "hi": "2"}},
            {"id": "anchor", "lhs": {"lo": "3", "hi": "4"}},
        ],
        "total": {"lo": "0.5", "hi": "0.75"},
        "note": "not an enclosure",
        "count": 7,
    }
    leaves = collect_enclosures(doc)
    assert set(leaves) == {"suite[probeq].lhs", "suite[anchor].lhs", "total"}
    assert leaves["total"] == (mpq(1, 2), mpq(3, 4))


def _doc(pairs):
    return {"rows": [{"id": k, "v": {"lo": lo, "hi": hi}} for k, (lo, hi) in pairs]}


def test_nesting_report_thresholds():
    wide = [("q%03d" % i, ("0", "10")) for i in range(100)]
    nested = [("q%03d" % i, ("1", "9")) for i in range(100)]
    report = nesting_report(_doc(wide), _doc(nested))
    assert report == {
        "total": 100,
        "nested": 100,
        "nested_fraction": "1.000000",
        "flagged": [],
        "contradicting": [],
        "ok": True,
    }

    # one overlapping-but-not-nested leaf out of 100 is still acceptable
    slipped = nested[:99] + [("q099", ("-5", "5"))]
    report = nesting_report(_doc(wide), _doc(slipped))
    assert report["ok"] and report["flagged"] == ["rows[q099].v"]

    # two of 100 breaches the 99 percent requirement
    slipped = nested[:98] + [("q098", ("-5", "5")), ("q099", ("-5", "5"))]
    assert not nesting_report(_doc(wide), _doc(slipped))["ok"]

    # a disjoint leaf contradicts the primary run outright
    broken = nested[:99] + [("q099", ("11", "12"))]
    report = nesting_report(_doc(wide), _doc(broken))
    assert not report["ok"] and report["contradicting"] == ["rows[q099].v"]

    # no shared quantities means nothing was confirmed
    assert not nesting_report({}, {})["ok"]


def test_pairs_csv_golden_bytes(tmp_path):
    result = EnumerationResult(
        limit=250,
        pairs=(AmicablePair(220, 284, False),),
        members=(220,),
        block_size=4096,
        worker_count=1,
        backend="python",
    )
    path = tmp_path / "pairs.csv"
    write_pairs_csv(path, result)
    expected = ",".join(PAIRS_CSV_HEADER) + "\n220,284,false\n"
    assert path.read_bytes() == expected.encode("ascii")


def test_table_csv_header(tmp_path, table_e7):
    path = tmp_path / "table.csv"
    write_table_csv(path, table_e7)
    lines = path.read_text("ascii").splitlines()
    assert lines[0] == ",".join(TABLE_CSV_HEADER)
    assert len(lines) == len(table_e7.rows) + 1
    first = lines[1].split(",")
    assert first[0] == "10" and first[1] == "0"
