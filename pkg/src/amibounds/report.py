"""Deterministic serialization: JSON documents and CSV tables.

Every artifact produced by this package obeys three rules, enforced here:

* a non-integer number is always rendered as a decimal-string enclosure —
  an object ``{"lo": ..., "hi": ...}`` whose ``lo`` is rounded toward -inf
  and ``hi`` toward +inf by `directed_decimal`; binary floats never appear
  in any artifact;
* quantities tracked in the log domain serialize as
  ``{"sign": s, "log_abs": {"lo": ..., "hi": ...}}`` (``log_abs`` is null
  for an exact zero), so astronomically large or small values survive the
  round trip without overflow;
* documents carry ``schema_version`` and contain no timestamps, hostnames,
  or other run noise, so reruns with the same configuration are
  byte-identical regardless of worker count.

Builders named ``*_json`` return plain document bodies; `document` wraps a
body with the schema envelope.  `collect_enclosures` flattens any document
to its enclosure leaves as exact rationals, and `nesting_report` compares
two parallel documents leaf by leaf — the mechanism behind the
confirmation rerun, which demands that higher-precision enclosures land
inside the lower-precision ones.  Directed rendering is monotone, so
nesting of the underlying intervals survives the round trip through
decimal strings.
"""

from __future__ import annotations

import csv
import json

from gmpy2 import mpq

from .aliquot import EnumerationResult, Extrapolation, PartialSumTable
from .bounds import BoundReport, ConstantLedger, MiddleBound, TailBound
from .errors import DomainError
from .interval import (
    Interval,
    LogMagnitude,
    directed_decimal,
    fixed_decimal,
    to_exact,
)

SCHEMA_VERSION = 1
SIG_DIGITS = 36

PAIRS_CSV_HEADER = ("m", "n", "both_below_limit")
TABLE_CSV_HEADER = ("checkpoint", "member_count", "sum_lo", "sum_hi")


# ----------------------------------------------------------------------
# leaf renderers
# ----------------------------------------------------------------------


def interval_json(value: Interval, sig_digits: int = SIG_DIGITS) -> dict:
    """Enclosure leaf: decimal lo rounded down, decimal hi rounded up."""
    return {
        "lo": value.decimal_lo(sig_digits),
        "hi": value.decimal_hi(sig_digits),
    }


def exact_json(value, sig_digits: int = SIG_DIGITS) -> dict:
    """Enclosure leaf for an exact rational (lo == hi up to rendering)."""
    q = to_exact(value)
    return {
        "lo": directed_decimal(q, sig_digits, -1),
        "hi": directed_decimal(q, sig_digits, +1),
    }


def magnitude_json(value: LogMagnitude, sig_digits: int = SIG_DIGITS) -> dict:
    if value.is_zero():
        return {"sign": 0, "log_abs": None}
    return {
        "sign": value.sign,
        "log_abs": interval_json(value.log_abs, sig_digits),
    }


def value_json(value, sig_digits: int = SIG_DIGITS):
    """Serialize an Interval, LogMagnitude, or exact rational; None passes."""
    if value is None:
        return None
    if isinstance(value, Interval):
        return interval_json(value, sig_digits)
    if isinstance(value, LogMagnitude):
        return magnitude_json(value, sig_digits)
    try:
        return exact_json(value, sig_digits)
    except DomainError:
        raise DomainError(
            "cannot serialize %r as a certified quantity" % (value,)
        )


def check_json(check, sig_digits: int = SIG_DIGITS) -> dict:
    return {
        "id": check.check_id,
        "verdict": check.verdict,
        "gating": check.gating,
        "citation": check.citation,
        "note": check.note,
        "lhs": value_json(check.lhs, sig_digits),
        "rhs": value_json(check.rhs, sig_digits),
    }


def checks_json(checks, sig_digits: int = SIG_DIGITS) -> list:
    return [check_json(c, sig_digits) for c in checks]


# ----------------------------------------------------------------------
# document bodies
# ----------------------------------------------------------------------


def enumeration_json(result: EnumerationResult) -> dict:
    """Counts only; the pair list itself is the CSV artifact."""
    return {
        "limit": result.limit,
        "pair_count": len(result.pairs),
        "member_count": len(result.members),
        "block_size": result.block_size,
    }


def table_json(table: PartialSumTable, sig_digits: int = SIG_DIGITS) -> dict:
    return {
        "limit": table.limit,
        "precision": table.precision,
        "rows": [
            {
                "checkpoint": row.checkpoint,
                "member_count": row.member_count,
                "sum": interval_json(row.interval, sig_digits),
            }
            for row in table.rows
        ],
    }


def extrapolation_json(
    extrapolation: Extrapolation, sig_digits: int = SIG_DIGITS
) -> dict:
    return {
        "label": extrapolation.label,
        "base": exact_json(extrapolation.base, sig_digits),
        "ratio": exact_json(extrapolation.ratio, sig_digits),
        "projected": interval_json(extrapolation.projected, sig_digits),
    }


def ledger_json(ledger: ConstantLedger, sig_digits: int = SIG_DIGITS) -> dict:
    return {
        "precision": ledger.precision,
        "ranges": [
            {
                "key": item.key,
                "description": item.description,
                "computed": value_json(item.computed, sig_digits),
                "published": item.published,
                "adopted": interval_json(item.adopted, sig_digits),
            }
            for item in ledger.ranges
        ],
        "c4_variants": [
            {"label": label, "value": magnitude_json(value, sig_digits)}
            for label, value in ledger.c4_variants
        ],
        "total": interval_json(ledger.total, sig_digits),
        "published_total": ledger.published_total,
        "intermediates": [
            {"name": name, "value": interval_json(value, sig_digits)}
            for name, value in ledger.intermediates
        ],
        "checks": checks_json(ledger.checks, sig_digits),
    }


def tail_json(tail: TailBound, sig_digits: int = SIG_DIGITS) -> dict:
    return {
        "precision": tail.precision,
        "coefficient": interval_json(tail.coefficient, sig_digits),
        "envelope_factor": interval_json(tail.envelope_factor, sig_digits),
        "integral_closed": interval_json(tail.integral_closed, sig_digits),
        "integral_quadrature": interval_json(
            tail.integral_quadrature, sig_digits
        ),
        "additive_reading": interval_json(tail.additive_reading, sig_digits),
        "total": interval_json(tail.total, sig_digits),
        "checks": checks_json(tail.checks, sig_digits),
    }


def middle_json(middle: MiddleBound, sig_digits: int = SIG_DIGITS) -> dict:
    return {
        "start": middle.start,
        "end_log": middle.end_log,
        "empty": middle.empty,
        "stated": interval_json(middle.stated, sig_digits),
        "sharper": interval_json(middle.sharper, sig_digits),
    }


def bound_json(report: BoundReport, sig_digits: int = SIG_DIGITS) -> dict:
    return {
        "precision": report.precision,
        "lower": interval_json(report.lower, sig_digits),
        "lower_literature": interval_json(report.lower_literature, sig_digits),
        "upper": interval_json(report.upper, sig_digits),
        "middle": middle_json(report.middle, sig_digits),
        "tail": tail_json(report.tail, sig_digits),
        "ledger": ledger_json(report.ledger, sig_digits),
        "suite": checks_json(report.suite, sig_digits),
        "checks": checks_json(report.checks, sig_digits),
        "verified": report.verified,
        "failing": list(report.failing),
    }


def document(kind: str, body: dict) -> dict:
    """Wrap a body with the versioned envelope every artifact carries."""
    wrapped = {"schema_version": SCHEMA_VERSION, "kind": kind}
    wrapped.update(body)
    return wrapped


# ----------------------------------------------------------------------
# writers
# ----------------------------------------------------------------------


def dump_json(doc) -> str:
    """Canonical text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def write_json(path, doc) -> None:
    with open(path, "w", encoding="ascii") as handle:
        handle.write(dump_json(doc))


def write_pairs_csv(path, result: EnumerationResult) -> None:
    """m,n,both_below_limit rows, ascending by smaller member."""
    with open(path, "w", newline="", encoding="ascii") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(PAIRS_CSV_HEADER)
        for pair in result.pairs:
            writer.writerow(
                (
                    pair.smaller,
                    pair.larger,
                    "true" if pair.both_below_limit else "false",
                )
            )


def write_table_csv(
    path, table: PartialSumTable, sig_digits: int = SIG_DIGITS
) -> None:
    with open(path, "w", newline="", encoding="ascii") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(TABLE_CSV_HEADER)
        for row in table.rows:
            writer.writerow(
                (
                    row.checkpoint,
                    row.member_count,
                    row.interval.decimal_lo(sig_digits),
                    row.interval.decimal_hi(sig_digits),
                )
            )


# ----------------------------------------------------------------------
# confirmation: enclosure collection and nesting comparison
# ----------------------------------------------------------------------


def collect_enclosures(doc, prefix: str = "") -> dict:
    """Flatten a document to ``{path: (lo, hi)}`` over its enclosure leaves.

    A leaf is any dict with exactly the keys ``lo`` and ``hi``; values come
    back as exact rationals.  List items keyed by an ``id``/``key``/
    ``name``/``label``/``checkpoint`` field use that tag in the path, so
    parallel documents built from the same inputs share paths and can be
    compared quantity by quantity.
    """
    found: dict = {}
    _walk(doc, prefix, found)
    return found


_TAG_FIELDS = ("id", "key", "name", "label", "checkpoint")


def _walk(node, path, found) -> None:
    if isinstance(node, dict):
        if set(node) == {"lo", "hi"}:
            found[path] = (to_exact(node["lo"]), to_exact(node["hi"]))
            return
        for key in node:
            _walk(node[key], "%s.%s" % (path, key) if path else key, found)
    elif isinstance(node, (list, tuple)):
        for index, item in enumerate(node):
            tag = index
            if isinstance(item, dict):
                for field in _TAG_FIELDS:
                    if isinstance(item.get(field), (str, int)):
                        tag = item[field]
                        break
            _walk(item, "%s[%s]" % (path, tag), found)


def nesting_report(primary: dict, confirmation: dict) -> dict:
    """Leaf-by-leaf containment of a confirmation rerun in the primary run.

    ``nested`` counts shared leaves whose confirmation enclosure lies
    inside the primary one.  Disjoint leaves contradict the primary run
    and are never acceptable; overlapping-but-not-nested leaves are merely
    flagged.  ``ok`` demands no contradictions and at least 99 percent of
    shared leaves nested.
    """
    first = collect_enclosures(primary)
    second = collect_enclosures(confirmation)
    shared = sorted(set(first) & set(second))
    nested = 0
    flagged = []
    contradicting = []
    for name in shared:
        lo1, hi1 = first[name]
        lo2, hi2 = second[name]
        if lo1 <= lo2 and hi2 <= hi1:
            nested += 1
        elif hi2 < lo1 or lo2 > hi1:
            contradicting.append(name)
        else:
            flagged.append(name)
    total = len(shared)
    ok = total > 0 and not contradicting and 100 * nested >= 99 * total
    fraction = "0" if total == 0 else fixed_decimal(mpq(nested, total), 6, -1)
    return {
        "total": total,
        "nested": nested,
        "nested_fraction": fraction,
        "flagged": flagged,
        "contradicting": contradicting,
        "ok": ok,
    }
