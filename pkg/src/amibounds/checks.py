"""Check records: a claimed inequality plus a certified verdict.

A verdict is one of four strings:

* ``holds`` — the enclosure proves the claim (lhs.hi <= rhs.lo, exactly);
* ``fails`` — the enclosure proves the negation;
* ``inconclusive`` — the enclosures straddle; nothing is certified either
  way (typically: the working precision was too low);
* ``out-of-domain`` — the claim's hypotheses are not met, so evaluating it
  would certify nothing.

``gating`` separates the checks whose failure invalidates the final bound
from purely informational audits (e.g. reproduction of published display
values that are known to be slightly off while the enclosing argument still
holds).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Any

HOLDS = "holds"
FAILS = "fails"
INCONCLUSIVE = "inconclusive"
OUT_OF_DOMAIN = "out-of-domain"

VERDICTS = (HOLDS, FAILS, INCONCLUSIVE, OUT_OF_DOMAIN)


@dataclass(frozen=True)
class LemmaCheck:
    check_id: str
    verdict: str
    citation: str  # self-contained rendering of the claimed inequality
    lhs: Any = None  # Interval | LogMagnitude | None (out-of-domain)
    rhs: Any = None
    gating: bool = True
    note: str = ""

    def ok(self) -> bool:
        return self.verdict == HOLDS


def le_verdict(lhs, rhs) -> str:
    """Certified verdict for the claim lhs <= rhs."""
    if lhs.certainly_le(rhs):
        return HOLDS
    if lhs.certainly_gt(rhs):
        return FAILS
    return INCONCLUSIVE


def ge_verdict(lhs, rhs) -> str:
    """Certified verdict for the claim lhs >= rhs."""
    if lhs.certainly_ge(rhs):
        return HOLDS
    if lhs.certainly_lt(rhs):
        return FAILS
    return INCONCLUSIVE


def le_check(check_id, lhs, rhs, citation, gating=True, note="") -> LemmaCheck:
    return LemmaCheck(check_id, le_verdict(lhs, rhs), citation, lhs, rhs, gating, note)


def ge_check(check_id, lhs, rhs, citation, gating=True, note="") -> LemmaCheck:
    return LemmaCheck(check_id, ge_verdict(lhs, rhs), citation, lhs, rhs, gating, note)


def out_of_domain(check_id, citation, gating=True, note="") -> LemmaCheck:
    return LemmaCheck(check_id, OUT_OF_DOMAIN, citation, None, None, gating, note)


def gating_ok(checks) -> bool:
    """True iff every gating check holds."""
    return all(c.verdict == HOLDS for c in checks if c.gating)


def tampered_rhs(rhs, tamper: bool, kind: str = "le"):
    """Test hook: move a claimed bound the wrong way to force a failure.

    For a ``<=`` claim the bound is pushed down by 0.1% of its magnitude
    (plus an absolute nudge so zero bounds move too); for ``>=`` it is pushed
    up.  Exists so the end-to-end pipeline can demonstrate that a broken
    claim actually flips the exit status; never used outside explicit
    requests.
    """
    if not tamper:
        return rhs
    from .interval import Interval, to_exact

    if isinstance(rhs, Interval):
        shift = rhs.abs() * to_exact("0.001") + to_exact("0.001")
    else:
        q = to_exact(rhs)
        shift = abs(q) * to_exact("0.001") + to_exact("0.001")
    return rhs - shift if kind == "le" else rhs + shift
