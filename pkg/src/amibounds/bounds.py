"""Assembly of the final reciprocal-sum enclosure.

The upper-bound half of the pipeline splits the sum of reciprocals of
amicable numbers at two scales: members up to the exhaustive-search record
(10**14) are priced by a published partial sum, members between the record
and the anchor exp(10**6) by a harmonic-sum bound (`middle_bound`), and
members past the anchor by partial summation against the certified count
bound ``A(x) <= C * x / exp((log x)**(1/6))`` (`tail_bound`).  The constant
``C`` is the sum of six per-range constants, each re-derived here in
interval arithmetic and compared against its printed value
(`constant_ledger`).  `assemble` stitches the pieces into a
:class:`BoundReport` whose ``verified`` flag summarizes every gating check
in the chain (the inequality suite of :mod:`.lemmas` included).

As in :mod:`.lemmas`, printed display values that our rigorous
recomputation refutes ship as informational checks that are expected to
FAIL, each with a note explaining why the final bound survives.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpfr, mpq

from . import params
from .aliquot import PartialSumTable
from .checks import (
    FAILS,
    HOLDS,
    INCONCLUSIVE,
    LemmaCheck,
    gating_ok,
    ge_check,
    le_check,
    tampered_rhs,
)
from .errors import DomainError
from .interval import (
    DEFAULT_PRECISION,
    Interval,
    LogMagnitude,
    check_precision,
    to_exact,
)
from .lemmas import SUITE_IDS, lemma_suite

# ----------------------------------------------------------------------
# published display values audited below (decimal strings, parsed exactly)
# ----------------------------------------------------------------------

PUBLISHED_RANGE_CAPS = (
    ("c1", "13553617.97"),
    ("c2", "0.1862"),
    ("c3", "4.3e-12"),
    ("c4", "1e-17471"),
    ("c5", "2.8117"),
    ("c6", "0.0054"),
)
PUBLISHED_TOTAL = "13553620.97"
PUBLISHED_TAIL_CAP = "654666169"
THEOREM_UPPER_CAP = "656000000"  # 6.56e8
THEOREM_LOWER_CAP = "0.0119841556"
# Reciprocal sum of members up to 10**14 from the published exhaustive
# search, printed rounded to 19 decimal places; carried as a bracket, never
# recomputed (desk-scale enumeration stops far earlier).
LITERATURE_LOWER_BRACKET = ("0.01198415567969311415", "0.01198415567969311425")
EXHAUSTIVE_SEARCH_LIMIT = 10**14

RELATIVE_TOLERANCE = "0.001"  # agreement demanded between re-derived and printed

# anchored intermediate constants the six ranges lean on (audited in
# :mod:`.lemmas`; re-exposed here so reports can print the full ledger)
ANCHORED_INTERMEDIATES = (
    ("residue-class-margin", "1.8093"),
    ("power-sigma-step", "0.8244"),
    ("power-sigma-total", "1.0859"),
    ("zeta2-style-total", "0.7734"),
    ("power-pair-int-total", "1.0225"),
    ("power-pair-prime-total", "0.7877"),
    ("ell-fourth-step", "0.3868"),
    ("ell-fourth-total", "2.0346"),
    ("chain-exponent", "2.8223"),
    ("smooth-count-coefficient", "4.8325"),
    ("smooth-count-z-exponent", "0.7528"),
)

LEDGER_CHECK_IDS = tuple(
    sorted(
        (
            "c1-agreement",
            "c1-coeff-product",
            "c1-coeff-step-printed",
            "c1-printed-cap",
            "c2-agreement",
            "c2-cap",
            "c3-cap",
            "c4-negligible",
            "c4-printed-magnitude",
            "c5-agreement",
            "c5-cap",
            "c6-cap",
            "c-sum-agreement",
            "c-sum-printed",
        )
    )
)

TAIL_CHECK_IDS = tuple(
    sorted(("tail-integral-overlap", "tail-cap-with-slack", "tail-printed-value"))
)

ASSEMBLY_CHECK_IDS = tuple(
    sorted(
        (
            "first-range-absorbed",
            "theorem-lower-literature",
            "theorem-upper",
            "lower-below-upper",
        )
    )
)

EXPECTED_INFORMATIONAL_FAILS = (
    "c-sum-printed",
    "c1-coeff-step-printed",
    "c4-printed-magnitude",
    "tail-printed-value",
)


# ----------------------------------------------------------------------
# small helpers
# ----------------------------------------------------------------------


def _cap(tamper, check_id: str, text: str, kind: str = "le"):
    """Exact decimal cap, shifted when this check is the tamper target."""
    return tampered_rhs(to_exact(text), tamper == check_id, kind)


def _exact_le(check_id, lhs_q, rhs_q, citation, precision, gating=True, note=""):
    """A <= claim between exact rationals, decided without any rounding."""
    verdict = HOLDS if lhs_q <= rhs_q else FAILS
    return LemmaCheck(
        check_id=check_id,
        verdict=verdict,
        citation=citation,
        lhs=Interval.exact(lhs_q, precision),
        rhs=Interval.exact(rhs_q, precision),
        gating=gating,
        note=note,
    )


def _strict_lt_check(check_id, lhs: Interval, rhs, citation, gating=True, note=""):
    """Verdict for the strict claim lhs < rhs (holds only when certain)."""
    if lhs.certainly_lt(rhs):
        verdict = HOLDS
    elif lhs.certainly_ge(rhs):
        verdict = FAILS
    else:
        verdict = INCONCLUSIVE
    rhs_iv = rhs if isinstance(rhs, Interval) else Interval.exact(rhs, lhs.precision)
    return LemmaCheck(check_id, verdict, citation, lhs, rhs_iv, gating, note)


def _interval_max(a: Interval, b: Interval) -> Interval:
    """Enclosure of max(a, b) (elementwise endpoint max; comparisons exact)."""
    lo = a.lo if a.lo >= b.lo else b.lo
    hi = a.hi if a.hi >= b.hi else b.hi
    return Interval(lo, hi, max(a.precision, b.precision))


def _interval_min_all(items) -> Interval:
    items = list(items)
    lo = min((iv.lo for iv in items))
    hi = min((iv.hi for iv in items))
    return Interval(lo, hi, max(iv.precision for iv in items))


def _as_anchored_magnitude(x, precision: int) -> LogMagnitude:
    if x is None:
        return params.anchor_x(precision)
    if not isinstance(x, LogMagnitude):
        x = LogMagnitude.from_exact(x, precision)
    if x.sign <= 0 or not x.log_abs.certainly_ge(params.ANCHOR_LOG_X):
        raise DomainError(
            "the count bound is only asserted from exp(10^6) on; "
            "got a scale not certainly at or above the anchor"
        )
    return x


# ----------------------------------------------------------------------
# the six-range constant ledger
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class RangeConstant:
    """One excluded range of integers and the constant that prices it."""

    key: str
    description: str
    computed: object  # Interval, or LogMagnitude for the subinterval-resolution c4
    published: str
    adopted: Interval  # value the assembly actually uses (max of the two)


@dataclass(frozen=True)
class ConstantLedger:
    precision: int
    ranges: tuple  # six RangeConstant, c1..c6
    c4_variants: tuple  # (label, LogMagnitude) readings of the c4 display
    total: Interval  # sum of adopted values
    published_total: str
    intermediates: tuple  # (name, Interval) pairs
    checks: tuple

    def gating_ok(self) -> bool:
        return gating_ok(self.checks)


def constant_ledger(
    x: LogMagnitude | int | None = None,
    precision: int = DEFAULT_PRECISION,
    tamper: str | None = None,
) -> ConstantLedger:
    """Re-derive the six per-range constants at scale x (default: anchor).

    Each constant is evaluated from its defining expression in interval
    arithmetic, compared against the printed decimal (gating where the
    final bound depends on the comparison), and the larger of the two wins
    a place in ``total`` so that downstream consumers always hold a
    certified upper bound.
    """
    p = check_precision(precision)
    if tamper is not None and tamper not in LEDGER_CHECK_IDS:
        raise DomainError("unknown ledger tamper target %r" % tamper)
    x = _as_anchored_magnitude(x, p)

    log_x = x.log_abs.with_precision(p)
    loglog = log_x.log()
    sixth = log_x.rootn(6)
    two_thirds = (log_x**2).rootn(3)
    ell = sixth.exp()
    ell4 = (sixth * 4).exp()
    log_z = Interval.exact(2, p).log() + log_x + loglog.log()
    log_large = params.large_cut_log(x, p)

    # range 1: partners whose largest prime factor is below the square of
    # the upper smoothness cut — Rankin-style smooth count of the partner
    # range 2x loglog x, with z^sigma = z * z^(-1/(0.7528 (log x)^(2/3) llx))
    z_exponent = log_z / (to_exact("0.7528") * two_thirds * loglog)
    c1 = to_exact("4.8325") * loglog**2 * two_thirds * (sixth - z_exponent).exp()

    # range 2: a perfect power k^m >= ell^3 divides the number or its partner
    c2 = to_exact("1.0001") * (loglog * 2) * ell / ((sixth * mpq(3, 2)).exp() - 1)

    # range 3: a prime >= ell^4 divides both n and sigma(n)
    c3 = (loglog * 3 + 4) * ell / (ell4 - 1)

    # range 4: n/P(n) below the upper cut; the count is subinterval-
    # resolution small, so it is carried in the log domain.  Three readings
    # of the display are computed; the first (largest) is adopted.
    log_4ll = (loglog * 4).log()
    c4_variants = (
        (
            "over-large-cut",
            LogMagnitude.from_log(log_4ll + sixth - log_large),
        ),
        (
            "over-large-cut-squared",
            LogMagnitude.from_log(log_4ll + sixth - log_large * 2),
        ),
        (
            "as-printed-0.61-exponent",
            LogMagnitude.from_log(
                log_4ll + sixth - to_exact("0.61") * two_thirds * loglog
            ),
        ),
    )
    c4 = c4_variants[0][1]

    # range 5: sigma of the P(n)-stripped part has no prime factor >= ell^4
    c5 = (
        Interval.exact(to_exact("1.0225"), p).exp()
        * 4
        * loglog
        * (loglog * 2 + 1)
        * (loglog + to_exact("0.2615"))
        / ell
    )

    # range 6: the residue-class double count over the remaining integers
    c6 = (
        (loglog * 2)
        * (log_z.log() * 3 + 4)
        * log_x
        * (loglog * 3 + 4)
        * ell
        / (ell4 - 1)
    )

    published = dict(PUBLISHED_RANGE_CAPS)
    checks = []

    def agreement(cid: str, computed: Interval, pub_text: str, what: str):
        ratio_err = (computed / Interval.exact(pub_text, p) - 1).abs()
        checks.append(
            le_check(
                cid,
                ratio_err,
                _cap(tamper, cid, RELATIVE_TOLERANCE),
                "re-derived %s constant within 0.1%% of the printed %s"
                % (what, pub_text),
            )
        )

    def printed_cap(cid: str, computed: Interval, pub_text: str, gating, note=""):
        checks.append(
            le_check(
                cid,
                computed,
                _cap(tamper, cid, pub_text),
                "re-derived value <= printed %s" % pub_text,
                gating=gating,
                note=note,
            )
        )

    agreement("c1-agreement", c1, published["c1"], "smooth-partner")
    checks.append(
        _exact_le(
            "c1-coeff-product",
            to_exact("6.4193") * to_exact("0.3764") * 2,
            _cap(tamper, "c1-coeff-product", "4.8325"),
            "2 * 6.4193 * 0.3764 <= 4.8325 (exact decimals: the unrounded "
            "product 4.83244904 justifies the smooth-count coefficient)",
            p,
        )
    )
    checks.append(
        _exact_le(
            "c1-coeff-step-printed",
            to_exact("2.4163") * 2,
            _cap(tamper, "c1-coeff-step-printed", "4.8325"),
            "as-printed route: 2 * 2.4163 <= 4.8325",
            p,
            gating=False,
            note="expected FAIL: doubling the printed intermediate 2.4163 "
            "gives 4.8326 > 4.8325; the coefficient is justified by the "
            "unrounded product (previous check), not by its own printed "
            "intermediate",
        )
    )
    printed_cap(
        "c1-printed-cap",
        c1,
        published["c1"],
        gating=False,
        note="informational: the final printed rounding direction is not "
        "load-bearing because the adopted value is the larger of the "
        "re-derived and printed candidates",
    )
    agreement("c2-agreement", c2, published["c2"], "perfect-power")
    printed_cap("c2-cap", c2, published["c2"], gating=True)
    printed_cap("c3-cap", c3, published["c3"], gating=True)
    checks.append(
        le_check(
            "c4-negligible",
            c4.log10(),
            _cap(tamper, "c4-negligible", "-1000"),
            "log10 of the ratio-range constant <= -1000, so an envelope of "
            "10^-1000 absorbs it in the total",
        )
    )
    distances = [
        ((v.log10() + 17471).abs()) for _, v in c4_variants
    ]
    checks.append(
        le_check(
            "c4-printed-magnitude",
            _interval_min_all(distances),
            _cap(tamper, "c4-printed-magnitude", "1"),
            "some reading of the ratio-range display has log10 within 1 of "
            "the printed -17471",
            gating=False,
            note="expected FAIL: the three readings sit near 10^-11286, "
            "10^-22578 and 10^-36594; none reproduces 10^-17471.  The "
            "printed value is immaterial either way: every reading is "
            "below the 10^-1000 envelope the total carries",
        )
    )
    agreement("c5-agreement", c5, published["c5"], "stripped-part")
    printed_cap("c5-cap", c5, published["c5"], gating=True)
    printed_cap("c6-cap", c6, published["c6"], gating=True)

    adopted = {
        "c1": _interval_max(c1, Interval.exact(published["c1"], p)),
        "c2": _interval_max(c2, Interval.exact(published["c2"], p)),
        "c3": _interval_max(c3, Interval.exact(published["c3"], p)),
        # c4 is certified below the 10^-1000 envelope by the gating check
        "c4": Interval.from_endpoints(0, mpq(1, 10**1000), p),
        "c5": _interval_max(c5, Interval.exact(published["c5"], p)),
        "c6": _interval_max(c6, Interval.exact(published["c6"], p)),
    }
    total = (
        adopted["c1"]
        + adopted["c2"]
        + adopted["c3"]
        + adopted["c4"]
        + adopted["c5"]
        + adopted["c6"]
    )

    agreement("c-sum-agreement", total, PUBLISHED_TOTAL, "six-range total")
    checks.append(
        _exact_le(
            "c-sum-printed",
            sum(to_exact(text) for _, text in PUBLISHED_RANGE_CAPS),
            _cap(tamper, "c-sum-printed", PUBLISHED_TOTAL),
            "sum of the printed per-range constants <= printed total "
            "13553620.97",
            p,
            gating=False,
            note="expected FAIL: the printed components add to "
            "13553620.9733...; the printed total truncates the last two "
            "digits the wrong way.  The assembly carries the full "
            "component sum, so nothing downstream leans on the truncation",
        )
    )

    descriptions = {
        "c1": "partner range with largest prime factor below the squared "
        "upper cut (smooth-count pricing)",
        "c2": "a perfect power at least ell^3 divides the number or its "
        "partner",
        "c3": "a prime at least ell^4 divides both n and sigma(n)",
        "c4": "n over its largest prime factor falls below the upper cut",
        "c5": "sigma of the stripped part has no prime factor at least "
        "ell^4",
        "c6": "residue-class double count over the surviving integers",
    }
    computed = {"c1": c1, "c2": c2, "c3": c3, "c4": c4, "c5": c5, "c6": c6}
    ranges = tuple(
        RangeConstant(
            key=key,
            description=descriptions[key],
            computed=computed[key],
            published=text,
            adopted=adopted[key],
        )
        for key, text in PUBLISHED_RANGE_CAPS
    )

    checks.sort(key=lambda c: c.check_id)
    produced = tuple(c.check_id for c in checks)
    if produced != LEDGER_CHECK_IDS:
        raise DomainError(
            "ledger produced ids %s, declared %s" % (produced, LEDGER_CHECK_IDS)
        )
    return ConstantLedger(
        precision=p,
        ranges=ranges,
        c4_variants=c4_variants,
        total=total,
        published_total=PUBLISHED_TOTAL,
        intermediates=tuple(
            (name, Interval.exact(text, p)) for name, text in ANCHORED_INTERMEDIATES
        ),
        checks=tuple(checks),
    )


# ----------------------------------------------------------------------
# the certified count bound
# ----------------------------------------------------------------------


def ax_bound(
    x: LogMagnitude | int,
    ledger: ConstantLedger | None = None,
    precision: int = DEFAULT_PRECISION,
) -> LogMagnitude:
    """Certified cap on the count of amicable numbers up to x (x >= anchor).

    ``C * x / exp((log x)^(1/6))`` in the log domain, with ``C`` the
    ledger's adopted total (anchor-evaluated constants stay valid for all
    larger x because every per-range expression is nonincreasing in x).
    """
    p = check_precision(precision)
    x = _as_anchored_magnitude(x, p)
    if ledger is None:
        ledger = constant_ledger(precision=p)
    log_x = x.log_abs.with_precision(p)
    return LogMagnitude.from_log(ledger.total.log() + log_x - log_x.rootn(6))


# ----------------------------------------------------------------------
# tail of the reciprocal sum (partial summation past the anchor)
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class TailBound:
    precision: int
    coefficient: Interval
    envelope_factor: Interval  # exp(-10) + 1 from the partial-summation step
    integral_closed: Interval  # 6 * (incomplete-gamma at (6, 10)) in closed form
    integral_quadrature: Interval  # independent rectangle-quadrature enclosure
    additive_reading: Interval  # coefficient * (exp(-10) + integral), see checks
    total: Interval  # coefficient * envelope_factor * integral_closed
    checks: tuple

    def gating_ok(self) -> bool:
        return gating_ok(self.checks)


def _tail_integral_quadrature(
    precision: int, upper: int = 40, step_denominator: int = 256
) -> Interval:
    """Rectangle enclosure of ∫_10^∞ 6 u^5 exp(-u) du.

    The integrand is strictly decreasing past u = 5, so on each step the
    right endpoint under-prices and the left endpoint over-prices the
    slice.  Beyond ``upper`` the remainder is bounded by
    12 * upper^5 * exp(-upper): for u >= 10 the factor u^5 exp(-u/2) is
    decreasing, hence ∫_U^∞ 6 u^5 e^-u du <= 6 U^5 e^-U/2 ∫_U^∞ e^-u/2 du.
    """
    p = check_precision(precision)
    if upper <= 10:
        raise DomainError("quadrature upper end must exceed the lower limit 10")

    def integrand(u_q: mpq) -> Interval:
        u = Interval.exact(u_q, p)
        return u**5 * (-u).exp() * 6

    h = mpq(1, step_denominator)
    steps = (upper - 10) * step_denominator
    acc = Interval.exact(0, p)
    left = integrand(mpq(10))
    for i in range(1, steps + 1):
        right = integrand(10 + i * h)
        acc = acc + Interval(right.lo, left.hi, p) * h
        left = right
    remainder = Interval.exact(12 * upper**5, p) * Interval.exact(-upper, p).exp()
    return acc + Interval(mpfr(0), remainder.hi, p)


def tail_bound(
    precision: int = DEFAULT_PRECISION,
    coefficient: Interval | str | None = None,
    tamper: str | None = None,
) -> TailBound:
    """Enclosure of the reciprocal sum of amicable numbers past the anchor.

    Partial summation against the count bound gives
    ``coefficient * (exp(-10) + 1) * ∫_anchor^∞ dt/(t exp((log t)^(1/6)))``;
    substituting u = (log t)^(1/6) turns the integral into
    ∫_10^∞ 6 u^5 exp(-u) du, whose closed form is 1063920 * exp(-10)
    (repeated integration by parts; the polynomial sum 10^k/k!, k <= 5,
    is exactly 4433/3 and 6 * 120 * 4433/3 = 1063920).  A rectangle
    quadrature re-derives the integral independently as a cross-check.
    """
    p = check_precision(precision)
    if tamper is not None and tamper not in TAIL_CHECK_IDS:
        raise DomainError("unknown tail tamper target %r" % tamper)
    if coefficient is None:
        coefficient = PUBLISHED_TOTAL
    if not isinstance(coefficient, Interval):
        coefficient = Interval.exact(to_exact(coefficient), p)
    if not coefficient.certainly_gt(0):
        raise DomainError("tail coefficient must be certainly positive")

    exp_neg10 = Interval.exact(-10, p).exp()
    closed = Interval.exact(1063920, p) * exp_neg10
    quadrature = _tail_integral_quadrature(p)
    factor = exp_neg10 + 1
    total = coefficient * factor * closed
    additive = coefficient * (exp_neg10 + closed)

    checks = [
        LemmaCheck(
            check_id="tail-integral-overlap",
            verdict=HOLDS if closed.overlaps(quadrature) else FAILS,
            citation="closed-form and quadrature enclosures of "
            "int_10^inf 6 u^5 exp(-u) du intersect",
            lhs=quadrature,
            rhs=closed,
        ),
        le_check(
            "tail-cap-with-slack",
            total,
            tampered_rhs(
                Interval.exact(
                    to_exact(PUBLISHED_TAIL_CAP) * to_exact("1.001"), p
                ),
                tamper == "tail-cap-with-slack",
            ),
            "coefficient * (exp(-10) + 1) * integral <= 654666169 * 1.001",
        ),
        le_check(
            "tail-printed-value",
            total,
            _cap(tamper, "tail-printed-value", PUBLISHED_TAIL_CAP),
            "coefficient * (exp(-10) + 1) * integral <= 654666169 as printed",
            gating=False,
            note="expected FAIL: the product form evaluates near 654695275, "
            "~4.5e-5 above the printed figure; the additive reading "
            "coefficient * (exp(-10) + integral) (also reported) lands "
            "within ~2e-10 of it, so the printed figure priced the "
            "exp(-10) term additively.  The 0.1% slack cap (gating) is "
            "what the final bound consumes",
        ),
    ]
    checks.sort(key=lambda c: c.check_id)
    return TailBound(
        precision=p,
        coefficient=coefficient,
        envelope_factor=factor,
        integral_closed=closed,
        integral_quadrature=quadrature,
        additive_reading=additive,
        total=total,
        checks=tuple(checks),
    )


# ----------------------------------------------------------------------
# middle range: record boundary up to the anchor, by harmonic pricing
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class MiddleBound:
    start: int
    end_log: int
    empty: bool
    stated: Interval  # coarse integer cap [0, end_log]
    sharper: Interval  # harmonic enclosure [0, end_log - log(start) + 1]


def middle_bound(
    start: int = EXHAUSTIVE_SEARCH_LIMIT,
    end_log: int = params.ANCHOR_LOG_X,
    precision: int = DEFAULT_PRECISION,
) -> MiddleBound:
    """Price every reciprocal with start < n <= exp(end_log) at once.

    Each 1/n is at most ∫_{n-1}^{n} dt/t, so the block sum is below
    log(exp(end_log)) - log(start) + 1 = end_log - log(start) + 1 (the +1
    generously absorbs the first slice).  The ``stated`` field keeps the
    coarser integer cap [0, end_log]; ``sharper`` records how much room
    that cap leaves — the assembly leans on the room to absorb the
    below-``start`` members (see ``first-range-absorbed``).
    """
    p = check_precision(precision)
    if not isinstance(start, int) or isinstance(start, bool) or start < 3:
        raise DomainError("middle range start must be an int >= 3")
    if not isinstance(end_log, int) or isinstance(end_log, bool) or end_log < 1:
        raise DomainError("middle range end_log must be an int >= 1")

    log_start = Interval.exact(start, p).log()
    zero = Interval.exact(0, p)
    if log_start.certainly_ge(end_log):
        return MiddleBound(start, end_log, True, zero, zero)

    stated = Interval.from_endpoints(0, end_log, p)
    room = Interval.exact(end_log, p) - log_start + 1
    sharper_hi = room.hi if room.hi > 0 else mpfr(0)
    sharper = Interval(mpfr(0), sharper_hi, p)
    return MiddleBound(start, end_log, False, stated, sharper)


# ----------------------------------------------------------------------
# the full report
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    precision: int
    lower: Interval  # best desk-scale partial sum (enclosed exactly)
    lower_literature: Interval  # published exhaustive-search partial sum
    middle: MiddleBound
    tail: TailBound
    upper: Interval  # middle.stated + tail.total
    ledger: ConstantLedger
    suite: tuple  # inequality suite (lemmas.lemma_suite output)
    checks: tuple  # assembly-level checks
    verified: bool
    failing: tuple  # ids of gating checks not holding, across all stages

    def all_checks(self) -> tuple:
        return tuple(self.suite) + self.ledger.checks + self.tail.checks + self.checks


def assemble(
    table: PartialSumTable,
    precision: int = DEFAULT_PRECISION,
    ledger: ConstantLedger | None = None,
    suite: tuple | None = None,
    middle: MiddleBound | None = None,
    tail: TailBound | None = None,
    tamper: str | None = None,
) -> BoundReport:
    """Assemble the two-sided enclosure of the reciprocal sum.

    Lower side: the largest partial sum in ``table`` (desk scale) next to
    the published exhaustive-search value (literature bracket, flagged as
    such).  Upper side: ``middle.stated + tail.total``, where the stated
    middle cap also absorbs every member below the record boundary (the
    ``first-range-absorbed`` check certifies the absorption).  Any gating
    check failing anywhere in the chain marks the report unverified and
    lists the failing ids.
    """
    p = check_precision(precision)
    known = set(SUITE_IDS) | set(LEDGER_CHECK_IDS) | set(TAIL_CHECK_IDS)
    known |= set(ASSEMBLY_CHECK_IDS)
    if tamper is not None and tamper not in known:
        raise DomainError("unknown tamper target %r" % tamper)
    if not isinstance(table, PartialSumTable) or not table.rows:
        raise DomainError("assemble needs a nonempty partial-sum table")

    if ledger is None:
        ledger = constant_ledger(
            precision=p, tamper=tamper if tamper in LEDGER_CHECK_IDS else None
        )
    if suite is None:
        suite = lemma_suite(
            precision=p, tamper=tamper if tamper in SUITE_IDS else None
        )
    if middle is None:
        middle = middle_bound(precision=p)
    if tail is None:
        tail = tail_bound(
            precision=p,
            coefficient=ledger.total,
            tamper=tamper if tamper in TAIL_CHECK_IDS else None,
        )

    lower_row = max(table.rows, key=lambda r: r.fraction)
    lower = lower_row.interval
    literature = Interval.from_decimal_bracket(*LITERATURE_LOWER_BRACKET, precision=p)
    upper = middle.stated + tail.total

    checks = [
        le_check(
            "first-range-absorbed",
            literature + middle.sharper,
            tampered_rhs(
                to_exact(middle.end_log), tamper == "first-range-absorbed"
            ),
            "literature partial sum + harmonic middle enclosure <= the "
            "stated middle cap value, so the cap alone prices every "
            "member below the anchor",
        ),
        ge_check(
            "theorem-lower-literature",
            literature,
            tampered_rhs(
                to_exact(THEOREM_LOWER_CAP),
                tamper == "theorem-lower-literature",
                "ge",
            ),
            "the literature partial sum exceeds the stated lower constant "
            "0.0119841556",
            note="literature value: cited bracket, not recomputed at desk "
            "scale",
        ),
        _strict_lt_check(
            "theorem-upper",
            upper,
            tampered_rhs(
                Interval.exact(THEOREM_UPPER_CAP, p), tamper == "theorem-upper"
            ),
            "stated middle cap + tail < 6.56e8 (strict, by the hi endpoint)",
        ),
        _strict_lt_check(
            "lower-below-upper",
            lower,
            upper,
            "the lower enclosure sits strictly below the upper enclosure",
        ),
    ]
    checks.sort(key=lambda c: c.check_id)

    failing = tuple(
        sorted(
            {
                c.check_id
                for c in tuple(suite) + ledger.checks + tail.checks + tuple(checks)
                if c.gating and c.verdict != HOLDS
            }
        )
    )
    return BoundReport(
        precision=p,
        lower=lower,
        lower_literature=literature,
        middle=middle,
        tail=tail,
        upper=upper,
        ledger=ledger,
        suite=tuple(suite),
        checks=tuple(checks),
        verified=not failing,
        failing=failing,
    )
