"""The certified inequality suite behind the reciprocal-sum bound.

``lemma_suite`` evaluates every displayed inequality of the supporting
argument at a chosen scale x (default: the anchor exp(10**6)) and returns
one four-state LemmaCheck per claim, id-sorted.  Checks are *gating* when
the final bound depends on them; a handful of published-as-printed claims
that our rigorous recomputation refutes (by hairline rounding or a domain
slip in the source constants) ship as informational (``gating=False``) —
they are expected to FAIL, and each carries a note saying why the final
bound survives without them.

Conventions:
- every comparison is an exact-endpoint interval verdict (holds / fails /
  inconclusive), never a float comparison;
- checks run in independent groups (optionally threaded) and any
  evaluation error inside a group downgrades just that group's checks to
  ``inconclusive`` rather than aborting the suite;
- below the anchor scale every check reports ``out-of-domain``.
"""

from __future__ import annotations

import concurrent.futures
import functools
from dataclasses import dataclass, field

from gmpy2 import mpfr, mpq

from . import params
from .checks import (
    FAILS,
    HOLDS,
    INCONCLUSIVE,
    LemmaCheck,
    ge_check,
    le_check,
    out_of_domain,
    tampered_rhs,
)
from .errors import AmiboundsError, DomainError
from .interval import (
    DEFAULT_PRECISION,
    Interval,
    LogMagnitude,
    _dn,
    _up,
    check_precision,
    to_exact,
)
from .prime_sums import (
    bt_majorant,
    kc_pair_sum,
    logp_limit_constant,
    mertens_constant,
    p_sigma_sum,
    prime_recip_sum,
    zeta2_style_sum,
)
from .sieve import shared_sieve

PRIME_COUNT_AT_1E6 = 78498


# ----------------------------------------------------------------------
# shared evaluation environment (lazy so a failure stays in its group)
# ----------------------------------------------------------------------


@dataclass
class _Env:
    x: LogMagnitude
    precision: int
    tamper: str | None = None
    _cache: dict = field(default_factory=dict)

    def _memo(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def log_x(self) -> Interval:
        return self.x.log_abs

    @property
    def loglog(self) -> Interval:
        return self._memo("loglog", lambda: self.log_x.log())

    @property
    def sixth(self) -> Interval:
        return self._memo("sixth", lambda: self.log_x.rootn(6))

    @property
    def c(self) -> Interval:
        return self._memo(
            "c", lambda: params.smoothness_exponent(self.x, self.precision)
        )

    @property
    def mertens(self) -> Interval:
        return self._memo("B", lambda: mertens_constant(self.precision))

    @property
    def logp_limit(self) -> Interval:
        return self._memo("E", lambda: logp_limit_constant(self.precision))

    def cap(self, check_id: str, text: str, kind: str = "le"):
        """Exact decimal cap, shifted when this check is the tamper target."""
        return tampered_rhs(to_exact(text), self.tamper == check_id, kind)

    def adopt(self, check: LemmaCheck, kind: str = "le") -> LemmaCheck:
        """Pass through a prebuilt check, re-deciding it if tampered."""
        if self.tamper != check.check_id:
            return check
        rhs = tampered_rhs(check.rhs, True, kind)
        maker = le_check if kind == "le" else ge_check
        return maker(
            check.check_id,
            check.lhs,
            rhs,
            check.citation,
            gating=check.gating,
            note=(check.note + " " if check.note else "") + "[tampered cap]",
        )


# ----------------------------------------------------------------------
# check groups
# ----------------------------------------------------------------------


def _exact_le(check_id, lhs_q, rhs_q, citation, precision, gating=True, note=""):
    """A <= claim between exact rationals, decided without any rounding.

    Interval.exact would outward-round a non-dyadic rational, so a claim
    that holds *with equality* would read inconclusive through intervals;
    here the verdict is a pure rational comparison and the intervals are
    stored for display only.
    """
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


def _g_anchors(env: _Env) -> list:
    p = env.precision
    c0 = params.smoothness_exponent_floor(p)
    sigma0 = params.rankin_exponent(None, p)
    log_ell = params.small_cut_log(env.x, p)
    log_L = params.large_cut_log(env.x, p)
    identity = (env.c - 1) * log_L + to_exact(params.LARGE_CUT_COEFF) * env.log_x.sqrt()
    return [
        ge_check(
            "c0-floor",
            c0,
            env.cap("c0-floor", "0.99276", "ge"),
            "1 - (10^6)^(-1/6)/log(10^6) >= 0.99276",
        ),
        ge_check(
            "sigma0-floor",
            sigma0,
            env.cap("sigma0-floor", "0.9999", "ge"),
            "1 - 1/(2*26000) >= 0.9999",
        ),
        ge_check(
            "ell-floor",
            log_ell,
            env.cap("ell-floor", "10", "ge"),
            "log ell(x) = (log x)^(1/6) >= 10 from the anchor scale on",
        ),
        ge_check(
            "Lsquared-ge-y0",
            log_L * 2,
            env.cap("Lsquared-ge-y0", "26000", "ge"),
            "log L^2 = 0.3764 (log x)^(2/3) loglog x >= 26000 from the "
            "anchor scale on",
        ),
        le_check(
            "cminus1-logL-identity",
            identity.abs(),
            env.cap("cminus1-logL-identity", "1e-20"),
            "(c - 1) log L = -0.1882 (log x)^(1/2) exactly "
            "(the (log x)^(1/6) loglog x factors cancel)",
            note="zero-width algebraic identity up to rounding",
        ),
    ]


def _g_mertens(env: _Env) -> list:
    p = env.precision
    led = prime_recip_sum(10**6, precision=p)
    count = shared_sieve(10**6).count()
    eq3_lhs = env.mertens + 1 / (env.log_x**2 * 2)
    logp_lhs = env.logp_limit + mpq(1, 2 * params.ANCHOR_LOG_Y)
    pi_ok = count == PRIME_COUNT_AT_1E6
    return [
        le_check(
            "mertens-eq3-anchor",
            eq3_lhs,
            env.cap("mertens-eq3-anchor", "0.2615"),
            "B_mertens + 1/(2 (log x)^2) <= 0.2615 at the working scale, "
            "so sum_{p<=x} 1/p <= loglog x + 0.2615 there",
        ),
        le_check(
            "logp-anchor",
            logp_lhs,
            env.cap("logp-anchor", "-1.3325"),
            "E + 1/(2*26000) <= -1.3325, so sum_{p<=y} (log p)/p <= "
            "log y - 1.3325 from y = exp(26000) on",
        ),
        env.adopt(led.checks[0]),
        LemmaCheck(
            check_id="pi-count@1000000",
            verdict=HOLDS if pi_ok else FAILS,
            citation="pi(10^6) = 78498 (sieve self-check)",
            lhs=Interval.exact(count, p),
            rhs=Interval.exact(PRIME_COUNT_AT_1E6, p),
        ),
    ]


def _g_brun_titchmarsh(env: _Env) -> list:
    p = env.precision
    floor = 10**14
    value_near, audits = bt_majorant(2 * floor, floor, p)
    value_far, _ = bt_majorant(10**20, floor, p)

    def presimplified(y: int, mod: int) -> Interval:
        ratio = Interval.exact(mpq(y, mod), p)
        worst = Interval.exact(2 - mpq(1, mod), p)
        body = 1 / ratio.log() + ratio.log().log() - worst.log().log()
        return body * to_exact("2.0001") / mod

    checks = [env.adopt(c) for c in audits]
    checks.append(
        le_check(
            "bt-dominance-near",
            presimplified(2 * floor, floor),
            tampered_rhs(value_near, env.tamper == "bt-dominance-near"),
            "2.0001/p (1/log(y/p) + loglog(y/p) - loglog(2 - 1/p)) <= "
            "(4 + 3 loglog y)/p at y = 2*10^14, p = 10^14",
        )
    )
    checks.append(
        le_check(
            "bt-dominance-far",
            presimplified(10**20, floor),
            tampered_rhs(value_far, env.tamper == "bt-dominance-far"),
            "2.0001/p (1/log(y/p) + loglog(y/p) - loglog(2 - 1/p)) <= "
            "(4 + 3 loglog y)/p at y = 10^20, p = 10^14",
        )
    )
    return checks


def _g_power_sigma(env: _Env) -> list:
    p = env.precision
    half_exp = Interval.exact(mpq(1, 2), p).exp()
    step_lhs = half_exp / 2 * (1 - to_exact("1.3325") / params.ANCHOR_LOG_Y)
    zeta2 = zeta2_style_sum(precision=p, tamper=env.tamper)

    proxy_cut = 10**6
    sigma_proxy = params.rankin_exponent(proxy_cut, p)
    direct = p_sigma_sum(proxy_cut, sigma_proxy, p)
    pairs = kc_pair_sum(
        split=proxy_cut, c=sigma_proxy, over="primes", precision=p, claims=False
    )
    product_log = _neg_log1p_prime_sum(proxy_cut, sigma_proxy, p)

    checks = [
        le_check(
            "psigma-step-0.8244",
            step_lhs,
            env.cap("psigma-step-0.8244", "0.8244"),
            "exp(1/2)/2 * (1 - 1.3325/26000) <= 0.8244 "
            "(cap on sum (p^-s - 1/p) at s = 1 - 1/(2 log y))",
        ),
        _exact_le(
            "psigma-reconstruction",
            to_exact("0.8244") + to_exact("0.2615"),
            env.cap("psigma-reconstruction", "1.0859"),
            "0.8244 + 0.2615 <= 1.0859 (exact decimals; reconstructs the "
            "stated constant from the proof's own pieces)",
            p,
            note="holds with equality",
        ),
        le_check(
            "psigma-display-audit",
            Interval.exact(1 + to_exact("0.2615"), p),
            env.cap("psigma-display-audit", "1.0859"),
            "as-printed middle step: 1 + 0.2615 <= 1.0859",
            gating=False,
            note="expected FAIL: the printed chain inserts '1 +' where the "
            "proof's own 0.8244 belongs; 0.8244 + 0.2615 = 1.0859 is the "
            "reconstruction that actually supports the constant",
        ),
        le_check(
            "bigproduct-constant",
            Interval.exact(to_exact("1.0859") + to_exact("0.7734"), p).exp(),
            env.cap("bigproduct-constant", "6.4193"),
            "exp(1.0859 + 0.7734) <= 6.4193",
        ),
        le_check(
            "bigproduct-statement",
            Interval.exact(to_exact("6.4193"), p),
            env.cap("bigproduct-statement", "7.6515"),
            "6.4193 <= 7.6515 (the stated product constant is coarser than "
            "the one its own proof delivers; downstream uses 6.4193)",
        ),
        le_check(
            "bigproduct-structure@1e6",
            product_log,
            tampered_rhs(
                direct.total + pairs.partial,
                env.tamper == "bigproduct-structure@1e6",
            ),
            "sum_{p<=10^6} -log(1 - p^-s) <= sum p^-s + sum 1/(p^s (p^s - 1)) "
            "at s = 1 - 1/(2 log 10^6) (desk-scale audit of the product-to-"
            "exponential step)",
        ),
    ]
    checks.extend(env.adopt(c) for c in zeta2.checks)
    return checks


def _g_power_pairs(env: _Env) -> list:
    p = env.precision
    ints = kc_pair_sum(precision=p, tamper=env.tamper)
    prs = kc_pair_sum(over="primes", precision=p, tamper=env.tamper)
    million_pow_c = (env.c * Interval.exact(10**6, p).log()).exp()
    checks = [env.adopt(c) for c in ints.checks]
    checks.extend(env.adopt(c) for c in prs.checks)
    checks.append(
        le_check(
            "kc-prime-tail-cap",
            prs.tail,
            env.cap("kc-prime-tail-cap", "0.0000013"),
            "tail of sum_{prime k >= 10^6} 1/(k^c0 (k^c0 - 1)) <= 0.0000013 "
            "(covered by the integer-index integral majorant)",
        )
    )
    checks.append(
        ge_check(
            "kc-factor-floor@1e6",
            million_pow_c,
            env.cap("kc-factor-floor@1e6", "500001", "ge"),
            "(10^6)^c >= 500001, i.e. k^c <= 1.000002 (k^c - 1) from "
            "k = 10^6 on",
        )
    )
    return checks


def _g_ell_fourth(env: _Env) -> list:
    p = env.precision
    ll = env.loglog
    coeff = (4 / ll).exp()
    log_ell4 = env.sixth * 4
    rs_slack = 1 / (log_ell4**2 * 2)
    logp_cap = log_ell4 + env.logp_limit + 1 / (log_ell4 * 2)
    step = coeff * (1 - env.c) * logp_cap
    recip_cap = log_ell4.log() + env.mertens + rs_slack
    rhs_statement = ll / 6 + to_exact("2.0346")
    return [
        ge_check(
            "ellfour-pc-floor",
            (-(4 / ll)).exp(),
            env.cap("ellfour-pc-floor", "0.7486", "ge"),
            "exp(-4/loglog x) >= 0.7486, so p^c >= 0.7486 p for p <= ell^4",
        ),
        le_check(
            "ellfour-coeff-printed",
            coeff,
            env.cap("ellfour-coeff-printed", "1.3358"),
            "mean-value coefficient: exp(4/loglog x) <= 1.3358",
            note="clears by ~9.5e-7 at the anchor scale; valid as a direct "
            "bound even though the printed 0.7486-floor route does not "
            "deliver it (see ellfour-coeff-vs-floor-printed)",
        ),
        _exact_le(
            "ellfour-coeff-vs-floor-printed",
            1 / to_exact("0.7486"),
            env.cap("ellfour-coeff-vs-floor-printed", "1.3358"),
            "as-printed derivation route: 1/0.7486 <= 1.3358",
            p,
            gating=False,
            note="expected FAIL: 1/0.7486 = 1.33582687... > 1.3358, so the "
            "printed floor does not justify the printed coefficient; the "
            "direct bound exp(4/loglog x) <= 1.3358 does hold (previous "
            "check) and is what the step cap consumes",
        ),
        le_check(
            "ellfour-step-cap",
            step,
            env.cap("ellfour-step-cap", "0.3868"),
            "exp(4/loglog x) (1-c) (log ell^4 + E + 1/(2 log ell^4)) <= "
            "0.3868 (corrected-coefficient cap on sum (p^-c - 1/p), "
            "p <= ell^4)",
        ),
        le_check(
            "ellfour-chain-printed",
            to_exact("5.3432") / ll,
            env.cap("ellfour-chain-printed", "0.3868"),
            "5.3432/loglog x <= 0.3868 at the working scale",
        ),
        le_check(
            "eq3-at-ellfour-printed",
            env.mertens + rs_slack,
            env.cap("eq3-at-ellfour-printed", "0.2615"),
            "as-printed reuse of the 0.2615 cap at y = ell^4: "
            "B_mertens + 1/(2 (log ell^4)^2) <= 0.2615",
            gating=False,
            note="expected FAIL at the anchor scale (ell^4 = e^40 sits far "
            "below the scale where 0.2615 absorbs the 1/(2 log^2) term; the "
            "corrected constant 0.2619 is used by the rigorous route and "
            "the 2.0346 total still clears)",
        ),
        le_check(
            "ellfour-statement-rigorous",
            recip_cap + step,
            tampered_rhs(
                rhs_statement, env.tamper == "ellfour-statement-rigorous"
            ),
            "corrected route: [loglog ell^4 + B + 1/(2 log^2 ell^4)] + "
            "step cap <= (1/6) loglog x + 2.0346",
        ),
        le_check(
            "ellfour-statement-printed-route",
            log_ell4.log() + to_exact("0.3868") + to_exact("0.2615"),
            tampered_rhs(
                rhs_statement, env.tamper == "ellfour-statement-printed-route"
            ),
            "printed route: loglog ell^4 + 0.3868 + 0.2615 <= "
            "(1/6) loglog x + 2.0346",
            note="clears by ~6e-6 at the anchor scale; its two inputs lean "
            "on caps valid only at larger scales (see the informational "
            "audits), while the corrected route clears by ~1.3e-2",
        ),
    ]


def _g_nchain(env: _Env) -> list:
    p = env.precision
    probeq_lhs = Interval.exact(to_exact("2.8223"), p).exp() + 2
    probeq_rhs = tampered_rhs(
        to_exact(params.LARGE_CUT_COEFF) * env.log_x.rootn(3),
        env.tamper == "probeq",
    )
    margin = probeq_rhs - probeq_lhs if isinstance(probeq_rhs, Interval) else None
    if margin is None:
        margin = Interval.exact(probeq_rhs, p) - probeq_lhs
    if margin.certainly_gt(0):
        margin_verdict = HOLDS
    elif margin.certainly_le(0):
        margin_verdict = FAILS
    else:
        margin_verdict = INCONCLUSIVE

    pi_sq_6 = _pi_squared_over_six(p)
    small = sum(mpq(1, n * n) for n in range(1, 10))
    eqextra_lhs = pi_sq_6 - small
    return [
        _exact_le(
            "nchain-exponent-sum",
            to_exact("0.7877") + to_exact("2.0346"),
            env.cap("nchain-exponent-sum", "2.8223"),
            "0.7877 + 2.0346 <= 2.8223 (exact decimals)",
            p,
            note="holds with equality",
        ),
        le_check(
            "probeq",
            probeq_lhs,
            probeq_rhs,
            "2 + exp(2.8223) <= 0.1882 (log x)^(1/3) at the working scale",
        ),
        LemmaCheck(
            check_id="probeq-margin-positive",
            verdict=margin_verdict,
            citation="0.1882 (log x)^(1/3) - (2 + exp(2.8223)) is enclosed "
            "strictly above zero",
            lhs=margin,
            rhs=Interval.exact(0, p),
            note="margin ~ 0.0045 at the anchor scale",
        ),
        le_check(
            "eqextra-sample@10",
            eqextra_lhs,
            tampered_rhs(mpq(1, 9), env.tamper == "eqextra-sample@10"),
            "sum_{n>=10} 1/n^2 = pi^2/6 - sum_{n<10} 1/n^2 <= 1/9 "
            "(spot check of sum_{n>=k} 1/n^2 < 1/(k-1))",
        ),
    ]


def _neg_log1p_prime_sum(cutoff: int, sigma: Interval, precision: int) -> Interval:
    """Enclosure of sum_{p <= cutoff} -log(1 - p^(-sigma))."""
    dn, up = _dn(precision), _up(precision)
    zero = mpfr(0)
    neg_lo = dn.sub(zero, sigma.hi)
    neg_hi = up.sub(zero, sigma.lo)
    total_lo, total_hi = zero, zero
    for p in shared_sieve(cutoff).primes(2, cutoff).tolist():
        lg_dn, lg_up = dn.log(p), up.log(p)
        u_lo = dn.exp(dn.mul(neg_lo, lg_up))
        u_hi = up.exp(up.mul(neg_hi, lg_dn))
        term_lo = dn.sub(zero, up.log1p(dn.sub(zero, u_lo)))
        term_hi = up.sub(zero, dn.log1p(up.sub(zero, u_hi)))
        total_lo = dn.add(total_lo, term_lo)
        total_hi = up.add(total_hi, term_hi)
    return Interval(total_lo, total_hi, precision)


def _pi_squared_over_six(precision: int) -> Interval:
    pi = Interval(_dn(precision).const_pi(), _up(precision).const_pi(), precision)
    return pi**2 / 6


# ----------------------------------------------------------------------
# suite assembly
# ----------------------------------------------------------------------

_GROUPS = (
    (
        "anchors",
        ("c0-floor", "sigma0-floor", "ell-floor", "Lsquared-ge-y0",
         "cminus1-logL-identity"),
        _g_anchors,
    ),
    (
        "mertens",
        ("mertens-eq3-anchor", "logp-anchor", "prime-recip-cap@1000000",
         "pi-count@1000000"),
        _g_mertens,
    ),
    (
        "brun-titchmarsh",
        ("bt-ratio-cap", "bt-log-margin-cap", "bt-coeff-product",
         "bt-coeff-slope", "bt-loglog-positive", "bt-dominance-near",
         "bt-dominance-far"),
        _g_brun_titchmarsh,
    ),
    (
        "power-sigma",
        ("psigma-step-0.8244", "psigma-reconstruction", "psigma-display-audit",
         "bigproduct-constant", "bigproduct-statement",
         "bigproduct-structure@1e6", "zeta2-partial-cap", "zeta2-tail-printed",
         "zeta2-total-cap"),
        _g_power_sigma,
    ),
    (
        "power-pairs",
        ("kc-int-partial-cap", "kc-int-tail-cap", "kc-int-total-cap",
         "kc-prime-partial-cap", "kc-prime-total-cap", "kc-prime-tail-cap",
         "kc-factor-floor@1e6"),
        _g_power_pairs,
    ),
    (
        "ell-fourth",
        ("ellfour-pc-floor", "ellfour-coeff-printed",
         "ellfour-coeff-vs-floor-printed", "ellfour-step-cap",
         "ellfour-chain-printed", "eq3-at-ellfour-printed",
         "ellfour-statement-rigorous", "ellfour-statement-printed-route"),
        _g_ell_fourth,
    ),
    (
        "n-chain",
        ("nchain-exponent-sum", "probeq", "probeq-margin-positive",
         "eqextra-sample@10"),
        _g_nchain,
    ),
)

SUITE_IDS = tuple(sorted(cid for _, ids, _ in _GROUPS for cid in ids))

EXPECTED_INFORMATIONAL_FAILS = (
    "ellfour-coeff-vs-floor-printed",
    "eq3-at-ellfour-printed",
    "psigma-display-audit",
    "zeta2-tail-printed",
)


def _run_group(group, env: _Env) -> list:
    name, ids, fn = group
    try:
        produced = fn(env)
    except AmiboundsError as exc:
        return [
            LemmaCheck(
                check_id=cid,
                verdict=INCONCLUSIVE,
                citation="group '%s' could not be evaluated" % name,
                lhs=Interval.exact(0, env.precision),
                rhs=Interval.exact(0, env.precision),
                note="evaluation error: %s" % exc,
            )
            for cid in ids
        ]
    got = {c.check_id for c in produced}
    if got != set(ids):
        raise AmiboundsError(
            "group '%s' produced ids %s, declared %s" % (name, got, set(ids))
        )
    return produced


def lemma_suite(
    x: LogMagnitude | int | None = None,
    precision: int = DEFAULT_PRECISION,
    tamper: str | None = None,
    parallel: bool = True,
) -> tuple:
    """Evaluate the whole displayed-inequality suite at scale x."""
    check_precision(precision)
    if x is None:
        x = params.anchor_x(precision)
    elif not isinstance(x, LogMagnitude):
        x = LogMagnitude.from_exact(x, precision)
    if tamper is not None and tamper not in SUITE_IDS:
        raise DomainError("unknown tamper target %r" % tamper)

    below = x.sign <= 0 or x.log_abs.certainly_lt(params.ANCHOR_LOG_X)
    if below:
        ooid = [
            out_of_domain(
                cid,
                "suite is only asserted from exp(10^6) on",
                note="requested scale is certainly below the anchor",
            )
            for cid in SUITE_IDS
        ]
        return tuple(sorted(ooid, key=lambda c: c.check_id))

    env = _Env(x=x, precision=precision, tamper=tamper)
    if parallel:
        with concurrent.futures.ThreadPoolExecutor(
            max_workers=min(4, len(_GROUPS))
        ) as pool:
            chunks = list(pool.map(lambda g: _run_group(g, env), _GROUPS))
    else:
        chunks = [_run_group(g, env) for g in _GROUPS]
    checks = [c for chunk in chunks for c in chunk]
    checks.sort(key=lambda c: c.check_id)
    return tuple(checks)
