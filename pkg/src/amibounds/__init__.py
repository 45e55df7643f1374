"""Rigorous reciprocal-sum bounds for amicable numbers.

Everything user-facing is re-exported here; submodules stay importable for
the curious.
"""

from .aliquot import (
    AmicablePair,
    EnumerationResult,
    Extrapolation,
    PartialSumRow,
    PartialSumTable,
    conjecture_extrapolate,
    enumerate_amicable,
    is_amicable_pair,
    partial_sums,
    s_point,
    sigma_proper_range,
)
from .bounds import (
    ASSEMBLY_CHECK_IDS,
    LEDGER_CHECK_IDS,
    TAIL_CHECK_IDS,
    BoundReport,
    ConstantLedger,
    MiddleBound,
    TailBound,
    assemble,
    ax_bound,
    constant_ledger,
    middle_bound,
    tail_bound,
)
from .checks import (
    FAILS,
    HOLDS,
    INCONCLUSIVE,
    OUT_OF_DOMAIN,
    LemmaCheck,
    gating_ok,
)
from .errors import AmiboundsError, ConfigError, DomainError, ResourceError
from .interval import (
    CONFIRM_PRECISION,
    DEFAULT_PRECISION,
    Interval,
    LogMagnitude,
    directed_decimal,
    fixed_decimal,
    to_exact,
)
from .lemmas import SUITE_IDS, lemma_suite
from .prime_sums import (
    SumLedger,
    kc_pair_sum,
    logp_over_p_sum,
    p_sigma_sum,
    prime_recip_sum,
    residue_recip_sum,
    zeta2_style_sum,
)
from .sieve import PrimeSieve, shared_sieve
from .smooth import psi_exact, rankin_bound

__version__ = "0.1.0"

__all__ = [
    "AmiboundsError",
    "ConfigError",
    "DomainError",
    "ResourceError",
    "Interval",
    "LogMagnitude",
    "DEFAULT_PRECISION",
    "CONFIRM_PRECISION",
    "directed_decimal",
    "fixed_decimal",
    "to_exact",
    "HOLDS",
    "FAILS",
    "INCONCLUSIVE",
    "OUT_OF_DOMAIN",
    "LemmaCheck",
    "gating_ok",
    "PrimeSieve",
    "shared_sieve",
    "SumLedger",
    "prime_recip_sum",
    "logp_over_p_sum",
    "p_sigma_sum",
    "kc_pair_sum",
    "zeta2_style_sum",
    "residue_recip_sum",
    "psi_exact",
    "rankin_bound",
    "AmicablePair",
    "EnumerationResult",
    "PartialSumRow",
    "PartialSumTable",
    "Extrapolation",
    "enumerate_amicable",
    "is_amicable_pair",
    "s_point",
    "sigma_proper_range",
    "partial_sums",
    "conjecture_extrapolate",
    "SUITE_IDS",
    "lemma_suite",
    "LEDGER_CHECK_IDS",
    "TAIL_CHECK_IDS",
    "ASSEMBLY_CHECK_IDS",
    "BoundReport",
    "ConstantLedger",
    "MiddleBound",
    "TailBound",
    "constant_ledger",
    "ax_bound",
    "tail_bound",
    "middle_bound",
    "assemble",
]
