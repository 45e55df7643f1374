"""Exception types shared across the package.

Three failure families, so callers (and the CLI exit-code logic) can tell
"the mathematics does not apply here" apart from "the machine cannot do this"
and "the configuration is malformed".
"""


class AmiboundsError(Exception):
    """Base class for every error raised deliberately by this package."""


class DomainError(AmiboundsError):
    """An argument is outside the mathematical domain of the operation.

    Examples: log of an interval touching zero, dividing by an interval that
    straddles zero, evaluating anchored inequalities below the anchor point,
    converting a log-scale magnitude whose exponent exceeds the safe window.
    """


class ResourceError(AmiboundsError):
    """The request is mathematically fine but too large for this machine.

    Examples: sieving past the supported limit, pointwise factoring beyond
    10**18, a smooth-count recursion whose memo table would not fit.
    """


class ConfigError(AmiboundsError):
    """A run configuration (file or flags) is malformed or inconsistent."""
