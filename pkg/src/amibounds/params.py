"""The anchored parameter stack.

Everything downstream is phrased in terms of a handful of slowly-varying
functions of the scale ``x`` (all certified as intervals / log-magnitudes):

* ``smoothness_exponent(x)`` — ``c(x) = 1 - 1/((log x)^(1/6) * log log x)``,
  the exponent used to declare "p**c(x) is large compared to p's friends".
* ``rankin_exponent(y)`` — ``sigma(y) = 1 - 1/(2 log y)``, the weight
  exponent for Rankin-style smooth-count bounds at smoothness level y.
* ``small_cut(x)`` — ``exp((log x)^(1/6))``, the lower smoothness boundary.
* ``large_cut(x)`` — ``exp(0.1882 * (log x)^(2/3) * log log x)``, the upper
  smoothness boundary.
* ``pair_range(x)`` — ``2 * x * log log x``, past which the partner of an
  integer below x cannot reach.

The anchor scale is ``x0 = exp(10**6)`` (with companion ``y0 = exp(26000)``);
the anchored inequalities downstream are only claimed for ``x >= x0``, so
evaluation below the anchor raises :class:`DomainError` rather than returning
a number that certifies nothing.
"""

from __future__ import annotations

from .errors import DomainError
from .interval import DEFAULT_PRECISION, Interval, LogMagnitude, check_precision

ANCHOR_LOG_X = 10**6
ANCHOR_LOG_Y = 26000
LARGE_CUT_COEFF = "0.1882"

_PARAM_NAMES = ("c", "c0", "sigma", "ell", "L", "z", "x0", "y0")


def anchor_x(precision: int = DEFAULT_PRECISION) -> LogMagnitude:
    """The anchor scale x0 = exp(10**6)."""
    return LogMagnitude.from_log(Interval.exact(ANCHOR_LOG_X, check_precision(precision)))


def anchor_y(precision: int = DEFAULT_PRECISION) -> LogMagnitude:
    """The companion smoothness anchor y0 = exp(26000)."""
    return LogMagnitude.from_log(Interval.exact(ANCHOR_LOG_Y, check_precision(precision)))


def _as_magnitude(x, precision: int) -> LogMagnitude:
    if isinstance(x, LogMagnitude):
        if x.sign <= 0:
            raise DomainError("scale must be positive")
        return x
    if isinstance(x, Interval):
        return LogMagnitude.from_interval(x)
    if isinstance(x, int) and not isinstance(x, bool):
        if x < 2:
            raise DomainError("integer scale must be >= 2")
        return LogMagnitude.from_exact(x, precision)
    raise DomainError("scale must be a LogMagnitude, Interval or int, got %r" % (x,))


def _log_of(x, precision: int) -> Interval:
    return _as_magnitude(x, precision).log_abs.with_precision(precision)


def _require_anchored(log_x: Interval) -> Interval:
    if not log_x.certainly_ge(ANCHOR_LOG_X):
        raise DomainError(
            "anchored parameters are only certified for log x >= %d" % ANCHOR_LOG_X
        )
    return log_x


def smoothness_exponent(x=None, precision: int = DEFAULT_PRECISION) -> Interval:
    """c(x) = 1 - 1/((log x)^(1/6) * log log x), for x >= x0."""
    check_precision(precision)
    if x is None:
        x = anchor_x(precision)
    log_x = _require_anchored(_log_of(x, precision))
    loglog = log_x.log()
    one = Interval.exact(1, precision)
    return one - one / (log_x.rootn(6) * loglog)


def smoothness_exponent_floor(precision: int = DEFAULT_PRECISION) -> Interval:
    """c0 = c(x0) = 1 - 1/(10 log 10**6); the smallest value c ever takes."""
    return smoothness_exponent(None, precision)


def rankin_exponent(y=None, precision: int = DEFAULT_PRECISION) -> Interval:
    """sigma(y) = 1 - 1/(2 log y), for y > 1."""
    check_precision(precision)
    if y is None:
        y = anchor_y(precision)
    log_y = _log_of(y, precision)
    if not log_y.certainly_gt(0):
        raise DomainError("rankin exponent needs y > 1")
    one = Interval.exact(1, precision)
    return one - one / (log_y * 2)


def small_cut_log(x=None, precision: int = DEFAULT_PRECISION) -> Interval:
    """log ell(x) = (log x)^(1/6)."""
    check_precision(precision)
    if x is None:
        x = anchor_x(precision)
    return _require_anchored(_log_of(x, precision)).rootn(6)


def small_cut(x=None, precision: int = DEFAULT_PRECISION) -> LogMagnitude:
    """ell(x) = exp((log x)^(1/6)), the lower smoothness boundary."""
    return LogMagnitude.from_log(small_cut_log(x, precision))


def large_cut_log(x=None, precision: int = DEFAULT_PRECISION) -> Interval:
    """log L(x) = 0.1882 * (log x)^(2/3) * log log x."""
    check_precision(precision)
    if x is None:
        x = anchor_x(precision)
    log_x = _require_anchored(_log_of(x, precision))
    two_thirds_power = (log_x**2).rootn(3)
    return Interval.from_decimal(LARGE_CUT_COEFF, precision) * two_thirds_power * log_x.log()


def large_cut(x=None, precision: int = DEFAULT_PRECISION) -> LogMagnitude:
    """L(x) = exp(0.1882 (log x)^(2/3) log log x), the upper smoothness boundary."""
    return LogMagnitude.from_log(large_cut_log(x, precision))


def pair_range(x=None, precision: int = DEFAULT_PRECISION) -> LogMagnitude:
    """z(x) = 2 x log log x: partners of integers below x live below z(x)."""
    check_precision(precision)
    if x is None:
        x = anchor_x(precision)
    log_x = _require_anchored(_log_of(x, precision))
    loglog = log_x.log()
    log_z = Interval.exact(2, precision).log() + log_x + loglog.log()
    return LogMagnitude.from_log(log_z)


def eval_param(name: str, x=None, precision: int = DEFAULT_PRECISION):
    """Dispatch by short parameter name; see module docstring for meanings.

    ``c``/``c0``/``sigma`` return :class:`Interval`; ``ell``/``L``/``z`` and
    the anchors ``x0``/``y0`` return :class:`LogMagnitude` (their values are
    far beyond fixed-exponent range).
    """
    if name not in _PARAM_NAMES:
        raise DomainError("unknown parameter %r; expected one of %s" % (name, _PARAM_NAMES))
    if name == "c":
        return smoothness_exponent(x, precision)
    if name == "c0":
        if x is not None:
            raise DomainError("c0 is a constant; it takes no scale argument")
        return smoothness_exponent_floor(precision)
    if name == "sigma":
        return rankin_exponent(x, precision)
    if name == "ell":
        return small_cut(x, precision)
    if name == "L":
        return large_cut(x, precision)
    if name == "z":
        return pair_range(x, precision)
    if x is not None:
        raise DomainError("%s is a constant; it takes no scale argument" % name)
    return anchor_x(precision) if name == "x0" else anchor_y(precision)
