"""Outward-rounded interval arithmetic on MPFR, plus a log-scale wrapper.

Every quantity this package certifies is carried as an :class:`Interval`:
a pair of MPFR floats ``lo <= hi`` such that the exact mathematical value is
guaranteed to lie in ``[lo, hi]``.  Lower endpoints are always computed with
rounding toward -inf and upper endpoints with rounding toward +inf, so the
guarantee survives arbitrary composition of the operations defined here.

Ground rules enforced by this module:

* Decimal constants enter through exact rational parsing
  (``Interval.from_decimal("0.2615")`` goes through ``decimal.Decimal`` and
  ``fractions.Fraction``); binary ``float`` literals are rejected outright so
  no silently-unrepresentable constant can sneak in.
* Endpoint comparisons against claimed bounds are performed in exact rational
  arithmetic (``mpfr`` converts to ``mpq`` losslessly), never in floating
  point.
* Quantities too large or too small to represent comfortably as numbers
  (think ``exp(10**6)``) are carried by :class:`LogMagnitude`: an exact sign
  plus an interval enclosing the natural log of the absolute value.
  Conversion back to a plain interval is refused outside ``|log| <= 1000``;
  refusing loudly beats saturating silently.
"""

from __future__ import annotations

import decimal
import fractions
import functools
import numbers

import gmpy2
from gmpy2 import mpfr, mpq

from .errors import ConfigError, DomainError

DEFAULT_PRECISION = 128
CONFIRM_PRECISION = 256
_MIN_PRECISION = 2
_MAX_PRECISION = 1 << 20

_ZERO = mpfr(0)


@functools.lru_cache(maxsize=None)
def _dn(precision: int):
    """Context rounding toward -inf at the given precision."""
    return gmpy2.context(
        precision=precision,
        round=gmpy2.RoundDown,
        trap_divzero=True,
        trap_invalid=True,
        trap_overflow=True,
    )


@functools.lru_cache(maxsize=None)
def _up(precision: int):
    """Context rounding toward +inf at the given precision."""
    return gmpy2.context(
        precision=precision,
        round=gmpy2.RoundUp,
        trap_divzero=True,
        trap_invalid=True,
        trap_overflow=True,
    )


def check_precision(precision: int) -> int:
    if not isinstance(precision, int) or isinstance(precision, bool):
        raise ConfigError("precision must be an int, got %r" % (precision,))
    if not (_MIN_PRECISION <= precision <= _MAX_PRECISION):
        raise ConfigError(
            "precision %d outside supported range [%d, %d]"
            % (precision, _MIN_PRECISION, _MAX_PRECISION)
        )
    return precision


def to_exact(value) -> mpq:
    """Convert a value to an exact rational, refusing binary floats.

    Accepts int, Fraction, mpq, mpz, mpfr (lossless) and decimal strings.
    Floats are rejected: a float literal has already lost the decimal value
    it was written as, and rigor starts with exact constants.
    """
    if isinstance(value, bool):
        raise DomainError("booleans are not numbers here")
    if isinstance(value, float):
        raise DomainError(
            "refusing binary float %r; pass a decimal string or Fraction" % (value,)
        )
    if isinstance(value, (int, type(gmpy2.mpz(0)))):
        return mpq(value)
    if isinstance(value, type(mpq(0))):
        return value
    if isinstance(value, fractions.Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, type(_ZERO)):
        if not gmpy2.is_finite(value):
            raise DomainError("non-finite mpfr has no exact rational value")
        return mpq(value)
    if isinstance(value, str):
        try:
            dec = decimal.Decimal(value)
        except decimal.InvalidOperation as exc:
            raise DomainError("not a decimal numeral: %r" % (value,)) from exc
        if not dec.is_finite():
            raise DomainError("not a finite decimal: %r" % (value,))
        frac = fractions.Fraction(dec)
        return mpq(frac.numerator, frac.denominator)
    raise DomainError("cannot convert %r to an exact rational" % (value,))


def _q_down(q, precision: int):
    return _dn(precision).add(_ZERO, q)


def _q_up(q, precision: int):
    return _up(precision).add(_ZERO, q)


class Interval:
    """A closed interval with outward-rounded MPFR endpoints."""

    __slots__ = ("lo", "hi", "precision")

    def __init__(self, lo, hi, precision: int):
        # Consistency, not rounding: endpoints are expected to be mpfr values
        # already rounded in the right directions by the constructor helpers.
        if not (gmpy2.is_finite(lo) and gmpy2.is_finite(hi)):
            raise DomainError("interval endpoints must be finite")
        if not lo <= hi:
            raise DomainError("empty interval: lo=%s hi=%s" % (lo, hi))
        self.lo = lo
        self.hi = hi
        self.precision = precision

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------

    @classmethod
    def exact(cls, value, precision: int = DEFAULT_PRECISION) -> "Interval":
        """Tightest enclosure of an exact value (int/Fraction/mpq/decimal str).

        Zero-width whenever the value is representable at the precision
        (all integers below 2**precision, all dyadic rationals, ...).
        """
        check_precision(precision)
        q = to_exact(value)
        return cls(_q_down(q, precision), _q_up(q, precision), precision)

    @classmethod
    def from_decimal(cls, text: str, precision: int = DEFAULT_PRECISION) -> "Interval":
        """Enclosure of the exact value of a decimal numeral."""
        if not isinstance(text, str):
            raise DomainError("from_decimal expects a string, got %r" % (text,))
        return cls.exact(text, precision)

    @classmethod
    def from_decimal_bracket(
        cls, lo_text: str, hi_text: str, precision: int = DEFAULT_PRECISION
    ) -> "Interval":
        """Enclosure of a constant known to lie between two decimal numerals.

        This is how literature constants with finitely many published digits
        enter the pipeline: the caller supplies the truncation and the
        truncation + 1ulp(decimal) strings.
        """
        check_precision(precision)
        lo_q = to_exact(lo_text)
        hi_q = to_exact(hi_text)
        if not lo_q <= hi_q:
            raise DomainError("bracket is empty: %s > %s" % (lo_text, hi_text))
        return cls(_q_down(lo_q, precision), _q_up(hi_q, precision), precision)

    @classmethod
    def from_endpoints(cls, lo, hi, precision: int = DEFAULT_PRECISION) -> "Interval":
        """Enclosure of ``[lo, hi]`` given as exact values."""
        check_precision(precision)
        lo_q = to_exact(lo)
        hi_q = to_exact(hi)
        if not lo_q <= hi_q:
            raise DomainError("empty interval: %s > %s" % (lo, hi))
        return cls(_q_down(lo_q, precision), _q_up(hi_q, precision), precision)

    @classmethod
    def hull(cls, items) -> "Interval":
        """Smallest interval containing every interval in ``items``."""
        items = list(items)
        if not items:
            raise DomainError("hull of nothing")
        precision = max(iv.precision for iv in items)
        lo = min((iv.lo for iv in items))
        hi = max((iv.hi for iv in items))
        return cls(mpfr(lo, precision), mpfr(hi, precision), precision)

    def with_precision(self, precision: int) -> "Interval":
        """Re-round outward to another working precision."""
        check_precision(precision)
        return Interval(
            _dn(precision).add(_ZERO, self.lo),
            _up(precision).add(_ZERO, self.hi),
            precision,
        )

    # ------------------------------------------------------------------
    # exact views of the endpoints
    # ------------------------------------------------------------------

    @property
    def lo_q(self) -> mpq:
        return mpq(self.lo)

    @property
    def hi_q(self) -> mpq:
        return mpq(self.hi)

    def width_q(self) -> mpq:
        """Exact width hi - lo as a rational."""
        return mpq(self.hi) - mpq(self.lo)

    def mid_q(self) -> mpq:
        """Exact midpoint; display/heuristic use only."""
        return (mpq(self.hi) + mpq(self.lo)) / 2

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    def _binary_precision(self, other) -> int:
        if isinstance(other, Interval):
            return max(self.precision, other.precision)
        return self.precision

    def __add__(self, other):
        p = self._binary_precision(other)
        dn, up = _dn(p), _up(p)
        if isinstance(other, Interval):
            return Interval(dn.add(self.lo, other.lo), up.add(self.hi, other.hi), p)
        q = to_exact(other)
        return Interval(dn.add(self.lo, q), up.add(self.hi, q), p)

    __radd__ = __add__

    def __sub__(self, other):
        p = self._binary_precision(other)
        dn, up = _dn(p), _up(p)
        if isinstance(other, Interval):
            return Interval(dn.sub(self.lo, other.hi), up.sub(self.hi, other.lo), p)
        q = to_exact(other)
        return Interval(dn.sub(self.lo, q), up.sub(self.hi, q), p)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        # gmpy2 routes even unary minus through the *global* context, which
        # would silently re-round endpoints; negate through our contexts.
        p = self.precision
        return Interval(_dn(p).sub(_ZERO, self.hi), _up(p).sub(_ZERO, self.lo), p)

    def __mul__(self, other):
        p = self._binary_precision(other)
        dn, up = _dn(p), _up(p)
        if isinstance(other, Interval):
            pairs = (
                (self.lo, other.lo),
                (self.lo, other.hi),
                (self.hi, other.lo),
                (self.hi, other.hi),
            )
            lo = min(dn.mul(a, b) for a, b in pairs)
            hi = max(up.mul(a, b) for a, b in pairs)
            return Interval(lo, hi, p)
        q = to_exact(other)
        lo = min(dn.mul(self.lo, q), dn.mul(self.hi, q))
        hi = max(up.mul(self.lo, q), up.mul(self.hi, q))
        return Interval(lo, hi, p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        p = self._binary_precision(other)
        dn, up = _dn(p), _up(p)
        if isinstance(other, Interval):
            if other.lo <= 0 <= other.hi:
                raise DomainError("division by an interval containing zero")
            pairs = (
                (self.lo, other.lo),
                (self.lo, other.hi),
                (self.hi, other.lo),
                (self.hi, other.hi),
            )
            lo = min(dn.div(a, b) for a, b in pairs)
            hi = max(up.div(a, b) for a, b in pairs)
            return Interval(lo, hi, p)
        q = to_exact(other)
        if q == 0:
            raise DomainError("division by zero")
        lo = min(dn.div(self.lo, q), dn.div(self.hi, q))
        hi = max(up.div(self.lo, q), up.div(self.hi, q))
        return Interval(lo, hi, p)

    def __rtruediv__(self, other):
        return Interval.exact(other, self.precision) / self

    def reciprocal(self) -> "Interval":
        return 1 / self

    def __pow__(self, exponent):
        p = self._binary_precision(exponent)
        if isinstance(exponent, Interval):
            if self.lo <= 0:
                raise DomainError("interval exponent needs a positive base")
            return (exponent * self.log()).exp()
        q = to_exact(exponent)
        if q.denominator != 1:
            if self.lo <= 0:
                raise DomainError("rational exponent needs a positive base")
            return (Interval.exact(q, p) * self.log()).exp()
        e = int(q)
        if e == 0:
            return Interval.exact(1, p)
        if e < 0:
            return self.__pow__(-e).reciprocal()
        dn, up = _dn(p), _up(p)
        lo = min(dn.pow(self.lo, e), dn.pow(self.hi, e))
        hi = max(up.pow(self.lo, e), up.pow(self.hi, e))
        if e % 2 == 0 and self.lo < 0 < self.hi:
            lo = mpfr(0)
        return Interval(lo, hi, p)

    def abs(self) -> "Interval":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        p = self.precision
        lo_flipped = _up(p).sub(_ZERO, self.lo)
        return Interval(mpfr(0), max(lo_flipped, self.hi), p)

    # ------------------------------------------------------------------
    # elementary functions (monotone, so endpoint evaluation is exactly
    # the right thing)
    # ------------------------------------------------------------------

    def exp(self) -> "Interval":
        p = self.precision
        return Interval(_dn(p).exp(self.lo), _up(p).exp(self.hi), p)

    def log(self) -> "Interval":
        if self.lo <= 0:
            raise DomainError("log needs a strictly positive interval")
        p = self.precision
        return Interval(_dn(p).log(self.lo), _up(p).log(self.hi), p)

    def log1p(self) -> "Interval":
        if self.lo <= -1:
            raise DomainError("log1p needs an interval above -1")
        p = self.precision
        return Interval(_dn(p).log1p(self.lo), _up(p).log1p(self.hi), p)

    def sqrt(self) -> "Interval":
        if self.lo < 0:
            raise DomainError("sqrt needs a nonnegative interval")
        p = self.precision
        return Interval(_dn(p).sqrt(self.lo), _up(p).sqrt(self.hi), p)

    def rootn(self, n: int) -> "Interval":
        if not isinstance(n, int) or n < 1:
            raise DomainError("rootn needs a positive integer root index")
        if self.lo < 0:
            raise DomainError("rootn needs a nonnegative interval")
        p = self.precision
        return Interval(_dn(p).rootn(self.lo, n), _up(p).rootn(self.hi, n), p)

    # ------------------------------------------------------------------
    # set operations and comparisons (all exact)
    # ------------------------------------------------------------------

    def contains(self, value) -> bool:
        q = to_exact(value)
        return mpq(self.lo) <= q <= mpq(self.hi)

    def __contains__(self, value) -> bool:
        return self.contains(value)

    def is_subset_of(self, other: "Interval") -> bool:
        return mpq(other.lo) <= mpq(self.lo) and mpq(self.hi) <= mpq(other.hi)

    def intersect(self, other: "Interval") -> "Interval":
        p = max(self.precision, other.precision)
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if not lo <= hi:
            raise DomainError("intervals do not intersect")
        return Interval(mpfr(lo, p), mpfr(hi, p), p)

    def overlaps(self, other: "Interval") -> bool:
        return not (self.hi < other.lo or other.hi < self.lo)

    def _rhs_bounds(self, other):
        if isinstance(other, Interval):
            return mpq(other.lo), mpq(other.hi)
        q = to_exact(other)
        return q, q

    def certainly_le(self, other) -> bool:
        rlo, _ = self._rhs_bounds(other)
        return mpq(self.hi) <= rlo

    def certainly_lt(self, other) -> bool:
        rlo, _ = self._rhs_bounds(other)
        return mpq(self.hi) < rlo

    def certainly_ge(self, other) -> bool:
        _, rhi = self._rhs_bounds(other)
        return mpq(self.lo) >= rhi

    def certainly_gt(self, other) -> bool:
        _, rhi = self._rhs_bounds(other)
        return mpq(self.lo) > rhi

    def __eq__(self, other) -> bool:
        if not isinstance(other, Interval):
            return NotImplemented
        return self.lo == other.lo and self.hi == other.hi

    def __hash__(self):
        return hash((mpq(self.lo), mpq(self.hi)))

    # ------------------------------------------------------------------
    # rendering
    # ------------------------------------------------------------------

    def decimal_lo(self, sig_digits: int = 36) -> str:
        """Decimal numeral <= lo (rounded toward -inf)."""
        return directed_decimal(mpq(self.lo), sig_digits, -1)

    def decimal_hi(self, sig_digits: int = 36) -> str:
        """Decimal numeral >= hi (rounded toward +inf)."""
        return directed_decimal(mpq(self.hi), sig_digits, +1)

    def __repr__(self) -> str:
        return "Interval[%s, %s]" % (self.decimal_lo(12), self.decimal_hi(12))


# ----------------------------------------------------------------------
# directed decimal rendering (exact integer arithmetic throughout)
# ----------------------------------------------------------------------


def _compare_pow10(num: int, den: int, k: int) -> int:
    """Sign of num/den - 10**k for positive num, den."""
    if k >= 0:
        rhs = den * 10**k
        lhs = num
    else:
        lhs = num * 10**-k
        rhs = den
    return (lhs > rhs) - (lhs < rhs)


def directed_decimal(value, sig_digits: int, direction: int) -> str:
    """Render an exact rational as a decimal numeral rounded in a direction.

    ``direction=-1`` yields a numeral <= value, ``direction=+1`` a numeral
    >= value, always with ``sig_digits`` significant digits.  Deterministic
    and pure-integer, so reports are byte-stable across platforms.
    """
    q = to_exact(value)
    if sig_digits < 1:
        raise DomainError("need at least one significant digit")
    if direction not in (-1, 1):
        raise DomainError("direction must be -1 or +1")
    if q == 0:
        return "0"
    negative = q < 0
    a = -q if negative else q
    num, den = int(a.numerator), int(a.denominator)

    # E such that 10**(E-1) <= a < 10**E
    E = len(str(num)) - len(str(den)) + 1
    while _compare_pow10(num, den, E) >= 0:
        E += 1
    while _compare_pow10(num, den, E - 1) < 0:
        E -= 1

    # integer m with m = round(a * 10**(sig-E)) in the requested direction
    shift = sig_digits - E
    if shift >= 0:
        scaled_num, scaled_den = num * 10**shift, den
    else:
        scaled_num, scaled_den = num, den * 10**-shift
    m, r = divmod(scaled_num, scaled_den)
    round_up_abs = (r != 0) and ((direction > 0) != negative)
    if round_up_abs:
        m += 1
    if m == 10**sig_digits:  # carried over, e.g. 0.999 -> 1.00
        m //= 10
        E += 1

    digits = str(m).rstrip("0") or "0"
    if -3 <= E <= 17:
        if E <= 0:
            body = "0." + "0" * (-E) + digits
        elif E >= len(digits):
            body = digits + "0" * (E - len(digits))
        else:
            body = digits[:E] + "." + digits[E:]
    else:
        mantissa = digits[0] + ("." + digits[1:] if len(digits) > 1 else "")
        body = "%se%+d" % (mantissa, E - 1)
    return ("-" if negative else "") + body


def fixed_decimal(value, places: int, direction: int) -> str:
    """Render an exact rational with a fixed number of places after the point.

    Used for digit-for-digit reproduction of published tables: rounding is
    directed, so a `-1` rendering is a true lower numeral and `+1` a true
    upper numeral.
    """
    q = to_exact(value)
    if places < 0:
        raise DomainError("places must be nonnegative")
    if direction not in (-1, 1):
        raise DomainError("direction must be -1 or +1")
    negative = q < 0
    a = -q if negative else q
    scaled_num = int(a.numerator) * 10**places
    m, r = divmod(scaled_num, int(a.denominator))
    if (r != 0) and ((direction > 0) != negative):
        m += 1
    text = str(m).rjust(places + 1, "0")
    if places:
        text = text[:-places] + "." + text[-places:]
    if negative and m != 0:
        text = "-" + text
    return text


# ----------------------------------------------------------------------
# log-scale magnitudes
# ----------------------------------------------------------------------

LOG_CONVERSION_CAP = 1000


class LogMagnitude:
    """Sign plus an interval enclosing log|value|.

    Carries quantities like exp(10**6) that no fixed-exponent format should
    be asked to hold.  All arithmetic happens in log space; conversion to a
    plain :class:`Interval` is allowed only while ``|log value| <= 1000`` and
    raises :class:`DomainError` outside that window.
    """

    __slots__ = ("sign", "log_abs", "precision")

    def __init__(self, sign: int, log_abs, precision: int):
        if sign not in (-1, 0, 1):
            raise DomainError("sign must be -1, 0 or +1")
        if sign == 0 and log_abs is not None:
            raise DomainError("zero magnitude carries no log")
        if sign != 0 and not isinstance(log_abs, Interval):
            raise DomainError("nonzero magnitude needs a log interval")
        self.sign = sign
        self.log_abs = log_abs
        self.precision = precision if log_abs is None else log_abs.precision

    # -- construction ---------------------------------------------------

    @classmethod
    def zero(cls, precision: int = DEFAULT_PRECISION) -> "LogMagnitude":
        return cls(0, None, check_precision(precision))

    @classmethod
    def from_exact(cls, value, precision: int = DEFAULT_PRECISION) -> "LogMagnitude":
        q = to_exact(value)
        if q == 0:
            return cls.zero(precision)
        sign = 1 if q > 0 else -1
        log_abs = Interval.exact(abs(q), precision).log()
        return cls(sign, log_abs, precision)

    @classmethod
    def from_interval(cls, iv: Interval) -> "LogMagnitude":
        if iv.lo > 0:
            return cls(1, iv.log(), iv.precision)
        if iv.hi < 0:
            return cls(-1, (-iv).log(), iv.precision)
        if iv.lo == 0 == iv.hi:
            return cls.zero(iv.precision)
        raise DomainError("interval straddles zero; sign is undetermined")

    @classmethod
    def from_log(cls, log_abs: Interval, sign: int = 1) -> "LogMagnitude":
        return cls(sign, log_abs, log_abs.precision)

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.sign == 0

    def log10(self) -> Interval:
        """Interval for log10|value| (display/reporting)."""
        if self.sign == 0:
            raise DomainError("log10 of zero")
        return self.log_abs / _ln10(self.precision)

    def to_interval(self, cap: int = LOG_CONVERSION_CAP) -> Interval:
        if self.sign == 0:
            return Interval.exact(0, self.precision)
        if not self.log_abs.abs().certainly_le(cap):
            raise DomainError(
                "log magnitude %r exceeds the conversion window |log| <= %d"
                % (self.log_abs, cap)
            )
        mag = self.log_abs.exp()
        return mag if self.sign > 0 else -mag

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(value, precision: int) -> "LogMagnitude":
        if isinstance(value, LogMagnitude):
            return value
        if isinstance(value, Interval):
            return LogMagnitude.from_interval(value)
        return LogMagnitude.from_exact(value, precision)

    def __mul__(self, other):
        o = self._coerce(other, self.precision)
        if self.sign == 0 or o.sign == 0:
            return LogMagnitude.zero(max(self.precision, o.precision))
        return LogMagnitude(self.sign * o.sign, self.log_abs + o.log_abs, self.precision)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other, self.precision)
        if o.sign == 0:
            raise DomainError("division by zero magnitude")
        if self.sign == 0:
            return self
        return LogMagnitude(self.sign * o.sign, self.log_abs - o.log_abs, self.precision)

    def __rtruediv__(self, other):
        return self._coerce(other, self.precision).__truediv__(self)

    def __neg__(self):
        if self.sign == 0:
            return self
        return LogMagnitude(-self.sign, self.log_abs, self.precision)

    def abs(self) -> "LogMagnitude":
        if self.sign >= 0:
            return self
        return -self

    def __pow__(self, exponent):
        if isinstance(exponent, Interval) or (
            not isinstance(exponent, LogMagnitude)
            and to_exact(exponent).denominator != 1
        ):
            if self.sign <= 0:
                raise DomainError("non-integer exponent needs a positive magnitude")
            e = exponent if isinstance(exponent, Interval) else Interval.exact(
                exponent, self.precision
            )
            return LogMagnitude(1, self.log_abs * e, self.precision)
        if isinstance(exponent, LogMagnitude):
            raise DomainError("exponent must be a number or interval, not a magnitude")
        e = int(to_exact(exponent))
        if self.sign == 0:
            if e <= 0:
                raise DomainError("0**e undefined for e <= 0")
            return self
        sign = 1 if (self.sign > 0 or e % 2 == 0) else -1
        if e == 0:
            return LogMagnitude.from_exact(1, self.precision)
        result_log = self.log_abs * e
        return LogMagnitude(sign, result_log, self.precision)

    def __add__(self, other):
        """Addition in log space.

        Same-sign addition is always fine; mixed-sign addition is allowed
        only when one magnitude provably dominates (otherwise the sign of the
        result cannot be certified and we refuse).
        """
        o = self._coerce(other, self.precision)
        if self.sign == 0:
            return o
        if o.sign == 0:
            return self
        if self.sign == o.sign:
            big, small = (self, o) if _cmp_logs_ge(self, o) else (o, self)
            diff = small.log_abs - big.log_abs  # hi <= 0 up to rounding
            bump = diff.exp().log1p()
            return LogMagnitude(big.sign, big.log_abs + bump, self.precision)
        # opposite signs: need strict domination to know the result's sign
        if self.log_abs.certainly_gt(o.log_abs):
            big, small = self, o
        elif o.log_abs.certainly_gt(self.log_abs):
            big, small = o, self
        else:
            raise DomainError(
                "cannot certify the sign of a near-cancelling mixed-sign sum"
            )
        diff = small.log_abs - big.log_abs
        shrink = (-(diff.exp())).log1p()  # log(1 - e^diff), diff < 0
        return LogMagnitude(big.sign, big.log_abs + shrink, self.precision)

    __radd__ = __add__

    def __sub__(self, other):
        return self.__add__(-self._coerce(other, self.precision))

    def __rsub__(self, other):
        return (-self).__add__(other)

    # -- comparisons (certified; exact endpoint arithmetic) ---------------

    def _certainly_le(self, other) -> bool:
        o = self._coerce(other, self.precision)
        if self.sign < o.sign:
            return True
        if self.sign > o.sign:
            return False
        if self.sign == 0:
            return True  # both zero
        if self.sign > 0:
            return self.log_abs.certainly_le(o.log_abs)
        return o.log_abs.certainly_le(self.log_abs)

    def certainly_le(self, other) -> bool:
        return self._certainly_le(other)

    def certainly_ge(self, other) -> bool:
        return self._coerce(other, self.precision)._certainly_le(self)

    def certainly_lt(self, other) -> bool:
        o = self._coerce(other, self.precision)
        if self.sign < o.sign:
            return True
        if self.sign > o.sign or self.sign == 0:
            return False
        if self.sign > 0:
            return self.log_abs.certainly_lt(o.log_abs)
        return o.log_abs.certainly_lt(self.log_abs)

    def certainly_gt(self, other) -> bool:
        return self._coerce(other, self.precision).certainly_lt(self)

    def __repr__(self) -> str:
        if self.sign == 0:
            return "LogMagnitude(0)"
        prefix = "" if self.sign > 0 else "-"
        return "%sexp(%r)" % (prefix, self.log_abs)


def _cmp_logs_ge(a: LogMagnitude, b: LogMagnitude) -> bool:
    """Heuristic ordering of |a| >= |b| for the same-sign add (any choice is
    sound; picking the larger keeps log1p arguments in [0, 1])."""
    return mpq(a.log_abs.hi) >= mpq(b.log_abs.hi)


@functools.lru_cache(maxsize=None)
def _ln10(precision: int) -> Interval:
    return Interval.exact(10, precision).log()
