"""Working precision, truncation policy and tolerances.

Every analytic routine takes a :class:`PrecisionContext`.  The context owns a
private :class:`mpmath.ctx_mp.MPContext`, so evaluations under different
contexts never touch the global ``mpmath.mp`` state and may run concurrently.
High-precision reals are plain ``mpf`` values produced by ``ctx.mp``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Union

import mpmath
from mpmath.ctx_mp import MPContext

from .errors import DomainError

Real = Union[int, float, str, "mpmath.mpf"]

#: digits carried internally on top of ``decimal_digits``
GUARD_DIGITS = 10
#: smallest admissible working precision
MIN_DIGITS = 20
DEFAULT_TAIL_SAFETY = 30
DEFAULT_MAX_SERIES_TERMS = 250_000


@dataclass(frozen=True)
class PrecisionContext:
    """Immutable precision contract.

    Parameters
    ----------
    decimal_digits : int
        Significant decimal digits every result must carry (>= 20).
    tail_safety : int
        Guard digits folded into ``decimal_digits`` by :func:`context_for_n`.
    max_series_terms : int
        Hard cap on the number of terms summed by any direct series.
    """

    decimal_digits: int = 50
    tail_safety: int = DEFAULT_TAIL_SAFETY
    max_series_terms: int = DEFAULT_MAX_SERIES_TERMS
    mp: MPContext = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if int(self.decimal_digits) < MIN_DIGITS:
            raise DomainError(
                f"decimal_digits must be >= {MIN_DIGITS}, got {self.decimal_digits}")
        if self.tail_safety < 1 or self.max_series_terms < 1:
            raise DomainError("tail_safety and max_series_terms must be positive")
        mp = MPContext()
        mp.dps = self.decimal_digits + GUARD_DIGITS
        object.__setattr__(self, "mp", mp)

    @property
    def tolerance(self):
        """Relative comparison tolerance ``10**-(decimal_digits - 10)``."""
        return self.mp.mpf(10) ** (-(self.decimal_digits - 10))

    @property
    def truncation(self):
        """Relative size of an omitted series tail that ends summation."""
        return self.mp.mpf(10) ** (-(self.decimal_digits + 5))

    def real(self, x: Real):
        """Convert ``x`` to an ``mpf`` of this context.

        Python floats go through their shortest repr, so ``0.99`` means the
        decimal 0.99 rather than the nearest binary double.
        """
        if isinstance(x, float):
            if not math.isfinite(x):
                raise DomainError(f"non-finite input {x!r}")
            x = repr(x)
        v = self.mp.mpf(x)
        if not self.mp.isfinite(v):
            raise DomainError(f"non-finite input {x!r}")
        return v

    def with_digits(self, decimal_digits: int) -> "PrecisionContext":
        return replace(self, decimal_digits=decimal_digits)

    def escalated(self, extra: int = 10) -> "PrecisionContext":
        """Same context with ``extra`` more decimal digits."""
        return self.with_digits(self.decimal_digits + extra)

    def close(self, a, b, rel=None) -> bool:
        """Relative comparison at the context tolerance (or ``rel``)."""
        rel = self.tolerance if rel is None else rel
        a, b = self.mp.mpf(a), self.mp.mpf(b)
        scale = max(abs(a), abs(b))
        return abs(a - b) <= rel * scale


def context_for_n(n: int, N: int, tail_safety: int = DEFAULT_TAIL_SAFETY,
                  max_series_terms: int = DEFAULT_MAX_SERIES_TERMS) -> PrecisionContext:
    """Context sized so that ``exp(r_n)`` keeps ``N + tail_safety`` digits
    beyond its integer part: ``ceil(r_n * log10(e)) + N + tail_safety``.
    """
    if n < 1 or N < 0:
        raise DomainError(f"need n >= 1 and N >= 0, got n={n}, N={N}")
    mp = MPContext()
    mp.dps = 40
    r = mp.sqrt(2 * mp.pi ** 2 / 3 * (n - mp.mpf(1) / 24) + mp.mpf(1) / 4)
    magnitude = int(mp.ceil(r / mp.log(10)))
    digits = max(MIN_DIGITS, magnitude + N + tail_safety)
    return PrecisionContext(decimal_digits=digits, tail_safety=tail_safety,
                            max_series_terms=max_series_terms)


def geometric_tail_bound(first_omitted_term, ratio):
    """Upper bound ``first / (1 - ratio)`` on a tail dominated by a geometric
    series whose first omitted term is ``first_omitted_term``.
    """
    if not 0 <= ratio < 1:
        raise DomainError(f"geometric ratio must lie in [0, 1), got {ratio}")
    return first_omitted_term / (1 - ratio)


def to_fixed(x, frac_digits: int) -> str:
    """Fixed-point decimal string of ``x`` with ``frac_digits`` fractional
    digits, rounded half-even from the exact binary value.
    """
    frac = Fraction(x) if isinstance(x, (int, Fraction)) else _mpf_to_fraction(x)
    return format_fraction(frac, frac_digits)


def format_fraction(frac: Fraction, frac_digits: int) -> str:
    """Round an exact rational half-even to ``frac_digits`` fractional digits."""
    scaled = frac * 10 ** frac_digits
    q = round(scaled)  # Fraction.__round__ rounds half to even
    sign = "-" if q < 0 else ""
    digits = str(abs(q)).rjust(frac_digits + 1, "0")
    if frac_digits == 0:
        return sign + digits
    return f"{sign}{digits[:-frac_digits]}.{digits[-frac_digits:]}"


def _mpf_to_fraction(x) -> Fraction:
    if not hasattr(x, "_mpf_"):
        x = mpmath.mpf(x)
    if not mpmath.isfinite(x):
        raise DomainError(f"non-finite value {x}")
    sign, man, exp, _ = x._mpf_
    man = -int(man) if sign else int(man)
    return Fraction(man * 2 ** exp) if exp >= 0 else Fraction(man, 2 ** -exp)
