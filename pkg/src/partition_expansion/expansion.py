"""Asymptotic expansions of p(n) and their exact rational coefficients."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Optional

from .errors import DomainError, ResourceLimitError
from .numerics import PrecisionContext, format_fraction, to_fixed
from .saddle import SaddleState, r_of_n, solve_tn

COEFF_CAP = 64
RATIO_DIGITS = 19


class Kind(str, enum.Enum):
    SIMPLIFIED = "simplified"
    FULL = "full"
    HARDY_RAMANUJAN = "hardy_ramanujan"


@dataclass(frozen=True)
class ExpansionResult:
    n: int
    N: int
    kind: Kind
    value: object
    terms: tuple = ()
    rounded: int = 0
    ratio_to_exact: Optional[Fraction] = field(default=None)

    def compared_to(self, exact: int) -> "ExpansionResult":
        """Copy with ``ratio_to_exact = rounded / exact``."""
        return replace(self, ratio_to_exact=Fraction(self.rounded, exact))

    def to_dict(self, value_digits: int = 30) -> dict:
        ratio = self.ratio_to_exact
        return {
            "n": self.n,
            "N": self.N,
            "kind": self.kind.value,
            "value": to_fixed(self.value, value_digits),
            "rounded": str(self.rounded),
            "ratio": None if ratio is None else format_fraction(ratio, RATIO_DIGITS),
        }


def _check_ell(ell: int) -> None:
    if isinstance(ell, bool) or not isinstance(ell, int) or ell < 1:
        raise DomainError(f"coefficient index must be a positive integer, got {ell!r}")
    if ell > COEFF_CAP:
        raise ResourceLimitError(f"coefficient index {ell} exceeds the cap {COEFF_CAP}")


def _alternating_sum(ell: int) -> Fraction:
    # sum_{k=0}^{ell+1} (-1)^k 2^k C(2 ell, k) / (ell + 1 - k)!
    return sum((Fraction((-2) ** k * comb(2 * ell, k), factorial(ell + 1 - k))
                for k in range(ell + 2)), Fraction(0))


@lru_cache(maxsize=None)
def j_coeff(ell: int) -> Fraction:
    """``J_l``: the ``2l``-th derivative of ``exp(x/2) (1 - x)^(l+1)`` at 0,
    via its closed finite sum.
    """
    _check_ell(ell)
    return Fraction(factorial(ell + 1), 4 ** ell) * _alternating_sum(ell)


@lru_cache(maxsize=None)
def d_coeff(ell: int) -> Fraction:
    """Positive coefficient ``D_l`` of the expansion in ``1 / (1 + 2x)``."""
    _check_ell(ell)
    sign = 1 if ell % 2 else -1
    return sign * Fraction(ell + 1, 4 ** ell) * _alternating_sum(ell)


def _check_args(n: int, N: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    if isinstance(N, bool) or not isinstance(N, int) or not 0 <= N <= COEFF_CAP:
        raise DomainError(f"order N must be an integer in [0, {COEFF_CAP}], got {N!r}")


def _nearest(value, ctx: PrecisionContext) -> int:
    # half away from zero
    mp = ctx.mp
    return int(mp.floor(value + mp.mpf(1) / 2)) if value >= 0 \
        else -int(mp.floor(-value + mp.mpf(1) / 2))


def _terms(base, N: int, ctx: PrecisionContext) -> tuple:
    """``D_l / base^l`` for ``l = 1..N``."""
    mp = ctx.mp
    out = []
    power = mp.one
    for ell in range(1, N + 1):
        power *= base
        d = d_coeff(ell)
        out.append(mp.mpf(d.numerator) / d.denominator / power)
    return tuple(out)


def hardy_ramanujan(n: int, ctx: PrecisionContext) -> ExpansionResult:
    """Leading asymptotic ``exp(sqrt(2 pi^2 n / 3)) / (4 n sqrt(3))``."""
    _check_args(n, 0)
    mp = ctx.mp
    value = mp.exp(mp.sqrt(2 * mp.pi ** 2 * n / 3)) / (4 * n * mp.sqrt(3))
    return ExpansionResult(n, 0, Kind.HARDY_RAMANUJAN, value, (), _nearest(value, ctx))


def p_approx_simple(n: int, N: int, ctx: PrecisionContext) -> ExpansionResult:
    """Expansion in powers of ``1 / (1 + 2 r_n)`` with closed-form prefactor

        2 pi^2 / (3 sqrt 3) * e^{r_n} / (1 + 2 r_n)^2 * (1 - sum D_l / (1 + 2 r_n)^l).
    """
    _check_args(n, N)
    mp = ctx.mp
    r = r_of_n(n, ctx)
    base = 1 + 2 * r
    terms = _terms(base, N, ctx)
    value = (2 * mp.pi ** 2 / (3 * mp.sqrt(3)) * mp.exp(r) / base ** 2
             * (1 - mp.fsum(terms)))
    return ExpansionResult(n, N, Kind.SIMPLIFIED, value, terms, _nearest(value, ctx))


def p_approx_full(n: int, N: int, ctx: PrecisionContext,
                  state: Optional[SaddleState] = None) -> ExpansionResult:
    """Expansion in powers of ``1 / (1 + 2 c_n^2)`` built on the solved saddle:

        e^{r_n} L_n^{3/2} / (sqrt 2 pi sqrt(1 + 2 c_n^2)) * (1 - sum D_l / (1 + 2 c_n^2)^l).

    Pass a precomputed ``state`` to skip solving for ``t_n``.
    """
    _check_args(n, N)
    mp = ctx.mp
    if state is None:
        state = solve_tn(n, ctx)
    elif state.n != n:
        raise DomainError(f"saddle state is for n={state.n}, not n={n}")
    base = 1 + 2 * state.c_n_sq
    terms = _terms(base, N, ctx)
    value = (mp.exp(state.r_n) * state.L_n ** mp.mpf(1.5)
             / (mp.sqrt(2) * mp.pi * mp.sqrt(base)) * (1 - mp.fsum(terms)))
    return ExpansionResult(n, N, Kind.FULL, value, terms, _nearest(value, ctx))


def expansion_term_table(n: int, N: int, kind, ctx: PrecisionContext) -> tuple:
    """The individual corrections ``D_l / (1 + 2x)^l`` with ``x = r_n``
    (simplified) or ``x = c_n^2`` (full)."""
    kind = Kind(kind)
    if kind is Kind.SIMPLIFIED:
        _check_args(n, N)
        return _terms(1 + 2 * r_of_n(n, ctx), N, ctx)
    if kind is Kind.FULL:
        _check_args(n, N)
        return _terms(1 + 2 * solve_tn(n, ctx).c_n_sq, N, ctx)
    raise DomainError("the Hardy-Ramanujan term has no correction series")


def evaluate(n: int, N: int, kind, ctx: PrecisionContext) -> ExpansionResult:
    kind = Kind(kind)
    if kind is Kind.SIMPLIFIED:
        return p_approx_simple(n, N, ctx)
    if kind is Kind.FULL:
        return p_approx_full(n, N, ctx)
    return hardy_ramanujan(n, ctx)
