"""log f(t) and the cumulants kappa_j(t) of the Boltzmann partition ensemble.

Two evaluation routes are provided:

* direct Lambert-type series in ``t`` (fast for small ``t``), and
* the modular functional equations in ``L = |log t|``, whose correction terms
  only need the direct series at the dual argument ``exp(-4 pi^2 / L)``.

:func:`kappa` and :func:`log_f` switch from the first to the second at the
self-dual point ``t = exp(-2 pi)``, so a direct series is only ever summed at
arguments ``<= exp(-2 pi) ~ 0.00187`` on the fast path.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb, factorial
from typing import Callable

from .errors import ConvergenceError, DomainError
from .eulerian import eulerian_poly
from .numerics import PrecisionContext, Real, geometric_tail_bound


class Method(str, enum.Enum):
    DIRECT_SERIES = "direct_series"
    FUNCTIONAL_EQUATION = "functional_equation"


@dataclass(frozen=True)
class CumulantValue:
    order: int
    t: object
    value: object
    method: Method


@dataclass(frozen=True)
class LogFValue:
    """``log f(t)`` together with the dual-series term ``E_0(t)``."""

    t: object
    value: object
    e0: object
    method: Method


def _check_t(t: Real, ctx: PrecisionContext):
    t = ctx.real(t)
    if not 0 <= t < 1:
        raise DomainError(f"t must lie in [0, 1), got {t}")
    return t


def _check_order(j: int, lowest: int) -> None:
    if isinstance(j, bool) or not isinstance(j, int) or j < lowest:
        raise DomainError(f"cumulant order must be an integer >= {lowest}, got {j!r}")


def _lambert_sum(term: Callable, x, growth: int, ctx: PrecisionContext):
    """Sum ``term(l, x**l)`` over ``l >= 1`` with a certified tail.

    ``term(l, y) = l**growth * g(y)`` where ``g`` is a power series with
    non-negative coefficients and no constant term, so ``g(x y) <= x g(y)``
    and consecutive terms shrink at least by ``x (1 + 1/l)**growth``.
    """
    mp = ctx.mp
    total = mp.zero
    y = mp.one
    threshold = (1 + x) / 2
    eps = ctx.truncation
    ell = 0
    while True:
        ell += 1
        if ell > ctx.max_series_terms:
            raise ConvergenceError(
                f"series at t={mp.nstr(x, 10)} needs more than "
                f"{ctx.max_series_terms} terms")
        y *= x
        current = term(ell, y)
        total += current
        rho = x * (1 + mp.one / ell) ** growth
        if rho < threshold:
            tail = geometric_tail_bound(current * rho, rho)
            if tail <= eps * total:
                return total


def log_f_direct(t: Real, ctx: PrecisionContext):
    """``log f(t) = sum_l t^l / (l (1 - t^l))`` summed directly."""
    t = _check_t(t, ctx)
    if t == 0:
        return ctx.mp.zero
    return _lambert_sum(lambda ell, y: y / (ell * (1 - y)), t, 0, ctx)


def kappa_direct(j: int, t: Real, ctx: PrecisionContext) -> CumulantValue:
    """``kappa_j(t) = sum_l l^(j-1) A_j(t^l) / (1 - t^l)^(j+1)``."""
    _check_order(j, 1)
    t = _check_t(t, ctx)
    return CumulantValue(j, t, _kappa_series(j, t, ctx), Method.DIRECT_SERIES)


def _kappa_series(j: int, x, ctx: PrecisionContext):
    if x == 0:
        return ctx.mp.zero
    poly = eulerian_poly(j)
    return _lambert_sum(
        lambda ell, y: ell ** (j - 1) * poly(y) / (1 - y) ** (j + 1), x, j - 1, ctx)


def kappa_direct_alt(j: int, t: Real, ctx: PrecisionContext) -> CumulantValue:
    """Second series form ``sum_l l^j A_{j-1}(t^l) / (1 - t^l)^j`` (j >= 2)."""
    _check_order(j, 2)
    t = _check_t(t, ctx)
    if t == 0:
        return CumulantValue(j, t, ctx.mp.zero, Method.DIRECT_SERIES)
    poly = eulerian_poly(j - 1)
    value = _lambert_sum(lambda ell, y: ell ** j * poly(y) / (1 - y) ** j, t, j, ctx)
    return CumulantValue(j, t, value, Method.DIRECT_SERIES)


def dual_argument(L, ctx: PrecisionContext):
    """``exp(-4 pi^2 / L)``, the image of ``exp(-L)`` under L -> 4 pi^2 / L."""
    mp = ctx.mp
    return mp.exp(-4 * mp.pi ** 2 / L)


def correction_at_log(j: int, L, ctx: PrecisionContext):
    """``E_j`` as a function of ``L = |log t|``; ``j = 1`` gives ``E_1``."""
    mp = ctx.mp
    u = 4 * mp.pi ** 2 / L
    q = mp.exp(-u)
    acc = mp.zero
    for r in range(1, j + 1):
        acc += comb(j, r) * (-u) ** r * _kappa_series(r, q, ctx) / factorial(r - 1)
    return factorial(j - 1) * acc / L ** j


def kappa_at_log(j: int, L, ctx: PrecisionContext):
    """``kappa_j(exp(-L))`` through the functional equation (any ``L > 0``)."""
    mp = ctx.mp
    value = (mp.pi ** 2 * factorial(j) / (6 * L ** (j + 1))
             - factorial(j - 1) / (2 * L ** j)
             + correction_at_log(j, L, ctx))
    if j == 1:
        value += mp.one / 24
    return value


def _self_dual(t, ctx: PrecisionContext) -> bool:
    return t >= ctx.mp.exp(-2 * ctx.mp.pi)


def kappa(j: int, t: Real, ctx: PrecisionContext) -> CumulantValue:
    """kappa_j(t), by functional equation for ``t >= exp(-2 pi)`` and by the
    direct series below it.
    """
    _check_order(j, 1)
    t = _check_t(t, ctx)
    if t == 0 or not _self_dual(t, ctx):
        return CumulantValue(j, t, _kappa_series(j, t, ctx), Method.DIRECT_SERIES)
    L = -ctx.mp.log(t)
    return CumulantValue(j, t, kappa_at_log(j, L, ctx), Method.FUNCTIONAL_EQUATION)


def e_term(j: int, t: Real, ctx: PrecisionContext):
    """Exponentially small remainder ``E_j(t)`` of kappa_j beyond its two
    leading terms in ``1/|log t|`` (``j >= 2``).
    """
    _check_order(j, 2)
    t = _check_t(t, ctx)
    if t == 0:
        raise DomainError("E_j is undefined at t = 0")
    return correction_at_log(j, -ctx.mp.log(t), ctx)


def sigma(t: Real, ctx: PrecisionContext):
    """Standard deviation ``sqrt(kappa_2(t))``."""
    return ctx.mp.sqrt(kappa(2, t, ctx).value)


def log_f_at_log(L, ctx: PrecisionContext):
    """Functional equation for log f at ``t = exp(-L)``; returns (value, E_0)."""
    mp = ctx.mp
    e0 = log_f_direct(dual_argument(L, ctx), ctx)
    value = (mp.pi ** 2 / (6 * L) - mp.log(mp.sqrt(2 * mp.pi)) - L / 24
             + mp.log(L) / 2 + e0)
    return value, e0


def log_f(t: Real, ctx: PrecisionContext) -> LogFValue:
    """``log f(t)`` with the route chosen at the self-dual point.

    Below ``exp(-2 pi)`` the direct series gives the value and ``e0`` is
    recovered from the identity as value minus the elementary terms, which
    avoids summing a slowly converging series at the (large) dual argument.
    """
    mp = ctx.mp
    t = _check_t(t, ctx)
    if t == 0:
        return LogFValue(t, mp.zero, mp.zero, Method.DIRECT_SERIES)
    L = -mp.log(t)
    if _self_dual(t, ctx):
        value, e0 = log_f_at_log(L, ctx)
        return LogFValue(t, value, e0, Method.FUNCTIONAL_EQUATION)
    value = log_f_direct(t, ctx)
    e0 = value - (mp.pi ** 2 / (6 * L) - mp.log(mp.sqrt(2 * mp.pi)) - L / 24
                  + mp.log(L) / 2)
    return LogFValue(t, value, e0, Method.DIRECT_SERIES)


def log_f_residual(t: Real, ctx: PrecisionContext):
    """Residual of the log f functional equation with both sides summed
    directly: ``log f(t) - [elementary terms + log f(dual)]``.
    """
    mp = ctx.mp
    t = _check_t(t, ctx)
    L = -mp.log(t)
    rhs = (mp.pi ** 2 / (6 * L) - mp.log(mp.sqrt(2 * mp.pi)) - L / 24
           + mp.log(L) / 2 + log_f_direct(dual_argument(L, ctx), ctx))
    return log_f_direct(t, ctx) - rhs


def e_bound_ratio(j: int, t: Real, ctx: PrecisionContext):
    """``|E_j(t)| |log t|^(2j) exp(4 pi^2 / |log t|)``, bounded for t near 1."""
    mp = ctx.mp
    t = _check_t(t, ctx)
    L = -mp.log(t)
    return abs(correction_at_log(j, L, ctx)) * L ** (2 * j) * mp.exp(4 * mp.pi ** 2 / L)


def fit_e_bound_constant(j: int, ctx: PrecisionContext, samples: int = 64):
    """Empirical constant ``C_j`` with ``|E_j(t)| <= C_j e^{-4pi^2/L} / L^(2j)``.

    Maximum of :func:`e_bound_ratio` over ``L`` on a geometric grid from
    ``1e-4`` to ``pi / 2`` (i.e. ``t > exp(-pi/2)``), rounded up by 1%.
    """
    _check_order(j, 2)
    mp = ctx.mp
    lo, hi = mp.mpf("1e-4"), mp.pi / 2
    best = mp.zero
    for i in range(samples + 1):
        L = lo * (hi / lo) ** (mp.mpf(i) / samples)
        ratio = (abs(correction_at_log(j, L, ctx)) * L ** (2 * j)
                 * mp.exp(4 * mp.pi ** 2 / L))
        best = max(best, ratio)
    return best * mp.mpf("1.01")
