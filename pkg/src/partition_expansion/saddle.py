"""The saddle parameter t_n solving kappa_1(t_n) = n, and quantities derived
from it.

All root finding happens in ``L = |log t|``: ``kappa_1`` is smooth and
decreasing in ``L`` with ``d kappa_1 / dL = -kappa_2``, and ``1 - t`` never
has to be formed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cumulants import dual_argument, kappa_at_log, _kappa_series
from .errors import DomainError, SolverError
from .numerics import PrecisionContext, to_fixed

MAX_ITERATIONS = 400


@dataclass(frozen=True)
class SaddleState:
    n: int
    t_n: object
    L_n: object
    r_n: object
    kappa2: object
    c_n_sq: object
    lambda_n: object
    h_n: object
    iterations: int


def _check_n(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")


def r_of_n(n: int, ctx: PrecisionContext):
    """``r_n = sqrt(2 pi^2 / 3 (n - 1/24) + 1/4)``."""
    _check_n(n)
    mp = ctx.mp
    return mp.sqrt(2 * mp.pi ** 2 / 3 * (n - mp.mpf(1) / 24) + mp.mpf(1) / 4)


def log_tn_approx(n: int, ctx: PrecisionContext):
    """Closed-form surrogate ``2 pi^2 / (3 (1 + 2 r_n))`` for ``|log t_n|``."""
    mp = ctx.mp
    return 2 * mp.pi ** 2 / (3 * (1 + 2 * r_of_n(n, ctx)))


def log_bracket(n: int, ctx: PrecisionContext):
    """Interval ``(L_lo, L_hi)`` containing ``|log t_n|``.

    ``L_hi`` comes from ``t_n > exp(-pi / sqrt(6 (n - 1/24)))``; ``L_lo`` is
    halved from ``L_hi / 2`` until ``kappa_1`` exceeds ``n`` there.
    """
    _check_n(n)
    mp = ctx.mp
    hi = mp.pi / mp.sqrt(6 * (n - mp.mpf(1) / 24))
    lo = hi / 2
    while kappa_at_log(1, lo, ctx) <= n:
        lo /= 2
    return lo, hi


def solve_tn(n: int, ctx: PrecisionContext) -> SaddleState:
    """Solve ``kappa_1(t_n) = n`` to ``|kappa_1 - n| <= tol * n``.

    Newton steps ``L <- L + (kappa_1 - n) / kappa_2`` start from the
    closed-form surrogate and fall back to bisection whenever a step leaves
    the current bracket.
    """
    _check_n(n)
    mp = ctx.mp
    tol = ctx.tolerance * n
    lo, hi = log_bracket(n, ctx)
    L = log_tn_approx(n, ctx)
    if not lo < L < hi:
        L = (lo + hi) / 2
    for iteration in range(1, MAX_ITERATIONS + 1):
        excess = kappa_at_log(1, L, ctx) - n
        if abs(excess) <= tol:
            return _state(n, L, iteration, ctx)
        if excess > 0:
            lo = L
        else:
            hi = L
        step = L + excess / kappa_at_log(2, L, ctx)
        L = step if lo < step < hi else (lo + hi) / 2
    raise SolverError(f"t_n for n={n} did not converge in {MAX_ITERATIONS} steps")


def _state(n: int, L, iterations: int, ctx: PrecisionContext) -> SaddleState:
    mp = ctx.mp
    k2 = kappa_at_log(2, L, ctx)
    c_sq = k2 * L ** 2
    return SaddleState(
        n=n,
        t_n=mp.exp(-L),
        L_n=L,
        r_n=r_of_n(n, ctx),
        kappa2=k2,
        c_n_sq=c_sq,
        lambda_n=1 + 1 / (2 * c_sq),
        h_n=_kappa_series(1, dual_argument(L, ctx), ctx),
        iterations=iterations,
    )


@dataclass(frozen=True)
class BoundReport:
    """Residuals of the saddle approximations next to their envelopes
    (constant 1), with ``E = exp(-2 pi sqrt(24 n - 1))``.
    """

    n: int
    residuals: dict
    envelopes: dict
    decimal_digits: int

    @property
    def ratios(self) -> dict:
        return {k: self.residuals[k] / self.envelopes[k] for k in self.residuals}

    @property
    def passed(self) -> bool:
        return all(r <= 1 for r in self.ratios.values())

    def failures(self) -> list[str]:
        return [k for k, r in self.ratios.items() if r > 1]

    def to_dict(self, digits: int = 20) -> dict:
        def fmt(x):
            return _sci(x, digits)
        return {
            "n": self.n,
            "residuals": {k: fmt(v) for k, v in self.residuals.items()},
            "envelopes": {k: fmt(v) for k, v in self.envelopes.items()},
            "ratios": {k: fmt(v) for k, v in self.ratios.items()},
            "passed": self.passed,
        }


BOUND_NAMES = ("c_sq_minus_r", "inv_log_minus_r", "log_minus_approx", "h_n")


def _sci(x, digits: int) -> str:
    import mpmath
    return mpmath.nstr(x, digits, min_fixed=1, max_fixed=0)


def envelope_digits(n: int) -> int:
    """Decimal digits spanned by ``exp(-2 pi sqrt(24 n - 1))``."""
    return math.ceil(2 * math.pi * math.sqrt(24 * n - 1) / math.log(10)) + 1


def verify_saddle_bounds(n: int, ctx: PrecisionContext) -> BoundReport:
    """Evaluate the four saddle residuals against ``n E``, ``sqrt(n) E``,
    ``E`` and ``64 E``.

    The residuals are exponentially small, so the work runs at
    ``ctx.decimal_digits`` plus the digits spanned by ``E``; the residuals
    then keep about ``ctx.decimal_digits`` significant digits.
    """
    _check_n(n)
    work = ctx.with_digits(ctx.decimal_digits + envelope_digits(n))
    mp = work.mp
    state = solve_tn(n, work)
    r, L = state.r_n, state.L_n
    E = mp.exp(-2 * mp.pi * mp.sqrt(24 * n - 1))
    residuals = {
        "c_sq_minus_r": abs(state.c_n_sq - r),
        "inv_log_minus_r": abs(mp.pi ** 2 / (3 * L) - (mp.mpf(1) / 2 + r)),
        "log_minus_approx": abs(L - 2 * mp.pi ** 2 / (3 * (1 + 2 * r))),
        "h_n": state.h_n,
    }
    envelopes = {
        "c_sq_minus_r": n * E,
        "inv_log_minus_r": mp.sqrt(n) * E,
        "log_minus_approx": E,
        "h_n": 64 * E,
    }
    return BoundReport(n, residuals, envelopes, work.decimal_digits)


def saddle_checks(state: SaddleState, ctx: PrecisionContext) -> dict:
    """Self-consistency residuals of a solved state (relative).

    ``mean_direct``: kappa_1(t_n) summed directly against ``n``.
    ``solved_quadratic``: ``pi^2/(3 L_n)`` against the closed-form root of
    the quadratic satisfied by ``x = pi^2 / (3 L_n)`` given ``h_n``.
    """
    mp = ctx.mp
    n, L, h = state.n, state.L_n, state.h_n
    mean = _kappa_series(1, mp.exp(-L), ctx)
    x = mp.pi ** 2 / (3 * L)
    root = ((mp.mpf(1) / 2
             + mp.sqrt(2 * mp.pi ** 2 / 3 * (n - mp.mpf(1) / 24) * (1 - 24 * h)
                       + mp.mpf(1) / 4))
            / (1 - 24 * h))
    return {
        "mean_direct": abs(mean - n) / n,
        "solved_quadratic": abs(x - root) / x,
    }


def state_to_dict(state: SaddleState, digits: int = 30) -> dict:
    return {
        "n": state.n,
        "t_n": to_fixed(state.t_n, digits),
        "L_n": to_fixed(state.L_n, digits),
        "r_n": to_fixed(state.r_n, digits),
        "c_n_sq": to_fixed(state.c_n_sq, digits),
        "lambda_n": to_fixed(state.lambda_n, digits),
        "h_n": _sci(state.h_n, digits),
    }
