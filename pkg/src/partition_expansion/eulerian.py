"""Eulerian polynomials A_j(t), defined by

    sum_{k>=0} k**j t**k = A_j(t) / (1 - t)**(j + 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, ResourceLimitError
from .numerics import PrecisionContext, Real

DEFAULT_DEGREE_CAP = 64


@dataclass(frozen=True)
class EulerianPoly:
    """Exact integer coefficients of ``A_j``, constant term first."""

    j: int
    coefficients: tuple[int, ...]

    def at_one(self) -> int:
        return sum(self.coefficients)

    def is_palindromic(self) -> bool:
        # A_j has zero constant term for j >= 1; symmetry is over t..t^j
        c = self.coefficients if self.j == 0 else self.coefficients[1:]
        return c == c[::-1]

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc


@lru_cache(maxsize=None)
def _build(j: int) -> tuple[int, ...]:
    if j == 0:
        return (1,)
    prev = _build(j - 1)
    # A_j(t) = t (1 - t) A'_{j-1}(t) + j t A_{j-1}(t)
    out = [0] * (j + 1)
    for k, c in enumerate(prev):
        # t * k c t^(k-1) = k c t^k ; -t^2 * k c t^(k-1) = -k c t^(k+1)
        out[k] += k * c
        out[k + 1] -= k * c
        out[k + 1] += j * c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def eulerian_poly(j: int, cap: int = DEFAULT_DEGREE_CAP) -> EulerianPoly:
    """Build ``A_j`` from ``A_0 = 1`` with exact integer arithmetic."""
    if isinstance(j, bool) or not isinstance(j, int) or j < 0:
        raise DomainError(f"j must be a non-negative integer, got {j!r}")
    if j > cap:
        raise ResourceLimitError(f"Eulerian degree {j} exceeds the cap {cap}")
    return EulerianPoly(j, _build(j))


def eulerian_eval(j: int, t: Real, ctx: PrecisionContext):
    """Horner evaluation of ``A_j(t)`` at the working precision of ``ctx``."""
    return eulerian_poly(j)(ctx.real(t))

