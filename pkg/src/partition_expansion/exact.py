"""Exact partition numbers p(n) with Python integers.

The pentagonal-number recurrence is the ground truth for every comparison in
the package; it involves no floating point at all.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import DomainError, InputTooLargeError, ResourceLimitError

#: largest n_max accepted by :func:`partition_table` unless overridden
DEFAULT_TABLE_CAP = 10 ** 6
#: guard on the brute-force oracle
BRUTEFORCE_MAX = 60


@dataclass(frozen=True)
class PartitionTable:
    """Dense prefix ``p(0), ..., p(n_max)``."""

    entries: tuple[int, ...]

    @property
    def n_max(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, k):
        return self.entries[k]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)


_lock = threading.Lock()
_prefix: list[int] = [1]


def _extend(values: list[int], n_max: int) -> None:
    # p(m) = sum_{k>=1} (-1)^(k+1) [p(m - k(3k-1)/2) + p(m - k(3k+1)/2)]
    for m in range(len(values), n_max + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            g2 = g1 + k
            term = values[m - g1]
            if g2 <= m:
                term += values[m - g2]
            total = total + term if k & 1 else total - term
            k += 1
        values.append(total)


def _check_n(n: int, name: str = "n") -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"{name} must be an integer, got {n!r}")
    if n < 0:
        raise DomainError(f"{name} must be non-negative, got {n}")
    return n


def partition_table(n_max: int, cap: int = DEFAULT_TABLE_CAP) -> PartitionTable:
    """Return ``p(0..n_max)`` built in one pass of the pentagonal recurrence.

    Values are memoized process-wide, so repeated calls only extend the
    cached prefix.  Raises :class:`ResourceLimitError` above ``cap``.
    """
    _check_n(n_max, "n_max")
    if n_max > cap:
        raise ResourceLimitError(f"n_max={n_max} exceeds the table cap {cap}")
    with _lock:
        if len(_prefix) <= n_max:
            _extend(_prefix, n_max)
        return PartitionTable(tuple(_prefix[: n_max + 1]))


def partition_exact(n: int) -> int:
    """Exact number of partitions of ``n`` (``p(0) = 1``)."""
    _check_n(n)
    with _lock:
        if len(_prefix) <= n:
            _extend(_prefix, n)
        return _prefix[n]


def partition_bruteforce(n: int) -> int:
    """Count partitions of ``n`` by recursion over the largest part.

    Independent of the pentagonal recurrence; used only as a test oracle.
    """
    _check_n(n)
    if n > BRUTEFORCE_MAX:
        raise InputTooLargeError(
            f"brute-force enumeration is limited to n <= {BRUTEFORCE_MAX}, got {n}")
    return _count(n, n)


@lru_cache(maxsize=None)
def _count(n: int, largest: int) -> int:
    # partitions of n whose parts are all <= largest
    if n == 0:
        return 1
    return sum(_count(n - part, part) for part in range(min(n, largest), 0, -1))


def to_decimal(value: int) -> str:
    return str(value)


def from_decimal(text: str) -> int:
    """Parse a decimal string produced by :func:`to_decimal`."""
    text = text.strip()
    if not text.isdigit():
        raise DomainError(f"not a non-negative decimal integer: {text!r}")
    return int(text)


def exact_values(ns: Sequence[int]) -> dict[int, int]:
    """``{n: p(n)}`` for every ``n`` in ``ns`` from a single shared table."""
    if not ns:
        return {}
    table = partition_table(max(ns))
    return {n: table[n] for n in ns}
