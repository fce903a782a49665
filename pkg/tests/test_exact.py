import pytest
from hypothesis import given, strategies as st

from partition_expansion import (
    InputTooLargeError,
    ResourceLimitError,
    partition_bruteforce,
    partition_exact,
    partition_table,
)
from partition_expansion.errors import DomainError
from partition_expansion.exact import from_decimal, to_decimal

from conftest import TABLE1


def enumerate_partitions(n, largest=None):
    """Yield every non-increasing tuple of positive parts summing to n."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in enumerate_partitions(n - part, part):
            yield (part,) + rest


def product_coefficients(n_max):
    """Coefficients of prod_{j<=n_max} (1 - t^j)^{-1} modulo t^{n_max+1}."""
    coeffs = [1] + [0] * n_max
    for j in range(1, n_max + 1):
        # multiply by 1/(1 - t^j) = 1 + t^j + t^{2j} + ...
        for m in range(j, n_max + 1):
            coeffs[m] += coeffs[m - j]
    return coeffs


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (5, 7), (10, 42),
                                         (1000, 24061467864032622473692149727991)])
def test_partition_exact_examples(n, expected):
    assert partition_exact(n) == expected


def test_five_by_enumeration():
    parts = list(enumerate_partitions(5))
    assert len(parts) == 7 == partition_exact(5)
    assert partition_bruteforce(4) == len(list(enumerate_partitions(4))) == 5


@pytest.mark.parametrize("n", sorted(TABLE1))
def test_table_column(n):
    assert partition_exact(n) == TABLE1[n][0]


def test_bruteforce_examples():
    assert partition_bruteforce(1) == 1
    assert partition_bruteforce(11) == 56


def test_bruteforce_guard():
    with pytest.raises(InputTooLargeError):
        partition_bruteforce(61)


def test_exact_matches_bruteforce_up_to_60():
    for n in range(61):
        assert partition_exact(n) == partition_bruteforce(n)


def test_generating_function_coefficients():
    coeffs = product_coefficients(100)
    assert [partition_exact(n) for n in range(101)] == coeffs


def test_table_examples():
    assert list(partition_table(2)) == [1, 1, 2]
    assert partition_table(10)[10] == 42
    assert partition_table(50)[50] == 204226


@pytest.mark.parametrize("n_max", [0, 1, 10, 100])
def test_table_matches_exact(n_max):
    table = partition_table(n_max)
    assert table.n_max == n_max
    assert all(table[k] == partition_exact(k) for k in range(n_max + 1))


def test_table_invariants():
    table = partition_table(300)
    assert table[0] == table[1] == 1
    assert all(a <= b for a, b in zip(table.entries[1:], table.entries[2:]))


def test_table_cap():
    with pytest.raises(ResourceLimitError):
        partition_table(11, cap=10)


@pytest.mark.parametrize("bad", [-1, 2.0, "3", True])
def test_rejects_bad_input(bad):
    with pytest.raises(DomainError):
        partition_exact(bad)


@given(st.integers(min_value=0, max_value=400))
def test_decimal_round_trip(n):
    value = partition_exact(n)
    assert value >= 0
    assert from_decimal(to_decimal(value)) == value
