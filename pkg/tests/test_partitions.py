import pytest

from pentaseries.partitions import (
    PartitionTable,
    iterated_division_check,
    partition_bruteforce,
    partition_count,
    partition_series,
    partition_values,
)
from pentaseries.pentagonal import closed_form_series
from pentaseries.series import series_from_coeffs, series_mul


def count_by_enumeration(n, largest=None, memo=None):
    """Third route: recursive count of partitions with bounded largest part."""
    if memo is None:
        memo = {}
    if largest is None:
        largest = n
    if n == 0:
        return 1
    key = (n, largest)
    if key not in memo:
        memo[key] = sum(
            count_by_enumeration(n - part, min(part, n - part), memo)
            for part in range(1, min(largest, n) + 1)
        )
    return memo[key]


KNOWN_PREFIX = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


def test_small_values():
    assert [partition_count(n) for n in range(13)] == KNOWN_PREFIX


def test_recurrence_vs_bruteforce():
    for n in range(61):
        assert partition_count(n) == partition_bruteforce(n)


def test_recurrence_vs_enumeration():
    for n in range(41):
        assert partition_count(n) == count_by_enumeration(n)


def test_bruteforce_examples():
    assert partition_bruteforce(0) == 1
    assert partition_bruteforce(4) == 5
    assert partition_bruteforce(7) == 15


def test_bruteforce_guard():
    with pytest.raises(ValueError, match="oracle bound exceeded"):
        partition_bruteforce(101)
    assert partition_bruteforce(100) == partition_count(100)
    with pytest.raises(ValueError):
        partition_bruteforce(-1)


def test_table_growth_and_reuse():
    table = PartitionTable()
    assert table.computed_upto == 0
    assert partition_count(30, table) == 5604
    assert table.computed_upto == 30
    # asking for less must not shrink anything
    assert partition_count(5, table) == 7
    assert table.computed_upto == 30
    assert table.values[:6] == (1, 1, 2, 3, 5, 7)


def test_values_monotone():
    values = partition_values(200)
    assert values[0] == 1
    assert all(b >= a for a, b in zip(values, values[1:]))
    assert all(b > a for a, b in zip(values[1:], values[2:]))
    assert all(v > 0 for v in values)


def test_partition_series_prefix():
    assert partition_series(0).coeffs == (1,)
    assert partition_series(5).coeffs == (1, 1, 2, 3, 5, 7)


def test_series_route_equals_recurrence_route():
    n = 150
    assert partition_series(n).coeffs == partition_values(n)


def test_defining_identity():
    n = 120
    prod = series_mul(partition_series(n), closed_form_series(n))
    assert prod == series_from_coeffs([1] + [0] * n)


def test_big_value_exceeds_machine_words():
    assert partition_count(500) == 2300165032574323995027
    assert partition_count(500).bit_length() > 64


def test_iterated_division():
    assert iterated_division_check(0, 5)
    assert iterated_division_check(1, 10)
    assert iterated_division_check(5, 40)
    assert all(iterated_division_check(m, 2 * m + 10) for m in range(26))


def test_iterated_division_needs_order():
    with pytest.raises(ValueError, match="insufficient order"):
        iterated_division_check(5, 4)
