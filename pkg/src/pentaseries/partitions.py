"""Partition counting via the sparse sign series, plus independent checks.

Multiplying the partition generating function by (1-x)(1-x^2)... gives 1, and
reading off the coefficient of x^n in that product turns the sparse expansion
into a recurrence:

    p(n) = sum over k = 1, 2, ... of
           (-1)^(k+1) * ( p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ),

with terms dropped once the argument goes negative.  Roughly 2*sqrt(2n/3)
earlier values contribute per n, so filling a table to n costs O(n^1.5)
big-integer additions, versus O(n^2) multiplications for direct series
inversion.  Both routes are implemented; their agreement is one of the
artifact's cross-checks, with a small enumeration oracle as the third leg.
"""

from __future__ import annotations

from .pentagonal import closed_form_series, gpent
from .series import TruncatedSeries, div_binomial, series_inverse


class PartitionTable:
    """Monotonically growing memo of p(0), p(1), ...

    Single-writer: extending must be serialized externally, while any frozen
    prefix can be read concurrently.
    """

    def __init__(self) -> None:
        self._values: list[int] = [1]

    @property
    def computed_upto(self) -> int:
        return len(self._values) - 1

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(self._values)

    def extend_to(self, n: int) -> None:
        vals = self._values
        while len(vals) <= n:
            m = len(vals)
            total = 0
            k = 1
            while True:
                g = gpent(k)
                if g > m:
                    break
                sign = 1 if k % 2 else -1
                total += sign * vals[m - g]
                g2 = gpent(-k)
                if g2 <= m:
                    total += sign * vals[m - g2]
                k += 1
            vals.append(total)

    def count(self, n: int) -> int:
        if n < 0:
            raise ValueError("negative n")
        self.extend_to(n)
        return self._values[n]


_shared_table = PartitionTable()


def partition_count(n: int, table: PartitionTable | None = None) -> int:
    """p(n) by the sign-series recurrence, memoized in `table` (a shared
    process-wide table when none is given)."""
    return (_shared_table if table is None else table).count(n)


def partition_values(n: int, table: PartitionTable | None = None) -> tuple[int, ...]:
    """p(0)..p(n) as a tuple."""
    t = _shared_table if table is None else table
    t.count(n)
    return t.values[: n + 1]


def partition_bruteforce(n: int) -> int:
    """p(n) by the largest-part dynamic program; verification oracle only.

    Deliberately a different algorithm family from partition_count: it never
    touches pentagonal numbers, so the two cannot share a bug.
    """
    if n < 0:
        raise ValueError("negative n")
    if n > 100:
        raise ValueError("oracle bound exceeded")
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


def partition_series(order: int) -> TruncatedSeries:
    """Generating-function route: invert the sparse sign series."""
    return series_inverse(closed_form_series(order))


def iterated_division_check(divisors: int, order: int) -> bool:
    """Divide the sparse series by (1-x), (1-x^2), ..., (1-x^divisors) in turn
    and test that the quotient is 1 modulo x^(divisors+1).

    The exact quotient is the product of the remaining factors, whose
    expansion starts 1 - x^(divisors+1), hence the modulus.
    """
    if divisors < 0:
        raise ValueError("negative divisor count")
    if order < divisors:
        raise ValueError("insufficient order")
    q = closed_form_series(order)
    for k in range(1, divisors + 1):
        q = div_binomial(q, k)
    head = q.coeffs[: divisors + 1]
    return head[0] == 1 and not any(head[1:])
