"""Exact truncated power series over arbitrary-precision integers.

A series is held modulo x^(N+1) as a dense coefficient sequence indexed by
exponent, so a value of order N carries exactly N+1 integers.  Everything is
integer arithmetic; no float ever enters a computation here.  Binary
operations truncate to the smaller of the two operand orders instead of
zero-padding, which makes an accidental loss of precision visible as a
shrunken order rather than as silently wrong high coefficients.
"""

from __future__ import annotations

import operator
from collections.abc import Iterable, Sequence


class TruncatedSeries:
    """Dense integer power series truncated at a fixed order.

    Instances are immutable by convention: ``coeffs`` is a tuple and is never
    reassigned, so values can be shared freely and used as cache keys.
    Equality requires both the same order and the same coefficients.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = tuple(coeffs)
        if not cs:
            raise ValueError("empty series")
        self.coeffs = cs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, exponent: int) -> int:
        return self.coeffs[exponent]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return series_add(self, other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return series_mul(self, other)

    def __repr__(self) -> str:
        if self.order <= 11:
            return f"TruncatedSeries({list(self.coeffs)})"
        head = ", ".join(str(c) for c in self.coeffs[:12])
        return f"TruncatedSeries([{head}, ...], order={self.order})"


def series_from_coeffs(coeffs: Iterable[int]) -> TruncatedSeries:
    """Build a series from coefficients c0..cN; the order is len-1."""
    return TruncatedSeries(coeffs)


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries([x + y for x, y in zip(a.coeffs, b.coeffs)])


def convolve(a: Sequence[int], b: Sequence[int], out_len: int) -> list[int]:
    """Schoolbook convolution of coefficient sequences, cut at out_len.

    Shared by series multiplication (cut at the truncation order) and by
    untruncated polynomial multiplication (cut at deg a + deg b + 1).
    """
    out = [0] * out_len
    for i, ai in enumerate(a):
        if i >= out_len:
            break
        if ai == 0:
            continue
        hi = min(out_len - i, len(b))
        for j in range(hi):
            out[i + j] += ai * b[j]
    return out


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries(convolve(a.coeffs, b.coeffs, n + 1))


def _check_factor_exponent(k: int) -> None:
    if k == 0:
        raise ValueError("zero factor exponent")
    if k < 0:
        raise ValueError("negative factor exponent")


def _mul_binomial_inplace(c: list[int], k: int) -> None:
    # c[i] -= c[i-k] for i >= k.  The comprehension materialises before the
    # slice assignment lands, so every read sees the pre-update values.
    if k < len(c):
        c[k:] = [hi - lo for hi, lo in zip(c[k:], c)]


def mul_binomial(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """Multiply by (1 - x^k) in one linear pass."""
    _check_factor_exponent(k)
    c = list(a.coeffs)
    _mul_binomial_inplace(c, k)
    return TruncatedSeries(c)


def div_binomial(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """Divide exactly by (1 - x^k): the prefix-sum inverse of mul_binomial."""
    _check_factor_exponent(k)
    q = list(a.coeffs)
    for i in range(k, len(q)):
        q[i] += q[i - k]
    return TruncatedSeries(q)


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse modulo x^(order+1).

    Requires a unit constant term (+1 or -1); then b0 = a0 and every later
    coefficient comes from the full dense recurrence

        b_n = -a0 * sum(a_j * b_(n-j) for j in 1..n),

    which is quadratic in the order.  The inner products stay dense on
    purpose: this routine is one of the timing baselines, and skipping zero
    terms of a sparse operand would wreck the comparison.
    """
    c0 = a.coeffs[0]
    if c0 not in (1, -1):
        raise ValueError("non-unit constant term")
    ac = a.coeffs
    b = [c0]
    mul = operator.mul
    for n in range(1, a.order + 1):
        acc = sum(map(mul, ac[1 : n + 1], reversed(b)))
        b.append(-c0 * acc)
    return TruncatedSeries(b)


def partial_product(factors: int, order: int) -> TruncatedSeries:
    """Expand (1-x)(1-x^2)...(1-x^factors) modulo x^(order+1).

    Each factor is a single linear pass, so the whole product costs
    O(factors * order).  factors = 0 yields the constant series 1.
    """
    if factors < 0:
        raise ValueError("negative factor count")
    if order < 0:
        raise ValueError("negative order")
    c = [0] * (order + 1)
    c[0] = 1
    for k in range(1, factors + 1):
        _mul_binomial_inplace(c, k)
    return TruncatedSeries(c)


def agrees_upto(a: TruncatedSeries, b: TruncatedSeries, upto: int) -> bool:
    """True when a and b share coefficients 0..upto inclusive."""
    if upto > a.order or upto > b.order:
        raise ValueError("order below comparison bound")
    return a.coeffs[: upto + 1] == b.coeffs[: upto + 1]


def series_to_json(s: TruncatedSeries) -> dict:
    """JSON form: coefficients as decimal strings so nothing can round."""
    return {"order": s.order, "coeffs": [str(c) for c in s.coeffs]}


def series_from_json(obj: dict) -> TruncatedSeries:
    coeffs = [int(c) for c in obj["coeffs"]]
    if obj["order"] != len(coeffs) - 1:
        raise ValueError("order mismatch")
    return TruncatedSeries(coeffs)
