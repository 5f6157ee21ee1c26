"""Two independent expansions of (1-x)(1-x^2)(1-x^3)... as term streams.

Both algorithms work the same way at heart: the tail of the product that has
not yet been expanded is held as a residual series (classically written with
the letters A, B, C, ...), one binomial factor of that residual is expanded,
equal powers are regrouped, and exactly two explicit terms fall out per
stage.  What distinguishes the methods is the regrouping, and therefore the
pairing of the emitted exponents:

* method 1 pairs the exponents (3m^2+m)/2 and (3(m+1)^2-(m+1))/2, i.e. each
  stage head together with the low exponent of the NEXT index.  Its stage
  heads run 2, 7, 15, 26, 40, 57, ...

* method 2 anchors stage n at t_n = 3n(n+1)/2 (three times a triangular
  number) and emits the pair (t_n - 2n, t_n - n), which is exactly
  ((3n^2-n)/2, (3n^2+n)/2) -- both exponents of one index.  Its anchors run
  3, 9, 18, 30, 45, ...

The streams below are driven ONLY by additive recurrences on those stage
quantities; neither consults the pentagonal closed form.  Their agreement
with each other and with the closed form is therefore genuine
cross-validation, not circularity.

Classical presentations also tabulate each stage head as nested sums of
smaller pieces (7 = 3 + 4, 15 = 7 + 8, and finer splittings).  That
bookkeeping is descriptive only; nothing here models or reproduces it.
Streams carry nothing but (sign, exponent) pairs.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import islice
from typing import Iterator, NamedTuple

from .series import TruncatedSeries

_METHODS = ("method1", "method2")


class Term(NamedTuple):
    sign: int
    exponent: int


class StageState(NamedTuple):
    method: str
    m: int
    head: int


def _check_method(method: str) -> None:
    if method not in _METHODS:
        raise ValueError(f"unknown method {method!r}")


def _stages1() -> Iterator[tuple[int, int, int]]:
    """Yield (m, e1, e2) forever: e1 starts at 2, e2 = e1 + (2m+1),
    and the next e1 is e2 + (m+1)."""
    e1, m = 2, 1
    while True:
        e2 = e1 + (2 * m + 1)
        yield m, e1, e2
        e1 = e2 + (m + 1)
        m += 1


def _stages2() -> Iterator[tuple[int, int, int, int]]:
    """Yield (n, low, high, anchor) forever: anchor t starts at 3 and grows
    by 3(n+1); the emitted pair is (t - 2n, t - n)."""
    t, n = 3, 1
    while True:
        yield n, t - 2 * n, t - n, t
        t += 3 * (n + 1)
        n += 1


def _terms(method: str) -> Iterator[Term]:
    if method == "method1":
        yield Term(1, 0)
        yield Term(-1, 1)
        for m, e1, e2 in _stages1():
            s = -1 if m % 2 else 1
            yield Term(s, e1)
            yield Term(-s, e2)
    else:
        yield Term(1, 0)
        for n, low, high, _ in _stages2():
            s = -1 if n % 2 else 1
            yield Term(s, low)
            yield Term(s, high)


def method1_stream(count: int) -> list[Term]:
    """First `count` terms: (+1,0), (-1,1), then the stage pairs with
    alternating pair signs."""
    return list(islice(_terms("method1"), count))


def method2_stream(count: int) -> list[Term]:
    """First `count` terms: (+1,0), then for n = 1, 2, ... the equal-signed
    pair at (t_n - 2n, t_n - n)."""
    return list(islice(_terms("method2"), count))


def stage_states(method: str, count: int) -> list[StageState]:
    """The first `count` stage records; head is e1 for method 1 and the
    triangular anchor for method 2."""
    _check_method(method)
    out = []
    if method == "method1":
        for m, e1, _ in islice(_stages1(), count):
            out.append(StageState(method, m, e1))
    else:
        for n, _, _, anchor in islice(_stages2(), count):
            out.append(StageState(method, n, anchor))
    return out


def stage_emissions(method: str, m: int) -> tuple[int, int]:
    """The exponent pair stage m emits, ascending."""
    _check_method(method)
    if m < 1:
        raise ValueError("stage index below 1")
    if method == "method1":
        for mm, e1, e2 in _stages1():
            if mm == m:
                return e1, e2
    for nn, low, high, _ in _stages2():
        if nn == m:
            return low, high
    raise AssertionError("unreachable")


def stream_series(method: str, order: int) -> TruncatedSeries:
    """Assemble the stream into a dense series truncated at `order`."""
    _check_method(method)
    if order < 0:
        raise ValueError("negative order")
    c = [0] * (order + 1)
    for sign, exponent in _terms(method):
        if exponent > order:
            break
        c[exponent] += sign
    return TruncatedSeries(c)


@lru_cache(maxsize=256)
def residual_series(method: str, m: int, order: int) -> TruncatedSeries:
    """The stage-m residual (letter value) from its defining sum, mod x^(order+1).

    method 1, stage m:   sum over j >= 0 of
        x^(h + m*j) * (1 - x^m)(1 - x^(m+1))...(1 - x^(m+j)),
    where h is the stage head (h = 2 for m = 1).

    method 2, stage m:   x^t  minus  the sum over j >= 0 of
        x^(t + m*j) * (1 - x^m)(1 - x^(m+1))...(1 - x^(m+j+1)),
    where t = 3m(m+1)/2 is the stage anchor.

    Summand j + 1 extends summand j's factor product by one binomial, so the
    product is grown incrementally and clipped to the exponents that can
    still land at or below `order`.  The sum is finite because the minimal
    exponent of summand j grows without bound; summation stops at the first
    summand that lies entirely above the truncation.
    """
    _check_method(method)
    if m < 1:
        raise ValueError("stage index below 1")
    if order < 0:
        raise ValueError("negative order")

    if method == "method1":
        base0 = next(e1 for mm, e1, _ in _stages1() if mm == m)
    else:
        base0 = next(a for nn, _, _, a in _stages2() if nn == m)

    acc = [0] * (order + 1)
    if base0 > order:
        return TruncatedSeries(acc)

    if method == "method2":
        acc[base0] = 1

    # prod holds the running factor product, truncated to the largest prefix
    # that can still contribute: summand j only touches acc[base..], so only
    # order - base + 1 of its coefficients matter.
    prod = [0] * (order - base0 + 1)
    prod[0] = 1
    if method == "method2" and m < len(prod):
        prod[m:] = [hi - lo for hi, lo in zip(prod[m:], prod)]

    j = 0
    while True:
        base = base0 + m * j
        if base > order:
            break
        del prod[order - base + 1 :]
        k = m + j if method == "method1" else m + j + 1
        if k < len(prod):
            prod[k:] = [hi - lo for hi, lo in zip(prod[k:], prod)]
        if method == "method1":
            acc[base:] = [s + p for s, p in zip(acc[base:], prod)]
        else:
            acc[base:] = [s - p for s, p in zip(acc[base:], prod)]
        j += 1
    return TruncatedSeries(acc)


def verify_stage(method: str, m: int, order: int) -> bool:
    """Check the stage identity relating residual m to residual m+1.

    method 1:  residual(m) = x^e1 - x^e2 - residual(m+1)
    method 2:  residual(m) = x^a + x^b - residual(m+1),

    where (e1, e2) are stage m's emissions and (a, b) are stage (m+1)'s.
    Verified as exact coefficient equality at the given order.
    """
    _check_method(method)
    if m < 1:
        raise ValueError("stage index below 1")
    if method == "method1":
        lo, hi = stage_emissions(method, m)
        signs = (1, -1)
    else:
        lo, hi = stage_emissions(method, m + 1)
        signs = (1, 1)
    if hi > order:
        raise ValueError("order below stage emissions")

    r = residual_series(method, m, order)
    r_next = residual_series(method, m + 1, order)
    expected = [0] * (order + 1)
    expected[lo] = signs[0]
    expected[hi] = signs[1]
    return [a + b for a, b in zip(r.coeffs, r_next.coeffs)] == expected


def term_text(term: Term) -> str:
    return f"{'+' if term.sign > 0 else '-'} {term.exponent}"


def terms_json_objs(terms: list[Term]) -> list[dict]:
    return [{"sign": t.sign, "exp": t.exponent} for t in terms]
