import pytest

from pentaseries.roots import (
    IntPolynomial,
    cyclotomic,
    poly_divrem,
    poly_mul,
    root_multiplicity,
    totient,
)

CYCLOTOMIC_SMALL = {
    1: (-1, 1),
    2: (1, 1),
    3: (1, 1, 1),
    4: (1, 0, 1),
    5: (1, 1, 1, 1, 1),
    6: (1, -1, 1),
    8: (1, 0, 0, 0, 1),
    9: (1, 0, 0, 1, 0, 0, 1),
    10: (1, -1, 1, -1, 1),
    12: (1, 0, -1, 0, 1),
}


def poly_mul_oracle(a, b):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def test_normalization():
    p = IntPolynomial([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    z = IntPolynomial([0, 0])
    assert z.is_zero
    assert z.degree == 0
    assert IntPolynomial([1, 2]) == p
    assert hash(IntPolynomial([1, 2])) == hash(p)


def test_monic_flag():
    assert IntPolynomial([5, 1]).is_monic
    assert not IntPolynomial([1, 2]).is_monic
    assert not IntPolynomial().is_monic


def test_poly_mul_matches_oracle(rng):
    for _ in range(20):
        a = [rng.randint(-9, 9) for _ in range(rng.randint(0, 8))]
        b = [rng.randint(-9, 9) for _ in range(rng.randint(0, 8))]
        got = poly_mul(IntPolynomial(a), IntPolynomial(b))
        assert got == IntPolynomial(poly_mul_oracle(a, b))


def test_divrem_exact_and_remainder():
    x2m1 = IntPolynomial([-1, 0, 1])
    xm1 = IntPolynomial([-1, 1])
    q, r = poly_divrem(x2m1, xm1)
    assert q == IntPolynomial([1, 1])
    assert r.is_zero
    q, r = poly_divrem(IntPolynomial([1, 0, 1]), xm1)
    assert q == IntPolynomial([1, 1])
    assert r == IntPolynomial([2])


def test_divrem_rejects_non_monic():
    with pytest.raises(ValueError, match="non-monic divisor"):
        poly_divrem(IntPolynomial([1, 1]), IntPolynomial([1, 2]))
    with pytest.raises(ValueError, match="non-monic divisor"):
        poly_divrem(IntPolynomial([1, 1]), IntPolynomial())


def poly_add_oracle(a, b):
    n = max(len(a), len(b))
    padded_a = list(a) + [0] * (n - len(a))
    padded_b = list(b) + [0] * (n - len(b))
    return [x + y for x, y in zip(padded_a, padded_b)]


def test_divrem_round_trip(rng):
    for _ in range(20):
        a = IntPolynomial([rng.randint(-9, 9) for _ in range(rng.randint(0, 10))])
        b = IntPolynomial([rng.randint(-9, 9) for _ in range(rng.randint(1, 5))] + [1])
        q, r = poly_divrem(a, b)
        recomposed = poly_add_oracle(poly_mul_oracle(b.coeffs, q.coeffs), r.coeffs)
        assert IntPolynomial(recomposed) == a
        assert r.is_zero or r.degree < b.degree


def test_cyclotomic_small_table():
    for d, coeffs in CYCLOTOMIC_SMALL.items():
        assert cyclotomic(d).coeffs == coeffs


def test_cyclotomic_monic_with_totient_degree():
    for d in range(1, 60):
        phi_d = cyclotomic(d)
        assert phi_d.is_monic
        assert phi_d.degree == totient(d)


def test_cyclotomic_product_reassembles():
    for d in (6, 12, 30):
        prod = IntPolynomial([1])
        for e in range(1, d + 1):
            if d % e == 0:
                prod = poly_mul(prod, cyclotomic(e))
        assert prod == IntPolynomial([-1] + [0] * (d - 1) + [1])


def test_cyclotomic_first_big_coefficient():
    # smallest order with a coefficient of magnitude 2
    phi = cyclotomic(105)
    assert phi.degree == 48
    assert min(phi.coeffs) == -2


def test_cyclotomic_bounds():
    with pytest.raises(ValueError, match="cyclotomic index out of range"):
        cyclotomic(0)
    with pytest.raises(ValueError, match="cyclotomic index out of range"):
        cyclotomic(10001)


def test_multiplicity_examples():
    assert root_multiplicity(6, 1) == 6
    assert root_multiplicity(6, 2) == 3
    assert root_multiplicity(3, 5) == 0
    assert root_multiplicity(4, 2) == 2
    assert root_multiplicity(0, 3) == 0


def test_multiplicity_floor_rule():
    for m in range(13):
        for d in range(1, 13):
            assert root_multiplicity(m, d) == m // d


def test_degree_bookkeeping():
    m = 12
    total = sum(totient(d) * root_multiplicity(m, d) for d in range(1, m + 1))
    assert total == m * (m + 1) // 2


@pytest.mark.parametrize(
    "n,phi",
    [(1, 1), (2, 1), (3, 2), (4, 2), (5, 4), (6, 2), (7, 6), (8, 4), (9, 6),
     (10, 4), (11, 10), (12, 4), (36, 12), (97, 96)],
)
def test_totient(n, phi):
    assert totient(n) == phi


def test_totient_rejects_nonpositive():
    with pytest.raises(ValueError):
        totient(0)
