import random
from math import gcd

import pytest

from ccsym.generators import unit_series
from ccsym.laurent import LaurentSeries as L
from ccsym.oracle import (
    DistinguishedPoly,
    Matrix,
    det_leibniz,
    det_over_k,
    factor_tdu,
    mult_matrix,
    symbol_oracle,
)
from ccsym.ring import Ring
from ccsym.symbol import contou_carrere


def test_factor_tdu_examples():
    k = Ring(3, 2)
    e = k.eps()
    tdu = factor_tdu(L.from_terms(k, {0: -e, 1: 1}))
    assert tdu.c == 0 and [d.coeffs for d in tdu.dist] == [(-e,)] and tdu.unit == 1
    tdu = factor_tdu(L.monomial(Ring(5), 1, 3))
    assert tdu.c == 3 and tdu.dist == () and tdu.unit == 1
    k5 = Ring(5, 2)
    tdu = factor_tdu(L.from_terms(k5, {0: 1, -2: -k5.eps()}))
    assert tdu.c == -2 and [d.coeffs for d in tdu.dist] == [(-k5.eps(), k5.zero())]


def test_mult_matrix_examples():
    k = Ring(3, 2)
    e = k.eps()
    b = k.elem([2, 1])
    f = DistinguishedPoly.binomial(k, 2, e)
    M = mult_matrix(L.from_terms(k, {0: 1, 1: -b}), f)
    assert M == Matrix(k, [[1, -b * e], [-b, 1]])
    assert det_over_k(M) == 1 - e * b * b
    assert mult_matrix(L.constant(k, 1), f) == Matrix.identity(k, 2)
    a = k.scalar(0) + e
    assert mult_matrix(L.var(k), DistinguishedPoly.binomial(k, 1, a)) == Matrix(k, [[a]])


def test_det_examples():
    k = Ring(5, 3)
    assert det_over_k(Matrix.identity(k, 4)) == 1
    d = [k.elem([1, 2]), k.eps(), k.elem([3, 0, 1])]
    diag = Matrix(k, [[d[i] if i == j else 0 for j in range(3)] for i in range(3)])
    assert det_over_k(diag) == d[0] * d[1] * d[2]


def test_det_against_leibniz(rng):
    for k in (Ring(5, 3), Ring(2, 2), Ring(None, 2)):
        for n in range(1, 5):
            for _ in range(25):
                kind = rng.choice(["any", "maximal"])
                M = Matrix(k, [[k.random(rng, kind if rng.random() < 0.5 else "any") for _ in range(n)] for _ in range(n)])
                assert det_over_k(M) == det_leibniz(M)


def test_oracle_examples():
    k = Ring(3, 2)
    e = k.eps()
    b = k.elem([2, 1])
    f = L.from_terms(k, {2: 1, 0: -e})
    g = L.from_terms(k, {0: 1, 1: -b})
    assert symbol_oracle(f, g) == 1 + e * b * b
    t = L.var(k)
    assert symbol_oracle(t, t) == -1
    f2 = L.from_terms(k, {3: 1, 0: -e})
    assert symbol_oracle(f, f2) == (-1) ** (2 * 3) == contou_carrere(f, f2)
    f1 = L.from_terms(k, {1: 1, 0: e})
    assert symbol_oracle(f1, f2) == -1


def test_det_multiplicative_and_high_power(rng):
    k = Ring(5, 3)
    for _ in range(40):
        n = rng.randint(1, 4)
        f = DistinguishedPoly(k, tuple(k.random(rng, "maximal") for _ in range(n)))
        g1 = L.from_terms(k, {d: k.random(rng, "unit" if d == 0 else "any") for d in range(n * 3 + 2)})
        g2 = L.from_terms(k, {d: k.random(rng, "unit" if d == 0 else "any") for d in range(n * 3 + 2)})
        assert det_over_k(mult_matrix(g1.mul(g2), f)) == det_over_k(mult_matrix(g1, f)) * det_over_k(mult_matrix(g2, f))
        h = L.from_terms(k, {d: k.random(rng) for d in range(4)})
        assert det_over_k(mult_matrix(1 + h.shift(n * 3), f)) == 1


@pytest.mark.parametrize("k", [Ring(3, 3), Ring(5, 2), Ring(2, 4)], ids=str)
def test_closed_form_small(k):
    rng = random.Random(str(k))
    for p in range(1, 5):
        for q in range(1, 5):
            d = gcd(p, q)
            for _ in range(5):
                a, b = k.random(rng, "maximal"), k.random(rng)
                M = mult_matrix(L.from_terms(k, {0: 1, q: -b}), DistinguishedPoly.binomial(k, p, a))
                assert det_over_k(M) == (1 - a ** (q // d) * b ** (p // d)) ** d


@pytest.mark.parametrize("k", [Ring(3, 3), Ring(5, 2), Ring(7), Ring(2, 3)], ids=str)
def test_oracle_matches_formula(k):
    rng = random.Random(str(k))
    for _ in range(40):
        f, g = unit_series(k, rng), unit_series(k, rng)
        assert symbol_oracle(f, g) == contou_carrere(f, g)
