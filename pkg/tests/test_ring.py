import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ccsym.errors import InvalidOrder, NonPrimeModulus, NotAUnit, RingMismatch
from ccsym.ring import Ring

from .conftest import RINGS


def test_descriptors():
    k = Ring(5, 3)
    assert str(k) == "Fp:5,eps:3"
    assert k.nilpotency == 3
    assert Ring.parse("Fp:5,eps:3") == k
    assert Ring.parse("Q") == Ring(None, 1)
    assert Ring(None).is_field and Ring(None).nilpotency == 1
    assert Ring(2, 8).nilpotency == 8
    with pytest.raises(NonPrimeModulus):
        Ring(4, 2)
    with pytest.raises(InvalidOrder):
        Ring(5, 0)


def test_inverse_examples():
    k = Ring(5, 2)
    x = k.elem([2, 1])
    assert x.inverse() == k.elem([3, 1])
    assert x * x.inverse() == 1
    q = Ring(None, 3)
    e = q.eps()
    assert (1 + e) * (1 - e) == 1 - e ** 2
    with pytest.raises(NotAUnit):
        Ring(3).zero().inverse()


def test_unit_and_maximal():
    k = Ring(5, 3)
    e = k.eps()
    assert not e.is_unit() and e.in_maximal_ideal()
    assert (2 + e).is_unit()
    assert Ring(None).zero().in_maximal_ideal()
    assert e ** 3 == 0 and e ** 2 != 0


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        Ring(5, 2).one() + Ring(5, 3).one()


def test_negative_powers():
    k = Ring(7, 3)
    x = k.elem([3, 1, 4])
    assert x ** -2 * x ** 2 == 1
    with pytest.raises(NotAUnit):
        k.eps() ** -1


def test_rational_coercion():
    k = Ring(7)
    assert k(Fraction(1, 2)) == 4
    with pytest.raises(NotAUnit):
        k(Fraction(1, 7))
    q = Ring(None, 2)
    assert str(q.elem([Fraction(1, 2), Fraction(-2, 3)])) == "1/2-2/3*e"


@pytest.mark.parametrize("k", RINGS, ids=str)
def test_units_invert(k):
    rng = random.Random(str(k))
    for _ in range(1000):
        x = k.random(rng, "unit")
        assert x * x.inverse() == 1


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-50, 50), min_size=3, max_size=3), st.lists(st.integers(-50, 50), min_size=3, max_size=3),
       st.lists(st.integers(-50, 50), min_size=3, max_size=3))
def test_ring_axioms(a, b, c):
    for k in (Ring(5, 3), Ring(None, 3)):
        x, y, z = k.elem(a), k.elem(b), k.elem(c)
        assert x * (y + z) == x * y + x * z
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        assert x - x == 0
