import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ccsym.errors import ExprSyntaxError, NotInUnitGroup
from ccsym.generators import random_points, random_unit, unit_series
from ccsym.laurent import LaurentSeries as L
from ccsym.p1 import Point
from ccsym.parser import parse_element, parse_points, parse_ratfunc, parse_series, split_list
from ccsym.ring import Ring


def test_series_examples():
    f = parse_series("t^-1 + 2", Ring(5))
    assert f.ord == -1 and f.coeffs == (Ring(5)(1), Ring(5)(2))
    k = Ring(3, 2)
    g = parse_series("(1+e)*t", k)
    assert g.ord == 1 and g.coeffs == (k.elem([1, 1]),)
    assert parse_series("1/(1-t)@prec=4", Ring(5)) == L.from_terms(Ring(5), {0: 1, 1: 1, 2: 1, 3: 1}, prec=4)


@pytest.mark.parametrize("text,offset", [("t^", 2), ("1+", 2), ("(1", 2), ("2*x", 2), ("", 0), ("t^1 @p", 4)])
def test_syntax_errors(text, offset):
    with pytest.raises(ExprSyntaxError) as info:
        parse_series(text, Ring(5))
    assert info.value.offset == offset
    assert info.value.expected


def test_precedence():
    F = Ring(7)
    assert parse_series("2*t^2", F) == L.monomial(F, 2, 2)
    assert parse_series("-t^2", F) == L.monomial(F, -1, 2)
    assert parse_series("1-2-3", F) == L.constant(F, -4)
    assert parse_series("2^3*2", F) == L.constant(F, 16)


def test_element_and_points():
    k = Ring(None, 3)
    assert parse_element("1/2-2/3*e+e^2", k) == k.elem([Fraction(1, 2), Fraction(-2, 3), 1])
    with pytest.raises(ExprSyntaxError):
        parse_element("t", k)
    assert parse_points("0, 1, inf", Ring(7)) == (Point(0), Point(1), Point(None))
    assert split_list("[3,1]") == ["3", "1"]
    assert split_list("[1/(t*(t-1)), 0]") == ["1/(t*(t-1))", "0"]


def test_ratfunc_division_must_split():
    F = Ring(7)
    S = (Point(0), Point(None))
    with pytest.raises(NotInUnitGroup):
        parse_ratfunc("1/(t-1)", F, S)
    h = parse_ratfunc("1/(t*(t-1))", F, (Point(0), Point(1), Point(None)))
    assert h.den == {0: 1, 1: 1}


@pytest.mark.parametrize("k", [Ring(5, 3), Ring(None, 3), Ring(7), Ring(2, 2)], ids=str)
def test_round_trip(k):
    rng = random.Random(str(k))
    for _ in range(100):
        f = unit_series(k, rng)
        assert parse_series(str(f), k) == f
        S = random_points(k, rng)
        h = random_unit(k, rng, S)
        assert parse_ratfunc(str(h), k, S) == h
        x = k.random(rng)
        assert parse_element(str(x), k) == x


@settings(max_examples=150, deadline=None)
@given(st.dictionaries(st.integers(-4, 6), st.lists(st.integers(-9, 9), min_size=2, max_size=2), max_size=6),
       st.one_of(st.none(), st.integers(7, 10)))
def test_round_trip_generated(terms, prec):
    k = Ring(None, 2)
    f = L.from_terms(k, {d: k.elem(c) for d, c in terms.items()}, prec=prec)
    assert parse_series(str(f), k) == f
