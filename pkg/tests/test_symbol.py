import random

import pytest

from ccsym.errors import DomainError, FieldOnly, InsufficientPrecision
from ccsym.generators import one_plus_m_series, unit_series
from ccsym.laurent import LaurentSeries as L
from ccsym.ring import Ring
from ccsym.symbol import contou_carrere, residue_from_symbol, symbol_exp_log, tame_symbol


def test_t_against_t():
    for k in (Ring(5), Ring(3, 3), Ring(None, 2)):
        t = L.var(k)
        assert contou_carrere(t, t) == -1
    assert contou_carrere(L.var(Ring(5)), L.var(Ring(5))) == 4


def test_reduction_example():
    for k in (Ring(5, 3), Ring(None, 3)):
        e = k.eps()
        f = L.from_terms(k, {0: 1, -1: -e})
        g = L.from_terms(k, {0: 1, 1: -e})
        assert contou_carrere(f, g) == 1 + e ** 2
        if k.is_rational:
            assert symbol_exp_log(f, g) == 1 + e ** 2


def test_field_units_pair_trivially():
    F = Ring(7)
    u = L.from_terms(F, {0: 1, 1: 3, 2: 5}, prec=6)
    v = L.from_terms(F, {0: 1, 2: 2}, prec=6)
    assert contou_carrere(u, v) == 1


def test_tame_examples():
    F5 = Ring(5)
    assert tame_symbol(L.var(F5), L.constant(F5, 2)) == 3
    assert contou_carrere(L.var(F5), L.constant(F5, 2)) == 3
    assert tame_symbol(L.var(F5), L.var(F5)) == -1
    F7 = Ring(7)
    assert tame_symbol(L.var(F7), L.from_terms(F7, {0: 1, 1: -1})) == 1
    with pytest.raises(FieldOnly):
        tame_symbol(L.var(Ring(5, 2)), L.var(Ring(5, 2)))


def test_residue_examples():
    F7 = Ring(7)
    assert residue_from_symbol(L.monomial(F7, 1, -1), L.var(F7)) == -1
    F5 = Ring(5)
    assert residue_from_symbol(L.var(F5), L.from_terms(F5, {0: 1, 2: 3, 3: 4})) == 0
    assert residue_from_symbol(L.monomial(F5, 1, -2), L.monomial(F5, 3, 1)) == 0
    with pytest.raises(FieldOnly):
        residue_from_symbol(L.var(Ring(5, 2)), L.var(Ring(5, 2)))


def test_exp_log_domain():
    with pytest.raises(DomainError):
        symbol_exp_log(L.constant(Ring(5, 2), 1), L.var(Ring(5, 2)))
    Q = Ring(None, 2)
    with pytest.raises(DomainError):
        symbol_exp_log(L.var(Q), L.var(Q))
    assert symbol_exp_log(L.constant(Q, 1), L.var(Q)) == 1


def test_exp_log_against_t():
    k = Ring(None, 4)
    rng = random.Random(3)
    for _ in range(20):
        f = one_plus_m_series(k, rng, prec=12)
        log_const = sum(
            ((f - 1) ** n).coeff(0) * ((-1) ** (n + 1)) * (1 / k.scalar(n)) for n in range(1, 4)
        )
        from ccsym.symbol import _exp_nilpotent

        assert symbol_exp_log(f, L.var(k)) == _exp_nilpotent(k.zero() + log_const)
        assert contou_carrere(f, L.var(k)) == symbol_exp_log(f, L.var(k))


def test_precision_bound_reported():
    k = Ring(5, 3)
    e = k.eps()
    f = L.from_terms(k, {0: 1, 1: 1, 2: 1}, prec=2)
    g = L.from_terms(k, {0: 1, -2: e})
    with pytest.raises(InsufficientPrecision) as info:
        contou_carrere(f, g)
    assert info.value.required == 4


@pytest.mark.parametrize("k", [Ring(7), Ring(5, 2), Ring(3, 3), Ring(None, 3)], ids=str)
def test_laws(k):
    rng = random.Random(str(k))
    for _ in range(60):
        f, f2, g = (unit_series(k, rng, depth=1, extra=16) for _ in range(3))
        s = contou_carrere(f, g)
        assert s * contou_carrere(g, f) == 1
        assert contou_carrere(f.mul(f2), g) == s * contou_carrere(f2, g)
        assert contou_carrere(f, f) ** 2 == 1
        if k.is_field:
            assert s == tame_symbol(f, g)
