import random

import pytest

from ccsym.errors import FieldOnly, NotInUnitGroup
from ccsym.generators import random_points, random_r0, random_unit
from ccsym.laurent import LaurentSeries as L
from ccsym.oracle import symbol_oracle
from ccsym.p1 import (
    INF,
    Point,
    RationalFunction,
    local_expand,
    local_residues,
    local_res_w,
    local_symbols,
    verify_cc_reciprocity,
    verify_residue_theorem,
    verify_weil,
    verify_witt_reciprocity,
)
from ccsym.ring import Ring
from ccsym.symbol import contou_carrere

F7 = Ring(7)
S01 = (Point(0), Point(1), INF)


def test_local_expand_examples():
    t = RationalFunction.t(F7)
    inv_t = RationalFunction(F7, (1,), {0: 1})
    assert local_expand(inv_t, Point(0), 4) == L.from_terms(F7, {-1: 1}, prec=4)
    assert local_expand(t, INF, 3) == L.from_terms(F7, {-1: 1}, prec=3)
    h = RationalFunction(F7, (1,), {0: 1, 1: 1})
    assert local_expand(h, Point(0), 3) == L.from_terms(F7, {-1: -1, 0: -1, 1: -1, 2: -1}, prec=3)


def test_classical_pair():
    t = RationalFunction.t(F7)
    f, g = t, 1 - t
    assert list(local_symbols(f, g, S01).values()) == [1, 1, 1]
    assert verify_cc_reciprocity(f, g, S01) == 1
    assert verify_weil(f, g, S01) == 1
    assert verify_weil(f, f, S01) ** 2 == 1


def test_constant_against_function():
    t = RationalFunction.t(F7)
    g = t * t * (t - 1).inverse_over([0, 1]) * (t - 1).inverse_over([0, 1])
    assert verify_weil(RationalFunction.constant(F7, 3), g, S01) == 1


def test_nilpotent_example():
    k = Ring(5, 3)
    e = k.eps()
    t = RationalFunction.t(k)
    inv = RationalFunction(k, (1,), {1: 1})
    f = t * (1 + e * inv)
    g = (t - 1) * (1 + e * t * inv)
    local = local_symbols(f, g, S01)
    prod = k.one()
    for s, v in local.items():
        prod = prod * v
        assert v == symbol_oracle(local_expand(f, s, 30), local_expand(g, s, 30))
    assert prod == 1


def test_membership():
    t = RationalFunction.t(F7)
    S = (Point(0), INF)
    with pytest.raises(NotInUnitGroup):
        verify_cc_reciprocity(t - 1, t, S)
    with pytest.raises(NotInUnitGroup):
        verify_cc_reciprocity(t, t, (Point(0),))
    assert t.is_unit_in(S) and not (t - 1).is_unit_in(S)
    k = Ring(5, 2)
    tk = RationalFunction.t(k)
    # nilpotent perturbation of a unit stays a unit
    assert (tk + k.eps()).is_unit_in((Point(0), INF))
    with pytest.raises(FieldOnly):
        verify_weil(tk, tk, (Point(0), INF))


def test_residue_examples():
    t = RationalFunction.t(F7)
    h = RationalFunction(F7, (1,), {0: 1, 1: 1})
    local = local_residues(t, h, S01)
    assert [v[0] for v in local.values()] == [-1, 1, 0]
    assert verify_residue_theorem(t, h, S01) == 0
    p = t * t + 3 * t
    assert all(v == (0, 0) for s, v in local_residues(p, t * t * t + 1, (Point(0), INF)).items() if not s.is_infinity)
    assert verify_residue_theorem(p, t * t * t + 1, (Point(0), INF)) == 0
    assert verify_residue_theorem(RationalFunction.constant(F7, 4), h, S01) == 0


def test_witt_examples():
    F2 = Ring(2)
    t = RationalFunction.t(F2)
    f = t * RationalFunction(F2, (1,), {1: 1})
    zero = RationalFunction.constant(F2, 0)
    assert verify_witt_reciprocity(f, [zero] * 3, 3, S01).is_zero()
    x = [RationalFunction(F2, (1,), {0: 1, 1: 1}), zero, zero, zero]
    total = verify_witt_reciprocity(f, x, 4, S01)
    assert total.is_zero() and total.p_typical(2) == (0, 0, 0)


def test_witt_n1_is_residue_theorem():
    rng = random.Random(4)
    for F in (Ring(7), Ring(None)):
        for _ in range(20):
            S = random_points(F, rng)
            f = random_unit(F, rng, S)
            x1 = random_r0(F, rng, S)
            local = local_res_w(f, [x1], 1, S)
            for s, v in local.items():
                fs = local_expand(f, s, 20)
                dlog = fs.derivative().mul(fs.inverse(12))
                assert v[1] == -(local_expand(x1, s, 20).mul(dlog)).residue()
            assert verify_witt_reciprocity(f, [x1], 1, S).is_zero()


def test_divisor_degree_zero():
    rng = random.Random(5)
    for k in (Ring(7), Ring(5, 3)):
        for _ in range(30):
            S = random_points(k, rng)
            f = random_unit(k, rng, S)
            assert sum(local_expand(f, s, 6).winding_number() for s in S) == 0


def test_uniformizer_independence():
    rng = random.Random(6)
    k = Ring(5, 2)
    for _ in range(20):
        S = random_points(k, rng)
        f, g = random_unit(k, rng, S), random_unit(k, rng, S)
        tau = L.from_terms(k, {1: k.random(rng, "unit"), 2: k.random(rng), 3: k.random(rng)})
        for s in S:
            fs, gs = local_expand(f, s, 24), local_expand(g, s, 24)
            assert contou_carrere(fs.substitute(tau), gs.substitute(tau)) == contou_carrere(fs, gs)
