"""Seeded random data for the property suites."""
from __future__ import annotations

import random

from .laurent import LaurentSeries
from .p1 import INF, Point, RationalFunction
from .ring import Ring


def unit_series(k: Ring, rng: random.Random, depth: int = 2, extra: int | None = None) -> LaurentSeries:
    """Random unit of k((t)): nilpotent principal part below a unit leading term."""
    e = k.nilpotency
    w = rng.randint(-2, 2)
    d = rng.randint(0, depth) if e > 1 else 0
    if extra is None:
        extra = (e - 1) ** 2 * depth + 2 * e * depth + 6
    terms = {deg: k.random(rng, "maximal") for deg in range(w - d, w)}
    terms[w] = k.random(rng, "unit")
    for deg in range(w + 1, w + extra):
        terms[deg] = k.random(rng)
    return LaurentSeries.from_terms(k, terms, prec=w + extra)


def one_plus_m_series(k: Ring, rng: random.Random, lo: int = -2, prec: int = 25) -> LaurentSeries:
    terms = {d: k.random(rng, "maximal") for d in range(lo, prec)}
    terms[0] = terms.get(0, k.zero()) + 1
    return LaurentSeries.from_terms(k, terms, prec=prec)


def field_series(F: Ring, rng: random.Random, lo: int = -3, prec: int = 22) -> LaurentSeries:
    return LaurentSeries.from_terms(F, {d: F.random(rng) for d in range(lo, prec)}, prec=prec)


def parameter_change(k: Ring, rng: random.Random) -> LaurentSeries:
    """tau with w(tau) = 1 and a nilpotent principal part."""
    terms = {-1: k.random(rng, "maximal"), 0: k.random(rng, "maximal"), 1: k.random(rng, "unit")}
    for d in (2, 3):
        terms[d] = k.random(rng)
    return LaurentSeries.from_terms(k, terms)


def point_pool(F: Ring) -> list:
    if F.p is None:
        return [F.base(v) for v in range(-3, 4)]
    return [F.base(v) for v in range(F.p)]


def random_points(F: Ring, rng: random.Random, max_size: int = 5, need_infinity: bool | None = None) -> tuple:
    pool = point_pool(F)
    size = rng.randint(1, max_size)
    with_inf = rng.random() < 0.5 if need_infinity is None else need_infinity
    finite = rng.sample(pool, min(size - (1 if with_inf else 0), len(pool)))
    pts = [Point(v) for v in sorted(finite)]
    if with_inf or not pts:
        pts.append(INF)
    return tuple(pts)


def _linear_power(k: Ring, lam, n: int) -> RationalFunction:
    if n >= 0:
        return RationalFunction.linear(k, lam) ** n
    return RationalFunction(k, (k.one(),), {lam: -n})


def random_r0(k: Ring, rng: random.Random, S, kind: str = "any", max_pole: int = 2, max_deg: int = 3) -> RationalFunction:
    """Random element of R0 (x) k with poles in S; ``kind='maximal'`` puts it in R0 (x) m."""
    finite = [p.value for p in S if not p.is_infinity]
    den = {lam: rng.randint(0, max_pole) for lam in finite}
    dd = sum(den.values())
    top = dd + max_deg if INF in S else dd
    num = tuple(k.random(rng, kind) for _ in range(rng.randint(0, top) + 1))
    return RationalFunction(k, num, den).simplify()


def random_unit(k: Ring, rng: random.Random, S, max_mult: int = 2) -> RationalFunction:
    """Random element of (R0 (x) k)^x: split reduction times 1 + (R0 (x) m)."""
    finite = [p.value for p in S if not p.is_infinity]
    mult = {lam: rng.randint(-max_mult, max_mult) for lam in finite}
    if INF not in S and finite:
        mult[finite[-1]] -= sum(mult.values())
    f = RationalFunction.constant(k, k.scalar(k.random_base(rng, unit=True)))
    for lam, n in mult.items():
        f = f * _linear_power(k, lam, n)
    if k.nilpotency > 1:
        f = f * (1 + random_r0(k, rng, S, "maximal", max_pole=1, max_deg=2))
    return f
