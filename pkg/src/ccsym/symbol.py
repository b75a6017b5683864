"""The Contou-Carrere symbol and its classical specialisations."""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DomainError, FieldOnly, InsufficientPrecision, InternalError
from .laurent import LaurentSeries
from .ring import RingElement
from .witt_params import factor_negative, factor_positive, split_unit


def _params(f: LaurentSeries):
    w, N, P = split_unit(f)
    return w, factor_negative(N), P


def contou_carrere(f: LaurentSeries, g: LaurentSeries) -> RingElement:
    """<f, g> from the closed double-product formula.

    Only a_i with i <= (e-1) J matter, J the largest index with b_{-J} != 0:
    a nonzero factor needs i/(i,j) < e, i.e. i <= (i,j)(e-1) <= j(e-1).
    Symmetrically for the b_j against a_{-i}.
    """
    ring = f.ring
    e = ring.nilpotency
    wf, negf, Pf = _params(f)
    wg, negg, Pg = _params(g)
    need_f = (e - 1) * max(negg, default=0)
    need_g = (e - 1) * max(negf, default=0)
    a0, apos, aprec = factor_positive(Pf, need_f)
    b0, bpos, bprec = factor_positive(Pg, need_g)
    if aprec is not None and aprec < need_f:
        raise InsufficientPrecision(
            f"first argument needs {need_f} positive Witt parameters, has {aprec}", need_f
        )
    if bprec is not None and bprec < need_g:
        raise InsufficientPrecision(
            f"second argument needs {need_g} positive Witt parameters, has {bprec}", need_g
        )

    value = a0 ** wg * b0 ** (-wf)
    if (wf * wg) % 2:
        value = -value
    one = ring.one()
    num = one
    for j, bj in negg.items():
        for i in range(1, min((e - 1) * j, len(apos)) + 1):
            ai = apos[i - 1]
            if ai.is_zero():
                continue
            d = gcd(i, j)
            if i // d >= e:
                continue
            num = num * (1 - ai ** (j // d) * bj ** (i // d)) ** d
    den = one
    for i, ai in negf.items():
        for j in range(1, min((e - 1) * i, len(bpos)) + 1):
            bj = bpos[j - 1]
            if bj.is_zero():
                continue
            d = gcd(i, j)
            if j // d >= e:
                continue
            den = den * (1 - ai ** (j // d) * bj ** (i // d)) ** d
    return value * num / den


def tame_symbol(f: LaurentSeries, g: LaurentSeries) -> RingElement:
    """(-1)^{v(f)v(g)} (f^{v(g)} / g^{v(f)})(0) over a field."""
    if not f.ring.is_field:
        raise FieldOnly(f"tame symbol needs a field, got {f.ring}")
    vf = f.winding_number()
    vg = g.winding_number()
    fu = f.shift(-vf).truncate(1)
    gu = g.shift(-vg).truncate(1)
    value = (fu ** vg * gu ** (-vf)).coeff(0)
    return -value if (vf * vg) % 2 else value


def residue_from_symbol(f: LaurentSeries, g: LaurentSeries) -> RingElement:
    """Res_{t=0}(g df) read off <1 - e f, 1 - e g> over F[e]/(e^3)."""
    base = f.ring
    if not base.is_field:
        raise FieldOnly("residue_from_symbol takes series over the base field")
    k = base.with_order(3)
    eps = k.eps()
    F = 1 - f.change_ring(k) * eps
    G = 1 - g.change_ring(k) * eps
    s = contou_carrere(F, G)
    if s.c[0] != 1 or s.c[1] != 0:
        raise InternalError(f"symbol {s} is not of the shape 1 + e^2 r")
    return base.scalar(-s.c[2])


def _log_nilpotent(x: LaurentSeries, e: int) -> LaurentSeries:
    """log(1 + x) for x with coefficients in m: sum_{k<e} (-1)^{k+1} x^k / k."""
    acc = x * 0
    power = LaurentSeries.constant(x.ring, 1)
    for k in range(1, e):
        power = power.mul(x)
        acc = acc + power * Fraction((-1) ** (k + 1), k)
    return acc


def _exp_nilpotent(r: RingElement) -> RingElement:
    acc = r.ring.one()
    term = r.ring.one()
    for k in range(1, r.ring.nilpotency):
        term = term * r * Fraction(1, k)
        acc = acc + term
    return acc


def symbol_exp_log(f: LaurentSeries, g: LaurentSeries) -> RingElement:
    """exp(Res(log f * dg/g)) for f in 1 + m((t)) over a Q-algebra."""
    ring = f.ring
    if not ring.is_rational:
        raise DomainError("exp-log formula needs a Q-algebra")
    x = f - 1
    if not all(c.in_maximal_ideal() for c in x.coeffs):
        raise DomainError("f is not in 1 + m((t))")
    e = ring.nilpotency
    lf = _log_nilpotent(x, e)
    # log f has ord >= -(e-1) depth(x); dg/g must be known past that
    want = (e - 1) * x.principal_depth() + 1
    ginv = g.inverse(want + 2 * max(g.principal_depth(), 0) + abs(g.winding_number()) + 2)
    dlog = g.derivative().mul(ginv)
    r = lf.mul(dlog).residue()
    return _exp_nilpotent(r)
