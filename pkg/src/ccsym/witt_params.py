"""Unique factorisation of units of k((t)).

Every unit is t^w * a0 * prod(1 - a_{-i} t^-i) * prod(1 - a_i t^i) with
a0 a unit, a_{-i} in m (finitely many nonzero) and a_i in k.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InsufficientPrecision, InternalError
from .laurent import LaurentSeries
from .ring import Ring, RingElement


def unipotent_factor(c):
    """Solve prod_{d=1}^{D} (1 - x_d e^d) = 1 + sum_d c_d e^d  mod e^{D+1}.

    ``c`` holds c_1..c_D over any commutative ring whose elements accept int
    coercion.  Greedy: x_1 = -c_1, divide out (1 - x_1 e), repeat.
    """
    D = len(c)
    poly = [1] + list(c)
    xs = []
    for d in range(1, D + 1):
        x = -poly[d]
        xs.append(x)
        if _is_zero(x):
            continue
        # multiply by 1/(1 - x e^d) = sum_k x^k e^{dk}
        new = list(poly)
        power = x
        k = 1
        while d * k <= D:
            for i in range(d * k, D + 1):
                if not _is_zero(poly[i - d * k]):
                    new[i] = new[i] + power * poly[i - d * k]
            k += 1
            power = power * x
        poly = new
    return xs


def _is_zero(x) -> bool:
    if isinstance(x, int):
        return x == 0
    if isinstance(x, LaurentSeries):
        return x.is_zero() and x.prec is None
    if isinstance(x, RingElement):
        return x.is_zero()
    return x == 0


@dataclass(frozen=True)
class WittParameters:
    """w, a0, sparse neg {i: a_-i}, dense pos (a_1..a_P) and P = pos_prec.

    ``pos_prec is None`` means the positive part is known completely (every
    a_i beyond ``pos`` is zero).
    """

    ring: Ring
    w: int
    a0: RingElement
    neg: dict = field(default_factory=dict)
    pos: tuple = ()
    pos_prec: int | None = 0

    def a(self, i: int) -> RingElement:
        """Witt parameter a_i for any integer i."""
        if i == 0:
            return self.a0
        if i < 0:
            return self.neg.get(-i, self.ring.zero())
        if i <= len(self.pos):
            return self.pos[i - 1]
        if self.pos_prec is None:
            return self.ring.zero()
        raise InsufficientPrecision(f"a_{i} unknown (pos_prec {self.pos_prec})", i)

    def max_neg(self) -> int:
        return max(self.neg, default=0)

    def to_json(self) -> dict:
        return {
            "w": self.w,
            "a0": str(self.a0),
            "neg": {str(i): str(v) for i, v in sorted(self.neg.items())},
            "pos": [str(v) for v in self.pos],
            "pos_prec": self.pos_prec,
        }


def _negative_part(f: LaurentSeries) -> LaurentSeries:
    if f.prec is not None and f.prec < 0:
        raise InsufficientPrecision("principal part not fully known", 0)
    return LaurentSeries._raw(f.ring, f.ord, [f.coeff(d) for d in range(f.ord, 0)], None)


def split_unit(f: LaurentSeries):
    """Return (w, N, P) with f = t^w * N * P.

    N is an exact polynomial in t^-1 with constant term 1 and coefficients in
    m; P is a unit of k[[t]].  Each pass divides by 1 + (negative part of
    cur_- / cur_+), which pushes the surviving negative part one power of m
    deeper, so at most e-1 passes are needed.
    """
    ring = f.ring
    e = ring.nilpotency
    w = f.winding_number()
    cur = f.shift(-w)
    if cur.prec is not None and cur.prec <= 0:
        raise InsufficientPrecision(f"prec {f.prec} <= winding number {w}", w + 1)
    N = LaurentSeries.constant(ring, 1)
    bound = e * (cur.principal_depth() + 1)
    for _ in range(bound + 1):
        if cur.prec is not None and cur.prec <= 0:
            raise InsufficientPrecision(f"window of {f} exhausted while stripping the principal part", None)
        neg = _negative_part(cur)
        if neg.is_zero():
            break
        if not all(c.in_maximal_ideal() for c in neg.coeffs):
            raise InternalError("negative coefficient outside m after peeling t^w")
        pos = cur - neg
        depth = neg.principal_depth()
        h = neg.mul(pos.inverse(depth + 1))
        if h.prec is not None and h.prec < 0:
            raise InsufficientPrecision("window too short to separate the principal part", None)
        n1 = 1 + _negative_part(h)
        N = N.mul(n1)
        cur = cur.mul(n1.inverse())
    else:
        raise InternalError("negative-part stripping exceeded its pass bound")
    if cur.ord < 0 and cur.coeffs:
        raise InternalError("stripping left a principal part")
    return w, N, cur


def factor_negative(N: LaurentSeries) -> dict:
    """Sparse {i: a_-i} with prod(1 - a_-i t^-i) = N."""
    ring = N.ring
    L = N.principal_depth()
    if L == 0:
        return {}
    D = L * (ring.nilpotency - 1)
    xs = unipotent_factor([N.coeff(-d) for d in range(1, D + 1)])
    neg = {d: x for d, x in enumerate(xs, start=1) if not x.is_zero()}
    check = LaurentSeries.constant(ring, 1)
    for i, a in neg.items():
        if not a.in_maximal_ideal():
            raise InternalError(f"a_-{i} = {a} is not in m")
        check = check.mul(1 - LaurentSeries.monomial(ring, a, -i))
    if check != N:
        raise InternalError("negative factorisation does not reassemble")
    return neg


def factor_positive(P: LaurentSeries, pos_terms: int | None = None):
    """(a0, pos, pos_prec) for a unit P of k[[t]]."""
    a0 = P.coeff(0)
    if P.prec is None:
        if P.end <= 1:
            return a0, (), None
        if pos_terms is None:
            raise InsufficientPrecision("exact series with infinitely many positive parameters needs pos_terms")
        D = pos_terms
    else:
        D = P.prec - 1
        if pos_terms is not None:
            D = min(D, pos_terms)
    tail = P * a0.inverse()
    xs = unipotent_factor([tail.coeff(d) for d in range(1, D + 1)])
    return a0, tuple(xs), D


def witt_factor(f: LaurentSeries, pos_terms: int | None = None) -> WittParameters:
    w, N, P = split_unit(f)
    neg = factor_negative(N)
    a0, pos, pos_prec = factor_positive(P, pos_terms)
    return WittParameters(f.ring, w, a0, neg, pos, pos_prec)


def witt_assemble(params: WittParameters, out_prec: int | None = None) -> LaurentSeries:
    """Multiply the presentation back out (to ``out_prec`` if given)."""
    ring = params.ring
    neg = LaurentSeries.constant(ring, 1)
    for i, a in sorted(params.neg.items()):
        neg = neg.mul(1 - LaurentSeries.monomial(ring, a, -i))
    if params.pos_prec is None:
        cap = None
    else:
        cap = params.pos_prec + 1
    pos = LaurentSeries.constant(ring, params.a0) if cap is None else LaurentSeries.constant(ring, params.a0, cap)
    for i, a in enumerate(params.pos, start=1):
        if not a.is_zero():
            pos = pos.mul(1 - LaurentSeries.monomial(ring, a, i), cap=cap)
    out = neg.mul(pos).shift(params.w)
    if out_prec is not None:
        if out.prec is not None and out_prec > out.prec:
            raise InsufficientPrecision(f"requested prec {out_prec} exceeds known {out.prec}", out_prec)
        out = out.truncate(out_prec)
    return out
