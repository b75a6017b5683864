"""Rational functions on the projective line and the four reciprocity laws.

A function is numerator / denominator with the numerator a polynomial over
k and the denominator a monic product of (t - lam)^m over the base field,
so local expansions at the declared points are elementary.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .errors import FieldOnly, InsufficientPrecision, InternalError, NotInUnitGroup
from .laurent import LaurentSeries
from .ring import Ring, RingElement
from .symbol import contou_carrere, residue_from_symbol, tame_symbol
from .witt import WittVector, res_w, witt_add, witt_zero


@dataclass(frozen=True)
class Point:
    """A rational point of P^1; ``value is None`` is the point at infinity."""

    value: object = None

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    def __str__(self):
        return "inf" if self.value is None else str(self.value)

    @classmethod
    def parse_set(cls, text: str, ring: Ring) -> tuple:
        pts = []
        for item in text.split(","):
            item = item.strip()
            if not item:
                continue
            if item in ("inf", "oo", "infinity"):
                pts.append(INF)
            else:
                from fractions import Fraction

                pts.append(cls(ring.base(Fraction(item))))
        return tuple(dict.fromkeys(pts))


INF = Point(None)


def _sort_key(p: Point):
    return (1, 0) if p.is_infinity else (0, p.value)


@dataclass(frozen=True)
class RationalFunction:
    """num(t) / prod (t - lam)^m; ``den`` maps lam -> m > 0."""

    ring: Ring
    num: tuple
    den: dict = field(default_factory=dict)

    def __post_init__(self):
        num = [self.ring(c) for c in self.num]
        while num and num[-1].is_zero():
            num.pop()
        object.__setattr__(self, "num", tuple(num))
        object.__setattr__(self, "den", {lam: m for lam, m in self.den.items() if m})

    # -- constructors --------------------------------------------------------
    @classmethod
    def constant(cls, ring: Ring, c) -> RationalFunction:
        return cls(ring, (ring(c),))

    @classmethod
    def t(cls, ring: Ring) -> RationalFunction:
        return cls(ring, (ring.zero(), ring.one()))

    @classmethod
    def linear(cls, ring: Ring, lam) -> RationalFunction:
        """t - lam."""
        return cls(ring, (ring(-ring.base(lam)), ring.one()))

    # -- structure -------------------------------------------------------------
    def num_degree(self) -> int:
        return len(self.num) - 1

    def den_degree(self) -> int:
        return sum(self.den.values())

    def is_zero(self) -> bool:
        return not self.num

    def reduce(self) -> RationalFunction:
        F = self.ring.with_order(1)
        return RationalFunction(F, tuple(F.scalar(c.c[0]) for c in self.num), dict(self.den))

    def eps_part(self, i: int) -> RationalFunction:
        F = self.ring.with_order(1)
        return RationalFunction(F, tuple(F.scalar(c.c[i]) for c in self.num), dict(self.den))

    def change_ring(self, ring: Ring) -> RationalFunction:
        return RationalFunction(ring, tuple(ring.elem(c.c) for c in self.num), dict(self.den))

    def den_poly(self) -> list:
        poly = [self.ring.one()]
        for lam, m in sorted(self.den.items()):
            for _ in range(m):
                poly = _pmul(poly, [self.ring(-lam), self.ring.one()])
        return poly

    # -- arithmetic --------------------------------------------------------------
    def _coerce(self, other) -> RationalFunction:
        if isinstance(other, RationalFunction):
            return other
        return RationalFunction.constant(self.ring, other)

    def _common(self, other):
        den = dict(self.den)
        for lam, m in other.den.items():
            den[lam] = max(den.get(lam, 0), m)
        a = list(self.num)
        b = list(other.num)
        for lam, m in den.items():
            for _ in range(m - self.den.get(lam, 0)):
                a = _pmul(a, [self.ring(-lam), self.ring.one()])
            for _ in range(m - other.den.get(lam, 0)):
                b = _pmul(b, [self.ring(-lam), self.ring.one()])
        return a, b, den

    def __add__(self, other):
        o = self._coerce(other)
        a, b, den = self._common(o)
        return RationalFunction(self.ring, tuple(_padd(a, b)), den).simplify()

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(self.ring, tuple(-c for c in self.num), dict(self.den))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        den = dict(self.den)
        for lam, m in o.den.items():
            den[lam] = den.get(lam, 0) + m
        return RationalFunction(self.ring, tuple(_pmul(list(self.num), list(o.num))), den).simplify()

    __rmul__ = __mul__

    def split_over(self, points) -> tuple | None:
        """Write num = c * prod (t - lam)^k over the given finite points.

        Returns (c, {lam: k}) with c a unit of k, or None if the numerator
        has a nilpotent part or a factor outside the points.
        """
        poly = list(self.num)
        if not poly:
            return None
        mult = {}
        for lam in points:
            while len(poly) > 1:
                q, r = _divmod_linear(poly, self.ring(lam))
                if not r.is_zero():
                    break
                poly = q
                mult[lam] = mult.get(lam, 0) + 1
        if len(poly) != 1 or not poly[0].is_unit():
            return None
        return poly[0], mult

    def inverse_over(self, points) -> RationalFunction:
        """1/self when the numerator splits over ``points`` (finite values)."""
        split = self.split_over(points)
        if split is None:
            raise NotInUnitGroup("division needs a numerator split over the declared points")
        c, mult = split
        num = [c.inverse()]
        for lam, m in self.den.items():
            for _ in range(m):
                num = _pmul(num, [self.ring(-lam), self.ring.one()])
        return RationalFunction(self.ring, tuple(num), mult).simplify()

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("use inverse_over for negative powers")
        out = RationalFunction.constant(self.ring, 1)
        for _ in range(k):
            out = out * self
        return out

    def simplify(self) -> RationalFunction:
        """Cancel common (t - lam) factors between numerator and denominator."""
        num = list(self.num)
        den = dict(self.den)
        for lam in list(den):
            while den[lam] and len(num) > 1:
                q, r = _divmod_linear(num, self.ring(lam))
                if not r.is_zero():
                    break
                num = q
                den[lam] -= 1
        if not num:
            den = {}
        return RationalFunction(self.ring, tuple(num), den)

    def __eq__(self, other):
        if not isinstance(other, RationalFunction) or other.ring != self.ring:
            return NotImplemented
        a, b, _ = self._common(other)
        return not _padd(a, [-c for c in b])

    def __hash__(self):
        s = self.simplify()
        return hash((s.ring, s.num, tuple(sorted(s.den.items()))))

    # -- membership --------------------------------------------------------------
    def poles_in(self, S) -> bool:
        finite = {p.value for p in S if not p.is_infinity}
        if not set(self.den) <= finite:
            return False
        if INF not in S and self.num_degree() > self.den_degree():
            return False
        return True

    def is_unit_in(self, S) -> bool:
        """Membership in (R_0 (x) k)^x for the point set S."""
        if not self.poles_in(S):
            return False
        red = self.reduce()
        finite = [p.value for p in S if not p.is_infinity]
        if red.split_over(finite) is None:
            return False
        if INF not in S and red.num_degree() != red.den_degree():
            return False
        return True

    def __str__(self):
        numtxt = format_poly_t(self.num)
        if not self.den:
            return numtxt
        dentxt = "*".join(f"({_linear_text(lam)})^{m}" for lam, m in sorted(self.den.items()))
        return f"({numtxt})/({dentxt})"


def _linear_text(lam) -> str:
    if lam == 0:
        return "t"
    return f"t+{-lam}" if lam < 0 else f"t-{lam}"


def _padd(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else None
        y = b[i] if i < len(b) else None
        out.append(x + y if x is not None and y is not None else (x if y is None else y))
    while out and out[-1].is_zero():
        out.pop()
    return out


def _pmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [None] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            v = x * y
            out[i + j] = v if out[i + j] is None else out[i + j] + v
    zero = a[0].ring.zero()
    out = [zero if v is None else v for v in out]
    while out and out[-1].is_zero():
        out.pop()
    return out


def _divmod_linear(poly: list, lam: RingElement):
    """Synthetic division by (t - lam): (quotient, remainder)."""
    n = len(poly) - 1
    q = [None] * n
    acc = poly[n]
    for i in range(n - 1, -1, -1):
        q[i] = acc
        acc = poly[i] + acc * lam
    return q, acc


def format_poly_t(num) -> str:
    return str(LaurentSeries(num[0].ring, 0, list(num))) if num else "0"


def _taylor_shift(poly: list, lam: RingElement) -> list:
    """Coefficients of p(lam + x)."""
    n = len(poly)
    out = [lam.ring.zero()] * n
    for i, c in enumerate(poly):
        if c.is_zero():
            continue
        power = lam.ring.one()
        for j in range(i, -1, -1):
            out[j] = out[j] + c * power * comb(i, j)
            power = power * lam
    return out


def local_expand(h: RationalFunction, s: Point, prec: int) -> LaurentSeries:
    """Laurent expansion of h in the uniformiser t - lam (or 1/t at infinity), below ``prec``."""
    ring = h.ring
    if not h.num:
        return LaurentSeries(ring, prec, [], prec)
    if s.is_infinity:
        dn, dd = h.num_degree(), h.den_degree()
        num = LaurentSeries(ring, 0, list(reversed(h.num)))
        den = LaurentSeries(ring, 0, list(reversed(h.den_poly())))
        shift = dd - dn
    else:
        lam = ring(s.value)
        num = LaurentSeries(ring, 0, _taylor_shift(list(h.num), lam))
        den = LaurentSeries(ring, 0, _taylor_shift(h.den_poly(), lam))
        shift = 0
    want = prec - shift
    inv = den.inverse(want - num.ord)
    out = num.mul(inv).shift(shift)
    if out.prec is not None and out.prec < prec:
        raise InsufficientPrecision(f"expansion reached only {out.prec}", prec)
    return out.truncate(prec)


def check_units(S, *fs):
    for f in fs:
        if not f.is_unit_in(S):
            raise NotInUnitGroup(f"{f} is not a unit of R for S = {{{', '.join(map(str, S))}}}")


def _auto(fn, start: int = 8, attempts: int = 8):
    """Run fn(prec) with doubling precision until it stops asking for more."""
    prec = start
    for _ in range(attempts):
        try:
            return fn(prec)
        except InsufficientPrecision:
            prec *= 2
    raise InsufficientPrecision(f"gave up at prec {prec}", prec)


def pole_order(h: RationalFunction, s: Point) -> int:
    if s.is_infinity:
        return max(h.num_degree() - h.den_degree(), 0)
    return h.den.get(s.value, 0)


def _start_prec(ring: Ring, s: Point, *fs) -> int:
    """e * (deepest pole at s + 1) + slack; _auto doubles it when short."""
    depth = max((pole_order(f, s) for f in fs), default=0)
    return ring.nilpotency * (depth + 1) + 4


def local_symbols(f: RationalFunction, g: RationalFunction, S, symbol=contou_carrere) -> dict:
    out = {}
    for s in sorted(S, key=_sort_key):
        start = _start_prec(f.ring, s, f, g)
        out[s] = _auto(lambda p, s=s: symbol(local_expand(f, s, p), local_expand(g, s, p)), start)
    return out


def _product(ring: Ring, values) -> RingElement:
    acc = ring.one()
    for v in values:
        acc = acc * v
    return acc


def verify_cc_reciprocity(f: RationalFunction, g: RationalFunction, S) -> RingElement:
    """prod_s <f_s, g_s>; reciprocity says this is 1."""
    check_units(S, f, g)
    return _product(f.ring, local_symbols(f, g, S).values())


def verify_weil(f: RationalFunction, g: RationalFunction, S) -> RingElement:
    if not f.ring.is_field:
        raise FieldOnly("Weil reciprocity is the field case")
    check_units(S, f, g)
    return _product(f.ring, local_symbols(f, g, S, tame_symbol).values())


def local_residues(f: RationalFunction, g: RationalFunction, S) -> dict:
    """{s: (Res_s(g df) directly, via the symbol over F[e]/(e^3))}."""
    if not f.ring.is_field:
        raise FieldOnly("residues are taken over the base field")
    for h in (f, g):
        if not h.poles_in(S):
            raise NotInUnitGroup(f"{h} has poles outside S")
    out = {}
    for s in sorted(S, key=_sort_key):
        start = _start_prec(f.ring.with_order(3), s, f, g)

        def both(p, s=s):
            fs, gs = local_expand(f, s, p), local_expand(g, s, p)
            return gs.mul(fs.derivative()).residue(), residue_from_symbol(fs, gs)

        out[s] = _auto(both, start)
    return out


def verify_residue_theorem(f: RationalFunction, g: RationalFunction, S) -> RingElement:
    """Sum of Res_s(g df); the two routes are required to agree pointwise."""
    local = local_residues(f, g, S)
    for s, (direct, via) in local.items():
        if direct != via:
            raise InternalError(f"residue routes disagree at {s}: {direct} vs {via}")
    total = f.ring.zero()
    for direct, _ in local.values():
        total = total + direct
    return total


def local_res_w(f: RationalFunction, x, N: int, S) -> dict:
    F = f.ring
    if not F.is_field:
        raise FieldOnly("Witt reciprocity is stated over the base field")
    check_units(S, f)
    for xi in x:
        if not xi.poles_in(S):
            raise NotInUnitGroup(f"{xi} has poles outside S")
    out = {}
    for s in sorted(S, key=_sort_key):
        start = _start_prec(F.with_order(N + 1), s, f, *x)

        def one(p, s=s):
            xs = WittVector([local_expand(xi, s, p) for xi in x])
            return res_w(local_expand(f, s, p), xs)

        out[s] = _auto(one, start)
    return out


def verify_witt_reciprocity(f: RationalFunction, x, N: int, S) -> WittVector:
    """Witt-sum over S of Res^W(f_s, x_s); reciprocity says this is zero."""
    if len(x) != N:
        raise ValueError(f"expected {N} coordinates, got {len(x)}")
    acc = witt_zero(N, f.ring.zero())
    for v in local_res_w(f, x, N, S).values():
        acc = witt_add(acc, v)
    return acc
