"""Big Witt vectors W_{<=N}(A) in live coordinates.

Addition and multiplication come from the product identities in
A[e]/(e^{N+1}) followed by refactorisation; no universal polynomials are
stored.  Coordinates may be RingElements, Fractions/ints or LaurentSeries.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError, ShapeMismatch
from .laurent import LaurentSeries
from .ring import RATIONALS, Ring, RingElement
from .symbol import contou_carrere
from .witt_params import _is_zero, unipotent_factor


@dataclass(frozen=True)
class WittVector:
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        if not self.coords:
            raise ShapeMismatch("Witt vectors need N >= 1")

    @property
    def N(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int):
        """Live coordinate x_i, 1-based."""
        return self.coords[i - 1]

    def is_zero(self) -> bool:
        return all(_is_zero(x) for x in self.coords)

    def __add__(self, other):
        return witt_add(self, other)

    def __mul__(self, other):
        return witt_mul(self, other)

    def p_typical(self, p: int) -> tuple:
        """Coordinates at 1, p, p^2, ... <= N."""
        out, i = [], 1
        while i <= self.N:
            out.append(self[i])
            i *= p
        return tuple(out)

    def __str__(self):
        return "[" + ", ".join(str(x) for x in self.coords) + "]"


@dataclass(frozen=True)
class GhostVector:
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))

    @property
    def N(self) -> int:
        return len(self.coords)

    def __getitem__(self, n: int):
        return self.coords[n - 1]


def _check(x: WittVector, y: WittVector):
    if x.N != y.N:
        raise ShapeMismatch(f"lengths {x.N} and {y.N} differ")


def _poly_mul(a: list, b: list, N: int) -> list:
    out = [0] * (N + 1)
    for i, u in enumerate(a):
        if _is_zero(u):
            continue
        for j in range(N + 1 - i):
            v = b[j]
            if not _is_zero(v):
                out[i + j] = out[i + j] + u * v
    return out


def _binomial(x, d: int, N: int) -> list:
    """Coefficients of 1 - x e^d mod e^{N+1}."""
    out = [1] + [0] * N
    if d <= N:
        out[d] = -x
    return out


def _as_series(x: WittVector) -> list:
    N = x.N
    poly = [1] + [0] * N
    for i, xi in enumerate(x.coords, start=1):
        if not _is_zero(xi):
            poly = _poly_mul(poly, _binomial(xi, i, N), N)
    return poly


def witt_add(x: WittVector, y: WittVector) -> WittVector:
    _check(x, y)
    poly = _poly_mul(_as_series(x), _as_series(y), x.N)
    return WittVector(_fill(unipotent_factor(poly[1:]), x))


def witt_mul(x: WittVector, y: WittVector) -> WittVector:
    _check(x, y)
    N = x.N
    poly = [1] + [0] * N
    for i, xi in enumerate(x.coords, start=1):
        if _is_zero(xi):
            continue
        for j, yj in enumerate(y.coords, start=1):
            if _is_zero(yj):
                continue
            d = gcd(i, j)
            deg = i * j // d
            if deg > N:
                continue
            factor = _binomial(xi ** (j // d) * yj ** (i // d), deg, N)
            for _ in range(d):
                poly = _poly_mul(poly, factor, N)
    return WittVector(_fill(unipotent_factor(poly[1:]), x))


def _fill(xs: list, like: WittVector) -> list:
    """Replace int placeholders by zeros of the coordinate ring."""
    template = next((c for c in like.coords if not isinstance(c, int)), None)
    if template is None:
        return xs
    zero = template * 0
    return [zero + v if isinstance(v, int) else v for v in xs]


def witt_zero(N: int, zero=0) -> WittVector:
    return WittVector([zero] * N)


def witt_one(N: int, one=1) -> WittVector:
    return WittVector([one] + [one * 0] * (N - 1))


def ghost(x: WittVector) -> GhostVector:
    """x~_n = sum_{d | n} d x_d^{n/d}."""
    out = []
    for n in range(1, x.N + 1):
        acc = 0
        for d in range(1, n + 1):
            if n % d == 0 and not _is_zero(x[d]):
                acc = acc + x[d] ** (n // d) * d
        out.append(acc)
    return GhostVector(_fill(out, x))


def _q_algebra(v) -> bool:
    if isinstance(v, RATIONALS):
        return True
    if isinstance(v, (RingElement, LaurentSeries)):
        return v.ring.is_rational
    return False


def unghost(g: GhostVector) -> WittVector:
    """Triangular inverse of ``ghost``; only over Q-algebras."""
    if not all(_q_algebra(v) for v in g.coords):
        raise DomainError("unghost needs a Q-algebra")
    xs = []
    for n in range(1, g.N + 1):
        acc = g[n]
        for d in range(1, n):
            if n % d == 0 and not _is_zero(xs[d - 1]):
                acc = acc - xs[d - 1] ** (n // d) * d
        xs.append(acc * Fraction(1, n))
    return WittVector(xs)


def res_w(f: LaurentSeries, x: WittVector) -> WittVector:
    """The W_{<=N}(F)-valued pairing of f in F((t))^x with x in W_{<=N}(F((t))).

    Reads <f, prod(1 - x_i e^i)> over k = F[e]/(e^{N+1}) as prod(1 - r_i e^i).
    """
    F = f.ring
    if not F.is_field:
        raise DomainError("res_w takes series over the base field")
    N = x.N
    k = F.with_order(N + 1)
    g = LaurentSeries.constant(k, 1)
    for i, xi in enumerate(x.coords, start=1):
        if isinstance(xi, LaurentSeries):
            if xi.ring != F:
                raise DomainError("coordinates must be series over the same field")
            lifted = xi.change_ring(k)
        else:
            lifted = LaurentSeries.constant(k, F(xi).c[0])
        if lifted.is_zero() and lifted.prec is None:
            continue
        g = g.mul(1 - lifted * k.eps(i))
    s = contou_carrere(f.change_ring(k), g)
    r = unipotent_factor([F.scalar(v) for v in s.c[1:]])
    return WittVector(r)


def witt_sum(vectors, N: int, zero) -> WittVector:
    acc = witt_zero(N, zero)
    for v in vectors:
        acc = witt_add(acc, v)
    return acc


def base_ring_of(x: WittVector) -> Ring | None:
    for c in x.coords:
        if isinstance(c, (RingElement, LaurentSeries)):
            return c.ring
    return None
