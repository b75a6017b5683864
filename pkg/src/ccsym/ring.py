"""Exact arithmetic in k = F[e]/(e^n) with F = F_p or Q.

Elements are immutable coefficient tuples ``c`` where ``c[i]`` is the
coefficient of e^i.  F_p values are ints in [0, p); Q values are gmpy2
``mpq`` rationals (plain ``Fraction`` is accepted on input).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from gmpy2 import mpq

from .errors import InvalidOrder, NonPrimeModulus, NotAUnit, RingMismatch

RATIONALS = (int, Fraction, type(mpq(0)))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Ring:
    """Descriptor of k = F[e]/(e^n).  ``p is None`` means F = Q."""

    p: int | None
    n: int = 1

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise NonPrimeModulus(f"{self.p} is not prime")
        if self.n < 1:
            raise InvalidOrder(f"eps order must be >= 1, got {self.n}")

    # -- descriptors --------------------------------------------------------
    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def is_field(self) -> bool:
        return self.n == 1

    @property
    def nilpotency(self) -> int:
        """Least e >= 1 with m^e = 0."""
        return self.n

    def with_order(self, n: int) -> Ring:
        return Ring(self.p, n)

    def __str__(self):
        base = "Q" if self.p is None else f"Fp:{self.p}"
        return base if self.n == 1 else f"{base},eps:{self.n}"

    @classmethod
    def parse(cls, text: str) -> Ring:
        """Read ``Fp:<p>[,eps:<n>]`` or ``Q[,eps:<n>]``."""
        parts = [s.strip() for s in text.split(",")]
        head, rest = parts[0], parts[1:]
        if head == "Q":
            p = None
        elif head.startswith("Fp:"):
            try:
                p = int(head[3:])
            except ValueError:
                raise ValueError(f"bad ring descriptor {text!r}") from None
        else:
            raise ValueError(f"bad ring descriptor {text!r}")
        n = 1
        for item in rest:
            if not item.startswith("eps:"):
                raise ValueError(f"bad ring descriptor {text!r}")
            n = int(item[4:])
        return cls(p, n)

    # -- base field -----------------------------------------------------------
    def base(self, v):
        """Canonical base-field representative of an int or Fraction."""
        if self.p is None:
            return mpq(v)
        if isinstance(v, RATIONALS) and v.denominator != 1:
            num, den = int(v.numerator), int(v.denominator)
            if den % self.p == 0:
                raise NotAUnit(f"denominator of {v} vanishes mod {self.p}")
            return num * pow(den, -1, self.p) % self.p
        return int(v) % self.p

    def base_inv(self, v):
        if v == 0:
            raise NotAUnit("zero is not invertible")
        if self.p is None:
            return 1 / v
        return pow(v, -1, self.p)

    def base_zero(self):
        return mpq(0) if self.p is None else 0

    # -- element constructors -------------------------------------------------
    def __call__(self, v) -> RingElement:
        """Coerce an int, Fraction, RingElement or coefficient sequence."""
        if isinstance(v, RingElement):
            if v.ring != self:
                raise RingMismatch(f"{v.ring} vs {self}")
            return v
        if isinstance(v, (list, tuple)):
            return self.elem(v)
        return self.scalar(v)

    def elem(self, coeffs: Iterable) -> RingElement:
        cs = [self.base(c) for c in coeffs]
        if len(cs) > self.n:
            cs = cs[: self.n]
        cs += [self.base_zero()] * (self.n - len(cs))
        return RingElement(self, tuple(cs))

    def scalar(self, v) -> RingElement:
        z = self.base_zero()
        return RingElement(self, (self.base(v),) + (z,) * (self.n - 1))

    def zero(self) -> RingElement:
        return self.scalar(0)

    def one(self) -> RingElement:
        return self.scalar(1)

    def eps(self, power: int = 1) -> RingElement:
        cs = [0] * self.n
        if power < self.n:
            cs[power] = 1
        return self.elem(cs)

    # -- random sampling ------------------------------------------------------
    def random_base(self, rng: random.Random, unit: bool = False, height: int = 3):
        if self.p is None:
            while True:
                v = Fraction(rng.randint(-height, height), rng.randint(1, 2))
                if v != 0 or not unit:
                    return v
        lo = 1 if unit else 0
        return rng.randint(lo, self.p - 1)

    def random(self, rng: random.Random, kind: str = "any") -> RingElement:
        """Sample an element; ``kind`` is ``any``, ``unit`` or ``maximal``."""
        cs = [self.random_base(rng) for _ in range(self.n)]
        if kind == "unit":
            cs[0] = self.random_base(rng, unit=True)
        elif kind == "maximal":
            cs[0] = 0
        return self.elem(cs)


class RingElement:
    __slots__ = ("ring", "c")

    def __init__(self, ring: Ring, c: tuple):
        self.ring = ring
        self.c = c

    # -- coercion -------------------------------------------------------------
    def _coerce(self, other) -> RingElement | None:
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, RATIONALS):
            return self.ring.scalar(other)
        return None

    # -- predicates -----------------------------------------------------------
    def is_unit(self) -> bool:
        return self.c[0] != 0

    def in_maximal_ideal(self) -> bool:
        return self.c[0] == 0

    def is_zero(self) -> bool:
        return not any(self.c)

    def valuation(self) -> int:
        """Least i with c[i] != 0; n for zero."""
        for i, v in enumerate(self.c):
            if v:
                return i
        return self.ring.n

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.ring.p
        if p is None:
            return RingElement(self.ring, tuple(a + b for a, b in zip(self.c, o.c)))
        return RingElement(self.ring, tuple((a + b) % p for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        if p is None:
            return RingElement(self.ring, tuple(-a for a in self.c))
        return RingElement(self.ring, tuple(-a % p for a in self.c))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RingElement(self.ring, mul_raw(self.c, o.c, self.ring.p))

    __rmul__ = __mul__

    def inverse(self) -> RingElement:
        if self.c[0] == 0:
            raise NotAUnit(f"{self} is not a unit")
        ring = self.ring
        a0inv = ring.base_inv(self.c[0])
        if ring.n == 1:
            return RingElement(ring, (a0inv,))
        # x = a0 (1 + y) with y in m; 1/(1+y) = sum (-y)^k, k < n
        y = self * ring.scalar(a0inv) - 1
        term = ring.one()
        acc = ring.one()
        for _ in range(1, ring.n):
            term = term * (-y)
            acc = acc + term
        return acc * ring.scalar(a0inv)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison -----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.ring == other.ring and self.c == other.c
        if isinstance(other, RATIONALS):
            try:
                return self.c == self.ring.scalar(other).c
            except NotAUnit:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.c))

    def __bool__(self):
        return any(self.c)

    def __repr__(self):
        return f"RingElement({self.ring}, {self})"

    def __str__(self):
        return format_poly(self.c, "e", self.ring.p)


def mul_raw(a: tuple, b: tuple, p: int | None) -> tuple:
    """Truncated product of two e-coefficient tuples of equal length."""
    n = len(a)
    if n == 1:
        v = a[0] * b[0]
        return (v if p is None else v % p,)
    out = [0] * n
    for i, x in enumerate(a):
        if x:
            for j in range(n - i):
                y = b[j]
                if y:
                    out[i + j] += x * y
    if p is None:
        return tuple(mpq(v) for v in out)
    return tuple(v % p for v in out)


def format_poly(c, var: str, p: int | None) -> str:
    """Render coefficients as ``2+3*e-e^2`` (re-parseable)."""
    parts = []
    for i, v in enumerate(c):
        if v == 0:
            continue
        neg = p is None and v < 0
        mag = -v if neg else v
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("-" if neg else "+") + body)
    return "".join(parts) if parts else "0"
