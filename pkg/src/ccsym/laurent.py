"""Truncated Laurent series over k = F[e]/(e^n).

A series stores its coefficients on the window ``[ord, prec)``.  The
principal part is always exact; ``prec`` is the exclusive upper bound of
known degrees, or ``None`` for an exact Laurent polynomial.  Every
operation reports the precision it can actually certify.
"""
from __future__ import annotations

from typing import Iterable, Mapping

from gmpy2 import mpq

from .errors import BadParameter, InsufficientPrecision, InternalError, NotAUnit, RingMismatch
from .ring import RATIONALS, Ring, RingElement


def _min_prec(*ps):
    finite = [p for p in ps if p is not None]
    return min(finite) if finite else None


class LaurentSeries:
    __slots__ = ("ring", "ord", "coeffs", "prec")

    def __init__(self, ring: Ring, ord: int, coeffs: Iterable, prec: int | None = None):
        cs = [ring(c) for c in coeffs]
        if prec is not None:
            if ord + len(cs) > prec:
                cs = cs[: max(prec - ord, 0)]
            cs += [ring.zero()] * (prec - ord - len(cs))
        else:
            while cs and cs[-1].is_zero():
                cs.pop()
        lead = 0
        while lead < len(cs) and cs[lead].is_zero():
            lead += 1
        if lead == len(cs):
            cs = []
            ord = prec if prec is not None else 0
        else:
            cs = cs[lead:]
            ord += lead
        self.ring = ring
        self.ord = ord
        self.coeffs = tuple(cs)
        self.prec = prec

    @classmethod
    def _raw(cls, ring: Ring, ord: int, coeffs: list, prec: int | None) -> LaurentSeries:
        """Build from already-normalised RingElement lists (skips coercion)."""
        obj = cls.__new__(cls)
        if prec is None:
            while coeffs and coeffs[-1].is_zero():
                coeffs.pop()
        lead = 0
        while lead < len(coeffs) and coeffs[lead].is_zero():
            lead += 1
        if lead == len(coeffs):
            coeffs = []
            ord = prec if prec is not None else 0
        elif lead:
            coeffs = coeffs[lead:]
            ord += lead
        obj.ring = ring
        obj.ord = ord
        obj.coeffs = tuple(coeffs)
        obj.prec = prec
        return obj

    # -- constructors -----------------------------------------------------------
    @classmethod
    def from_terms(cls, ring: Ring, terms: Mapping[int, object], prec: int | None = None) -> LaurentSeries:
        if not terms:
            return cls(ring, prec if prec is not None else 0, [], prec)
        degs = [d for d in terms if prec is None or d < prec]
        if not degs:
            return cls(ring, prec, [], prec)
        lo, hi = min(degs), max(degs)
        cs = [ring.zero()] * (hi - lo + 1)
        for d in degs:
            cs[d - lo] = cs[d - lo] + ring(terms[d])
        return cls(ring, lo, cs, prec)

    @classmethod
    def monomial(cls, ring: Ring, coeff, degree: int, prec: int | None = None) -> LaurentSeries:
        return cls.from_terms(ring, {degree: coeff}, prec)

    @classmethod
    def constant(cls, ring: Ring, value, prec: int | None = None) -> LaurentSeries:
        return cls.from_terms(ring, {0: value}, prec)

    @classmethod
    def var(cls, ring: Ring, prec: int | None = None) -> LaurentSeries:
        return cls.monomial(ring, 1, 1, prec)

    # -- inspection ---------------------------------------------------------------
    @property
    def is_exact(self) -> bool:
        return self.prec is None

    @property
    def end(self) -> int:
        """Exclusive upper degree of the stored coefficients."""
        return self.ord + len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, d: int) -> RingElement:
        if self.prec is not None and d >= self.prec:
            raise InsufficientPrecision(f"degree {d} is outside the known window (prec {self.prec})", d + 1)
        i = d - self.ord
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero()

    def terms(self) -> dict[int, RingElement]:
        return {self.ord + i: c for i, c in enumerate(self.coeffs) if not c.is_zero()}

    def principal_depth(self) -> int:
        return max(0, -self.ord) if self.coeffs else 0

    def is_unit(self) -> bool:
        return any(c.is_unit() for c in self.coeffs)

    def winding_number(self) -> int:
        """Degree of the lowest unit coefficient (the t-order of f mod m)."""
        for i, c in enumerate(self.coeffs):
            if c.is_unit():
                return self.ord + i
        raise NotAUnit(f"{self} has no unit coefficient in its known window")

    # -- coercion -------------------------------------------------------------------
    def _coerce(self, other) -> LaurentSeries | None:
        if isinstance(other, LaurentSeries):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, RATIONALS + (RingElement,)):
            return LaurentSeries.constant(self.ring, other)
        return None

    # -- additive structure ------------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prec = _min_prec(self.prec, o.prec)
        if not self.coeffs and not o.coeffs:
            return LaurentSeries._raw(self.ring, prec if prec is not None else 0, [], prec)
        lo = min(s.ord for s in (self, o) if s.coeffs)
        hi = max(s.end for s in (self, o))
        if prec is not None:
            hi = prec
            lo = min(lo, prec)
        out = []
        for d in range(lo, hi):
            a_i, b_i = d - self.ord, d - o.ord
            a = self.coeffs[a_i] if 0 <= a_i < len(self.coeffs) else None
            b = o.coeffs[b_i] if 0 <= b_i < len(o.coeffs) else None
            if a is None:
                out.append(b if b is not None else self.ring.zero())
            elif b is None:
                out.append(a)
            else:
                out.append(a + b)
        return LaurentSeries._raw(self.ring, lo, out, prec)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries._raw(self.ring, self.ord, [-c for c in self.coeffs], self.prec)

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

    # -- multiplicative structure ---------------------------------------------------------
    def __mul__(self, other):
        if isinstance(other, RATIONALS + (RingElement,)):
            s = self.ring(other)
            return LaurentSeries._raw(self.ring, self.ord, [c * s for c in self.coeffs], self.prec)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.mul(o)

    __rmul__ = __mul__

    def mul(self, other: LaurentSeries, cap: int | None = None) -> LaurentSeries:
        """Product; ``cap`` (if given) additionally truncates at that degree.

        Precision follows prec(fg) = min(ord f + prec g, ord g + prec f).
        """
        ring = self.ring
        if (self.prec is None and not self.coeffs) or (other.prec is None and not other.coeffs):
            return LaurentSeries._raw(ring, 0, [], None) if cap is None else LaurentSeries._raw(ring, cap, [], cap)
        pa = None if self.prec is None else self.prec + other.ord
        pb = None if other.prec is None else other.prec + self.ord
        prec = _min_prec(pa, pb, cap)
        if not self.coeffs or not other.coeffs:
            return LaurentSeries._raw(ring, prec, [], prec)
        lo = self.ord + other.ord
        hi = self.end + other.end - 1 if prec is None else prec
        if hi <= lo:
            return LaurentSeries._raw(ring, prec, [], prec)
        raw = _convolve([c.c for c in self.coeffs], [c.c for c in other.coeffs], 0, hi - lo, ring.n, ring.p)
        out = [RingElement(ring, c) for c in raw]
        return LaurentSeries._raw(ring, lo, out, prec)

    def shift(self, k: int) -> LaurentSeries:
        """Multiply by t^k."""
        return LaurentSeries._raw(
            self.ring, self.ord + k, list(self.coeffs), None if self.prec is None else self.prec + k
        )

    def truncate(self, prec: int | None) -> LaurentSeries:
        if prec is None:
            return self
        p = _min_prec(self.prec, prec)
        return LaurentSeries(self.ring, self.ord, self.coeffs, p)

    def inverse(self, prec: int | None = None) -> LaurentSeries:
        """Multiplicative inverse.

        Writes f = a t^v (1 - h) with a the lowest unit coefficient and sums
        the geometric series in h.  For an exact input the result is exact
        when h is nilpotent; otherwise ``prec`` bounds the output window.
        """
        v = self.winding_number()
        a = self.coeff(v)
        ainv = a.inverse()
        ring = self.ring
        e = ring.nilpotency
        f1 = self.shift(-v) * ainv
        h = 1 - f1
        depth = h.principal_depth()
        nilpotent_h = all(c.in_maximal_ideal() for c in h.coeffs)

        if f1.prec is None:
            if nilpotent_h and prec is None:
                target = None
            elif prec is None:
                raise InsufficientPrecision("inverse of a non-polynomial-invertible exact series needs prec")
            else:
                target = prec + v
        else:
            target = f1.prec - 2 * (e - 1) * depth
            if prec is not None:
                target = min(target, prec + v)
        if target is not None and target <= -(e - 1) * depth:
            raise InsufficientPrecision(f"inverse of {self} has an empty known window", None)

        # degrees dropped above the working cap cannot be pulled back below
        # target by the at most (e-1) remaining negative factors
        cap = None if target is None else target + (e - 1) * depth
        h_work = h if cap is None else _exact(h.truncate(cap))
        one = LaurentSeries.constant(ring, 1)
        acc = one
        term = one
        bound = e * (1 + depth) + 1 if cap is None else max(cap, 0) + (e - 1) * (depth + 1) + 2
        for _ in range(bound + 1):
            term = term.mul(h_work) if cap is None else _exact(term.mul(h_work, cap=cap))
            if term.is_zero():
                break
            acc = acc + term
        else:
            raise InternalError("geometric series for the inverse failed to terminate")
        if target is not None:
            acc = acc.truncate(target)
        return acc.shift(-v) * ainv

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(other, RATIONALS + (RingElement,)):
            return self * self.ring(other).inverse()
        return self.mul(o.inverse())

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.mul(self.inverse())

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = LaurentSeries.constant(self.ring, 1)
        base = self
        while k:
            if k & 1:
                result = result.mul(base)
            k >>= 1
            if k:
                base = base.mul(base)
        return result

    # -- calculus -----------------------------------------------------------------------
    def derivative(self) -> LaurentSeries:
        out = [c * (self.ord + i) for i, c in enumerate(self.coeffs)]
        return LaurentSeries._raw(
            self.ring, self.ord - 1, out, None if self.prec is None else self.prec - 1
        )

    def residue(self) -> RingElement:
        """Coefficient of t^-1."""
        return self.coeff(-1)

    def substitute(self, tau: LaurentSeries, prec: int | None = None) -> LaurentSeries:
        """Compose with tau (winding number 1): the series f(tau).

        ``prec`` caps the output window; it is required when f is exact with
        a pole and tau^-1 is not a Laurent polynomial.
        """
        if tau.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {tau.ring}")
        if tau.winding_number() != 1:
            raise BadParameter(f"substitution needs winding number 1, got {tau.winding_number()}")
        ring = self.ring
        e = ring.nilpotency
        depth = tau.shift(-1).principal_depth()
        slack = (e - 1) * depth
        if self.is_zero():
            if self.prec is None:
                return self
            tail = _min_prec(self.prec - slack, prec)
            return LaurentSeries._raw(ring, tail, [], tail)
        lo, hi = self.ord, self.end
        # every power tau^m (m in Z) has ord >= m - slack: nilpotency allows at
        # most e-1 factors from the principal part of tau/t
        tail_f = None if self.prec is None else self.prec - slack
        tail_tau = None if tau.prec is None else tau.prec + lo - 1 - 2 * slack
        tail = _min_prec(tail_f, tail_tau, prec)
        if tail is not None and tail <= lo - slack:
            raise InsufficientPrecision(f"substitution leaves an empty window (prec {tail})", None)
        t_known = _exact(tau)
        n_neg = max(-lo, 0)
        tinv = None
        if n_neg:
            u = t_known.shift(-1)
            if _nilpotent_tail(u):
                tinv = t_known.inverse()
            elif tail is None:
                raise InsufficientPrecision("exact pole composed with a non-polynomial inverse needs prec")
            else:
                tinv = _exact(t_known.inverse(tail + 2 * n_neg + 2 * slack + 1))

        def powers(base, count, cap):
            out = [LaurentSeries.constant(ring, 1)]
            cur = out[0]
            for _ in range(count):
                cur = cur.mul(base) if cap is None else _exact(cur.mul(base, cap=cap))
                out.append(cur)
            return out

        pos = powers(t_known, max(hi - 1, 0), None if tail is None else tail + slack)
        neg = powers(tinv, n_neg, None if tail is None else tail + n_neg + slack) if n_neg else []
        acc = LaurentSeries._raw(ring, 0, [], None)
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                d = lo + i
                acc = acc + (pos[d] if d >= 0 else neg[-d]) * c
        if tail is None:
            return acc
        return LaurentSeries(ring, acc.ord, acc.coeffs, tail) if acc.coeffs else LaurentSeries._raw(ring, tail, [], tail)

    # -- coefficient-ring changes ------------------------------------------------------------
    def change_ring(self, ring: Ring) -> LaurentSeries:
        """Lift F-coefficients into F[e]/(e^n) or reduce k-coefficients mod m."""
        if ring.p != self.ring.p:
            raise RingMismatch(f"{self.ring} vs {ring}")
        cs = [ring.elem(c.c) for c in self.coeffs]
        return LaurentSeries(ring, self.ord, cs, self.prec)

    def reduce(self) -> LaurentSeries:
        """Image in (k/m)((t))."""
        return self.change_ring(self.ring.with_order(1))

    def eps_part(self, i: int) -> LaurentSeries:
        """The F((t))-series of e^i coefficients."""
        base = self.ring.with_order(1)
        cs = [base.scalar(c.c[i]) for c in self.coeffs]
        return LaurentSeries(base, self.ord, cs, self.prec)

    # -- comparison / display ---------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentSeries):
            return (
                self.ring == other.ring
                and self.ord == other.ord
                and self.coeffs == other.coeffs
                and self.prec == other.prec
            )
        if isinstance(other, RATIONALS + (RingElement,)):
            return self == LaurentSeries.constant(self.ring, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.ord, self.coeffs, self.prec))

    def agrees(self, other: LaurentSeries) -> bool:
        """Equality on the common known window."""
        if self.ring != other.ring:
            return False
        hi = _min_prec(self.prec, other.prec)
        if hi is None:
            hi = max(self.end, other.end)
        lo = min(self.ord if self.coeffs else hi, other.ord if other.coeffs else hi)
        return all(self.coeff(d) == other.coeff(d) for d in range(lo, hi))

    def __repr__(self):
        return f"LaurentSeries({self.ring}, {self})"

    def __str__(self):
        return format_series(self)


def _exact(f: LaurentSeries) -> LaurentSeries:
    """Forget the precision bound (callers guarantee it is irrelevant)."""
    return LaurentSeries._raw(f.ring, f.ord, list(f.coeffs), None)


def _nilpotent_tail(u: LaurentSeries) -> bool:
    one = LaurentSeries.constant(u.ring, 1)
    return all(c.in_maximal_ideal() for c in (u - one).coeffs)


def _convolve(A: list, B: list, start: int, length: int, n: int, p: int | None) -> list:
    """Raw coefficients of A*B at offsets start..start+length-1 (offsets from A[0]B[0])."""
    if n == 1:
        a = [x[0] for x in A]
        b = [y[0] for y in B]
        out = [0] * length
        nb = len(b)
        for i, x in enumerate(a):
            if not x:
                continue
            j0 = max(0, start - i)
            j1 = min(nb, start + length - i)
            base = i - start
            for j in range(j0, j1):
                y = b[j]
                if y:
                    out[base + j] += x * y
        if p is None:
            return [(mpq(v),) for v in out]
        return [(v % p,) for v in out]
    nzA = [[(k, v) for k, v in enumerate(x) if v] for x in A]
    nzB = [[(k, v) for k, v in enumerate(y) if v] for y in B]
    out = [[0] * n for _ in range(length)]
    nb = len(B)
    for i, xs in enumerate(nzA):
        if not xs:
            continue
        j0 = max(0, start - i)
        j1 = min(nb, start + length - i)
        base = i - start
        for j in range(j0, j1):
            ys = nzB[j]
            if not ys:
                continue
            row = out[base + j]
            for ka, va in xs:
                for kb, vb in ys:
                    k = ka + kb
                    if k < n:
                        row[k] += va * vb
    if p is None:
        return [tuple(mpq(v) for v in row) for row in out]
    return [tuple(v % p for v in row) for row in out]


def format_series(f: LaurentSeries) -> str:
    """Render as ``(2+e)*t^-1+1+3*t^2@prec=5`` (re-parseable)."""
    parts = []
    for d, c in sorted(f.terms().items()):
        cs = str(c)
        simple = sum(1 for v in c.c if v) == 1
        if d == 0:
            body = cs if simple else f"({cs})"
        else:
            mono = "t" if d == 1 else f"t^{d}"
            if cs == "1":
                body = mono
            elif cs == "-1":
                body = "-" + mono
            elif simple:
                body = f"{cs}*{mono}"
            else:
                body = f"({cs})*{mono}"
        if parts and not body.startswith("-"):
            parts.append("+" + body)
        else:
            parts.append(body)
    text = "".join(parts) if parts else "0"
    if f.prec is not None:
        text += f"@prec={f.prec}"
    return text
