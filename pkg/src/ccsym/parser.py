"""Recursive-descent parser for ring elements, Laurent series and rational functions.

Grammar (``^`` binds tighter than ``*`` and ``/``, which bind tighter than
``+`` and ``-``; unary minus is allowed)::

    text    := expr ['@prec=' int]
    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ['^' exponent]
    exponent:= ['-'] int | '(' ['-'] int ')'
    atom    := int | 'e' | 't' | '(' expr ')'

The same parser evaluates into three domains: constants of k, series in
k((t)), and rational functions on P^1 whose divisions must split over the
declared points.
"""
from __future__ import annotations

import json

from .errors import ExprSyntaxError, NotAUnit, NotInUnitGroup
from .laurent import LaurentSeries
from .p1 import Point, RationalFunction
from .ring import Ring, RingElement


class _Parser:
    def __init__(self, text: str, domain):
        self.text = text
        self.pos = 0
        self.domain = domain

    # -- lexing helpers ------------------------------------------------------
    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _error(self, expected):
        self._skip()
        got = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
        raise ExprSyntaxError(f"unexpected {got} at offset {self.pos}", self.pos, sorted(expected))

    def _eat(self, ch: str) -> bool:
        if self._peek() == ch:
            self.pos += 1
            return True
        return False

    def _int(self) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self._error({"integer"})
        return int(self.text[start:self.pos])

    # -- grammar ---------------------------------------------------------------
    def parse(self):
        if self._peek() == "":
            self._error({"integer", "e", "t", "(", "-"})
        value = self.expr()
        prec = None
        if self._peek() == "@":
            if not self.text.startswith("@prec=", self.pos):
                self._error({"@prec="})
            self.pos += len("@prec=")
            negative = self._eat("-")
            prec = self._int() * (-1 if negative else 1)
        if self._peek() != "":
            self._error({"+", "-", "*", "/", "^", "@prec=", "end of input"})
        return value, prec

    def expr(self):
        value = self.term()
        while True:
            ch = self._peek()
            if ch == "+":
                self.pos += 1
                value = self.domain.add(value, self.term())
            elif ch == "-":
                self.pos += 1
                value = self.domain.add(value, self.domain.neg(self.term()))
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            ch = self._peek()
            if ch == "*":
                self.pos += 1
                value = self.domain.mul(value, self.unary())
            elif ch == "/":
                self.pos += 1
                at = self.pos
                value = self.domain.div(value, self.unary(), at)
            else:
                return value

    def unary(self):
        if self._eat("-"):
            return self.domain.neg(self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        if not self._eat("^"):
            return base
        if self._eat("("):
            k = self._signed()
            if not self._eat(")"):
                self._error({")"})
        else:
            if self._peek() not in "-0123456789" or self._peek() == "":
                self._error({"integer", "-", "("})
            k = self._signed()
        return self.domain.pow(base, k, self.pos)

    def _signed(self) -> int:
        negative = self._eat("-")
        return -self._int() if negative else self._int()

    def atom(self):
        ch = self._peek()
        if ch.isdigit():
            return self.domain.const(self._int())
        if ch == "(":
            self.pos += 1
            value = self.expr()
            if not self._eat(")"):
                self._error({")", "+", "-", "*", "/", "^"})
            return value
        if ch in ("e", "t"):
            self.pos += 1
            nxt = self.text[self.pos] if self.pos < len(self.text) else ""
            if nxt.isalnum() or nxt == "_":
                self.pos -= 1
                self._error({"integer", "e", "t", "("})
            return self.domain.eps() if ch == "e" else self.domain.var(self.pos - 1)
        self._error({"integer", "e", "t", "(", "-"})


class _SeriesDomain:
    """Values are LaurentSeries; constants are exact."""

    def __init__(self, ring: Ring, allow_t: bool = True, prec: int | None = None):
        self.ring = ring
        self.allow_t = allow_t
        self.prec = prec

    def const(self, n):
        return LaurentSeries.constant(self.ring, n)

    def eps(self):
        return LaurentSeries.constant(self.ring, self.ring.eps())

    def var(self, offset):
        if not self.allow_t:
            raise ExprSyntaxError(f"'t' not allowed in a ring element (offset {offset})", offset, ["integer", "e", "("])
        return LaurentSeries.var(self.ring)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a.mul(b)

    def div(self, a, b, offset):
        if b.is_exact and b.end - b.ord == 1 and b.coeffs:
            c = b.coeffs[0]
            if not c.is_unit():
                raise NotAUnit(f"division by the non-unit {c} at offset {offset}")
            return a.mul(LaurentSeries.monomial(self.ring, c.inverse(), -b.ord))
        if self.prec is None:
            return a.mul(b.inverse())
        # enough room for the numerator's pole and the nilpotent tail
        slack = (self.ring.nilpotency - 1) * (b.principal_depth() + 1) + max(-a.ord, 0)
        return a.mul(b.inverse(self.prec + slack))

    def pow(self, a, k, offset):
        if k >= 0:
            return a ** k
        return self.div(self.const(1), a ** (-k), offset)


class _RatFuncDomain:
    def __init__(self, ring: Ring, S):
        self.ring = ring
        self.finite = [p.value for p in S if not p.is_infinity]

    def const(self, n):
        return RationalFunction.constant(self.ring, n)

    def eps(self):
        return RationalFunction.constant(self.ring, self.ring.eps())

    def var(self, offset):
        return RationalFunction.t(self.ring)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def div(self, a, b, offset):
        try:
            return a * b.inverse_over(self.finite)
        except NotInUnitGroup as exc:
            raise NotInUnitGroup(f"{exc} (divisor at offset {offset})") from None

    def pow(self, a, k, offset):
        if k >= 0:
            return a ** k
        return self.div(RationalFunction.constant(self.ring, 1), a ** (-k), offset)


def _prec_hint(text: str) -> int | None:
    at = text.rfind("@prec=")
    try:
        return int(text[at + len("@prec="):]) if at >= 0 else None
    except ValueError:
        return None


def parse_series(text: str, ring: Ring) -> LaurentSeries:
    value, prec = _Parser(text, _SeriesDomain(ring, prec=_prec_hint(text))).parse()
    if prec is not None:
        value = value.truncate(prec)
    return value


def parse_element(text: str, ring: Ring) -> RingElement:
    value, prec = _Parser(str(text), _SeriesDomain(ring, allow_t=False)).parse()
    if prec is not None:
        raise ExprSyntaxError("a ring element takes no @prec", str(text).index("@"), ["end of input"])
    return value.coeff(0)


def parse_ratfunc(text: str, ring: Ring, S) -> RationalFunction:
    value, prec = _Parser(text, _RatFuncDomain(ring, S)).parse()
    if prec is not None:
        raise ExprSyntaxError("rational functions take no @prec", text.index("@"), ["end of input"])
    return value


def parse_points(text: str, ring: Ring) -> tuple:
    pts = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if item == "inf":
            pts.append(Point(None))
        else:
            v = parse_element(item, ring)
            if any(v.c[1:]):
                raise NotInUnitGroup(f"point {item} is not a base-field value")
            pts.append(Point(v.c[0]))
    if not pts:
        raise ExprSyntaxError("empty point set", 0, ["point"])
    return tuple(dict.fromkeys(pts))


def split_list(text: str) -> list:
    """Items of a ``[a, b, ...]`` list: JSON if possible, else comma-split."""
    text = text.strip()
    try:
        items = json.loads(text)
        if isinstance(items, list):
            return [str(v) for v in items]
    except json.JSONDecodeError:
        pass
    if not (text.startswith("[") and text.endswith("]")):
        raise ExprSyntaxError("expected a bracketed list", 0, ["["])
    inner, out, depth, cur = text[1:-1], [], 0, ""
    for ch in inner:
        if ch == "," and depth == 0:
            out.append(cur.strip())
            cur = ""
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur += ch
    if cur.strip():
        out.append(cur.strip())
    return out
