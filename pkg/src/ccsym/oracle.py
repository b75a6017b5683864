"""Independent route to the symbol through determinants on k[[t]]/(f).

A unit factors as t^c * (distinguished binomials) * (unit of k[[t]]).
The commutator pairing {f, g} is bimultiplicative and antisymmetric,
trivial on distinguished/distinguished and unit/unit pairs, and equals
det(g | k[[t]]/(f)) on distinguished/unit pairs.  The symbol is then
<f, g> = (-1)^{w(f)w(g)} {f, g}^-1.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import InsufficientPrecision, ShapeMismatch
from .laurent import LaurentSeries
from .ring import Ring, RingElement
from .witt_params import factor_negative, split_unit


@dataclass(frozen=True)
class DistinguishedPoly:
    """t^n + c_{n-1} t^{n-1} + ... + c_0 with every c_i in m."""

    ring: Ring
    coeffs: tuple

    def __post_init__(self):
        if not all(c.in_maximal_ideal() for c in self.coeffs):
            raise ValueError("distinguished polynomials have lower coefficients in m")

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    @classmethod
    def binomial(cls, ring: Ring, i: int, a: RingElement) -> DistinguishedPoly:
        """t^i - a."""
        cs = [ring.zero()] * i
        cs[0] = -a
        return cls(ring, tuple(cs))

    def as_series(self) -> LaurentSeries:
        return LaurentSeries(self.ring, 0, list(self.coeffs) + [self.ring.one()])

    def __str__(self):
        return str(self.as_series())


@dataclass(frozen=True)
class TDUFactorization:
    c: int
    dist: tuple
    unit: LaurentSeries


class Matrix:
    """Square matrix over k, stored row-major."""

    def __init__(self, ring: Ring, rows):
        self.ring = ring
        self.rows = tuple(tuple(ring(x) for x in r) for r in rows)
        self.n = len(self.rows)
        if any(len(r) != self.n for r in self.rows):
            raise ShapeMismatch("matrix is not square")

    @classmethod
    def identity(cls, ring: Ring, n: int) -> Matrix:
        return cls(ring, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __repr__(self):
        return "Matrix([" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.rows) + "])"


def factor_tdu(f: LaurentSeries) -> TDUFactorization:
    w, N, P = split_unit(f)
    neg = factor_negative(N)
    dist = tuple(DistinguishedPoly.binomial(f.ring, i, a) for i, a in sorted(neg.items()))
    c = w - sum(neg)
    return TDUFactorization(c, dist, P)


def _poly_mod(poly: list, f: DistinguishedPoly) -> list:
    """Remainder of a coefficient list modulo the monic f."""
    n = f.degree
    r = list(poly)
    for top in range(len(r) - 1, n - 1, -1):
        q = r[top]
        if q.is_zero():
            continue
        r[top] = f.ring.zero()
        for i, c in enumerate(f.coeffs):
            r[top - n + i] = r[top - n + i] - q * c
    r = r[:n]
    return r + [f.ring.zero()] * (n - len(r))


def mult_matrix(g: LaurentSeries, f: DistinguishedPoly) -> Matrix:
    """Matrix of multiplication by g on k[[t]]/(f) in the basis 1, t, ..., t^{n-1}.

    t^{n e} lies in (f), so g truncated below degree n*e acts exactly.
    """
    ring = f.ring
    n = f.degree
    need = n * ring.nilpotency
    if g.coeffs and g.ord < 0:
        raise ValueError("g must lie in k[[t]]")
    if g.prec is not None and g.prec < need:
        raise InsufficientPrecision(f"g known below degree {g.prec}, need {need}", need)
    gl = [g.coeff(d) for d in range(need)]
    cols = []
    for j in range(n):
        cols.append(_poly_mod([ring.zero()] * j + gl, f))
    return Matrix(ring, [[cols[j][i] for j in range(n)] for i in range(n)])


def det_over_k(M: Matrix) -> RingElement:
    """Gaussian elimination with unit pivots; cofactor expansion when a column has none."""
    ring = M.ring
    return _det([list(r) for r in M.rows], ring)


def _det(a: list, ring: Ring) -> RingElement:
    n = len(a)
    if n == 0:
        return ring.one()
    det = ring.one()
    a = [list(r) for r in a]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col].is_unit()), None)
        if piv is None:
            sub = [row[col:] for row in a[col:]]
            return det * _cofactor(sub, ring)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det = det * p
        pinv = p.inverse()
        for r in range(col + 1, n):
            factor = a[r][col] * pinv
            if factor.is_zero():
                continue
            row, prow = a[r], a[col]
            for c in range(col, n):
                row[c] = row[c] - factor * prow[c]
    return det


def _cofactor(a: list, ring: Ring) -> RingElement:
    """Laplace expansion along the first column."""
    n = len(a)
    if n == 1:
        return a[0][0]
    total = ring.zero()
    for r in range(n):
        x = a[r][0]
        if x.is_zero():
            continue
        minor = [row[1:] for i, row in enumerate(a) if i != r]
        term = x * _det(minor, ring)
        total = total - term if r % 2 else total + term
    return total


def det_leibniz(M: Matrix) -> RingElement:
    """Permutation-sum determinant (small matrices only)."""
    ring = M.ring
    n = M.n
    total = ring.zero()
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = ring.one()
        for i, j in enumerate(perm):
            term = term * M.rows[i][j]
        total = total - term if inv % 2 else total + term
    return total


def _t_against(wg: int, b0: RingElement) -> RingElement:
    """{t, g} from <t, g> = (-1)^{w(g)} / b0 (only w and b0 survive when f = t)."""
    sym = b0.inverse()
    if wg % 2:
        sym = -sym
    inv = sym.inverse()
    return -inv if wg % 2 else inv


def symbol_oracle(f: LaurentSeries, g: LaurentSeries) -> RingElement:
    """<f, g> from determinants, never touching the double-product formula."""
    ring = f.ring
    F = factor_tdu(f)
    G = factor_tdu(g)
    wf = F.c + sum(d.degree for d in F.dist)
    wg = G.c + sum(d.degree for d in G.dist)
    U, V = F.unit, G.unit
    # {t, distinguished} = 1 since a distinguished binomial has b0 = 1
    comm = _t_against(0, V.coeff(0)) ** F.c * _t_against(0, U.coeff(0)) ** (-G.c)
    for d in F.dist:
        comm = comm * _t_against(d.degree, ring.one()) ** (-G.c)
        comm = comm * det_over_k(mult_matrix(V, d))
    for d in G.dist:
        comm = comm * _t_against(d.degree, ring.one()) ** F.c
        comm = comm * det_over_k(mult_matrix(U, d)).inverse()
    value = comm.inverse()
    return -value if (wf * wg) % 2 else value
