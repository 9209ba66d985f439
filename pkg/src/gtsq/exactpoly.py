"""Exact polynomials in Z[q, x] and characteristic polynomials of q-Laplacians.

Multiplication and the Bareiss determinant both run through a Kronecker
substitution: a polynomial with coefficients bounded by ``2**(B-1)`` is stored
as its value at ``q = 2**B, x = 2**(B*(Dq+1))``. Evaluation is a ring
homomorphism and injective on the bounded range, so integer products and exact
integer divisions mirror the polynomial ones.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping, Sequence

from .gts import ShiftSite, apply_shift, decompose_cover
from .trees import LabelledTree

Number = int | float | Fraction | complex


class BiPoly:
    """Polynomial in ``q`` and ``x`` with integer coefficients.

    Terms are keyed by ``(q_degree, x_degree)``; zero coefficients are never
    stored. Instances are immutable and hashable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], int] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in term {(i, j)}")
            acc[(i, j)] = acc.get((i, j), 0) + int(c)
        self._terms = {k: c for k, c in acc.items() if c}
        self._hash: int | None = None

    @classmethod
    def const(cls, c: int) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def q(cls) -> BiPoly:
        return cls({(1, 0): 1})

    @classmethod
    def x(cls) -> BiPoly:
        return cls({(0, 1): 1})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms.items(), key=lambda kv: (-kv[0][1], -kv[0][0])))

    def is_zero(self) -> bool:
        return not self._terms

    def degree_x(self) -> int:
        return max((j for _, j in self._terms), default=-1)

    def degree_q(self) -> int:
        return max((i for i, _ in self._terms), default=-1)

    def coeff(self, q_deg: int, x_deg: int) -> int:
        return self._terms.get((q_deg, x_deg), 0)

    def coeff_x(self, j: int) -> BiPoly:
        """Coefficient of ``x**j`` as a polynomial in ``q`` alone."""
        return BiPoly({(i, 0): c for (i, jj), c in self._terms.items() if jj == j})

    def max_abs_coeff(self) -> int:
        return max((abs(c) for c in self._terms.values()), default=0)

    # ring structure

    def _coerce(self, other) -> BiPoly:
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, int):
            return BiPoly.const(other)
        return NotImplemented

    def __add__(self, other) -> BiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> BiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> BiPoly:
        return (-self) + other

    def __mul__(self, other) -> BiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return BiPoly()
        if len(self._terms) * len(other._terms) <= 64:
            out: dict[tuple[int, int], int] = {}
            for (i, j), a in self._terms.items():
                for (k, m), b in other._terms.items():
                    key = (i + k, j + m)
                    out[key] = out.get(key, 0) + a * b
            return BiPoly(out)
        bound = (
            self.max_abs_coeff()
            * other.max_abs_coeff()
            * min(len(self._terms), len(other._terms))
        )
        bits = bound.bit_length() + 2
        dq = self.degree_q() + other.degree_q()
        packed = _pack(self, bits, dq) * _pack(other, bits, dq)
        return _unpack(packed, bits, dq)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> BiPoly:
        out = BiPoly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # evaluation

    def eval(self, q: Number, x: Number):
        """Horner evaluation; exact for int/Fraction arguments."""
        result = 0
        for j in range(self.degree_x(), -1, -1):
            cq = 0
            for i in range(self.degree_q(), -1, -1):
                cq = cq * q + self._terms.get((i, j), 0)
            result = result * x + cq
        return result

    def specialize_q(self, q: Number) -> list:
        """Coefficients in ``x`` (ascending) after substituting ``q``."""
        coeffs = [0] * (self.degree_x() + 1)
        for (i, j), c in self._terms.items():
            coeffs[j] += c * q**i
        return coeffs

    # formatting

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self:
            mono = "*".join(
                s for s in (_power("q", i), _power("x", j)) if s
            )
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"BiPoly({self})"

    def to_json(self) -> list[list[int]]:
        return [[i, j, c] for (i, j), c in self]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[int]]) -> BiPoly:
        return cls({(int(i), int(j)): int(c) for i, j, c in data})


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def _pack(p: BiPoly, bits: int, dq: int) -> int:
    stride = dq + 1
    total = 0
    for (i, j), c in p._terms.items():
        total += c << (bits * (i + stride * j))
    return total


def _unpack(value: int, bits: int, dq: int) -> BiPoly:
    stride = dq + 1
    base = 1 << bits
    half = base >> 1
    mask = base - 1
    out = {}
    idx = 0
    while value:
        digit = value & mask
        if digit >= half:
            digit -= base
        if digit:
            out[(idx % stride, idx // stride)] = digit
        value = (value - digit) >> bits
        idx += 1
    return BiPoly(out)


Q = BiPoly.q()
X = BiPoly.x()
ONE = BiPoly.const(1)


def char_matrix(t: LabelledTree, deleted: Iterable[int] = ()) -> list[list[BiPoly]]:
    """``x*I - L^q`` of ``t`` with the ``deleted`` rows and columns removed."""
    gone = set(deleted)
    keep = [v for v in range(t.n) if v not in gone]
    index = {v: k for k, v in enumerate(keep)}
    m = len(keep)
    mat = [[BiPoly() for _ in range(m)] for _ in range(m)]
    for v in keep:
        d = t.degree(v)
        mat[index[v]][index[v]] = BiPoly({(0, 1): 1, (0, 0): -1, (2, 0): -(d - 1)})
    for a, b in t.edges:
        if a in index and b in index:
            mat[index[a]][index[b]] = Q
            mat[index[b]][index[a]] = Q
    return mat


def bareiss_det(mat: Sequence[Sequence[BiPoly]]) -> BiPoly:
    """Fraction-free determinant of a matrix over Z[q, x].

    Pivots are taken on the diagonal; this is valid whenever every leading
    principal minor is nonzero, which holds for ``x*I - M`` (each minor is
    monic in ``x``). A zero pivot raises.
    """
    m = len(mat)
    if m == 0:
        return ONE
    row_bound = 1
    dq = 0
    for row in mat:
        row_bound *= max(1, sum(sum(abs(c) for c in e._terms.values()) for e in row))
        dq += max((e.degree_q() for e in row), default=0)
    bits = row_bound.bit_length() + 2
    dq = max(dq, 0)
    a = [[_pack(e, bits, dq) for e in row] for row in mat]
    prev = 1
    for k in range(m - 1):
        pivot = a[k][k]
        if pivot == 0:
            raise ZeroDivisionError(f"zero pivot at step {k}")
        for i in range(k + 1, m):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, m):
                num = pivot * row_i[j] - aik * row_k[j]
                quo, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("inexact Bareiss division")
                row_i[j] = quo
        prev = pivot
    return _unpack(a[m - 1][m - 1], bits, dq)


def charpoly(t: LabelledTree, deleted: Iterable[int] = ()) -> BiPoly:
    """``det(x*I - L^q)`` with the rows/columns in ``deleted`` removed."""
    gone = frozenset(deleted)
    if len(gone) >= t.n and t.n > 0:
        raise ValueError("cannot delete every vertex")
    if any(not 0 <= v < t.n for v in gone):
        raise ValueError(f"deleted vertices {sorted(gone)} out of range")
    return _charpoly_cached(t.n, t.edges, gone)


@lru_cache(maxsize=65536)
def _charpoly_cached(n: int, edges, gone: frozenset) -> BiPoly:
    return bareiss_det(char_matrix(LabelledTree(n, edges), gone))


def aux_poly(t: LabelledTree, v: int) -> BiPoly:
    """``f(q,x) - (x + q^2 - 1) * f|v(q,x)``."""
    if t.n < 2:
        raise ValueError("auxiliary polynomial needs n >= 2")
    shift = X + Q * Q - ONE
    return charpoly(t) - shift * charpoly(t, (v,))


def join(q1: LabelledTree, v1: int, q2: LabelledTree, v2: int) -> tuple[LabelledTree, dict[int, int]]:
    """Glue ``v2`` of ``q2`` onto ``v1`` of ``q1``.

    Returns the joined tree (``q1`` keeps its labels) and the map from ``q2``'s
    labels into it.
    """
    mapping = {}
    nxt = q1.n
    for w in range(q2.n):
        if w == v2:
            mapping[w] = v1
        else:
            mapping[w] = nxt
            nxt += 1
    edges = q1.edges + tuple((mapping[a], mapping[b]) for a, b in q2.edges)
    return LabelledTree(q1.n + q2.n - 1, edges), mapping


def join_identity_sides(q1: LabelledTree, v1: int, q2: LabelledTree, v2: int) -> tuple[BiPoly, BiPoly]:
    t, _ = join(q1, v1, q2, v2)
    f1, f2 = charpoly(q1), charpoly(q2)
    # deleting the only vertex leaves the empty determinant, 1
    g1 = charpoly(q1, (v1,)) if q1.n > 1 else ONE
    g2 = charpoly(q2, (v2,)) if q2.n > 1 else ONE
    rhs = f1 * g2 + f2 * g1 - (X - ONE + Q * Q) * g1 * g2
    return charpoly(t), rhs


def join_identity_check(q1: LabelledTree, v1: int, q2: LabelledTree, v2: int) -> bool:
    lhs, rhs = join_identity_sides(q1, v1, q2, v2)
    return lhs == rhs


def difference_factorization_residual(t1: LabelledTree, site: ShiftSite) -> BiPoly:
    """``q^2 x (f_T1 - f_T2) + F_Pk * F_H1 * F_H2``; zero iff the identity holds."""
    parts = decompose_cover(t1, site)
    t2 = apply_shift(t1, site)
    diff = charpoly(t1) - charpoly(t2)
    prod = aux_poly(parts.path, 0) * aux_poly(parts.h1, 0) * aux_poly(parts.h2, 0)
    return Q * Q * X * diff + prod


def difference_factorization_check(t1: LabelledTree, site: ShiftSite) -> bool:
    return difference_factorization_residual(t1, site).is_zero()


def difference_poly(t1: LabelledTree, t2: LabelledTree) -> BiPoly:
    return charpoly(t1) - charpoly(t2)


# independent route: evaluate at integer points, interpolate over Q


def _det_fraction(mat: list[list[Fraction]]) -> Fraction:
    a = [row[:] for row in mat]
    m = len(a)
    det = Fraction(1)
    for k in range(m):
        piv = next((i for i in range(k, m) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        inv = 1 / a[k][k]
        for i in range(k + 1, m):
            f = a[i][k] * inv
            if f:
                for j in range(k, m):
                    a[i][j] -= f * a[k][j]
    return det


def _newton_to_monomial(xs: Sequence[int], ys: Sequence[Fraction]) -> list[Fraction]:
    """Monomial coefficients (ascending) of the interpolant through (xs, ys)."""
    m = len(xs)
    coef = list(ys)
    for level in range(1, m):
        for i in range(m - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    poly = [Fraction(0)] * m
    poly[0] = coef[m - 1]
    deg = 0
    for i in range(m - 2, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        new = [Fraction(0)] * m
        for k in range(deg + 1):
            new[k + 1] += poly[k]
            new[k] -= poly[k] * xs[i]
        new[0] += coef[i]
        poly = new
        deg += 1
    return poly


def charpoly_interpolated(t: LabelledTree, deleted: Iterable[int] = ()) -> BiPoly:
    """Charpoly via exact evaluation on an integer grid and 2-d interpolation."""
    gone = set(deleted)
    keep = [v for v in range(t.n) if v not in gone]
    index = {v: k for k, v in enumerate(keep)}
    m = len(keep)
    qs = list(range(2 * m + 1))
    xs = list(range(m + 1))
    grid = {}
    for qv, xv in product(qs, xs):
        mat = [[Fraction(0)] * m for _ in range(m)]
        for v in keep:
            mat[index[v]][index[v]] = Fraction(xv - 1 - qv * qv * (t.degree(v) - 1))
        for a, b in t.edges:
            if a in index and b in index:
                mat[index[a]][index[b]] = Fraction(qv)
                mat[index[b]][index[a]] = Fraction(qv)
        grid[qv, xv] = _det_fraction(mat)
    terms: dict[tuple[int, int], int] = {}
    per_q = {qv: _newton_to_monomial(xs, [grid[qv, xv] for xv in xs]) for qv in qs}
    for j in range(m + 1):
        cq = _newton_to_monomial(qs, [per_q[qv][j] for qv in qs])
        for i, c in enumerate(cq):
            if c.denominator != 1:
                raise ArithmeticError("non-integral interpolated coefficient")
            if c:
                terms[(i, j)] = int(c)
    return BiPoly(terms)


# univariate helpers on specialised polynomials (ascending Fraction coefficients)


def _trim(p: list) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def upoly_divmod(a: list, b: list) -> tuple[list, list]:
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    rem = [Fraction(c) for c in a]
    lead = Fraction(b[-1])
    while len(rem) >= len(b) and rem:
        shift = len(rem) - len(b)
        f = rem[-1] / lead
        quo[shift] = f
        for k, c in enumerate(b):
            rem[shift + k] -= f * c
        rem = _trim(rem)
    return _trim(quo), rem


def upoly_gcd(a: list, b: list) -> list:
    a, b = _trim([Fraction(c) for c in a]), _trim([Fraction(c) for c in b])
    while b:
        _, r = upoly_divmod(a, b)
        a, b = b, r
    if not a:
        return a
    lead = a[-1]
    return [c / lead for c in a]


def upoly_derivative(a: list) -> list:
    return [k * c for k, c in enumerate(a)][1:]


def squarefree_factors(a: list) -> list[tuple[list, int]]:
    """Yun's algorithm over Q: ``a = c * prod(f_i ** i)`` with squarefree ``f_i``."""
    a = _trim([Fraction(c) for c in a])
    if len(a) <= 1:
        return []
    out = []
    g = upoly_gcd(a, upoly_derivative(a))
    w, _ = upoly_divmod(a, g)
    c, _ = upoly_divmod(upoly_derivative(a), g)
    i = 1
    while len(_trim(w)) > 1:
        y = [ci - wi for ci, wi in zip_longest_zero(c, upoly_derivative(w))]
        z = upoly_gcd(w, y)
        if len(_trim(z)) > 1:
            out.append((z, i))
        w, _ = upoly_divmod(w, z)
        c, _ = upoly_divmod(y, z)
        i += 1
    return out


def zip_longest_zero(a: list, b: list):
    m = max(len(a), len(b))
    for k in range(m):
        yield (a[k] if k < len(a) else 0), (b[k] if k < len(b) else 0)
