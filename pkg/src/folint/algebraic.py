"""Exact arithmetic in simple algebraic extensions ``Q(t)`` and the solver
for zero-dimensional systems ``a(x, y) = b(x, y) = 0`` built on it.

Univariate polynomials over Q are dense lists of Fractions, lowest degree
first.  A :class:`NumberField` ``Q[t]/(f)`` stores elements as reduced
coefficient tuples; ``f`` linear gives Q itself, which lets rational and
irrational points share one code path.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .poly import Poly

UPoly = List[Fraction]


def u_trim(a: Sequence) -> UPoly:
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def u_add(a, b) -> UPoly:
    n = max(len(a), len(b))
    return u_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def u_sub(a, b) -> UPoly:
    return u_add(a, [-v for v in b])


def u_mul(a, b) -> UPoly:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return u_trim(out)


def u_divmod(a, b) -> Tuple[UPoly, UPoly]:
    b = u_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(v) for v in u_trim(a)]
    if len(r) < len(b):
        return [], r
    q = [Fraction(0)] * (len(r) - len(b) + 1)
    lb = b[-1]
    while len(r) >= len(b) and r:
        k = len(r) - len(b)
        c = r[-1] / lb
        q[k] = c
        for i, v in enumerate(b):
            r[i + k] -= c * v
        r = u_trim(r)
    return u_trim(q), r


def u_monic(a) -> UPoly:
    a = u_trim(a)
    if not a:
        return a
    return [v / a[-1] for v in a]


def u_gcd(a, b) -> UPoly:
    a, b = u_trim(a), u_trim(b)
    while b:
        a, b = b, u_divmod(a, b)[1]
    return u_monic(a)


def u_deriv(a) -> UPoly:
    return u_trim([i * a[i] for i in range(1, len(a))])


def u_eval(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def to_upoly(p: Poly) -> UPoly:
    """Dense coefficients of a one-variable :class:`Poly`."""
    if p.nvars != 1:
        raise ValueError("expected a univariate polynomial")
    if p.is_zero():
        return []
    out = [Fraction(0)] * (p.degree + 1)
    for (k,), c in p.terms.items():
        out[k] = c
    return out


def factor_over_q(a: Sequence) -> List[Tuple[UPoly, int]]:
    """Monic irreducible factors over Q with multiplicities (via sympy)."""
    import sympy

    a = u_trim(a)
    if len(a) <= 1:
        return []
    t = sympy.Symbol("t")
    expr = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(a)], t, domain=sympy.QQ)
    _, facs = expr.factor_list()
    out = []
    for f, k in facs:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(f.all_coeffs())]
        out.append((u_monic(coeffs), k))
    out.sort(key=lambda fk: (len(fk[0]), fk[0]))
    return out


def resultant_y(a: Poly, b: Poly) -> UPoly:
    """Resultant of two polynomials in ``(x, y)`` with respect to ``y``."""
    import sympy

    x, y = sympy.symbols("x y")

    def conv(p: Poly):
        return sympy.Poly.from_dict(
            {e: sympy.Rational(c.numerator, c.denominator) for e, c in p.terms.items()} or {(0, 0): 0},
            x, y, domain=sympy.QQ)

    res = sympy.resultant(conv(a), conv(b), y)
    res = sympy.Poly(res, x, domain=sympy.QQ)
    coeffs = res.all_coeffs()
    return u_trim([Fraction(int(c.p), int(c.q)) for c in reversed(coeffs)])


class NumberField:
    """``Q[t]/(f)`` for a monic irreducible ``f``."""

    def __init__(self, modulus: Sequence):
        f = u_monic(modulus)
        if len(f) < 2:
            raise ValueError("modulus must have positive degree")
        self.modulus = tuple(f)
        self.degree = len(f) - 1

    def __repr__(self):
        return f"NumberField(modulus={list(self.modulus)!r})"

    @classmethod
    def rational(cls, c) -> "NumberField":
        return cls([-Fraction(c), Fraction(1)])

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    # elements are tuples of length degree
    def elt(self, poly: Sequence) -> tuple:
        _, r = u_divmod(poly, self.modulus)
        r = list(r) + [Fraction(0)] * (self.degree - len(r))
        return tuple(r)

    def const(self, c) -> tuple:
        return self.elt([Fraction(c)])

    def gen(self) -> tuple:
        return self.elt([Fraction(0), Fraction(1)])

    def zero(self) -> tuple:
        return (Fraction(0),) * self.degree

    def is_zero(self, a) -> bool:
        return not any(a)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        return self.elt(u_mul(u_trim(a), u_trim(b)))

    def inv(self, a):
        # extended Euclid in Q[t]
        r0, r1 = list(self.modulus), u_trim(a)
        if not r1:
            raise ZeroDivisionError("inverse of zero in a number field")
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = u_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, u_sub(s0, u_mul(q, s1))
        return self.elt([v / r1[0] for v in s1])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def as_rational(self, a):
        """The element as a Fraction when it lies in Q, else ``None``."""
        if any(a[1:]):
            return None
        return a[0]

    def eval_poly(self, p: Poly, point: Sequence[tuple]) -> tuple:
        powers = [dict() for _ in point]
        acc = self.zero()
        for e, c in p.terms.items():
            t = self.const(c)
            for i, k in enumerate(e):
                if k:
                    pw = powers[i].get(k)
                    if pw is None:
                        pw = self._pow(point[i], k)
                        powers[i][k] = pw
                    t = self.mul(t, pw)
            acc = self.add(acc, t)
        return acc

    def _pow(self, a, k):
        result = self.const(1)
        while k:
            if k & 1:
                result = self.mul(result, a)
            k >>= 1
            if k:
                a = self.mul(a, a)
        return result

    # polynomials in one variable over the field: lists of elements, low first
    def p_trim(self, a):
        a = list(a)
        while a and self.is_zero(a[-1]):
            a.pop()
        return a

    def p_divmod(self, a, b):
        b = self.p_trim(b)
        r = self.p_trim(a)
        q = [self.zero()] * max(len(r) - len(b) + 1, 0)
        lb_inv = self.inv(b[-1])
        while len(r) >= len(b) and r:
            k = len(r) - len(b)
            c = self.mul(r[-1], lb_inv)
            q[k] = c
            for i, v in enumerate(b):
                r[i + k] = self.sub(r[i + k], self.mul(c, v))
            r = self.p_trim(r)
        return q, r

    def p_monic(self, a):
        a = self.p_trim(a)
        if not a:
            return a
        inv = self.inv(a[-1])
        return [self.mul(v, inv) for v in a]

    def p_gcd(self, a, b):
        a, b = self.p_trim(a), self.p_trim(b)
        while b:
            a, b = b, self.p_divmod(a, b)[1]
        return self.p_monic(a)

    def p_deriv(self, a):
        return self.p_trim([self.mul(self.const(i), a[i]) for i in range(1, len(a))])

    def squarefree(self, a):
        a = self.p_monic(a)
        if len(a) <= 2:
            return a
        g = self.p_gcd(a, self.p_deriv(a))
        if len(g) <= 1:
            return a
        return self.p_monic(self.p_divmod(a, g)[0])


@dataclass(frozen=True)
class AlgebraicPoint:
    """A solution ``(x, y)`` with coordinates in ``field``; it stands for
    all its ``field.degree`` Galois conjugates."""

    field: NumberField
    x: tuple
    y: tuple

    def rational(self) -> Tuple[Fraction, Fraction] | None:
        fx, fy = self.field.as_rational(self.x), self.field.as_rational(self.y)
        if self.field.is_rational or (fx is not None and fy is not None):
            return fx, fy
        return None


def _specialize_x(K: NumberField, p: Poly, theta) -> list:
    """``p(theta, y)`` as a polynomial in ``y`` over ``K``."""
    by_y = {}
    for (i, j), c in p.terms.items():
        by_y.setdefault(j, []).append((i, c))
    if not by_y:
        return []
    out = [K.zero()] * (max(by_y) + 1)
    pw = {0: K.const(1)}
    for j, items in by_y.items():
        acc = K.zero()
        for i, c in items:
            if i not in pw:
                pw[i] = K._pow(theta, i)
            acc = K.add(acc, K.mul(K.const(c), pw[i]))
        out[j] = acc
    return K.p_trim(out)


class _Unseparated(Exception):
    pass


def _solve(a: Poly, b: Poly) -> List[AlgebraicPoint]:
    res = resultant_y(a, b)
    if not res:
        raise ValueError("the two polynomials share a factor")
    points: List[AlgebraicPoint] = []
    for f, _ in factor_over_q(res):
        K = NumberField(f)
        theta = K.gen()
        g = K.p_gcd(_specialize_x(K, a, theta), _specialize_x(K, b, theta))
        if len(g) <= 1:
            continue
        g = K.squarefree(g)
        if len(g) == 2:
            points.append(AlgebraicPoint(K, theta, K.neg(g[0])))
            continue
        if not K.is_rational:
            raise _Unseparated
        # rational x: split the fibre over Q
        x0 = K.as_rational(theta)
        fiber = [K.as_rational(c) for c in g]
        for h, _ in factor_over_q(fiber):
            L = NumberField(h)
            if L.is_rational:
                points.append(AlgebraicPoint(L, L.const(x0), L.const(-h[0])))
            else:
                points.append(AlgebraicPoint(L, L.const(x0), L.gen()))
    return points


def solve_affine(a: Poly, b: Poly) -> List[AlgebraicPoint]:
    """All common zeros of two coprime polynomials in ``(x, y)``, grouped
    into Galois orbits.  A shear ``x -> x + s*y`` is applied internally when
    the x-coordinate does not separate the points."""
    if a.nvars != 2 or b.nvars != 2:
        raise ValueError("expected polynomials in two variables")
    for s in (0, 1, -1, 2, -2, 3, -3, 5, 7, 11):
        if s == 0:
            aa, bb = a, b
        else:
            # x = x' - s*y
            sub = [Poly({(1, 0): 1, (0, 1): -s}, 2), Poly.var(1, 2)]
            aa, bb = a.compose(sub), b.compose(sub)
        try:
            pts = _solve(aa, bb)
        except _Unseparated:
            continue
        if s == 0:
            return pts
        out = []
        for p in pts:
            K = p.field
            out.append(AlgebraicPoint(K, K.sub(p.x, K.mul(K.const(s), p.y)), p.y))
        return out
    raise RuntimeError("could not find a separating coordinate")


def solve_univariate(a: Sequence) -> List[Tuple[NumberField, tuple]]:
    """Distinct roots of a univariate polynomial as (field, generator) orbits."""
    out = []
    for f, _ in factor_over_q(a):
        K = NumberField(f)
        out.append((K, K.gen()))
    return out
