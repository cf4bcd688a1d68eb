"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Poly` is an immutable map from exponent tuples to nonzero
:class:`fractions.Fraction` coefficients.  The same class serves the three
homogeneous variables ``X0, X1, X2`` of the projective plane and the two
affine variables ``x, y`` of a local chart; ``nvars`` tells them apart.

Terms are ordered graded-lexicographically on the exponent tuple, which
fixes printing, leading terms and exact division.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Dict, Iterable, Mapping, Sequence, Tuple

Exponent = Tuple[int, ...]

HOMOGENEOUS_NAMES = ("X0", "X1", "X2")
AFFINE_NAMES = ("x", "y")


def grlex_key(e: Exponent):
    return (sum(e), e)


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    return Fraction(c)


class Poly:
    """Immutable sparse polynomial over Q."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, object] | None = None, nvars: int = 3):
        self.nvars = nvars
        clean: Dict[Exponent, Fraction] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} does not have {nvars} entries")
                if c:
                    clean[tuple(e)] = _as_fraction(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Exponent, Fraction], nvars: int) -> "Poly":
        # trusted constructor: terms already clean
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int = 3) -> "Poly":
        return cls._raw({}, nvars)

    @classmethod
    def const(cls, c, nvars: int = 3) -> "Poly":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def var(cls, i: int, nvars: int = 3) -> "Poly":
        e = [0] * nvars
        e[i] = 1
        return cls._raw({tuple(e): Fraction(1)}, nvars)

    @classmethod
    def monomial(cls, e: Sequence[int], c=1) -> "Poly":
        e = tuple(e)
        return cls({e: c}, len(e))

    @classmethod
    def from_list(cls, rows: Iterable[Sequence], nvars: int = 3) -> "Poly":
        """Build from ``[e_1, ..., e_n, numerator, denominator]`` rows."""
        terms: Dict[Exponent, Fraction] = {}
        for row in rows:
            if len(row) != nvars + 2:
                raise ValueError(f"coefficient row {row!r} must have {nvars + 2} entries")
            *e, num, den = row
            if any((not isinstance(a, int)) or a < 0 for a in e):
                raise ValueError(f"bad exponent in row {row!r}")
            if not isinstance(num, int) or not isinstance(den, int) or den == 0:
                raise ValueError(f"bad rational in row {row!r}")
            e = tuple(e)
            terms[e] = terms.get(e, Fraction(0)) + Fraction(num, den)
        return cls(terms, nvars)

    def to_list(self) -> list:
        return [list(e) + [c.numerator, c.denominator] for e, c in self.sorted_terms()]

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def order(self) -> int:
        """Lowest total degree of a term (the multiplicity at the origin)."""
        if not self.terms:
            raise ValueError("order of the zero polynomial is undefined")
        return min(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def coeff(self, e: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(e), Fraction(0))

    def sorted_terms(self, reverse: bool = True):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=reverse)

    def leading_term(self) -> Tuple[Exponent, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def homogeneous_part(self, k: int) -> "Poly":
        return Poly._raw({e: c for e, c in self.terms.items() if sum(e) == k}, self.nvars)

    def truncate(self, bound: int) -> "Poly":
        """Drop every term of total degree ``>= bound``."""
        return Poly._raw({e: c for e, c in self.terms.items() if sum(e) < bound}, self.nvars)

    def degree_in(self, i: int) -> int:
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s += c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Poly._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Poly":
        c = _as_fraction(c)
        if not c:
            return Poly.zero(self.nvars)
        return Poly._raw({e: v * c for e, v in self.terms.items()}, self.nvars)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(self.terms) > len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out: Dict[Exponent, Fraction] = {}
        n = self.nvars
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(e1[i] + e2[i] for i in range(n)) if n != 2 else (e1[0] + e2[0], e1[1] + e2[1])
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return Poly._raw({e: c for e, c in out.items() if c}, n)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        result = Poly.const(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other, self.nvars)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # -- calculus and substitution -----------------------------------------

    def diff(self, i: int) -> "Poly":
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                e2 = list(e)
                e2[i] = k - 1
                out[tuple(e2)] = c * k
        return Poly._raw(out, self.nvars)

    def evaluate(self, point: Sequence):
        """Evaluate at a point whose entries support ``+``, ``*`` and ``**``."""
        total = 0
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t = t * x ** k
            total = total + t
        return total

    def compose(self, images: Sequence["Poly"]) -> "Poly":
        """Substitute ``images[i]`` for variable ``i``."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        target = images[0].nvars if images else self.nvars
        powers = [dict() for _ in images]
        result = Poly.zero(target)
        for e, c in self.terms.items():
            t = Poly.const(c, target)
            for i, k in enumerate(e):
                if k:
                    p = powers[i].get(k)
                    if p is None:
                        p = images[i] ** k
                        powers[i][k] = p
                    t = t * p
            result = result + t
        return result

    def shift(self, i: int, c) -> "Poly":
        """Return the polynomial with variable ``i`` replaced by ``x_i + c``."""
        c = _as_fraction(c)
        if not c:
            return self
        cpow = [Fraction(1)]
        out: Dict[Exponent, Fraction] = {}
        for e, v in self.terms.items():
            k = e[i]
            while len(cpow) <= k:
                cpow.append(cpow[-1] * c)
            for j in range(k + 1):
                e2 = e[:i] + (j,) + e[i + 1:]
                w = v * comb(k, j) * cpow[k - j]
                s = out.get(e2)
                out[e2] = w if s is None else s + w
        return Poly._raw({e: v for e, v in out.items() if v}, self.nvars)

    def translate(self, point: Sequence) -> "Poly":
        p = self
        for i, c in enumerate(point):
            p = p.shift(i, c)
        return p

    def map_exponents(self, f) -> "Poly":
        """Apply a monomial map ``e -> f(e)`` (must be injective)."""
        return Poly._raw({f(e): c for e, c in self.terms.items()}, len(f((0,) * self.nvars)))

    def content_power(self, i: int) -> int:
        """Largest k such that ``x_i**k`` divides the polynomial."""
        if not self.terms:
            raise ValueError("zero polynomial")
        return min(e[i] for e in self.terms)

    def divide_by_var_power(self, i: int, k: int) -> "Poly":
        if k == 0:
            return self
        out = {}
        for e, c in self.terms.items():
            if e[i] < k:
                raise ValueError("power of variable does not divide")
            out[e[:i] + (e[i] - k,) + e[i + 1:]] = c
        return Poly._raw(out, self.nvars)

    def dehomogenize(self, i: int) -> "Poly":
        """Set variable ``i`` to 1, dropping it from the ring."""
        out: Dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            e2 = e[:i] + e[i + 1:]
            s = out.get(e2)
            out[e2] = c if s is None else s + c
        return Poly._raw({e: c for e, c in out.items() if c}, self.nvars - 1)

    def homogenize(self, i: int, degree: int | None = None) -> "Poly":
        """Insert variable ``i`` so every term has total degree ``degree``."""
        if degree is None:
            degree = max(self.degree, 0)
        out = {}
        for e, c in self.terms.items():
            k = degree - sum(e)
            if k < 0:
                raise ValueError("degree too small to homogenize")
            out[e[:i] + (k,) + e[i:]] = c
        return Poly._raw(out, self.nvars + 1)

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        return self.scale(1 / self.leading_term()[1])

    def primitive(self) -> "Poly":
        """Scale to integer coefficients with content 1 and positive leading term."""
        if not self.terms:
            return self
        from math import gcd, lcm
        den = lcm(*(c.denominator for c in self.terms.values()))
        nums = [int(c * den) for c in self.terms.values()]
        g = gcd(*nums)
        s = Fraction(den, g)
        if self.leading_term()[1] < 0:
            s = -s
        return self.scale(s)

    # -- division -----------------------------------------------------------

    def exact_divide(self, other: "Poly") -> "Poly | None":
        """Quotient ``Q`` with ``self == Q * other``, or ``None``.

        Reduction by the grlex leading term of ``other``; the first leading
        term that ``other`` cannot reduce proves non-divisibility.
        """
        other = self._coerce(other)
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        le, lc = other.leading_term()
        n = self.nvars
        rem = dict(self.terms)
        quot: Dict[Exponent, Fraction] = {}
        oterms = list(other.terms.items())
        while rem:
            e = max(rem, key=grlex_key)
            c = rem[e]
            qe = tuple(e[i] - le[i] for i in range(n))
            if any(k < 0 for k in qe):
                return None
            qc = c / lc
            quot[qe] = qc
            for oe, oc in oterms:
                te = tuple(qe[i] + oe[i] for i in range(n))
                v = rem.get(te, Fraction(0)) - qc * oc
                if v:
                    rem[te] = v
                else:
                    rem.pop(te, None)
        return Poly._raw(quot, n)

    def divides(self, other: "Poly") -> bool:
        return other.exact_divide(self) is not None

    # -- printing -----------------------------------------------------------

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = HOMOGENEOUS_NAMES if self.nvars == 3 else (
                AFFINE_NAMES if self.nvars == 2 else tuple(f"x{i}" for i in range(self.nvars)))
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Poly({self.to_str()!r}, nvars={self.nvars})"


HomogeneousPolynomial = Poly


def X(i: int) -> Poly:
    """Homogeneous coordinate ``X_i`` of the projective plane."""
    return Poly.var(i, 3)


def monomials_of_degree(d: int, nvars: int = 3) -> list:
    """All exponent tuples of total degree ``d``, in descending grlex order."""
    if nvars == 1:
        return [(d,)]
    out = []
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(d - first, nvars - 1):
            out.append((first,) + rest)
    return out


def _sympy_gens(nvars: int):
    import sympy
    return sympy.symbols(f"z0:{nvars}")


def to_sympy(p: Poly):
    import sympy
    gens = _sympy_gens(p.nvars)
    return sympy.Poly.from_dict(
        {e: sympy.Rational(c.numerator, c.denominator) for e, c in p.terms.items()} or {(0,) * p.nvars: 0},
        *gens, domain=sympy.QQ)


def from_sympy(sp, nvars: int) -> Poly:
    terms = {}
    for e, c in sp.terms():
        if c:
            terms[tuple(e)] = Fraction(int(c.numerator), int(c.denominator))
    return Poly(terms, nvars)


def gcd(*polys: Poly) -> Poly:
    """Greatest common divisor (monic in grlex), via sympy's multivariate gcd."""
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        raise ValueError("gcd of zero polynomials")
    nvars = polys[0].nvars
    g = to_sympy(polys[0])
    for p in polys[1:]:
        if g.is_ground:
            break
        g = g.gcd(to_sympy(p))
    return from_sympy(g, nvars).monic()


MAX_PARSED_EXPONENT = 1000


def parse_poly(text: str, names: Sequence[str] = HOMOGENEOUS_NAMES) -> Poly:
    """Parse an expression such as ``"X1^5 - 3/2*X0^3*X2^2"``.

    Only ``+ - * / ^ **``, parentheses, integers and the given variable
    names are accepted; division is allowed only by rational constants.
    """
    import ast

    nvars = len(names)
    src = text.replace("^", "**")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse polynomial {text!r}: {exc.msg}") from None

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return Poly.const(node.value, nvars)
        if isinstance(node, ast.Name):
            if node.id not in names:
                raise ValueError(f"unknown variable {node.id!r}")
            return Poly.var(names.index(node.id), nvars)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            left, right = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                if not right.is_constant() or right.is_zero():
                    raise ValueError("division only by nonzero constants")
                return left.scale(1 / right.coeff((0,) * nvars))
            if isinstance(node.op, ast.Pow):
                if not right.is_constant():
                    raise ValueError("exponent must be a constant")
                k = right.coeff((0,) * nvars)
                if k.denominator != 1 or k < 0:
                    raise ValueError("exponent must be a non-negative integer")
                if k > MAX_PARSED_EXPONENT:
                    raise ValueError(f"exponent {k} exceeds {MAX_PARSED_EXPONENT}")
                return left ** int(k)
        raise ValueError(f"unsupported syntax in polynomial {text!r}")

    return ev(tree)
