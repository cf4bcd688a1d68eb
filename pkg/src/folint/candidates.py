"""Candidate classes for the fibre of a first integral and for the
components of its non-reduced members.

``compute_RFS`` intersects the isotropic quadric ``x0^2 - sum xi^2 = 0``
with the orthogonal complement of ``V(S)``.  ``enumerate_Gamma`` lists the
classes ``C = x L* - sum y_p E_p*`` satisfying the four bounds (a)-(d)
with a depth-first search in blow-up order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt, lcm
from typing import Iterator, List, Optional, Sequence, Tuple

from .config import (Configuration, DivisorClass, delta_class, exceptional_strict_class,
                     intersect, primitive_representative)
from .errors import Degenerate, GenusOne, NotIndependent, WrongCardinality
from .linsys import VirtualConditions, global_sections, kernel, projective_dimension, rref
from .poly import Poly

__all__ = [
    "SolutionSet",
    "build_VS",
    "compute_RFS",
    "enumerate_Gamma",
    "iter_Gamma",
    "gamma_conditions",
    "genus_degree_bound",
    "theorem1_bound",
]


@dataclass(frozen=True)
class SolutionSet:
    """Integral invariant curves with the classes of their strict transforms."""

    curves: Tuple[Tuple[Poly, DivisorClass], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "curves", tuple(self.curves))

    def __len__(self):
        return len(self.curves)

    def classes(self) -> List[DivisorClass]:
        return [c for _, c in self.curves]

    def check_invariant(self, omega) -> List[int]:
        """Indices of curves that are not invariant by ``omega``."""
        from .polyform import is_invariant
        return [i for i, (f, _) in enumerate(self.curves) if not is_invariant(omega, f)]


def _rank(vectors: Sequence[Sequence]) -> int:
    if not vectors:
        return 0
    rows = [[Fraction(v) for v in vec] for vec in vectors]
    return len(rref(rows, len(rows[0]))[1])


def build_VS(cfg: Configuration, r: int, S: SolutionSet = SolutionSet()) -> List[DivisorClass]:
    """``[C~_i]`` for ``C_i`` in ``S``, the delta class, then ``[E~_p]`` for the
    non-dicritical points."""
    dic = cfg.dic
    need = dic - 2 if dic >= 3 else 0
    if len(S) != need:
        raise WrongCardinality(f"dic = {dic} needs {need} solution curves, got {len(S)}")
    vs = list(S.classes())
    for c in vs:
        if len(c) != cfg.n + 1:
            raise WrongCardinality(f"solution class has length {len(c)}, expected {cfg.n + 1}")
    vs.append(delta_class(cfg, r))
    vs.extend(exceptional_strict_class(cfg, p) for p in cfg.non_dicritical_indices())
    if _rank([v.c for v in vs]) != len(vs):
        raise NotIndependent("the classes of V(S) are linearly dependent")
    return vs


def _polar(v: DivisorClass) -> List[Fraction]:
    # x -> v.x is the row (v0, -v1, ..., -vn)
    return [Fraction(v.c[0])] + [-Fraction(a) for a in v.c[1:]]


def _self(v: Sequence) -> Fraction:
    return v[0] * v[0] - sum(a * a for a in v[1:])


def _dot(v: Sequence, w: Sequence) -> Fraction:
    return v[0] * w[0] - sum(a * b for a, b in zip(v[1:], w[1:]))


def _integer_vector(v: Sequence[Fraction]) -> List[int]:
    den = lcm(*(Fraction(a).denominator for a in v))
    return [int(Fraction(a) * den) for a in v]


def _rational_sqrt(n: int) -> Optional[int]:
    if n < 0:
        return None
    s = isqrt(n)
    return s if s * s == n else None


def _binary_quadratic_roots(a: int, b: int, c: int) -> List[Tuple[int, int]]:
    """Rational projective roots ``(s : t)`` of ``a s^2 + 2 b s t + c t^2``."""
    if a == 0 and b == 0 and c == 0:
        raise Degenerate("the whole line lies on the quadric")
    if a == 0:
        # t (2 b s + c t) = 0
        roots = [(1, 0)]
        if b != 0:
            roots.append((-c, 2 * b))
        return roots
    # t = 1: a s^2 + 2 b s + c = 0, roots (-b +- sqrt(b^2 - a c)) / a
    root = _rational_sqrt(b * b - a * c)
    if root is None:
        return []
    return [(-b - root, a), (-b + root, a)]


def compute_RFS(cfg: Configuration, VS: Sequence[DivisorClass]) -> List[DivisorClass]:
    """Isotropic classes orthogonal to ``VS`` as primitive representatives
    with non-zero degree, sorted by degree and then lexicographically."""
    n1 = cfg.n + 1
    for v in VS:
        if len(v) != n1:
            raise WrongCardinality(f"class of length {len(v)} for a configuration of {cfg.n} points")
    basis = kernel([_polar(v) for v in VS], n1)
    points: List[List[Fraction]] = []
    if len(basis) == 1:
        w = basis[0]
        if _self(w) == 0:
            points.append(w)
    elif len(basis) == 2:
        w1, w2 = (_integer_vector(w) for w in basis)
        a, b, c = _self(w1), _dot(w1, w2), _self(w2)
        for s, t in _binary_quadratic_roots(int(a), int(b), int(c)):
            points.append([s * x + t * y for x, y in zip(w1, w2)])
    elif len(basis) > 2:
        raise Degenerate(f"orthogonal complement has dimension {len(basis)}; V(S) is too small")
    out = []
    for p in points:
        if p[0] == 0:
            continue
        rep = primitive_representative(p)
        if rep not in out:
            out.append(rep)
    out.sort(key=lambda d: tuple(d.c))
    return out


def gamma_conditions(cfg: Configuration, C: DivisorClass, T: Optional[DivisorClass] = None,
                     check_dimension: bool = True) -> bool:
    """Direct check of (a)-(d) (and ``T.C = 0``) for one class."""
    x, ys = C.c[0], [-v for v in C.c[1:]]
    if x < 1 or any(y < 0 or y > x for y in ys):
        return False
    if any(intersect(C, exceptional_strict_class(cfg, p)) < 0 for p in range(cfg.n)):
        return False
    c2 = x * x - sum(y * y for y in ys)
    kc = -3 * x + sum(ys)
    if not ((c2 == -1 and kc == -1) or (c2 <= 0 and kc >= 0 and c2 + kc >= -2)):
        return False
    if T is not None and intersect(T, C) != 0:
        return False
    if check_dimension:
        return projective_dimension(VirtualConditions(cfg, int(x), tuple(int(y) for y in ys))) == 0
    return True


def iter_Gamma(cfg: Configuration, x: int, T: Optional[DivisorClass] = None,
               check_dimension: bool = True) -> Iterator[DivisorClass]:
    """Lazily yield ``Gamma(x)`` (intersected with ``[T]^perp`` when given) in
    lexicographic order of ``(y_1, ..., y_n)``."""
    if x < 1:
        raise ValueError("x must be a positive integer")
    n = cfg.n
    prox = [sorted(pt.proximate_to) for pt in cfg.points]
    # both branches of (c) give sum y(y-1) <= (x-1)(x-2) and sum y^2 >= x^2
    budget = (x - 1) * (x - 2)
    tm = None
    if T is not None:
        if len(T) != n + 1:
            raise WrongCardinality("T has the wrong length")
        tm = [int(-v) for v in T.c[1:]]
        target = int(T.c[0]) * x
        nonneg = all(v >= 0 for v in tm)
        # suffix maxima of sum m_q * y_q with y_q <= x
        tail = [0] * (n + 1)
        for q in range(n - 1, -1, -1):
            tail[q] = tail[q + 1] + max(tm[q], 0) * x
    cap = [0] * n          # y_p minus what its proximate points already used
    ys = [0] * n

    def rec(q: int, used: int, s1: int, s2: int, tdot: int):
        if q == n:
            c2 = x * x - s2
            kc = -3 * x + s1
            if not ((c2 == -1 and kc == -1) or (c2 <= 0 and kc >= 0 and c2 + kc >= -2)):
                return
            if tm is not None and tdot != target:
                return
            if check_dimension and projective_dimension(VirtualConditions(cfg, x, tuple(ys))) != 0:
                return
            yield DivisorClass.from_degree(x, ys)
            return
        hi = x
        for p in prox[q]:
            hi = min(hi, cap[p])
        for y in range(hi + 1):
            u = used + y * (y - 1)
            if u > budget:
                break
            if tm is not None:
                td = tdot + tm[q] * y
                if nonneg and (td > target or td + tail[q + 1] < target):
                    if td > target:
                        break
                    continue
            else:
                td = 0
            ys[q] = y
            cap[q] = y
            for p in prox[q]:
                cap[p] -= y
            yield from rec(q + 1, u, s1 + y, s2 + y * y, td)
            for p in prox[q]:
                cap[p] += y
        ys[q] = 0

    yield from rec(0, 0, 0, 0, 0)


def enumerate_Gamma(cfg: Configuration, x: int, T: Optional[DivisorClass] = None) -> List[DivisorClass]:
    return list(iter_Gamma(cfg, x, T))


def genus_degree_bound(RFS: Sequence[DivisorClass], G: int) -> Optional[Fraction]:
    """Largest positive finite ``2(G-1)d / (sum m - 3d)``; ``None`` means unbounded."""
    if G == 1:
        raise GenusOne("genus one is excluded")
    best = None
    for t in RFS:
        d = Fraction(t.c[0])
        sm = sum(-Fraction(v) for v in t.c[1:])
        den = sm - 3 * d
        if den == 0:
            continue
        val = 2 * (G - 1) * d / den
        if val > 0 and (best is None or val > best):
            best = val
    return best


def theorem1_bound(r: int) -> Fraction:
    if r < 0:
        raise ValueError("foliation degree must be non-negative")
    return Fraction((r + 2) ** 2, 4)
