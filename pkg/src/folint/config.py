"""Configurations of infinitely near points and the Picard lattice of their sky.

Points are indexed ``0..n-1`` in blow-up order (parents first).  Classes
are coefficient vectors in the basis ``L*, E_1*, ..., E_n*`` where the
intersection form is ``diag(1, -1, ..., -1)``.

Point locations are stored as a chart path: the first entry picks the
affine chart ``X_k = 1`` of the plane, each later entry picks the blow-up
chart (1: ``(x, y) -> (x, x*y)``, 2: ``(x, y) -> (x*y, y)``).  The ``x, y``
pair locates the point in the last chart; for infinitely near points the
exceptional coordinate (``x`` in chart 1, ``y`` in chart 2) is zero.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import LengthMismatch, ZeroLeadingCoefficient

__all__ = [
    "ChartPoint",
    "Point",
    "Configuration",
    "DivisorClass",
    "intersect",
    "exceptional_strict_class",
    "canonical_class",
    "delta_class",
    "line_class",
    "primitive_representative",
    "validate",
    "axis_divisors",
]


@dataclass(frozen=True)
class ChartPoint:
    path: Tuple[int, ...]
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "path", tuple(self.path))
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    @property
    def is_root(self) -> bool:
        return len(self.path) == 1

    @property
    def chart(self) -> int:
        return self.path[-1]

    def projective(self) -> Tuple[Fraction, Fraction, Fraction]:
        """Homogeneous coordinates of a point of the plane (root charts only)."""
        if not self.is_root:
            raise ValueError("only points of the plane have projective coordinates")
        k = self.path[0]
        coords = [self.x, self.y]
        coords.insert(k, Fraction(1))
        return tuple(coords)

    def offset(self) -> Fraction:
        """Position along the exceptional divisor (infinitely near points)."""
        return self.y if self.chart == 1 else self.x


@dataclass(frozen=True)
class Point:
    parent: Optional[int]
    proximate_to: frozenset = frozenset()
    coordinates: Optional[ChartPoint] = None
    nu: int = 0
    eps: int = 0
    dicritical: bool = False

    def __post_init__(self):
        object.__setattr__(self, "proximate_to", frozenset(self.proximate_to))

    @property
    def is_root(self) -> bool:
        return self.parent is None

    @property
    def is_satellite(self) -> bool:
        return len(self.proximate_to) == 2


@dataclass(frozen=True)
class Configuration:
    points: Tuple[Point, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    @property
    def n(self) -> int:
        return len(self.points)

    def proximates_of(self, p: int) -> List[int]:
        """Indices ``q`` with ``q`` proximate to ``p``."""
        return [q for q, pt in enumerate(self.points) if p in pt.proximate_to]

    def children(self, p: Optional[int]) -> List[int]:
        return [q for q, pt in enumerate(self.points) if pt.parent == p]

    def roots(self) -> List[int]:
        return self.children(None)

    def ancestors(self, p: int) -> List[int]:
        out = []
        q = self.points[p].parent
        while q is not None:
            out.append(q)
            q = self.points[q].parent
        return out

    def dicritical_indices(self) -> List[int]:
        return [i for i, pt in enumerate(self.points) if pt.dicritical]

    def non_dicritical_indices(self) -> List[int]:
        return [i for i, pt in enumerate(self.points) if not pt.dicritical]

    @property
    def dic(self) -> int:
        return len(self.dicritical_indices())

    def has_coordinates(self) -> bool:
        return all(pt.coordinates is not None for pt in self.points)

    def with_points(self, points: Iterable[Point]) -> "Configuration":
        return Configuration(tuple(points))


@dataclass(frozen=True)
class DivisorClass:
    """Coefficients ``(c0, c1, ..., cn)`` of ``c0 L* + sum ci E_i*``."""

    c: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(
            v if isinstance(v, (int, Fraction)) else Fraction(v) for v in self.c))

    @classmethod
    def from_degree(cls, d, mults: Sequence) -> "DivisorClass":
        """``d L* - sum m_i E_i*``."""
        return cls((d,) + tuple(-m for m in mults))

    def __len__(self) -> int:
        return len(self.c)

    def __getitem__(self, i):
        return self.c[i]

    def __iter__(self):
        return iter(self.c)

    @property
    def degree(self):
        return self.c[0]

    @property
    def multiplicities(self) -> tuple:
        return tuple(-v for v in self.c[1:])

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        _check_len(self, other)
        return DivisorClass(tuple(a + b for a, b in zip(self.c, other.c)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        _check_len(self, other)
        return DivisorClass(tuple(a - b for a, b in zip(self.c, other.c)))

    def __neg__(self):
        return DivisorClass(tuple(-a for a in self.c))

    def __mul__(self, k) -> "DivisorClass":
        return DivisorClass(tuple(a * k for a in self.c))

    __rmul__ = __mul__

    def dot(self, other: "DivisorClass"):
        return intersect(self, other)

    def is_integral(self) -> bool:
        return all(Fraction(v).denominator == 1 for v in self.c)

    def __str__(self):
        return "(" + " : ".join(str(v) for v in self.c) + ")"


def _check_len(a: DivisorClass, b: DivisorClass):
    if len(a.c) != len(b.c):
        raise LengthMismatch(f"class lengths differ: {len(a.c)} vs {len(b.c)}")


def intersect(a: DivisorClass, b: DivisorClass):
    _check_len(a, b)
    total = a.c[0] * b.c[0]
    for x, y in zip(a.c[1:], b.c[1:]):
        total -= x * y
    return total


def _unit(n: int, i: int, value=1) -> List:
    v = [0] * (n + 1)
    v[i] = value
    return v


def line_class(cfg: Configuration) -> DivisorClass:
    return DivisorClass(_unit(cfg.n, 0))


def exceptional_strict_class(cfg: Configuration, p: int) -> DivisorClass:
    """Class of the strict transform of ``E_p``: ``E_p* - sum_{q prox p} E_q*``."""
    if not 0 <= p < cfg.n:
        raise IndexError(p)
    v = _unit(cfg.n, p + 1)
    for q in cfg.proximates_of(p):
        v[q + 1] -= 1
    return DivisorClass(v)


def canonical_class(cfg: Configuration) -> DivisorClass:
    return DivisorClass([-3] + [1] * cfg.n)


def delta_class(cfg: Configuration, r: int) -> DivisorClass:
    """``K_foliation - K_surface = (r+2) L* - sum (nu_p + eps_p) E_p*``."""
    return DivisorClass([r + 2] + [-(pt.nu + pt.eps) for pt in cfg.points])


def primitive_representative(x: DivisorClass | Sequence) -> DivisorClass:
    """Integer, gcd-one, positive-leading representative of the line through ``x``."""
    vals = [Fraction(v) for v in (x.c if isinstance(x, DivisorClass) else x)]
    if all(v == 0 for v in vals):
        raise ValueError("the zero class has no projective representative")
    if vals[0] == 0:
        raise ZeroLeadingCoefficient("leading coordinate is zero")
    den = lcm(*(v.denominator for v in vals))
    ints = [int(v * den) for v in vals]
    g = gcd(*ints)
    if ints[0] < 0:
        g = -g
    return DivisorClass(tuple(v // g for v in ints))


def axis_divisors(cfg: Configuration) -> List[Tuple[Optional[int], Optional[int]]]:
    """For each point, which configuration points own the exceptional
    divisors along its local axes ``{x = 0}`` and ``{y = 0}`` (or ``None``).

    Needs coordinates on every non-root point.
    """
    out: List[Tuple[Optional[int], Optional[int]]] = []
    for q, pt in enumerate(cfg.points):
        if pt.parent is None:
            out.append((None, None))
            continue
        cp = pt.coordinates
        if cp is None:
            raise ValueError(f"point {q} has no coordinates")
        xl, yl = out[pt.parent]
        if cp.chart == 1:
            out.append((pt.parent, yl if cp.y == 0 else None))
        else:
            out.append((xl if cp.x == 0 else None, pt.parent))
    return out


def proximity_from_coordinates(cfg: Configuration) -> List[frozenset]:
    axes = axis_divisors(cfg)
    out = []
    for q, pt in enumerate(cfg.points):
        if pt.parent is None:
            out.append(frozenset())
        else:
            out.append(frozenset(a for a in axes[q] if a is not None))
    return out


def validate(cfg: Configuration) -> List[str]:
    """List every violated configuration invariant (empty when valid)."""
    errs: List[str] = []
    n = cfg.n
    for i, pt in enumerate(cfg.points):
        if pt.parent is not None:
            if not 0 <= pt.parent < n:
                errs.append(f"point {i}: parent {pt.parent} out of range")
                continue
            if pt.parent >= i:
                errs.append(f"point {i}: listed before its parent {pt.parent}")
            if pt.parent not in pt.proximate_to:
                errs.append(f"point {i}: not proximate to its parent {pt.parent}")
            if len(pt.proximate_to) not in (1, 2):
                errs.append(f"point {i}: proximate to {len(pt.proximate_to)} points")
        elif pt.proximate_to:
            errs.append(f"point {i}: root point with nonempty proximity")
        for j in pt.proximate_to:
            if not 0 <= j < n:
                errs.append(f"point {i}: proximate to unknown point {j}")
            elif j >= i:
                errs.append(f"point {i}: proximate to later point {j}")
        if pt.nu < 0:
            errs.append(f"point {i}: negative multiplicity")
        if pt.eps not in (0, 1):
            errs.append(f"point {i}: eps must be 0 or 1")
        if (pt.eps == 1) != bool(pt.dicritical):
            errs.append(f"point {i}: eps and dicritical flag disagree")
    if errs:
        return errs
    # satellite consistency: the second divisor must still pass through the parent
    for i, pt in enumerate(cfg.points):
        for j in pt.proximate_to - {pt.parent}:
            par = cfg.points[pt.parent]
            if j not in par.proximate_to and j != par.parent:
                errs.append(f"point {i}: proximate to {j}, which its parent does not touch")
            elif j not in cfg.ancestors(i):
                errs.append(f"point {i}: proximate to non-ancestor {j}")
    # every point must have a dicritical divisor weakly above it
    below_dic = [False] * n
    for i in range(n - 1, -1, -1):
        if cfg.points[i].dicritical:
            below_dic[i] = True
        if below_dic[i] and cfg.points[i].parent is not None:
            below_dic[cfg.points[i].parent] = True
    for i in range(n):
        if not below_dic[i]:
            errs.append(f"point {i}: no dicritical divisor above it")
    # coordinates, when given, must agree with the tree
    if any(pt.coordinates is not None for pt in cfg.points):
        if not cfg.has_coordinates():
            errs.append("coordinates given for some points but not all")
        else:
            for i, pt in enumerate(cfg.points):
                cp = pt.coordinates
                if pt.parent is None:
                    if len(cp.path) != 1 or cp.path[0] not in (0, 1, 2):
                        errs.append(f"point {i}: root chart path must be [0|1|2]")
                else:
                    ppath = cfg.points[pt.parent].coordinates.path
                    if cp.path[:-1] != ppath or cp.chart not in (1, 2):
                        errs.append(f"point {i}: chart path does not extend its parent's")
                    elif (cp.x if cp.chart == 1 else cp.y) != 0:
                        errs.append(f"point {i}: not on the exceptional divisor of its parent")
            if not errs:
                for i, prox in enumerate(proximity_from_coordinates(cfg)):
                    if prox != cfg.points[i].proximate_to:
                        errs.append(f"point {i}: proximity disagrees with coordinates")
            seen = set()
            for i, pt in enumerate(cfg.points):
                key = (pt.parent, pt.coordinates)
                if key in seen:
                    errs.append(f"point {i}: duplicate point")
                seen.add(key)
    return errs
