"""Plane curves of degree ``d`` with virtual multiplicities at a configuration.

Each monomial of degree ``d`` is carried through the chart path of every
point: the root chart restriction and translation, then one blow-up
substitution ``(u, v) -> (u, u v)`` or ``(u v, v)`` plus a translation along
the exceptional divisor per generation.  No division is performed.  If the
exceptional divisors through a point ``q`` carry accumulated virtual
multiplicities ``alpha`` (on ``u = 0``) and ``beta`` (on ``v = 0``), the
conditions at ``q`` are the vanishing of the coefficients of
``u^(alpha+i) v^(beta+j)`` with ``i + j < m_q``.

Blow-up substitutions followed by a translation along the exceptional
divisor never lower total degree, so every image is truncated above the
largest degree any condition looks at.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .config import Configuration
from .errors import MissingCoordinates
from .poly import Poly, monomials_of_degree

__all__ = [
    "VirtualConditions",
    "LinearSystemBasis",
    "condition_matrix",
    "global_sections",
    "projective_dimension",
    "virtual_exponents",
    "strict_multiplicities",
    "rref",
    "kernel",
]


@dataclass(frozen=True)
class VirtualConditions:
    cfg: Configuration
    degree: int
    mult: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mult", tuple(int(m) for m in self.mult))
        if self.degree < 0:
            raise ValueError("degree must be non-negative")
        if len(self.mult) != self.cfg.n:
            raise ValueError(f"expected {self.cfg.n} multiplicities, got {len(self.mult)}")
        if any(m < 0 for m in self.mult):
            raise ValueError("multiplicities must be non-negative")


@dataclass(frozen=True)
class LinearSystemBasis:
    degree: int
    basis: Tuple[Poly, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def virtual_exponents(cfg: Configuration, mult: Sequence[int]) -> List[Tuple[int, int]]:
    """Accumulated virtual multiplicities along the local axes of each point."""
    out: List[Tuple[int, int]] = []
    for pt in cfg.points:
        if pt.parent is None:
            out.append((0, 0))
            continue
        a, b = out[pt.parent]
        m = mult[pt.parent]
        cp = pt.coordinates
        if cp.chart == 1:
            out.append((a + b + m, b if cp.y == 0 else 0))
        else:
            out.append((a if cp.x == 0 else 0, a + b + m))
    return out


def _check_coordinates(cfg: Configuration):
    for i, pt in enumerate(cfg.points):
        if pt.coordinates is None:
            raise MissingCoordinates(f"point {i} has no chart coordinates")


# images of the degree-d monomials at every point, keyed by (cfg, d, bound)
_IMAGE_CACHE: Dict[tuple, List[List[Poly]]] = {}
_CACHE_LIMIT = 256


def _root_image(m: Poly, chart: int, x, y, bound: int) -> Poly:
    return m.dehomogenize(chart).translate((x, y)).truncate(bound)


def _child_image(p: Poly, chart: int, x, y, bound: int) -> Poly:
    if chart == 1:
        q = p.map_exponents(lambda e: (e[0] + e[1], e[1]))
    else:
        q = p.map_exponents(lambda e: (e[0], e[0] + e[1]))
    # the parent image is already truncated; translating along the
    # exceptional divisor may bring high substituted terms back below the bound
    if x or y:
        q = q.translate((x, y))
    return q.truncate(bound)


def monomial_images(cfg: Configuration, d: int, bound: int) -> List[List[Poly]]:
    """``images[q][k]``: the ``k``-th degree-``d`` monomial seen at point ``q``,
    with terms of total degree ``>= bound`` dropped."""
    key = (cfg, d, bound)
    hit = _IMAGE_CACHE.get(key)
    if hit is not None:
        return hit
    _check_coordinates(cfg)
    monos = [Poly.monomial(e) for e in monomials_of_degree(d, 3)]
    images: List[List[Poly]] = []
    for pt in cfg.points:
        cp = pt.coordinates
        if pt.parent is None:
            images.append([_root_image(m, cp.path[0], cp.x, cp.y, bound) for m in monos])
        else:
            images.append([_child_image(p, cp.chart, cp.x, cp.y, bound) for p in images[pt.parent]])
    if len(_IMAGE_CACHE) >= _CACHE_LIMIT:
        _IMAGE_CACHE.clear()
    _IMAGE_CACHE[key] = images
    return images


def _bound(cfg: Configuration, mult: Sequence[int]) -> int:
    ex = virtual_exponents(cfg, mult)
    return max((a + b + m for (a, b), m in zip(ex, mult)), default=0)


def condition_matrix(vc: VirtualConditions) -> List[List[Fraction]]:
    """Rows are linear functionals on the coefficient vector of a degree-``d``
    form (columns in descending grlex order)."""
    cfg, d, mult = vc.cfg, vc.degree, vc.mult
    _check_coordinates(cfg)
    if not any(mult):
        return []
    ex = virtual_exponents(cfg, mult)
    images = monomial_images(cfg, d, _bound(cfg, mult))
    rows: List[List[Fraction]] = []
    for q, mq in enumerate(mult):
        if not mq:
            continue
        a, b = ex[q]
        imgs = images[q]
        for s in range(mq):
            for i in range(s + 1):
                e = (a + i, b + s - i)
                rows.append([img.coeff(e) for img in imgs])
    return rows


def rref(rows: List[List[Fraction]], ncols: int) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form (left-to-right pivots) and the pivot columns."""
    mat = [list(r) for r in rows if any(r)]
    pivots: List[int] = []
    rank = 0
    for col in range(ncols):
        pr = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if pr is None:
            continue
        mat[rank], mat[pr] = mat[pr], mat[rank]
        row = mat[rank]
        inv = 1 / Fraction(row[col])
        row = [v * inv for v in row]
        mat[rank] = row
        nz = [j for j in range(col, ncols) if row[j]]
        for i in range(len(mat)):
            if i != rank:
                f = mat[i][col]
                if f:
                    ri = mat[i]
                    for j in nz:
                        ri[j] -= f * row[j]
        pivots.append(col)
        rank += 1
        if rank == len(mat):
            break
    return mat[:rank], pivots


def kernel(rows: List[List[Fraction]], ncols: int) -> List[List[Fraction]]:
    """Basis of the right kernel, itself in reduced row echelon form."""
    red, pivots = rref(rows, ncols)
    pivset = set(pivots)
    vecs = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r, pc in zip(red, pivots):
            v[pc] = -r[free]
        vecs.append(v)
    out, _ = rref(vecs, ncols)
    return out


def global_sections(vc: VirtualConditions) -> LinearSystemBasis:
    exps = monomials_of_degree(vc.degree, 3)
    rows = condition_matrix(vc)
    basis = kernel(rows, len(exps))
    polys = tuple(Poly({e: c for e, c in zip(exps, v) if c}) for v in basis)
    return LinearSystemBasis(vc.degree, polys)


def projective_dimension(vc: VirtualConditions) -> int:
    exps = monomials_of_degree(vc.degree, 3)
    rows = condition_matrix(vc)
    _, pivots = rref(rows, len(exps))
    return len(exps) - len(pivots) - 1


def strict_multiplicities(f: Poly, cfg: Configuration) -> Tuple[int, ...]:
    """Multiplicity at every point of the strict transform of ``f = 0``."""
    _check_coordinates(cfg)
    local: List[Poly] = []
    mults: List[int] = []
    for pt in cfg.points:
        cp = pt.coordinates
        if pt.parent is None:
            g = f.dehomogenize(cp.path[0]).translate((cp.x, cp.y))
        else:
            g, mp = local[pt.parent], mults[pt.parent]
            if cp.chart == 1:
                g = g.map_exponents(lambda e: (e[0] + e[1], e[1])).divide_by_var_power(0, mp)
            else:
                g = g.map_exponents(lambda e: (e[0], e[0] + e[1])).divide_by_var_power(1, mp)
            g = g.translate((cp.x, cp.y))
        local.append(g)
        mults.append(g.order() if not g.is_zero() else 0)
    return tuple(mults)
