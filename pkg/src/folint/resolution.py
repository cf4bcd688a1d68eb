"""Resolution of the dicritical singularities of a plane foliation.

Singular points are blown up until every singularity is simple; the
configuration returned keeps only the points that lie below a dicritical
(non-invariant) exceptional divisor.  Every local chart keeps its
exceptional divisors on the coordinate axes, so proximity can be read off
the chart path.

Rational singular points are handled natively.  Irrational ones are
certified simple with exact arithmetic in ``Q(t)``; an irrational point
that is not simple raises :class:`NonRationalDetected`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .algebraic import AlgebraicPoint, NumberField, solve_affine, solve_univariate, to_upoly, u_gcd
from .config import ChartPoint, Configuration, Point, axis_divisors
from .errors import NonRationalDetected, NonTermination, PositiveDimensionalSingularLocus
from .poly import Poly, gcd
from .polyform import AffineOneForm, ProjectiveOneForm

__all__ = [
    "LocalChart",
    "dehomogenize",
    "singular_points",
    "algebraic_multiplicity",
    "blow_up",
    "is_exceptional_invariant",
    "is_simple_singularity",
    "resolve_dicritical",
    "ResolutionNode",
]

DEFAULT_DEPTH_LIMIT = 64

# chart k keeps the other two homogeneous variables, in increasing order
_CHART_VARS = {0: (1, 2), 1: (0, 2), 2: (0, 1)}


@dataclass(frozen=True)
class LocalChart:
    """A blow-up chart: ``form`` is the saturated pull-back in coordinates
    ``(u, v)``; ``exceptional`` is 0 when ``E = {u = 0}`` (chart 1) and 1 when
    ``E = {v = 0}`` (chart 2).  ``center`` is the blown-up point and
    ``history`` the chart path leading to it."""

    center: Tuple[Fraction, Fraction]
    form: AffineOneForm
    exceptional: int
    saturation: int
    history: Tuple[int, ...] = ()


def dehomogenize(omega: ProjectiveOneForm, chart: int) -> AffineOneForm:
    """Restrict ``Omega`` to ``X_chart = 1``; coordinates are the remaining
    variables in increasing index order."""
    i, j = _CHART_VARS[chart]
    coeffs = omega.coefficients
    a = coeffs[i].dehomogenize(chart)
    b = coeffs[j].dehomogenize(chart)
    return AffineOneForm(a, b).saturated()


def _linear_part(form: AffineOneForm, K: NumberField, point) -> tuple:
    """Jacobian of the dual field ``(b, -a)`` at ``point`` with entries in ``K``."""
    a, b = form.a, form.b
    bx = K.eval_poly(b.diff(0), point)
    by = K.eval_poly(b.diff(1), point)
    ax = K.eval_poly(a.diff(0), point)
    ay = K.eval_poly(a.diff(1), point)
    return bx, by, K.neg(ax), K.neg(ay)


def _is_simple_linear(K: NumberField, j11, j12, j21, j22) -> bool:
    if all(K.is_zero(v) for v in (j11, j12, j21, j22)):
        return False
    t = K.add(j11, j22)
    d = K.sub(K.mul(j11, j22), K.mul(j12, j21))
    if K.is_zero(d):
        return not K.is_zero(t)
    q = K.as_rational(K.div(K.mul(t, t), d))
    if q is None:
        # t^2/d irrational forces an irrational eigenvalue ratio
        return True
    return not _has_positive_rational_ratio(q)


def _has_positive_rational_ratio(q: Fraction) -> bool:
    """Does ``rho + 2 + 1/rho = q`` have a positive rational root?"""
    if q < 4:
        return False
    disc = q * (q - 4)
    return _is_rational_square(disc)


def _is_rational_square(x: Fraction) -> bool:
    from math import isqrt
    if x < 0:
        return False
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    return rn * rn == n and rd * rd == d


def is_simple_singularity(form: AffineOneForm, p: Sequence) -> bool:
    """Simple (reduced) singularity test at a rational point ``p``."""
    K = NumberField.rational(0)
    pt = (K.const(p[0]), K.const(p[1]))
    return _is_simple_linear(K, *_linear_part(form, K, pt))


def algebraic_multiplicity(form: AffineOneForm, p: Sequence) -> int:
    """Order at ``p`` of the dual field ``b d/dx - a d/dy``."""
    local = form.translate(p)
    return local.order()


def singular_points(form: AffineOneForm) -> List[Tuple[Fraction, Fraction]]:
    """Rational singular points of the chart, sorted.

    Irrational singular points are accepted silently when they are simple
    (nothing dicritical can lie above them) and raise
    :class:`NonRationalDetected` otherwise.
    """
    rational, irrational = _affine_singularities(form)
    bad = [p for p in irrational if not _is_simple_linear(p.field, *_linear_part(form, p.field, (p.x, p.y)))]
    if bad:
        raise NonRationalDetected(
            f"{len(bad)} non-simple singular orbit(s) with irrational coordinates "
            f"(minimal polynomial {list(bad[0].field.modulus)})")
    return rational


def _affine_singularities(form: AffineOneForm):
    a, b = form.a, form.b
    if a.is_zero() or b.is_zero():
        other = b if a.is_zero() else a
        if not other.is_constant():
            raise PositiveDimensionalSingularLocus("one coefficient vanishes identically")
        return [], []
    if not gcd(a, b).is_constant():
        raise PositiveDimensionalSingularLocus("coefficients share a factor")
    rational, irrational = [], []
    for p in solve_affine(a, b):
        r = p.rational()
        if r is not None:
            rational.append(r)
        else:
            irrational.append(p)
    rational.sort()
    return rational, irrational


def _pullback(form: AffineOneForm, chart: int) -> Tuple[AffineOneForm, int]:
    """Pull back ``a dx + b dy`` (singular at the origin) by the blow-up chart
    and divide by the largest power of the exceptional coordinate."""
    a, b = form.a, form.b
    if chart == 1:
        # x = u, y = u v:  dx = du, dy = v du + u dv
        mono = lambda e: (e[0] + e[1], e[1])
        a1, b1 = a.map_exponents(mono), b.map_exponents(mono)
        v = Poly.var(1, 2)
        u = Poly.var(0, 2)
        P = a1 + v * b1
        Q = u * b1
        idx = 0
    else:
        # x = u v, y = v:  dx = v du + u dv, dy = dv
        mono = lambda e: (e[0], e[0] + e[1])
        a1, b1 = a.map_exponents(mono), b.map_exponents(mono)
        v = Poly.var(1, 2)
        u = Poly.var(0, 2)
        P = v * a1
        Q = u * a1 + b1
        idx = 1
    k = min(P.content_power(idx) if P else 10 ** 9, Q.content_power(idx) if Q else 10 ** 9)
    return AffineOneForm(P.divide_by_var_power(idx, k), Q.divide_by_var_power(idx, k)), k


def blow_up(chart: LocalChart | AffineOneForm, p: Sequence = (0, 0), history: Tuple[int, ...] = ()) -> Tuple[LocalChart, LocalChart]:
    """Blow up ``p``; return the charts ``(x, y) -> (x, x y)`` and ``(x, y) -> (x y, y)``."""
    form = chart.form if isinstance(chart, LocalChart) else chart
    if isinstance(chart, LocalChart):
        history = chart.history
    local = form.translate(p)
    p = (Fraction(p[0]), Fraction(p[1]))
    f1, k1 = _pullback(local, 1)
    f2, k2 = _pullback(local, 2)
    return (LocalChart(p, f1, 0, k1, history + (1,)), LocalChart(p, f2, 1, k2, history + (2,)))


def is_exceptional_invariant(chart: LocalChart) -> bool:
    """Is the exceptional divisor an integral curve of the chart's foliation?"""
    # E = {w = 0} is invariant iff w divides the coefficient of the other differential
    coeff = chart.form.b if chart.exceptional == 0 else chart.form.a
    if coeff.is_zero():
        return True
    return coeff.content_power(chart.exceptional) >= 1


@dataclass
class ResolutionNode:
    coords: ChartPoint
    form: AffineOneForm          # local form centred at the origin
    nu: int = 0
    eps: int = 0
    children: List["ResolutionNode"] = field(default_factory=list)
    simple_children: int = 0      # singular points left simple on E

    @property
    def dicritical(self) -> bool:
        return self.eps == 1

    def has_dicritical(self) -> bool:
        return self.dicritical or any(c.has_dicritical() for c in self.children)


def _exceptional_singularities(chart: LocalChart) -> List[Fraction]:
    """Rational singular points on ``E`` in chart 1, as offsets ``c`` of ``(0, c)``."""
    f = chart.form
    P0 = to_upoly(_restrict_u0(f.a))
    Q0 = to_upoly(_restrict_u0(f.b))
    if not P0 and not Q0:
        raise PositiveDimensionalSingularLocus("form vanishes along the exceptional divisor")
    h = u_gcd(P0, Q0) if (P0 and Q0) else (P0 or Q0)
    offsets = []
    for K, theta in solve_univariate(h):
        if K.is_rational:
            offsets.append(K.as_rational(theta))
        else:
            pt = (K.zero(), theta)
            if not _is_simple_linear(K, *_linear_part(f, K, pt)):
                raise NonRationalDetected(
                    f"non-simple singular orbit on an exceptional divisor "
                    f"(minimal polynomial {list(K.modulus)})")
    offsets.sort()
    return offsets


def _restrict_u0(p: Poly) -> Poly:
    """``p(0, v)`` as a univariate polynomial in ``v``."""
    return Poly({(e[1],): c for e, c in p.terms.items() if e[0] == 0}, 1)


def _resolve_node(form: AffineOneForm, coords: ChartPoint, depth: int, limit: int) -> ResolutionNode:
    if depth > limit:
        raise NonTermination(f"blow-up depth limit {limit} exceeded")
    node = ResolutionNode(coords=coords, form=form, nu=form.order())
    c1, c2 = blow_up(form, (0, 0), coords.path)
    invariant = is_exceptional_invariant(c1)
    node.eps = 0 if invariant else 1
    if invariant != is_exceptional_invariant(c2):
        raise AssertionError("charts disagree on the invariance of the exceptional divisor")
    if c1.saturation != node.nu + node.eps or c2.saturation != c1.saturation:
        raise AssertionError("saturation exponent does not match nu + eps")
    candidates = []
    for c in _exceptional_singularities(c1):
        local = c1.form.translate((0, c))
        candidates.append((ChartPoint(coords.path + (1,), 0, c), local))
    f2 = c2.form
    if not f2.a.coeff((0, 0)) and not f2.b.coeff((0, 0)):
        candidates.append((ChartPoint(coords.path + (2,), 0, 0), f2))
    for cp, local in candidates:
        if is_simple_singularity(local, (0, 0)):
            node.simple_children += 1
            continue
        node.children.append(_resolve_node(local, cp, depth + 1, limit))
    return node


def _root_singularities(omega: ProjectiveOneForm):
    """Singular points of the plane: the chart ``X2 = 1``, then the line at
    infinity without ``(1:0:0)``, then ``(1:0:0)``."""
    out = []
    f2 = dehomogenize(omega, 2)
    for p in singular_points(f2):
        out.append((ChartPoint((2,), p[0], p[1]), f2.translate(p)))
    # line X2 = 0 seen from X1 = 1, coordinates (X0, X2): points (c, 0)
    f1 = dehomogenize(omega, 1)
    a0 = to_upoly(Poly({(e[0],): c for e, c in f1.a.terms.items() if e[1] == 0}, 1))
    b0 = to_upoly(Poly({(e[0],): c for e, c in f1.b.terms.items() if e[1] == 0}, 1))
    if a0 or b0:
        h = u_gcd(a0, b0) if (a0 and b0) else (a0 or b0)
        for K, theta in solve_univariate(h):
            if K.is_rational:
                c = K.as_rational(theta)
                out.append((ChartPoint((1,), c, 0), f1.translate((c, 0))))
            elif not _is_simple_linear(K, *_linear_part(f1, K, (theta, K.zero()))):
                raise NonRationalDetected("non-simple singular orbit on the line at infinity")
    else:
        raise PositiveDimensionalSingularLocus("line at infinity is singular")
    f0 = dehomogenize(omega, 0)
    if not f0.a.coeff((0, 0)) and not f0.b.coeff((0, 0)):
        out.append((ChartPoint((0,), 0, 0), f0))
    return out


def resolution_tree(omega: ProjectiveOneForm, depth_limit: int = DEFAULT_DEPTH_LIMIT) -> List[ResolutionNode]:
    """Trees of blown-up points over every non-simple singular point."""
    trees = []
    for cp, local in _root_singularities(omega):
        if is_simple_singularity(local, (0, 0)):
            continue
        trees.append(_resolve_node(local, cp, 0, depth_limit))
    return trees


def configuration_from_trees(trees: Sequence[ResolutionNode]) -> Configuration:
    """Flatten the dicritical part of the trees (depth-first, preorder)."""
    pts: List[Point] = []

    def walk(node: ResolutionNode, parent: Optional[int]):
        if not node.has_dicritical():
            return
        idx = len(pts)
        pts.append(Point(parent=parent, coordinates=node.coords, nu=node.nu,
                         eps=node.eps, dicritical=node.dicritical))
        for child in node.children:
            walk(child, idx)

    for t in trees:
        walk(t, None)
    cfg = Configuration(tuple(pts))
    axes = axis_divisors(cfg)
    pts = [Point(parent=pt.parent,
                 proximate_to=frozenset(a for a in axes[i] if a is not None) if pt.parent is not None else frozenset(),
                 coordinates=pt.coordinates, nu=pt.nu, eps=pt.eps, dicritical=pt.dicritical)
           for i, pt in enumerate(cfg.points)]
    return Configuration(tuple(pts))


def resolve_dicritical(omega: ProjectiveOneForm, depth_limit: int = DEFAULT_DEPTH_LIMIT) -> Configuration:
    """Configuration of dicritical points of ``omega`` with proximity,
    multiplicities ``nu``, ``eps`` and dicriticity flags."""
    return configuration_from_trees(resolution_tree(omega, depth_limit))
