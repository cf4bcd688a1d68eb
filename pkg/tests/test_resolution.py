import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from folint.algebraic import solve_affine
from folint.config import delta_class, validate
from folint.errors import NonRationalDetected, NonTermination, PositiveDimensionalSingularLocus
from folint.poly import Poly, X, parse_poly as P
from folint.polyform import AffineOneForm, form_from_pencil, vector_field_to_form
from folint.resolution import (algebraic_multiplicity, blow_up, dehomogenize, is_exceptional_invariant,
                               is_simple_singularity, resolve_dicritical, singular_points)

from fixtures import EX1, EX2, EX3, EX4

x, y = Poly.var(0, 2), Poly.var(1, 2)


def aff(a, b):
    return AffineOneForm(a, b)


def test_simple_singularity_classification():
    assert is_simple_singularity(aff(y, x), (0, 0))
    assert not is_simple_singularity(aff(y.scale(-2), x), (0, 0))
    assert not is_simple_singularity(aff(-x * x, y), (0, 0))
    # eigenvalues 1 +- sqrt 2: ratio is irrational
    assert is_simple_singularity(aff(-(x + y.scale(2)), x + y), (0, 0))
    # a saddle-node (one zero eigenvalue) is simple
    assert is_simple_singularity(aff(-y * y, x), (0, 0))


def test_multiplicity_and_singular_points():
    f = aff(-y.scale(2) + x * x, x)
    assert singular_points(f) == [(0, 0)]
    assert algebraic_multiplicity(f, (0, 0)) == 1
    g = aff(x * x - y * y, x * y)
    assert algebraic_multiplicity(g, (0, 0)) == 2


def test_irrational_points():
    two = Poly.const(2, 2)
    # nilpotent linear part at (+-sqrt 2, 0)
    nilpotent = aff(x * x - two, y * (x * x - two + y))
    with pytest.raises(NonRationalDetected):
        singular_points(nilpotent)
    # eigenvalue ratio 2 at (+-sqrt 2, 0)
    node = aff(x * y, two - x * x)
    with pytest.raises(NonRationalDetected):
        singular_points(node)
    # irrational negative ratio: simple, so silently skipped
    assert singular_points(aff(y, x * x - two)) == []


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=6, max_size=6), st.lists(st.integers(-3, 3), min_size=6, max_size=6))
def test_solver_matches_sympy(ca, cb):
    ms = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    a = Poly(dict(zip(ms, ca)), 2)
    b = Poly(dict(zip(ms, cb)), 2)
    if a.is_zero() or b.is_zero():
        return
    sx, sy = sympy.symbols("x y")
    ea = sum(c * sx**i * sy**j for (i, j), c in zip(ms, ca))
    eb = sum(c * sx**i * sy**j for (i, j), c in zip(ms, cb))
    if sympy.gcd(ea, eb).free_symbols:
        return
    expected = sympy.solve_poly_system([ea, eb], sx, sy) if ea.free_symbols and eb.free_symbols else None
    if expected is None:
        return
    pts = solve_affine(a, b)
    assert sum(p.field.degree for p in pts) == len(set(expected))
    rational = {p.rational() for p in pts if p.rational() is not None}
    oracle = {(Fraction(str(u)), Fraction(str(v))) for u, v in expected if u.is_rational and v.is_rational}
    assert rational == oracle


def test_blow_up_radial_point_is_dicritical():
    c1, c2 = blow_up(aff(-y, x))
    assert not is_exceptional_invariant(c1) and not is_exceptional_invariant(c2)
    assert c1.saturation == 2 and c2.saturation == 2


def test_blow_up_node_is_not_dicritical():
    c1, c2 = blow_up(aff(y, x.scale(-2)))
    assert is_exceptional_invariant(c1) and is_exceptional_invariant(c2)
    assert c1.saturation == 1


def test_blow_up_regular_point():
    c1, _ = blow_up(aff(Poly.zero(2), Poly.const(1, 2)))
    assert is_exceptional_invariant(c1)
    assert c1.saturation == 0


def test_dehomogenize_chart_variables():
    w = vector_field_to_form(Poly.const(1), Poly.zero(), Poly.zero())
    f = dehomogenize(w, 2)
    assert f.a.nvars == 2
    assert not f.a.is_zero() or not f.b.is_zero()


def test_pencil_of_lines_gives_one_point():
    cfg = resolve_dicritical(form_from_pencil(X(0), X(1)))
    assert cfg.n == 1 and cfg.dic == 1
    assert cfg.points[0].coordinates.projective() == (0, 0, 1)
    assert (cfg.points[0].nu, cfg.points[0].eps) == (1, 1)


def test_pencil_of_conics_through_four_points():
    F = P("X0^2 - X2^2")
    G = P("X1^2 - X2^2")
    cfg = resolve_dicritical(form_from_pencil(F, G))
    assert cfg.n == 4 and cfg.dic == 4
    assert all(pt.parent is None for pt in cfg.points)
    assert {pt.coordinates.projective() for pt in cfg.points} == {(a, b, 1) for a in (1, -1) for b in (1, -1)}


@pytest.mark.parametrize("omega,n,dic,delta", [
    (EX1, 13, 2, (7, -1, -1, -2, -5, -2, -2, -2, -2, -1, -1, -1, -1, -2)),
    (EX2, 19, 1, (6, -2, -3, -2, -2) + (-1,) * 14 + (-2,)),
    (EX3, 10, 1, (7, -2, -3, -3, -3, -3, -2, -1, -2, -1, -2)),
    (EX4, 19, 1, (6, -2, -3, -2, -2) + (-1,) * 14 + (-2,)),
])
def test_example_configurations(omega, n, dic, delta):
    cfg = resolve_dicritical(omega)
    assert cfg.n == n and cfg.dic == dic
    assert validate(cfg) == []
    assert delta_class(cfg, omega.degree).c == delta


def test_example1_dicritical_points():
    cfg = resolve_dicritical(EX1)
    assert cfg.dicritical_indices() == [2, 12]


def test_depth_limit():
    with pytest.raises(NonTermination):
        resolve_dicritical(EX2, depth_limit=5)
    assert resolve_dicritical(EX2, depth_limit=18).n == 19


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_random_pencils_resolve_to_valid_configurations(seed):
    rng = random.Random(seed)
    d = rng.choice([2, 3])
    from folint.poly import monomials_of_degree
    Pp = Poly({e: rng.randint(-3, 3) for e in monomials_of_degree(d - 1, 3)})
    F = X(1) ** d - X(2) * Pp
    if Pp.coeff((d - 1, 0, 0)) == 0:
        F = F - X(2) * X(0) ** (d - 1)
    cfg = resolve_dicritical(form_from_pencil(F, X(2) ** d))
    assert validate(cfg) == []
    # every base point lies above (1:0:0)
    assert [pt.coordinates.path for pt in cfg.points if pt.parent is None] == [(0,)]
    assert cfg.dic >= 1
