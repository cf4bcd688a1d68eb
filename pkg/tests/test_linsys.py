import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from folint.config import ChartPoint, Configuration, Point, proximity_from_coordinates
from folint.errors import MissingCoordinates
from folint.linsys import (VirtualConditions, condition_matrix, global_sections, kernel, monomial_images,
                           projective_dimension, rref, strict_multiplicities, virtual_exponents)
from folint.poly import Poly, X, monomials_of_degree, parse_poly as P
from folint.resolution import resolve_dicritical

import linsys_oracle
from fixtures import EX2, EX4
from randomconf import general_points, random_configuration


def test_no_conditions():
    cfg = Configuration(tuple(general_points(random.Random(0), 2)))
    assert projective_dimension(VirtualConditions(cfg, 3, (0, 0))) == 9
    assert global_sections(VirtualConditions(cfg, 0, (0, 0))).dimension == 1


def test_conics_through_points():
    cfg = Configuration(tuple(general_points(random.Random(1), 5)))
    assert projective_dimension(VirtualConditions(cfg, 2, (1,) * 5)) == 0
    # a double point and a simple one on a line: the line doubled plus a line
    assert projective_dimension(VirtualConditions(cfg, 2, (2, 1, 0, 0, 0))) == 1


def test_sections_vanish_at_points():
    rng = random.Random(2)
    pts = general_points(rng, 3)
    cfg = Configuration(tuple(pts))
    for f in global_sections(VirtualConditions(cfg, 4, (2, 2, 1))).basis:
        for pt, m in zip(pts, (2, 2, 1)):
            local = f.dehomogenize(2).translate((pt.coordinates.x, pt.coordinates.y))
            assert local.is_zero() or local.order() >= m


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_matches_taylor_oracle(seed):
    rng = random.Random(seed)
    pts = general_points(rng, rng.randint(1, 6))
    d = rng.randint(1, 5)
    mults = tuple(rng.randint(0, 3) for _ in pts)
    cfg = Configuration(tuple(pts))
    expected = linsys_oracle.dimension(d, [(p.coordinates.x, p.coordinates.y) for p in pts], mults)
    assert projective_dimension(VirtualConditions(cfg, d, mults)) == max(expected, -1)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_monotone_in_multiplicities(seed):
    rng = random.Random(seed)
    cfg = random_configuration(rng, rng.randint(1, 5))
    d = rng.randint(1, 4)
    m = [rng.randint(0, 2) for _ in range(cfg.n)]
    base = projective_dimension(VirtualConditions(cfg, d, m))
    i = rng.randrange(cfg.n)
    m[i] += 1
    assert projective_dimension(VirtualConditions(cfg, d, m)) <= base


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_curve_lies_in_its_own_system(seed):
    rng = random.Random(seed)
    cfg = random_configuration(rng, rng.randint(1, 6))
    d = rng.randint(1, 4)
    f = Poly({e: rng.randint(-2, 2) for e in monomials_of_degree(d, 3)})
    if rng.random() < 0.5:
        # force the curve through the first root point
        c = cfg.points[0].coordinates
        f = f - Poly.const(f.dehomogenize(2).evaluate((c.x, c.y))) * X(2) ** d
    if f.is_zero():
        return
    m = strict_multiplicities(f, cfg)
    basis = global_sections(VirtualConditions(cfg, d, m)).basis
    exps = monomials_of_degree(d, 3)
    span = [[b.coeff(e) for e in exps] for b in basis]
    target = [f.coeff(e) for e in exps]
    assert len(rref(span + [target], len(exps))[1]) == len(basis)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 5))
def test_curvilinear_chain_imposes_independent_conditions(seed, d):
    rng = random.Random(seed)
    n = rng.randint(1, d + 1)
    pts = [Point(None, coordinates=ChartPoint((2,), 0, 0))]
    path = (2,)
    for i in range(1, n):
        path += (1,)
        pts.append(Point(i - 1, coordinates=ChartPoint(path, 0, rng.randint(-2, 2))))
    prox = proximity_from_coordinates(Configuration(tuple(pts)))
    cfg = Configuration(tuple(Point(p.parent, prox[i], p.coordinates) for i, p in enumerate(pts)))
    expected = (d + 1) * (d + 2) // 2 - 1 - n
    assert projective_dimension(VirtualConditions(cfg, d, (1,) * n)) == expected


def test_virtual_exponents_satellite():
    pts = [Point(None, coordinates=ChartPoint((2,), 0, 0)),
           Point(0, coordinates=ChartPoint((2, 2), 0, 0)),
           Point(1, coordinates=ChartPoint((2, 2, 1), 0, 0))]
    cfg = Configuration(tuple(pts))
    # chart 2 puts E0 on v = 0; then chart 1 puts E1 on u = 0 and keeps E0 on v = 0
    assert virtual_exponents(cfg, (3, 2, 1)) == [(0, 0), (0, 3), (5, 3)]


def test_strict_multiplicities_of_pencil_member():
    cfg = resolve_dicritical(EX2)
    f = P("X1^5 - X0^3*X2^2")
    m = strict_multiplicities(f, cfg)
    assert m[:4] == (2, 2, 1, 1)


def test_translation_is_not_truncated_away():
    # the pencil of Example 2 needs the terms that a blow-up substitution
    # lifts above the truncation bound before a translation brings them back
    cfg = resolve_dicritical(EX2)
    T = (5, (2, 2) + (1,) * 17)
    res = global_sections(VirtualConditions(cfg, *T))
    assert res.dimension == 2
    exps = monomials_of_degree(5, 3)
    span = [[b.coeff(e) for e in exps] for b in res.basis]
    for f in (P("X1^5 - X0^3*X2^2"), P("X2^5")):
        assert len(rref(span + [[f.coeff(e) for e in exps]], len(exps))[1]) == 2


def test_example4_section_space_is_one_dimensional():
    cfg = resolve_dicritical(EX4)
    res = global_sections(VirtualConditions(cfg, 5, (2, 2) + (1,) * 17))
    assert res.dimension == 1
    assert res.basis[0].monic() == P("X2^5")
    assert res.basis[0].monic() != P("X1*X2^4")


def test_missing_coordinates():
    cfg = Configuration((Point(None, dicritical=True, eps=1),))
    with pytest.raises(MissingCoordinates):
        projective_dimension(VirtualConditions(cfg, 2, (1,)))


@given(st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4), max_size=5))
def test_kernel(rows):
    rows = [[Fraction(v) for v in r] for r in rows]
    ker = kernel(rows, 4)
    for v in ker:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)
    assert len(ker) + len(rref(rows, 4)[1]) == 4
