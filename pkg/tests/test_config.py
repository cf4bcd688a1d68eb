import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from folint.config import (ChartPoint, Configuration, DivisorClass, Point, axis_divisors, canonical_class,
                           delta_class, exceptional_strict_class, intersect, line_class,
                           primitive_representative, proximity_from_coordinates, validate)
from folint.errors import LengthMismatch, ZeroLeadingCoefficient

from randomconf import random_configuration


def chain(n, satellite_at=()):
    """Free chain of ``n`` points, with the listed indices in chart 2 (satellite)."""
    pts = [Point(None, coordinates=ChartPoint((2,), 0, 0))]
    path = (2,)
    for i in range(1, n):
        chart = 2 if i in satellite_at else 1
        path = path + (chart,)
        pts.append(Point(i - 1, coordinates=ChartPoint(path, 0, 0)))
    bare = Configuration(tuple(pts))
    prox = proximity_from_coordinates(bare)
    last = n - 1
    return Configuration(tuple(Point(p.parent, prox[i], p.coordinates, 1, int(i == last), i == last)
                               for i, p in enumerate(pts)))


def test_intersection_form_on_basis():
    cfg = chain(3)
    L, E = line_class(cfg), [DivisorClass([0] + [int(i == j) for j in range(3)]) for i in range(3)]
    assert intersect(L, L) == 1
    assert all(intersect(e, e) == -1 for e in E)
    assert intersect(L, E[0]) == 0 and intersect(E[0], E[1]) == 0


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        intersect(DivisorClass((1, 0)), DivisorClass((1, 0, 0)))


def test_strict_transform_classes_of_chain():
    # chart-1 origins are free; a chart-2 origin also lies on the grandparent's divisor
    free, sat = chain(3), chain(3, satellite_at=(2,))
    assert [sorted(p.proximate_to) for p in free.points] == [[], [0], [1]]
    assert [sorted(p.proximate_to) for p in sat.points] == [[], [0], [0, 1]]
    assert exceptional_strict_class(free, 0).c == (0, 1, -1, 0)
    assert exceptional_strict_class(sat, 0).c == (0, 1, -1, -1)
    assert exceptional_strict_class(sat, 2).c == (0, 0, 0, 1)
    for cfg, p in [(c, p) for c in (free, sat) for p in range(3)]:
        e = exceptional_strict_class(cfg, p)
        # strict transforms of exceptional divisors are smooth rational curves
        self_int = intersect(e, e)
        assert intersect(canonical_class(cfg), e) == -2 - self_int


def test_free_chain_offsets_leave_satellites():
    pts = [Point(None, coordinates=ChartPoint((2,), 0, 0)),
           Point(0, coordinates=ChartPoint((2, 1), 0, 1)),
           Point(1, coordinates=ChartPoint((2, 1, 1), 0, 1))]
    prox = proximity_from_coordinates(Configuration(tuple(pts)))
    assert prox == [frozenset(), frozenset({0}), frozenset({1})]
    assert axis_divisors(Configuration(tuple(pts)))[2] == (1, None)


def test_delta_class():
    cfg = chain(2)
    assert delta_class(cfg, 3).c == (5, -1, -2)


def test_primitive_representative():
    assert primitive_representative([Fraction(-4), 2, Fraction(6, 1)]).c == (2, -1, -3)
    assert primitive_representative([Fraction(1, 2), Fraction(1, 3)]).c == (3, 2)
    with pytest.raises(ZeroLeadingCoefficient):
        primitive_representative([0, 1, 2])
    with pytest.raises(ValueError):
        primitive_representative([0, 0])


@given(st.lists(st.integers(-50, 50), min_size=2, max_size=6), st.integers(-9, 9).filter(bool))
def test_primitive_representative_is_scale_invariant(v, k):
    if v[0] == 0:
        return
    a = primitive_representative(v)
    b = primitive_representative([k * t for t in v])
    assert a == b and a.c[0] > 0


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 9))
def test_random_configurations_validate(seed, n):
    cfg = random_configuration(random.Random(seed), n)
    assert validate(cfg) == []
    # every proximity relation points to an ancestor, satellites touch two
    for i, pt in enumerate(cfg.points):
        assert pt.proximate_to <= set(cfg.ancestors(i))
        assert len(pt.proximate_to) <= 2


def test_validate_reports_errors():
    good = chain(3)
    pts = list(good.points)
    pts[1] = Point(0, frozenset(), pts[1].coordinates, 1, 0, False)
    assert any("not proximate to its parent" in e for e in validate(Configuration(tuple(pts))))
    pts = list(good.points)
    pts[2] = Point(1, pts[2].proximate_to, pts[2].coordinates, 1, 0, False)
    assert any("no dicritical divisor" in e for e in validate(Configuration(tuple(pts))))
    pts = list(good.points)
    pts[2] = Point(1, pts[2].proximate_to, pts[2].coordinates, 1, 0, True)
    assert any("eps and dicritical" in e for e in validate(Configuration(tuple(pts))))
    pts = list(good.points)
    pts[2] = Point(1, frozenset({0, 1}), pts[2].coordinates, 1, 1, True)
    assert any("proximity disagrees" in e for e in validate(Configuration(tuple(pts))))


def test_configuration_is_hashable():
    assert hash(chain(3)) == hash(chain(3))
    assert chain(3) != chain(3, satellite_at=(2,))
