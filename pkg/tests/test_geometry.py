from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kstab.geometry import (
    Polygon,
    integrate_polygon,
    polygon_clip,
    polygon_intersection,
    restrict_to_line,
    shared_edge_line,
    split_by_line,
)
from kstab.poly import AffineForm, Polynomial2, poly_from_terms

UNIT_SQUARE = Polygon.rectangle(0, 1, 0, 1)
TRIANGLE = Polygon([(0, 0), (1, 0), (0, 1)])


def gauss_integrate(p, poly, order=12):
    """Float Gauss quadrature oracle (Duffy transform per fan triangle)."""
    import numpy as np

    nodes, weights = np.polynomial.legendre.leggauss(order)
    nodes = (nodes + 1) / 2
    weights = weights / 2

    def feval(u, v):
        return sum(float(c) * u**a * v**b for (a, b), c in p.terms.items())

    verts = [(float(x), float(y)) for x, y in poly.canonical().vertices]
    if len(verts) < 3:
        return 0.0
    total = 0.0
    x0, y0 = verts[0]
    for i in range(1, len(verts) - 1):
        x1, y1 = verts[i]
        x2, y2 = verts[i + 1]
        jac = (x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0)
        for xi, wi in zip(nodes, weights):
            for eta, we in zip(nodes, weights):
                s, t = xi, eta * (1 - xi)
                u = x0 + s * (x1 - x0) + t * (x2 - x0)
                v = y0 + s * (y1 - y0) + t * (y2 - y0)
                total += abs(jac) * wi * we * (1 - xi) * feval(u, v)
    return total


def test_clip_noop():
    assert polygon_clip(UNIT_SQUARE, AffineForm(0, 1, 0)) == UNIT_SQUARE


def test_clip_to_triangle():
    clipped = polygon_clip(UNIT_SQUARE, AffineForm(1, -1, -1)).canonical()
    assert clipped == TRIANGLE.canonical()


def test_clip_first_chamber_of_the_nodal_flag():
    # {0 <= u <= 1, 0 <= v <= 4 - 2u} cut down to {v <= 2 - 2u}
    band = Polygon.band(0, 1, AffineForm(4, -2, 0))
    chamber = polygon_clip(band, AffineForm(2, -2, -1)).canonical()
    assert chamber == Polygon([(0, 0), (1, 0), (0, 2)]).canonical()


def test_clip_empty_result():
    assert polygon_clip(UNIT_SQUARE, AffineForm(-5, 0, 1)).area() == 0


def test_integrate_area_and_centroid():
    assert integrate_polygon(Polynomial2.const(1), TRIANGLE) == F(1, 2)
    assert integrate_polygon(Polynomial2.var_u(), TRIANGLE) == F(1, 6)


def test_integrate_singular_fiber_volume():
    p = poly_from_terms([(0, 0, 2), (0, 1, -4), (0, 2, 2)])  # 2(1-v)^2
    assert integrate_polygon(p, UNIT_SQUARE) / 2 == F(1, 3)


def test_integrate_degenerate_is_zero():
    flat = Polygon([(0, 0), (1, 0), (2, 0)], validate=False)
    assert integrate_polygon(Polynomial2.const(5), flat) == 0


def test_band_with_vanishing_edge():
    tri = Polygon.band(0, 1, AffineForm(0, 1, 0))  # v <= u
    assert tri.area() == F(1, 2)


def test_nonconvex_rejected():
    with pytest.raises(ValueError, match="convex"):
        Polygon([(0, 0), (2, 0), (1, 1), (2, 2), (0, 2)])


rational_01 = st.fractions(min_value=F(0), max_value=F(1), max_denominator=16)
small_polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)),
    st.fractions(min_value=F(-9), max_value=F(9), max_denominator=8),
    max_size=5,
).map(Polynomial2)


@given(small_polys, rational_01, rational_01)
@settings(max_examples=60)
def test_split_additivity(p, a, b):
    """Integration is additive under any chord split of the polygon."""
    line = AffineForm(a - b, b - 1, 1)  # through (a,0) with slope (1-b)
    lhs, rhs = split_by_line(UNIT_SQUARE, line)
    split_total = integrate_polygon(p, lhs) + integrate_polygon(p, rhs)
    assert split_total == integrate_polygon(p, UNIT_SQUARE)


@given(
    small_polys,
    st.fractions(min_value=F(1, 8), max_value=F(3), max_denominator=8),
    st.fractions(min_value=F(1, 8), max_value=F(2), max_denominator=8),
)
@settings(max_examples=40)
def test_fubini_on_rectangles(p, width, height):
    from kstab.poly import integrate_interval

    rect = Polygon.rectangle(0, width, 0, height)
    # iterate: integrate in v monomial-by-monomial, then in u
    inner = {}
    for (du, dv), c in p.terms.items():
        inner[(du, 0)] = inner.get((du, 0), F(0)) + c * height ** (dv + 1) / (dv + 1)
    iterated = integrate_interval(Polynomial2(inner), 0, width)
    assert integrate_polygon(p, rect) == iterated


@given(small_polys, st.integers(0, 10_000))
@settings(max_examples=200, deadline=None)
def test_numeric_quadrature_cross_check(p, seed):
    import random

    rng = random.Random(seed)
    poly = UNIT_SQUARE
    for _ in range(rng.randint(0, 2)):
        line = AffineForm(
            F(rng.randint(-2, 2), rng.randint(1, 3)),
            F(rng.randint(-3, 3), rng.randint(1, 3)),
            1,
        )
        poly = polygon_clip(poly, line)
    exact = integrate_polygon(p, poly)
    approx = gauss_integrate(p, poly)
    assert abs(float(exact) - approx) <= 1e-9 * max(1.0, abs(float(exact)))


def test_polygon_intersection():
    shifted = Polygon.rectangle(F(1, 2), F(3, 2), F(1, 2), F(3, 2))
    overlap = polygon_intersection(UNIT_SQUARE, shifted)
    assert overlap.area() == F(1, 4)


def test_shared_edge_and_restriction():
    left = Polygon([(0, 0), (1, 0), (1, 1), (0, 1)])
    right = Polygon([(1, F(1, 2)), (2, F(1, 2)), (2, 2), (1, 2)])
    line = shared_edge_line(left, right)
    assert line is not None
    assert line(1, F(3, 4)) == 0
    p = poly_from_terms([(1, 1, 1)])  # u*v restricted to u = 1 is v
    restricted = restrict_to_line(p, line)
    assert restricted(0, F(2, 3)) == F(2, 3)
    far = Polygon.rectangle(5, 6, 5, 6)
    assert shared_edge_line(left, far) is None
