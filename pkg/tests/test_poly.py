from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kstab.poly import AffineForm, Polynomial2, integrate_interval, poly_from_terms

coeffs = st.fractions(min_value=F(-20), max_value=F(20), max_denominator=12)


def small_polys(max_deg_u=4, max_deg_v=0):
    return st.dictionaries(
        st.tuples(st.integers(0, max_deg_u), st.integers(0, max_deg_v)),
        coeffs,
        max_size=6,
    ).map(Polynomial2)


def test_integrate_constant_is_length():
    assert integrate_interval(Polynomial2.const(1), 0, 1) == 1


def test_integrate_hyperplane_volume_integrand():
    # (4 - u)(1 - u)^2 over [0, 1], scaled by 1/4, is the S-value 5/16
    p = (
        poly_from_terms([(0, 0, 4), (1, 0, -1)])
        * poly_from_terms([(0, 0, 1), (1, 0, -1)])
        * poly_from_terms([(0, 0, 1), (1, 0, -1)])
    )
    assert integrate_interval(p, 0, 1) / 4 == F(5, 16)


def test_integrate_exceptional_volume_integrand():
    p = poly_from_terms([(3, 0, 2), (1, 0, -6), (0, 0, 4)])
    assert integrate_interval(p, 0, 1) / 4 == F(3, 8)


def test_integrate_rejects_bivariate():
    with pytest.raises(ValueError, match="not univariate"):
        integrate_interval(Polynomial2.var_v(), 0, 1)


def test_integrate_rejects_reversed_interval():
    with pytest.raises(ValueError):
        integrate_interval(Polynomial2.const(1), 1, 0)


@given(small_polys(), small_polys())
def test_integration_is_linear(p, q):
    left = integrate_interval(p + q, 0, 2)
    assert left == integrate_interval(p, 0, 2) + integrate_interval(q, 0, 2)


@given(small_polys(), st.fractions(min_value=F(0), max_value=F(3), max_denominator=8))
def test_integration_interval_additivity(p, mid):
    total = integrate_interval(p, 0, 3)
    assert total == integrate_interval(p, 0, mid) + integrate_interval(p, mid, 3)


def test_affine_evaluation_and_arithmetic():
    f = AffineForm(F(19, 6), F(-7, 6), -1)
    assert f(1, 2) == F(19, 6) - F(7, 6) - 2
    g = f - AffineForm(0, 0, -1)
    assert g.cv == 0
    assert (f * 6).c == 19


def test_affine_product_is_polynomial():
    f = AffineForm(1, -1, 0)
    p = f * f
    assert isinstance(p, Polynomial2)
    assert p.coefficient(2, 0) == 1
    assert p.coefficient(0, 0) == 1
    assert p.coefficient(1, 0) == -2


def test_affine_normalized_keeps_halfplane_orientation():
    f = AffineForm(F(1, 2), F(-3, 2), 0).normalized()
    assert (f.c, f.cu, f.cv) == (1, -3, 0)
    g = AffineForm(F(-2, 4), 0, F(1, 4)).normalized()
    assert (g.c, g.cu, g.cv) == (-2, 0, 1)


@given(
    st.fractions(max_denominator=6, min_value=F(-5), max_value=F(5)),
    st.fractions(max_denominator=6, min_value=F(-5), max_value=F(5)),
)
def test_substitution_agrees_with_evaluation(u, v):
    p = poly_from_terms([(2, 1, 3), (1, 0, -2), (0, 2, F(1, 2)), (0, 0, 7)])
    composed = p.substitute(AffineForm(1, 2, -1), AffineForm(0, 1, 1))
    assert composed(u, v) == p(1 + 2 * u - v, u + v)


def test_degree_warning_threshold():
    with pytest.warns(UserWarning, match="sanity threshold"):
        poly_from_terms([(7, 0, 1)])
