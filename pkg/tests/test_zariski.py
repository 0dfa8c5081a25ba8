import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kstab.geometry import Polygon
from kstab.lattice import CurveLattice, DivisorClass, ParametricDivisor
from kstab.poly import AffineForm
from kstab.zariski import (
    Chamber,
    ChamberDecomposition,
    CoverageError,
    ZariskiError,
    decompose_at,
    decompose_parametric,
    effective_threshold,
    enumerate_valid_supports,
    oracle_check,
)


def cusp_setup():
    lat = CurveLattice(
        ["f", "C", "L"],
        [[F(-1, 6), 1, F(1, 2)], [1, -6, 0], [F(1, 2), 0, F(-1, 2)]],
    )
    d = ParametricDivisor.of(
        (AffineForm(9, -3, -1), AffineForm(1), AffineForm(1, -1))
    )
    return lat, d


def test_decompose_at_restricted_fiber_data():
    # the cubic-surface restriction of the fiber ray at u = 7/6: the lattice
    # is (A|_S, E|_S) with Gram [[0, 9], [9, -9]] and d = (1/6) A|_S + (1/3) E|_S
    lat = CurveLattice(["CA", "eps"], [[0, 9], [9, -9]])
    d = DivisorClass.of([F(1, 6), F(1, 3)])
    dec = decompose_at(lat, d)
    assert dec.support == (1,)
    assert dec.neg_coeffs == (F(1, 6),)


def test_decompose_at_nef_class():
    lat = CurveLattice(["a", "b"], [[-1, 1], [1, -2]])
    dec = decompose_at(lat, DivisorClass.of([0, 0]))
    assert dec.support == ()
    assert dec.negative == DivisorClass.zero(2)


def test_decompose_at_cusp_point():
    # hand oracle: d . C = 1*(-6) + (9 - 0 - 4)*1 = -1, and the 1x1 system on
    # C^2 = -6 gives the multiplicity 1/6
    lat, d = cusp_setup()
    dec = decompose_at(lat, d.at(0, 4))
    assert dec.support == (1,)
    assert dec.neg_coeffs == (F(1, 6),)


def test_decompose_at_rejects_non_pseudoeffective():
    lat = CurveLattice(["a"], [[2]])  # positive self-intersection
    with pytest.raises(ZariskiError, match="not pseudoeffective"):
        decompose_at(lat, DivisorClass.of([-1]))


def test_enumeration_agrees_and_is_unique_on_cusp_family():
    lat, d = cusp_setup()
    rng = random.Random(5)
    for _ in range(25):
        u = F(rng.randint(0, 40), 41)
        v = F(rng.randint(0, 100), 12)
        if v > 9 - 3 * u:
            continue
        point = d.at(u, v)
        greedy = decompose_at(lat, point)
        supports = enumerate_valid_supports(lat, point)
        vectors = {dec.negative.coefficients for dec in supports}
        assert vectors == {greedy.negative.coefficients}


@given(st.integers(0, 100_000))
@settings(max_examples=60, deadline=None)
def test_greedy_matches_bruteforce_on_random_universes(seed):
    """Classical uniqueness, checked abstractly: effective classes in a random
    universe with non-positive diagonals and non-negative cross pairings."""
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    gram = [[F(0)] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = F(-rng.randint(1, 6), rng.randint(1, 2))
        for j in range(i):
            gram[i][j] = gram[j][i] = F(rng.randint(0, 2), rng.randint(1, 2))
    lat = CurveLattice([f"c{i}" for i in range(n)], gram)
    d = DivisorClass.of([F(rng.randint(0, 6), rng.randint(1, 2)) for _ in range(n)])
    greedy = decompose_at(lat, d)
    assert all(c >= 0 for c in greedy.neg_coeffs)
    assert all(p >= 0 for p in greedy.p_pairings)
    vectors = {dec.negative.coefficients for dec in enumerate_valid_supports(lat, d)}
    assert vectors == {greedy.negative.coefficients}


def test_parametric_cusp_chambers():
    lat, d = cusp_setup()
    dom = Polygon([(0, 0), (1, 0), (1, 6), (0, 9)])
    dec = decompose_parametric(lat, d, dom)
    supports = [tuple(lat.names[i] for i in c.support) for c in dec.chambers]
    assert supports == [(), ("C",), ("C", "L")]
    dec.validate_continuity()
    # boundary lines v = 3 - 3u and v = 8 - 2u
    empty = dec.chambers[0].region.canonical()
    assert (0, 3) in [tuple(p) for p in empty.vertices]


def test_parametric_constant_nef_family():
    lat = CurveLattice(["s", "f"], [[0, 1], [1, 0]])
    d = ParametricDivisor.of((AffineForm(1), AffineForm(2)))
    dec = decompose_parametric(lat, d, Polygon.rectangle(0, 1, 0, 1))
    assert len(dec.chambers) == 1
    assert dec.chambers[0].support == ()


def test_parametric_coverage_error_names_region():
    lat = CurveLattice(["C"], [[-2]])
    d = ParametricDivisor.of((AffineForm(1, 0, -1),))  # (1 - v) C
    # beyond v = 1 the class is not pseudoeffective relative to the universe:
    # N would need coefficient v - 1 on C but P . C = 0 identically, leaving
    # (v-1)-effectivity impossible... the failing sample raises CoverageError
    bad_domain = Polygon.rectangle(0, 1, 0, 3)
    with pytest.raises(CoverageError) as info:
        decompose_parametric(lat, d, bad_domain)
    assert info.value.polygon is not None


def test_oracle_check_passes_and_catches_corruption():
    lat, d = cusp_setup()
    dom = Polygon([(0, 0), (1, 0), (1, 6), (0, 9)])
    dec = decompose_parametric(lat, d, dom)
    assert oracle_check(lat, d, dec, 40, seed=3).passed
    # negative control: corrupt one negative-part coefficient
    bad_chambers = []
    for chamber in dec.chambers:
        if chamber.support:
            coeffs = list(chamber.neg_coeffs)
            coeffs[0] = coeffs[0] + AffineForm(F(1, 97))
            chamber = Chamber(
                chamber.region, chamber.support, tuple(coeffs),
                chamber.p_pairings, chamber.p_squared, chamber.p_class,
            )
        bad_chambers.append(chamber)
    corrupted = ChamberDecomposition(lat, dec.divisor, dec.domain, tuple(bad_chambers))
    report = oracle_check(lat, d, corrupted, 40, seed=3)
    assert not report.passed
    assert "negative parts differ" in report.failures[0].detail


def test_oracle_check_empty_domain_is_vacuous():
    lat, d = cusp_setup()
    dec = decompose_parametric(lat, d, Polygon([]))
    assert oracle_check(lat, d, dec, 10).passed


def test_volume_monotone_in_v():
    lat, d = cusp_setup()
    dom = Polygon([(0, 0), (1, 0), (1, 6), (0, 9)])
    dec = decompose_parametric(lat, d, dom)
    rng = random.Random(11)
    for _ in range(40):
        u = F(rng.randint(0, 20), 21)
        v = F(rng.randint(0, 60), 10)
        step = F(rng.randint(1, 10), 10)
        if v + step > 9 - 3 * u:
            continue
        low = dec.chamber_at((u, v)).p_squared(u, v)
        high = dec.chamber_at((u, v + step)).p_squared(u, v + step)
        assert high <= low


def test_effective_threshold_nodal():
    names = ["f", "C"] + [f"L{i}" for i in range(1, 10)]
    gram = [[F(0)] * 11 for _ in range(11)]
    gram[0][0], gram[1][1] = F(-1), F(-4)
    gram[0][1] = gram[1][0] = F(2)
    for k in range(2, 11):
        gram[k][k] = F(-1)
        gram[0][k] = gram[k][0] = F(1)
    lat = CurveLattice(names, gram)
    d = ParametricDivisor.of(
        (AffineForm(F(19, 6), F(-7, 6), -1), AffineForm(F(5, 6), F(1, 6)))
        + (AffineForm(F(1, 6), F(-1, 6)),) * 9
    )
    pieces = effective_threshold(lat, d, 0, 1)
    assert pieces == [(F(0), F(1), AffineForm(F(19, 6), F(-7, 6), 0))]


def test_effective_threshold_series_band():
    from kstab.series import band_threshold

    assert band_threshold(0, 2) == AffineForm(F(17, 7), F(-15, 7), 0)


def test_effective_threshold_unbounded_error():
    lat = CurveLattice(["a"], [[-1]])
    d = ParametricDivisor.of((AffineForm(1, 0, 1),))  # grows with v, stays feasible
    with pytest.raises(ZariskiError, match="no threshold"):
        effective_threshold(lat, d, 0, 1)


def test_effective_threshold_rejects_quadratic_root():
    # nef family minus v times a class of positive self-intersection: the
    # feasibility region is bounded only by the root of P^2, not affinely
    lat = CurveLattice(["a", "b"], [[1, 0], [0, -1]])
    d = ParametricDivisor.of((AffineForm(1), AffineForm(0, 0, -1)))
    with pytest.raises(ZariskiError, match="P\\^2"):
        effective_threshold(lat, d, 0, 1)


def test_orthogonality_of_chamber_positive_parts():
    lat, d = cusp_setup()
    dom = Polygon([(0, 0), (1, 0), (1, 6), (0, 9)])
    dec = decompose_parametric(lat, d, dom)
    for chamber in dec.chambers:
        for i in chamber.support:
            assert chamber.p_pairings[i].is_zero()
