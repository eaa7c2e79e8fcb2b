from fractions import Fraction

import pytest

from quasiflags.characters import TorusWeight
from quasiflags.errors import NonGenericParameter
from quasiflags.localization import (ParameterPoint, chern_matrix_element,
                                     chern_ratio, chern_series_coefficient,
                                     evaluate_weight, volume_coefficient)
from quasiflags.roots import kostant_count
from quasiflags.series import degree_vectors, total_degree
from quasiflags.tableaux import Tableau, enumerate_fixed_points
from quasiflags.verify import twist_constant


def generic_point_n2(m=Fraction(3, 2)):
    # v = a_1 - a_2 = 14/3 avoids every small-integer resonance
    return ParameterPoint((Fraction(7, 3), Fraction(-7, 3)), Fraction(1), m)


def n2_closed_form(d, pt):
    """Hand-derived product formula for the single fixed point of degree d."""
    v = (pt.a[0] - pt.a[1]) / pt.x
    m = pt.m
    value = Fraction(1)
    for k in range(1, d + 1):
        value *= (k + m) * (k + m - v) / (k * (k - v))
    return value


def test_parameter_point_validation():
    with pytest.raises(ValueError):
        ParameterPoint((Fraction(1), Fraction(1)))
    with pytest.raises(ValueError):
        ParameterPoint((Fraction(1), Fraction(-1)), Fraction(0))


def test_evaluate_weight_examples():
    pt = ParameterPoint((Fraction(3), Fraction(-3)), Fraction(1), Fraction(0))
    assert evaluate_weight(TorusWeight((0, 0), 1), pt) == 1
    assert evaluate_weight(TorusWeight((-1, 1), 1), pt) == -5
    w = TorusWeight((1, -1), 2)
    for t in (Fraction(2), Fraction(-5, 3)):
        assert evaluate_weight(w, pt.scaled(t)) == t * evaluate_weight(w, pt)


def test_chern_ratio_base_cases():
    pt = generic_point_n2()
    assert chern_ratio(Tableau.zero(2), pt) == 1
    d = Tableau([(1,)])
    v = (pt.a[0] - pt.a[1]) / pt.x
    m = pt.m
    assert chern_ratio(d, pt) == (m + 1) * (m + 1 - v) / (1 - v)
    for gamma in ((1,), (2,), (3,)):
        for tab in enumerate_fixed_points(2, gamma):
            assert chern_ratio(tab, pt.with_m(0)) == 1


def test_chern_series_n2_product_formula():
    pt = generic_point_n2()
    for d in range(9):
        assert chern_series_coefficient(2, (d,), pt) == n2_closed_form(d, pt)


def test_chern_series_degree_zero_is_one():
    pt3 = ParameterPoint((Fraction(6), Fraction(1), Fraction(-7)), Fraction(1), Fraction(2, 5))
    assert chern_series_coefficient(3, (0, 0), pt3) == 1
    assert volume_coefficient(3, (0, 0), pt3) == 1


def test_zero_coupling_counts_fixed_points():
    pt3 = ParameterPoint((Fraction(6), Fraction(1), Fraction(-7)), Fraction(1), Fraction(0))
    for gamma in degree_vectors(2, 4):
        assert chern_series_coefficient(3, gamma, pt3) == kostant_count(gamma, 3)


def test_gauge_invariance():
    pt3 = ParameterPoint((Fraction(6), Fraction(1), Fraction(-7)), Fraction(1), Fraction(5, 4))
    for t in (Fraction(2), Fraction(-3), Fraction(7, 5)):
        scaled = pt3.scaled(t)
        for gamma in degree_vectors(2, 3):
            assert chern_series_coefficient(3, gamma, scaled) == \
                chern_series_coefficient(3, gamma, pt3)


def test_volume_basics_and_scaling():
    pt = generic_point_n2()
    v = (pt.a[0] - pt.a[1]) / pt.x
    assert volume_coefficient(2, (1,), pt) == 1 / (1 - v)
    pt3 = ParameterPoint((Fraction(6), Fraction(1), Fraction(-7)), Fraction(1), Fraction(0))
    for t in (Fraction(2), Fraction(-5, 3)):
        scaled = pt3.scaled(t)
        for gamma in degree_vectors(2, 3):
            expected = volume_coefficient(3, gamma, pt3) * t ** (-2 * total_degree(gamma))
            assert volume_coefficient(3, gamma, scaled) == expected


def test_nongeneric_parameter_raised():
    # v = 2 makes the degree-2 denominator k - v vanish
    pt = ParameterPoint((Fraction(1), Fraction(-1)), Fraction(1), Fraction(1))
    with pytest.raises(NonGenericParameter):
        chern_series_coefficient(2, (2,), pt)


def test_matrix_element_diagonal_is_chern_ratio():
    pt = generic_point_n2()
    for gamma in ((0,), (1,), (2,)):
        for d in enumerate_fixed_points(2, gamma):
            assert chern_matrix_element(d, d, pt) == chern_ratio(d, pt)
    pt3 = ParameterPoint((Fraction(6), Fraction(1), Fraction(-7)), Fraction(1), Fraction(3, 2))
    for gamma in degree_vectors(2, 2):
        for d in enumerate_fixed_points(3, gamma):
            assert chern_matrix_element(d, d, pt3) == chern_ratio(d, pt3)


def test_matrix_element_vanishes_on_zero_factor():
    # the pair bundle over ((2), (0)) carries the weights {0, -x}; at m = 1
    # the factor (-x + m x) kills the element
    pt = generic_point_n2(m=Fraction(1))
    element = chern_matrix_element(Tableau([(2,)]), Tableau.zero(2), pt)
    assert element == 0


def test_twist_identity_all_pairs():
    for n, a in ((2, (Fraction(7, 3), Fraction(-7, 3))),
                 (3, (Fraction(6), Fraction(1), Fraction(-7)))):
        tabs = [t for g in degree_vectors(n - 1, 2)
                for t in enumerate_fixed_points(n, g)]
        for m in (1, 2):
            pt = ParameterPoint(a, Fraction(1), Fraction(m))
            y = twist_constant(n, m, pt)
            ratios = set()
            for dp in tabs:
                for d in tabs:
                    top = chern_matrix_element(dp, d, pt)
                    bottom = chern_matrix_element(dp, d.shift(m), pt.with_m(0))
                    assert top == y * bottom
                    if bottom != 0:
                        ratios.add(top / bottom)
            assert ratios == {y}
