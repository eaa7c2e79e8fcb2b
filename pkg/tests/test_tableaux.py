from fractions import Fraction

import pytest

from quasiflags.localization import ParameterPoint
from quasiflags.roots import embed_degree, kostant_count, rho
from quasiflags.series import degree_vectors
from quasiflags.tableaux import Tableau, cartan_eigenvalue, enumerate_fixed_points


def test_degree_row_sums():
    assert Tableau.zero(4).degree() == (0, 0, 0)
    assert Tableau([(1,), (1, 0)]).degree() == (1, 1)
    assert Tableau([(5,)]).degree() == (5,)


def test_validity_enforced():
    with pytest.raises(ValueError):
        Tableau([(1,), (2, 0)])        # d_1^1 < d_2^1
    with pytest.raises(ValueError):
        Tableau([(-1,)])
    with pytest.raises(ValueError):
        Tableau([(1, 2)])              # wrong row length


def test_enumerate_zero_degree():
    for n in (2, 3, 4):
        gamma = (0,) * (n - 1)
        assert enumerate_fixed_points(n, gamma) == [Tableau.zero(n)]


def test_enumerate_small_examples():
    two = enumerate_fixed_points(3, (1, 1))
    assert [t.as_flat_list() for t in two] == [[1, 0, 1], [1, 1, 0]]
    one = enumerate_fixed_points(3, (0, 1))
    assert [t.as_flat_list() for t in one] == [[0, 0, 1]]


def test_enumeration_census_and_uniqueness():
    for n in (2, 3, 4):
        for gamma in degree_vectors(n - 1, 5):
            points = enumerate_fixed_points(n, gamma)
            assert len(points) == len(set(points))
            assert len(points) == kostant_count(gamma, n)
            flats = [p.as_flat_list() for p in points]
            assert flats == sorted(flats)
            for p in points:
                assert p.degree() == gamma


def test_shift():
    d = Tableau([(1,)])
    assert d.shift(0) == d
    assert d.shift(2) == Tableau([(3,)])
    big = Tableau([(2,), (2, 1), (1, 1, 0)])
    shifted = big.shift(3)
    n = big.n
    assert shifted.degree() == tuple(dd + j * 3 for j, dd in
                                     enumerate(big.degree(), start=1))
    assert shifted.n == n
    with pytest.raises(ValueError):
        d.shift(-1)


def test_flat_list_roundtrip():
    t = Tableau([(2,), (2, 1), (1, 1, 0)])
    assert Tableau.from_flat_list(t.as_flat_list(), 4) == t


def test_cartan_eigenvalue_closed_forms():
    pt = ParameterPoint((Fraction(4), Fraction(-4)), Fraction(1), Fraction(0))
    assert cartan_eigenvalue(1, Tableau.zero(2), pt) == (pt.a[0] - pt.a[1]) / pt.x - 1
    assert cartan_eigenvalue(1, Tableau([(1,)]), pt) == (pt.a[0] - pt.a[1]) / pt.x - 3

    pt3 = ParameterPoint((Fraction(5), Fraction(1), Fraction(-6)), Fraction(2), Fraction(0))
    for i in (1, 2):
        assert cartan_eigenvalue(i, Tableau.zero(3), pt3) == \
            (pt3.a[i - 1] - pt3.a[i]) / pt3.x - 1


def test_cartan_eigenvalue_matches_weight_pairing():
    pt = ParameterPoint((Fraction(7), Fraction(2), Fraction(-9)), Fraction(3), Fraction(0))
    n = 3
    for gamma in degree_vectors(n - 1, 3):
        lam = tuple(a / pt.x - r + g for a, r, g in
                    zip(pt.a, rho(n), embed_degree(gamma, n)))
        for d in enumerate_fixed_points(n, gamma):
            for i in range(1, n):
                assert cartan_eigenvalue(i, d, pt) == lam[i - 1] - lam[i]
