import random
from fractions import Fraction

import pytest

from quasiflags.scalars import generalized_binomial
from quasiflags.series import (Series, degree_vectors, denominator_power_series,
                               series_mul, total_degree)


def random_series(rng, rank, trunc, density=0.7):
    coeffs = {}
    for gamma in degree_vectors(rank, trunc):
        if rng.random() < density:
            coeffs[gamma] = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
    return Series(rank, trunc, coeffs)


def brute_force_product(a, b, degree):
    """Independent convolution oracle: direct double loop over all key pairs."""
    out = {}
    for ga in degree_vectors(a.rank, degree):
        for gb in degree_vectors(b.rank, degree):
            key = tuple(x + y for x, y in zip(ga, gb))
            if total_degree(key) > degree:
                continue
            out[key] = out.get(key, Fraction(0)) + a.coefficient(ga) * b.coefficient(gb)
    return Series(a.rank, degree, out)


def test_unit_is_identity():
    rng = random.Random(2)
    b = random_series(rng, 2, 3)
    assert series_mul(Series.one(2, 3), b, 3) == b


def test_rank_one_telescoping():
    # sum_d e^{-d alpha} times (1 - e^{-alpha}) collapses to 1
    geometric = Series(1, 6, {(d,): Fraction(1) for d in range(7)})
    factor = Series(1, 6, {(0,): Fraction(1), (1,): Fraction(-1)})
    assert series_mul(geometric, factor, 6) == Series.one(1, 6)


def test_product_matches_brute_force_convolution():
    rng = random.Random(3)
    for _ in range(10):
        a = random_series(rng, 2, 2)
        b = random_series(rng, 2, 2)
        assert series_mul(a, b, 2) == brute_force_product(a, b, 2)


def test_mul_associative_commutative():
    rng = random.Random(4)
    for _ in range(5):
        a = random_series(rng, 2, 3, density=0.5)
        b = random_series(rng, 2, 3, density=0.5)
        c = random_series(rng, 2, 3, density=0.5)
        assert series_mul(a, b, 3) == series_mul(b, a, 3)
        assert series_mul(series_mul(a, b, 3), c, 3) == series_mul(a, series_mul(b, c, 3), 3)


def test_rank_mismatch_raises():
    with pytest.raises(ValueError):
        series_mul(Series.one(1, 2), Series.one(2, 2), 2)


def test_truncation_guard():
    with pytest.raises(ValueError):
        series_mul(Series.one(1, 2), Series.one(1, 2), 3)
    with pytest.raises(ValueError):
        Series(1, 2, {(3,): Fraction(1)})
    with pytest.raises(ValueError):
        Series(2, 2, {(1, -1): Fraction(1)})


def test_denominator_series_single_root():
    m = Fraction(5, 3)
    series = denominator_power_series(2, m + 1, 6)
    for d in range(7):
        assert series.coefficient((d,)) == generalized_binomial(m, d)


def test_denominator_series_two_roots_cross_term():
    # coefficient of e^{-alpha_1 - alpha_2}: enumerate the decompositions over
    # the roots alpha_1, alpha_2, alpha_1 + alpha_2 directly
    m = Fraction(7, 2)
    series = denominator_power_series(3, m + 1, 3)
    by_enumeration = (generalized_binomial(m, 1) * generalized_binomial(m, 1)
                      + generalized_binomial(m, 1))
    assert series.coefficient((1, 1)) == by_enumeration
    assert series.coefficient((1, 1)) == (m + 1) * (m + 2)


def test_denominator_series_zero_exponent():
    for n in (2, 3, 4):
        assert denominator_power_series(n, 0, 4) == Series.one(n - 1, 4)


def test_denominator_series_exponent_additivity():
    rng = random.Random(5)
    for _ in range(4):
        e1 = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        e2 = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        combined = denominator_power_series(3, e1 + e2, 3)
        split = series_mul(denominator_power_series(3, e1, 3),
                           denominator_power_series(3, e2, 3), 3)
        assert combined == split


def test_degree_vectors_ordering():
    listed = list(degree_vectors(2, 2))
    assert listed == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]
