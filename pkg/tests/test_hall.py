from fractions import Fraction

import pytest

from quasiflags.errors import NonGenericParameter
from quasiflags.hall import (QuiverRepClass, all_ones_unitriangular,
                             candidate_classes, check_product_identity,
                             class_matrix, conjugator_check, conjugator_matrix,
                             hall_count, indecomposable_matrix,
                             root_exponential_product, unipotent_product)
from quasiflags.matrices import Matrix
from quasiflags.roots import positive_root_pairs_descending


def E(i, j, n):
    return Matrix.unit(i, j, n)


def test_indecomposable_simple_case():
    for n in (2, 3, 4):
        for i in range(1, n):
            assert indecomposable_matrix(i, 1, n) == E(i + 1, i, n)


def test_indecomposable_commutator_example():
    assert indecomposable_matrix(1, 2, 3) == E(3, 2, 3) * E(2, 1, 3) - E(2, 1, 3) * E(3, 2, 3)
    assert indecomposable_matrix(1, 2, 3) == E(3, 1, 3)


def test_indecomposable_collapses_for_all_labels():
    for n in range(2, 7):
        for i in range(1, n):
            for l in range(1, n - i + 1):
                mat = indecomposable_matrix(i, l, n)
                assert mat == E(i + l, i, n)
                power = mat
                for _ in range(n - 1):
                    power = power * mat
                assert power.is_zero()


def test_class_matrix_examples():
    assert class_matrix(QuiverRepClass.indecomposable(1, 2), 3) == E(3, 1, 3)
    two_simples = QuiverRepClass({(1, 1): 1, (2, 1): 1})
    assert class_matrix(two_simples, 3) == E(2, 1, 3) * E(3, 2, 3)
    # divided square of a matrix unit vanishes in the realization
    assert class_matrix(QuiverRepClass({(1, 1): 2}), 3).is_zero()


def test_hall_consistency_identity():
    lhs = E(3, 2, 3) * E(2, 1, 3)
    rhs = (class_matrix(QuiverRepClass({(1, 1): 1, (2, 1): 1}), 3)
           + class_matrix(QuiverRepClass.indecomposable(1, 2), 3))
    assert lhs == rhs
    assert lhs == E(3, 1, 3)


REFERENCE_COUNTS = [
    # (sub, quotient, ambient, expected count)
    (QuiverRepClass.indecomposable(2, 1), QuiverRepClass.indecomposable(1, 1),
     QuiverRepClass.indecomposable(1, 2), 1),
    (QuiverRepClass.indecomposable(1, 1), QuiverRepClass.indecomposable(2, 1),
     QuiverRepClass.indecomposable(1, 2), 0),
    (QuiverRepClass.indecomposable(2, 1), QuiverRepClass.indecomposable(1, 1),
     QuiverRepClass({(1, 1): 1, (2, 1): 1}), 1),
]


@pytest.mark.parametrize("q", [2, 3])
def test_reference_hall_counts(q):
    for sub, quot, ambient, expected in REFERENCE_COUNTS:
        assert hall_count(sub, quot, ambient, q) == expected


def test_hall_count_guards():
    amb = QuiverRepClass({(1, 1): 5})
    simple = QuiverRepClass.indecomposable(1, 1)
    with pytest.raises(ValueError):
        hall_count(simple, simple, amb, 2)      # dimension cap
    with pytest.raises(ValueError):
        hall_count(simple, simple, QuiverRepClass({(1, 1): 2}), 5)  # field size
    # dimension mismatch is a zero count, not an error
    assert hall_count(simple, simple, QuiverRepClass.indecomposable(1, 2), 2) == 0


def test_candidate_classes_dimension_vector():
    found = candidate_classes((1, 1), 3)
    labels = {c.label() for c in found}
    assert labels == {"[1;2]", "[1;1] + [2;1]"}
    for c in found:
        assert c.dimension_vector(3) == (1, 1)


def test_product_identity_all_a2_indecomposables():
    indecs = [QuiverRepClass.indecomposable(1, 1),
              QuiverRepClass.indecomposable(2, 1),
              QuiverRepClass.indecomposable(1, 2)]
    for left in indecs:
        for right in indecs:
            result = check_product_identity(left, right, 3)
            assert result["holds"], (left.label(), right.label())


def test_q_dependent_counts_only_at_annihilated_classes():
    simple = QuiverRepClass.indecomposable(1, 1)
    result = check_product_identity(simple, simple, 3)
    assert result["q_dependent_classes"] == ["2*[1;1]"]
    assert class_matrix(QuiverRepClass({(1, 1): 2}), 3).is_zero()
    counts = result["counts"]["2*[1;1]"]
    assert counts == {2: 3, 3: 4}  # q + 1 subspace lines


def test_unipotent_product_small():
    assert unipotent_product(2) == Matrix([[1, 1], [0, 1]])
    for n in range(3, 7):
        assert unipotent_product(n) == all_ones_unitriangular(n)


def test_unit_products_vanish_in_descending_order():
    for n in range(3, 7):
        pairs = positive_root_pairs_descending(n)
        for idx, (i, j) in enumerate(pairs):
            for (ip, jp) in pairs[idx + 1:]:
                assert (E(i, j, n) * E(ip, jp, n)).is_zero()


def test_ascending_order_breaks_identity():
    for n in (3, 4, 5):
        ascending = list(reversed(positive_root_pairs_descending(n)))
        assert root_exponential_product(n, ascending) != all_ones_unitriangular(n)


def test_conjugator_n2_entry():
    t = (Fraction(5), Fraction(2))
    x = conjugator_matrix(t)
    assert x.rows[0][1] == 1 / (t[0] / t[1] - 1)
    report = conjugator_check(2, t)
    assert report["passed"]


def test_conjugator_n3_reference_point():
    report = conjugator_check(3, (Fraction(2), Fraction(3), Fraction(5)))
    assert report["conjugation_identity"]
    assert report["evaluation_identity"]


def test_conjugator_n5_random_rationals():
    t = (Fraction(7, 2), Fraction(-3), Fraction(11, 4), Fraction(5), Fraction(-1, 3))
    assert conjugator_check(5, t)["passed"]


def test_conjugator_rejects_degenerate_scales():
    with pytest.raises(NonGenericParameter):
        conjugator_matrix((Fraction(1), Fraction(1)))
    with pytest.raises(NonGenericParameter):
        conjugator_matrix((Fraction(0), Fraction(2)))
