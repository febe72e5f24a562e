from fractions import Fraction

import pytest

from hurwitz.partitions import class_size, partitions_of
from hurwitz.regular_functions import RegularFunction
from hurwitz.walks import (
    AlgebraVector,
    class_sum,
    count_walks,
    count_walks_direct,
    cycle_type,
    identity_perm,
    jm_element,
    verify_central_character,
    verify_jm_levels,
)


def test_cycle_type():
    assert cycle_type((0, 1, 2)) == (1, 1, 1)
    assert cycle_type((1, 0, 2)) == (2, 1)
    assert cycle_type((1, 2, 0)) == (3,)


def test_class_sum_supports():
    identity = class_sum((1, 1, 1))
    assert identity.coeffs == {identity_perm(3): Fraction(1)}
    assert len(class_sum((2, 1)).coeffs) == 3
    assert len(class_sum((3,)).coeffs) == 2
    for d in range(1, 6):
        for mu in partitions_of(d):
            assert len(class_sum(mu).coeffs) == class_size(mu)


def test_jm_elements():
    assert jm_element(1, 3).coeffs == {}
    assert jm_element(2, 3).coeffs == {(1, 0, 2): Fraction(1)}
    assert jm_element(3, 3).coeffs == {
        (2, 1, 0): Fraction(1),
        (0, 2, 1): Fraction(1),
    }
    with pytest.raises(ValueError):
        jm_element(4, 3)
    with pytest.raises(ValueError):
        jm_element(2, 7)


def test_jm_elements_commute():
    for d in range(2, 6):
        jms = [jm_element(t, d) for t in range(2, d + 1)]
        for a in jms:
            for b in jms:
                assert a * b == b * a


def test_count_walks_zero_steps():
    for d in range(1, 6):
        for alpha in partitions_of(d):
            for beta in partitions_of(d):
                expect = class_size(alpha) if alpha == beta else 0
                assert count_walks(0, 0, alpha, beta) == expect


def test_count_walks_examples():
    assert count_walks(0, 0, (2, 1), (2, 1)) == 3
    assert count_walks(0, 2, (3,), (3,)) == 12
    assert count_walks(2, 0, (3,), (3,)) == 10


def test_dp_matches_direct_enumeration():
    for d in range(1, 5):
        for alpha in partitions_of(d):
            for beta in partitions_of(d):
                for k in range(3):
                    for l in range(3 - k + 1):
                        if k + l > 3:
                            continue
                        assert count_walks(k, l, alpha, beta) == count_walks_direct(
                            k, l, alpha, beta
                        )
    # one larger spot check
    assert count_walks(1, 2, (3, 2), (5,)) == count_walks_direct(1, 2, (3, 2), (5,))


def test_swap_symmetry():
    for d in range(1, 5):
        ps = partitions_of(d)
        for alpha in ps:
            for beta in ps:
                for k in range(3):
                    for l in range(2):
                        assert count_walks(k, l, alpha, beta) == count_walks(
                            k, l, beta, alpha
                        )


def test_short_monotone_prefix_is_free():
    for d in range(1, 6):
        for alpha in partitions_of(d):
            for beta in partitions_of(d):
                for l in range(2):
                    assert count_walks(1, l, alpha, beta) == count_walks(
                        0, l + 1, alpha, beta
                    )


def test_size_limits():
    with pytest.raises(ValueError):
        count_walks(0, 0, (7,), (7,))
    with pytest.raises(ValueError):
        count_walks(3, 3, (2,), (2,))
    with pytest.raises(ValueError):
        count_walks(0, 0, (2, 1), (2,))
    with pytest.raises(ValueError):
        count_walks_direct(2, 2, (3,), (3,))


def test_verify_jm_levels():
    for d in range(2, 6):
        for r in range(d):
            assert verify_jm_levels(d, r)
    with pytest.raises(ValueError):
        verify_jm_levels(3, 3)


def test_jm_level_one_explicit():
    # J_2 + J_3 is the class sum of the transpositions in S(3)
    lhs = jm_element(2, 3) + jm_element(3, 3)
    assert lhs == class_sum((2, 1))


def test_verify_central_character():
    one = RegularFunction.parse("1")
    assert verify_central_character(3, one)
    assert verify_central_character(3, RegularFunction.parse("E1"))
    assert verify_central_character(4, RegularFunction.parse("H2"))
    assert verify_central_character(4, RegularFunction.parse("P2 + SIZE"))
    with pytest.raises(ValueError):
        verify_central_character(6, one)


def test_algebra_vector_ops():
    v = class_sum((2, 1))
    w = v.scaled(Fraction(1, 2)) + v.scaled(Fraction(1, 2))
    assert w == v
    assert (v - v).coeffs == {}
    assert v ** 0 == AlgebraVector.identity(3)
