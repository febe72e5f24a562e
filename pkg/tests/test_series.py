import random
from fractions import Fraction

import pytest

from hurwitz import engine
from hurwitz.series import ZERO_KEY, TruncatedSeries


def random_series(rng, orders, nterms=6, constant=None):
    """Sparse random series whose non-constant keys have positive degree."""
    dz, dt, du = orders
    coeffs = {}
    if constant is not None:
        coeffs[ZERO_KEY] = Fraction(constant)
    partitions = [(), (1,), (2,), (1, 1), (2, 1)]
    for _ in range(nterms):
        z = rng.randint(0, dz)
        t = rng.randint(0, dt)
        u = rng.randint(0, du)
        if z + t + u == 0:
            z = 1
        key = (z, t, u, rng.choice(partitions), rng.choice(partitions))
        coeffs[key] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    return TruncatedSeries(orders, coeffs)


def test_one_is_multiplicative_identity():
    rng = random.Random(7)
    one = TruncatedSeries.one((3, 2, 2))
    for _ in range(5):
        a = random_series(rng, (3, 2, 2))
        assert a * one == a
        assert one * a == a


def test_partition_monomials_combine_by_union():
    orders = (4, 1, 1)
    a = TruncatedSeries.monomial(orders, (1, 0, 0, (1,), (1,)))
    sq = a * a
    assert sq.coefficient((2, 0, 0, (1, 1), (1, 1))) == 1
    assert len(sq.coeffs) == 1


def test_mul_commutative_and_associative():
    rng = random.Random(13)
    for _ in range(5):
        a = random_series(rng, (3, 2, 2))
        b = random_series(rng, (3, 2, 2))
        c = random_series(rng, (3, 2, 2))
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_truncation_orders_take_minimum():
    a = TruncatedSeries.monomial((4, 2, 2), (3, 0, 0, (), ()))
    b = TruncatedSeries.monomial((2, 1, 2), (1, 0, 0, (), ()))
    prod = a * b
    assert prod.orders == (2, 1, 2)
    assert prod.is_zero()  # z-degree 4 exceeds the common order


def test_scalar_arithmetic():
    a = TruncatedSeries.monomial((2, 0, 0), (1, 0, 0, (), ()))
    assert (2 * a).coefficient((1, 0, 0, (), ())) == 2
    assert (a + 1).coefficient(ZERO_KEY) == 1
    assert (1 - a).coefficient((1, 0, 0, (), ())) == -1


def test_log_of_one_is_zero():
    assert TruncatedSeries.one((3, 3, 3)).log().is_zero()


def test_log_mercator_example():
    # log(1 + z*x*y) to Dz=2: z*x*y - z^2 x^2 y^2 / 2
    orders = (2, 0, 0)
    a = TruncatedSeries.one(orders) + TruncatedSeries.monomial(
        orders, (1, 0, 0, (1,), (1,))
    )
    la = a.log()
    assert la.coefficient((1, 0, 0, (1,), (1,))) == 1
    assert la.coefficient((2, 0, 0, (1, 1), (1, 1))) == Fraction(-1, 2)
    assert len(la.coeffs) == 2


def test_log_requires_constant_one():
    with pytest.raises(ValueError):
        TruncatedSeries.zero((2, 2, 2)).log()
    bad = TruncatedSeries.one((2, 2, 2)).scaled(2)
    with pytest.raises(ValueError):
        bad.log()


def test_exp_requires_constant_zero():
    with pytest.raises(ValueError):
        TruncatedSeries.one((2, 2, 2)).exp()


def test_log_rejects_ungraded_keys():
    coeffs = {
        ZERO_KEY: Fraction(1),
        (0, 0, 0, (1,), ()): Fraction(1),
    }
    with pytest.raises(ValueError):
        TruncatedSeries((2, 2, 2), coeffs).log()


def test_exp_log_round_trip_random():
    rng = random.Random(5)
    for _ in range(5):
        a = random_series(rng, (3, 2, 1), constant=1)
        assert a.log().exp() == a
        s = random_series(rng, (3, 2, 1), constant=0)
        s = s - TruncatedSeries.one(s.orders).scaled(s.coefficient(ZERO_KEY))
        assert s.exp().log() == s


def test_exp_log_round_trip_on_walk_series():
    w = engine.w_series((4, 2, 2))
    assert w.log().exp() == w


def test_derivative_p1():
    orders = (3, 0, 0)
    a = TruncatedSeries.monomial(orders, (2, 0, 0, (1, 1), (2,)), 3)
    da = a.derivative_p1("A")
    assert da.coefficient((2, 0, 0, (1,), (2,))) == 6
    assert a.derivative_p1("B").is_zero()  # no part equal to 1 on the B side
    # product rule spot check: d/dp1 of (z p1)^2 = 2 z^2 p1
    x = TruncatedSeries.monomial((2, 0, 0), (1, 0, 0, (1,), ()))
    expected = TruncatedSeries.monomial((2, 0, 0), (2, 0, 0, (1,), ()), 2)
    assert (x * x).derivative_p1("A") == expected


def test_json_serialization_sorted():
    orders = (2, 1, 1)
    s = TruncatedSeries(
        orders,
        {
            (2, 0, 0, (1, 1), ()): Fraction(1, 3),
            (1, 0, 0, (1,), ()): Fraction(-2),
        },
    )
    obj = s.to_json_obj()
    assert obj == [
        {"z": 1, "t": 0, "u": 0, "A": [1], "B": [], "coeff": "-2/1"},
        {"z": 2, "t": 0, "u": 0, "A": [1, 1], "B": [], "coeff": "1/3"},
    ]


def test_zero_coefficients_never_stored():
    orders = (2, 2, 2)
    a = TruncatedSeries.monomial(orders, (1, 0, 0, (1,), (1,)))
    diff = a - a
    assert diff.coeffs == {}
    s = TruncatedSeries(orders, {(1, 0, 0, (), ()): Fraction(0)})
    assert s.coeffs == {}
