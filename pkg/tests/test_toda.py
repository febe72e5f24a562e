from fractions import Fraction
from math import factorial

from hurwitz import engine
from hurwitz.partitions import dimension, partitions_of
from hurwitz.toda import (
    build_tau,
    shift_substitution_check,
    toda_first_equation_check,
    weight_series,
)


def test_single_cell_coefficient():
    # [z^1 x y] tau_n is e^{nu}/(1-nt) truncated; at n=0 that is just 1
    orders = (3, 2, 2)
    tau0 = build_tau(0, orders)
    assert tau0.coefficient((1, 0, 0, (1,), (1,))) == 1
    for j in range(1, 3):
        for i in range(1, 3):
            assert tau0.coefficient((1, j, i, (1,), (1,))) == 0
    tau1 = build_tau(1, orders)
    for j in range(3):
        for i in range(3):
            assert tau1.coefficient((1, j, i, (1,), (1,))) == Fraction(1, factorial(i))


def test_constant_weight_collapse():
    # t = u = 0 truncation: tau = sum_d z^d (xy)^d / d!, via sum dim^2 = d!
    tau = build_tau(0, (5, 0, 0))
    for d in range(6):
        key = (d, 0, 0, (1,) * d, (1,) * d)
        dims = sum(dimension(lam) ** 2 for lam in partitions_of(d)) if d else 1
        assert dims == factorial(d)
        assert tau.coefficient(key) == Fraction(1, factorial(d))
    assert len(tau.coeffs) == 6


def test_tau0_full_profile_reproduces_walk_series():
    tau0 = build_tau(0, (4, 2, 2), profile=None)
    assert tau0 == engine.w_series((4, 2, 2))


def test_weight_series_closed_form():
    w = weight_series(2, (3, 2, 2))
    # z * e^{2u}/(1-2t): coefficient of z t^j u^i is 2^{i+j}/i!
    for j in range(3):
        for i in range(3):
            assert w.coefficient((1, j, i, (), ())) == Fraction(2 ** (i + j), factorial(i))


def test_toda_constant_weight_sanity():
    report = toda_first_equation_check(0, (4, 0, 0))
    assert report.all_equal
    assert report.gamma == weight_series(0, (4, 0, 0))


def test_toda_first_equation_small():
    for n in (-1, 0, 1):
        report = toda_first_equation_check(n, (4, 2, 2))
        assert report.all_equal, report.mismatches()[:5]
        assert report.gamma_matches_closed_form


def test_toda_negation_symmetry():
    # conjugating diagrams negates contents: n and -n verdicts agree
    up = toda_first_equation_check(1, (4, 2, 2))
    down = toda_first_equation_check(-1, (4, 2, 2))
    assert up.all_equal == down.all_equal
    # and the coefficient multisets match after negating t and u degrees
    flip = {
        (z, t, u, a, b): c * (-1) ** (t + u)
        for (z, t, u, a, b), c in down.gamma.coeffs.items()
    }
    assert flip == up.gamma.coeffs


def test_toda_extended_profile():
    report = toda_first_equation_check(0, (3, 1, 1), profile=frozenset({1, 2}))
    assert report.all_equal


def test_report_entries_cover_both_sides():
    report = toda_first_equation_check(1, (3, 1, 1))
    assert report.entries
    keys = [k for k, _, _ in report.entries]
    assert keys == sorted(keys)
    for key, lhs, rhs in report.entries:
        assert lhs == rhs


def test_shift_substitution():
    assert shift_substitution_check(0, (3, 2, 2))
    assert shift_substitution_check(1, (4, 2, 2))
    assert shift_substitution_check(-2, (3, 2, 2))


def test_log_tau0_matches_connected_numbers():
    tau0 = build_tau(0, (4, 2, 2), profile=None)
    log_tau = tau0.log()
    for d in range(1, 5):
        for alpha in partitions_of(d):
            for beta in partitions_of(d):
                for k in range(3):
                    for l in range(3):
                        got = log_tau.coefficient((d, k, l, alpha, beta)) * factorial(l)
                        want = engine.h_connected(k, l, alpha, beta, orders=(4, 2, 2))
                        assert got == want
