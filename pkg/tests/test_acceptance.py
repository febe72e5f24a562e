"""Acceptance suite: one test and one printed pass/fail line per criterion.

Every comparison is exact (integers and rationals); there are no
tolerances anywhere.  Run with ``pytest tests/test_acceptance.py -v -s``
to see the per-criterion lines and the reported fit degrees.
"""

from fractions import Fraction
from math import factorial

from hurwitz import chambers, engine, toda, walks
from hurwitz.characters import character_table
from hurwitz.chambers import ChamberPoint, fit_chamber_polynomial, sample_chamber
from hurwitz.partitions import class_size, partitions_of, z_order
from hurwitz.regular_functions import RegularFunction


def report(criterion: int, description: str, ok: bool, detail: str = "") -> None:
    line = f"ACCEPTANCE {criterion} [{'PASS' if ok else 'FAIL'}] {description}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, line


def test_criterion_1_oracle_equivalence():
    mismatches = []
    checked = 0
    for d in range(1, 7):
        for alpha in partitions_of(d):
            for beta in partitions_of(d):
                for k in range(3):
                    for l in range(3):
                        checked += 1
                        if engine.w_char(k, l, alpha, beta) != walks.count_walks(
                            k, l, alpha, beta
                        ):
                            mismatches.append((d, k, l, alpha, beta))
    report(
        1,
        "walk-oracle equivalence: W_char = count_walks for d <= 6, k,l <= 2",
        not mismatches,
        f"{checked} queries",
    )


def test_criterion_2_chamber_identity():
    orders = (6, 4, 4)
    mismatches = []
    checked = 0
    for d in range(1, 7):
        fact_d = factorial(d)
        for alpha in partitions_of(d):
            for beta in partitions_of(d):
                if engine.is_on_wall(alpha, beta):
                    continue
                for k in range(5):
                    for l in range(5 - k):
                        checked += 1
                        w = engine.w_char(k, l, alpha, beta)
                        hc = engine.h_connected(k, l, alpha, beta, orders=orders)
                        hch = engine.h_char(k, l, alpha, beta)
                        if fact_d * hc != w or hch != hc:
                            mismatches.append((d, k, l, alpha, beta))
    report(
        2,
        "chamber identity: d! H_connected = W_char and H_char = H_connected "
        "off-wall for d <= 6, k+l <= 4",
        not mismatches,
        f"{checked} off-wall queries",
    )


def test_criterion_3_exponential_formula_round_trip():
    orders = (5, 2, 2)
    mismatches = []
    checked = 0
    for d in range(1, 6):
        for alpha in partitions_of(d):
            for beta in partitions_of(d):
                for k in range(3):
                    for l in range(3):
                        checked += 1
                        rebuilt = engine.reconstruct_w_from_h(
                            k, l, alpha, beta, orders=orders
                        )
                        if rebuilt != engine.w_char(k, l, alpha, beta):
                            mismatches.append((d, k, l, alpha, beta))
    report(
        3,
        "exponential-formula round trip: reconstruct_w_from_h = W_char "
        "for d <= 5, k,l <= 2",
        not mismatches,
        f"{checked} queries",
    )


def test_criterion_4_jucys_murphy_levels():
    failures = [
        (d, r)
        for d in range(1, 7)
        for r in range(d)
        if not walks.verify_jm_levels(d, r)
    ]
    report(
        4,
        "Jucys-Murphy identity: e_r on the JM alphabet equals the level-r "
        "class sums for d <= 6",
        not failures,
    )


def test_criterion_5_central_characters():
    specs = ("E1", "E2", "H2", "H3", "P2", "H2*E1")
    failures = []
    for d in range(1, 6):
        for spec in specs:
            if not walks.verify_central_character(d, RegularFunction.parse(spec)):
                failures.append((d, spec))
    report(
        5,
        "central-character identity: f(JM alphabet) matches the content "
        "evaluation expansion for d <= 5, six generators",
        not failures,
    )


def test_criterion_6_toda_first_equation():
    orders = (5, 2, 2)
    failures = []
    for n in (-2, -1, 0, 1, 2):
        rep = toda.toda_first_equation_check(n, orders)
        if not (rep.all_equal and rep.gamma_matches_closed_form):
            failures.append(("bilinear", n, rep.mismatches()[:3]))
        if not toda.shift_substitution_check(n, (4, 2, 2)):
            failures.append(("shift", n))
    report(
        6,
        "first 2-Toda bilinear equation for n in {-2..2} at orders (5,2,2), "
        "with derived gamma, plus shift substitution at Dz=4",
        not failures,
        str(failures) if failures else "every coefficient exact",
    )


def test_criterion_7_series_vs_characters():
    orders = (5, 2, 2)
    log_tau0 = toda.build_tau(0, orders, profile=None).log()
    mismatches = []
    checked = 0
    for d in range(1, 6):
        for alpha in partitions_of(d):
            for beta in partitions_of(d):
                for k in range(3):
                    for l in range(3):
                        checked += 1
                        got = log_tau0.coefficient(
                            (d, k, l, alpha, beta)
                        ) * factorial(l)
                        want = engine.h_connected(k, l, alpha, beta, orders=orders)
                        if got != want:
                            mismatches.append((d, k, l, alpha, beta))
    report(
        7,
        "series cross-check: l! [z^d t^k u^l p_a p_b] log tau_0 = H_connected "
        "for d <= 5 within the truncation profile",
        not mismatches,
        f"{checked} coefficients",
    )


def test_criterion_8_piecewise_polynomiality():
    cases = {
        (1, 1): (ChamberPoint.at((5,), (5,)), 16, 24),
        (2, 1): (ChamberPoint.at((3, 1), (4,)), 24, 16),
        (2, 2): (ChamberPoint.at((3, 1), (2, 2)), 40, 16),
    }
    failures = []
    degree_lines = []
    for (m, n), (base, count, bound) in cases.items():
        points = sample_chamber(base, count, bound, seed=11)
        for k, l in ((0, 2), (2, 0), (1, 1)):
            compatible = chambers.parity_compatible(k, l, base)
            try:
                fit = fit_chamber_polynomial(k, l, points)
            except (chambers.FitError, ValueError) as exc:
                failures.append(((m, n), (k, l), str(exc)))
                continue
            bad = [
                (p, v)
                for p, v in fit.training + fit.validation
                if fit.evaluate(p) != v
            ]
            if bad or len(fit.validation) < 10:
                failures.append(((m, n), (k, l), "nonzero residuals"))
            note = "" if compatible else ", identically zero (parity)"
            degree_lines.append(f"(m,n)=({m},{n}) (k,l)=({k},{l}): degree {fit.degree}{note}")
    for line in degree_lines:
        print("  fitted " + line)
    report(
        8,
        "piecewise polynomiality: exact fits with zero residual on >= 10 "
        "held-out points for (m,n) in {(1,1),(2,1),(2,2)}, (k,l) in "
        "{(0,2),(2,0),(1,1)}; degrees reported above, not asserted",
        not failures,
        str(failures) if failures else "all residuals exactly zero",
    )


def test_criterion_8_supplement_parity_compatible_two_one():
    # the specified (k,l) grid is parity-incompatible with (m,n) = (2,1)
    # (k+l must match m+n mod 2), so those fits above are zero polynomials;
    # these parity-compatible fits show genuine polynomial behaviour there.
    base = ChamberPoint.at((3, 1), (4,))
    points = sample_chamber(base, 30, 20, seed=13)
    lines = []
    for k, l in ((0, 1), (1, 0), (1, 2)):
        fit = fit_chamber_polynomial(k, l, points)
        assert all(fit.evaluate(p) == v for p, v in fit.validation)
        assert any(c != 0 for c in fit.coefficients.values())
        lines.append(f"(k,l)=({k},{l}): degree {fit.degree}")
    print("  supplementary (2,1) fits: " + "; ".join(lines))


def test_criterion_9_structural_invariants():
    failures = []
    # symmetry in (alpha, beta) for k + l <= 4
    for d in range(1, 7):
        for alpha in partitions_of(d):
            for beta in partitions_of(d):
                for k in range(5):
                    for l in range(5 - k):
                        if engine.w_char(k, l, alpha, beta) != engine.w_char(
                            k, l, beta, alpha
                        ):
                            failures.append(("symmetry", d, k, l, alpha, beta))
    # parity vanishing, exhaustively for k + l <= 5
    for d in range(1, 7):
        for alpha in partitions_of(d):
            for beta in partitions_of(d):
                for k in range(6):
                    for l in range(6 - k):
                        if engine.parity_vanishes(k, l, alpha, beta):
                            if engine.w_char(k, l, alpha, beta) != 0:
                                failures.append(("parity", d, k, l, alpha, beta))
    # zero-step walks count the class itself
    for d in range(1, 7):
        for alpha in partitions_of(d):
            for beta in partitions_of(d):
                expect = class_size(alpha) if alpha == beta else 0
                if engine.w_char(0, 0, alpha, beta) != expect:
                    failures.append(("zero-step", d, alpha, beta))
    # a length-1 monotone prefix is unconstrained
    for d in range(1, 7):
        for alpha in partitions_of(d):
            for beta in partitions_of(d):
                for l in range(3):
                    if engine.w_char(1, l, alpha, beta) != engine.w_char(
                        0, l + 1, alpha, beta
                    ):
                        failures.append(("degeneracy", d, l, alpha, beta))
    # character-table orthogonality, both relations, d <= 8
    for d in range(1, 9):
        table = character_table(d)
        order = table.order
        for a in order:
            for b in order:
                row = sum(
                    Fraction(table.value(a, mu) * table.value(b, mu), z_order(mu))
                    for mu in order
                )
                if row != (1 if a == b else 0):
                    failures.append(("row-orth", d, a, b))
                col = sum(table.value(lam, a) * table.value(lam, b) for lam in order)
                if col != (z_order(a) if a == b else 0):
                    failures.append(("col-orth", d, a, b))
    report(
        9,
        "structural invariants at d <= 6 (symmetry, parity, zero-step, "
        "monotone degeneracy) and orthogonality at d <= 8; integrality of "
        "W_char is asserted inside every evaluation",
        not failures,
        str(failures[:5]) if failures else "exhaustive",
    )
