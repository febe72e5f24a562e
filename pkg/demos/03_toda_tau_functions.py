"""Content-product tau functions and the first 2-Toda bilinear equation.

The walk generating function expands over Schur functions with a weight
that multiplies one factor z e^{cu}/(1 - ct) per cell of content c.
Shifting all contents by n gives a tau sequence, and with x = p_1(A),
y = p_1(B) the first bilinear Toda equation

    tau_n dxdy tau_n - dx tau_n dy tau_n = gamma_n tau_{n+1} tau_{n-1}

holds with gamma_n the single-cell weight at shift n.  The checker
derives gamma_n from the z^1 coefficient and then compares every
coefficient of both sides exactly.
"""

from hurwitz import build_tau, shift_substitution_check, toda_first_equation_check

orders = (5, 2, 2)
print(f"truncation orders (Dz, Dt, Du) = {orders}")
print()

tau0 = build_tau(0, orders)
print(f"tau_0 has {len(tau0.coeffs)} retained coefficients; a few of them:")
for key, coeff in tau0.sorted_items()[:6]:
    z, t, u, a, b = key
    print(f"  z^{z} t^{t} u^{u} pA{list(a)} pB{list(b)}: {coeff}")
print()

for n in (-2, -1, 0, 1, 2):
    report = toda_first_equation_check(n, orders)
    print(f"shift n = {n:+d}: bilinear identity across {len(report.entries)} "
          f"coefficients: {report.all_equal}, "
          f"gamma matches z e^({n}u)/(1-({n})t): {report.gamma_matches_closed_form}")
print()

example = toda_first_equation_check(1, (3, 1, 1))
print("sample of the coefficient-by-coefficient comparison at n = +1:")
for key, lhs, rhs in example.entries[:8]:
    z, t, u, a, b = key
    print(f"  z^{z} t^{t} u^{u} pA{list(a)} pB{list(b)}: "
          f"lhs = {lhs}, rhs = {rhs}")
print()

print("the whole tau sequence comes from tau_0 by substituting")
print("z -> z e^{nu}/(1-nt), t -> t/(1-nt):")
for n in (-2, -1, 1, 2):
    print(f"  n = {n:+d}:", shift_substitution_check(n, (4, 2, 2)))
