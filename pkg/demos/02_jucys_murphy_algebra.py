"""Jucys-Murphy elements and central characters, verified in the group algebra.

The Jucys-Murphy elements J_t = sum of (s t) over s < t commute, and the
elementary symmetric function e_r evaluated on them equals the sum of all
permutations at distance r from the identity in the Cayley graph.  More
generally, any symmetric function of the J_t acts on the irreducible
representation indexed by lambda as the scalar obtained by evaluating it
on the contents of lambda.  Both facts are checked here by exhaustive
expansion in QS(d), with no character theory on the group algebra side.
"""

from hurwitz import (
    RegularFunction,
    class_sum,
    jm_element,
    partitions_of,
    verify_central_character,
    verify_jm_levels,
)

d = 5
print(f"working in the group algebra of S({d})")
print()

print("the JM elements commute:")
j3, j4 = jm_element(3, d), jm_element(4, d)
print("  J3 * J4 == J4 * J3:", j3 * j4 == j4 * j3)
print()

print("levels of the Cayley graph as elementary symmetric functions:")
for r in range(d):
    classes = [mu for mu in partitions_of(d) if len(mu) == d - r]
    ok = verify_jm_levels(d, r)
    size = sum(len(class_sum(mu).coeffs) for mu in classes)
    print(f"  e_{r}(J_1..J_{d}) = sum of {len(classes)} class sums "
          f"({size} permutations): {ok}")
print()

print("central characters via content evaluation:")
for spec in ("E1", "E2", "H2", "H3", "P2", "H2*E1", "P2 + 2*SIZE"):
    f = RegularFunction.parse(spec)
    print(f"  f = {spec:<12} f(J alphabet) matches content expansion:",
          verify_central_character(d, f))
