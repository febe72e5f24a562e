"""The generating series, its logarithm, and connected counts.

The three-variable series W(z, t, u) with power-sum markers for the
boundary classes collects every walk count; its logarithm collects the
connected ones.  Both live in a sparse exact-rational series ring whose
exponent keys carry a pair of partitions.  This script builds both at a
small truncation and reads off a few coefficients.
"""

from math import factorial

from hurwitz import partitions_of
from hurwitz.engine import h_series, w_series

orders = (4, 2, 2)
W = w_series(orders)
H = h_series(orders)
print(f"orders (Dz, Dt, Du) = {orders}")
print(f"W series: {len(W.coeffs)} terms; log W: {len(H.coeffs)} terms")
print()

print("round trip: exp(log W) == W:", H.exp() == W)
print()

d, k, l = 4, 1, 1
print(f"coefficients at z^{d} t^{k} u^{l} (times d! l! for raw walk counts):")
print(f"{'alpha':>12} {'beta':>12} {'walks':>8} {'connected':>12}")
for alpha in partitions_of(d):
    for beta in partitions_of(d):
        w = W.coefficient((d, k, l, alpha, beta))
        h = H.coefficient((d, k, l, alpha, beta))
        if w or h:
            walks = w * factorial(d) * factorial(l)
            connected = h * factorial(l)
            print(f"{str(alpha):>12} {str(beta):>12} {str(walks):>8} {str(connected):>12}")
print()

print("serialized slice of log W (sorted, exact rationals):")
for entry in H.to_json_obj()[:8]:
    print(" ", entry)
