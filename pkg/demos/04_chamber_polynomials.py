"""Chamber-wise polynomiality of the connected numbers.

Fixing the number of rows on each side, pairs (alpha, beta) become
lattice points in a region cut into chambers by the resonance walls
"some rows of alpha sum to some rows of beta".  Within one chamber the
connected numbers agree with a single polynomial in the row lengths,
found here by exact rational interpolation and validated on held-out
points with zero residual.
"""

from fractions import Fraction

from hurwitz import (
    ChamberPoint,
    evaluate_fit,
    fit_chamber_polynomial,
    h_char,
    sample_chamber,
)


def pretty(fit):
    names = fit.variables
    terms = []
    for expts, coeff in sorted(fit.coefficients.items(), reverse=True):
        factors = []
        for name, e in zip(names, expts):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        body = "*".join(factors)
        terms.append(f"({coeff})" + (f"*{body}" if body else ""))
    return " + ".join(terms) if terms else "0"


print("one-part diagrams on both sides: no walls, a single chamber")
base = ChamberPoint.at((5,), (5,))
points = sample_chamber(base, 16, 24, seed=1)
for k, l in ((0, 2), (2, 0), (1, 1)):
    fit = fit_chamber_polynomial(k, l, points)
    print(f"  H(k={k}, l={l}) on ((a),(a)) = {pretty(fit)}   [degree {fit.degree}]")
print()

a = 30
fit = fit_chamber_polynomial(0, 2, points)
fresh = ChamberPoint.at((a,), (a,))
print(f"extrapolating the (0,2) fit to a = {a}: {evaluate_fit(fit, fresh)}")
print(f"character formula at a = {a}:         {h_char(0, 2, (a,), (a,))}")
print(f"closed form a(a^2-1)/12:              {Fraction(a * (a * a - 1), 12)}")
print()

print("two rows on each side: the chamber of x1 > y1 > y2 > x2")
base = ChamberPoint.at((3, 1), (2, 2))
print(f"  canonical wall signs of the base point: {base.signs}")
points = sample_chamber(base, 40, 16, seed=2)
for k, l in ((0, 2), (1, 1), (2, 0)):
    fit = fit_chamber_polynomial(k, l, points)
    print(f"  H(k={k}, l={l}) = {pretty(fit)}   [degree {fit.degree}]")
print()
print("(y2 never appears: it is eliminated through x1+x2 = y1+y2)")
