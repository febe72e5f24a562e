"""Resonance-arrangement chambers and exact polynomial interpolation.

Points live in the region of pairs x = (x_1 >= ... >= x_m > 0),
y = (y_1 >= ... >= y_n > 0) of equal total sum.  For each pair of proper
nonempty index sets I, J the wall "sum of x over I = sum of y over J"
separates the region; a point's chamber is identified operationally by
its vector of wall signs.  Only one representative of each complementary
wall pair (I, J) / (I^c, J^c) is stored, namely the one with 1 in I; the
complementary sign is the negation because the total sums agree.

Chamber-wise, the connected Hurwitz numbers restrict to polynomials in
the coordinates.  ``fit_chamber_polynomial`` finds one by exact rational
interpolation: sampled points all satisfy sum x = sum y, so the last y
coordinate is eliminated through that relation before solving (the raw
Vandermonde system on the hyperplane is always singular), the linear
system is solved in exact arithmetic, and a candidate is accepted only
if it also reproduces the held-out validation points exactly.  Sampling
restricts to strictly decreasing coordinates on each side: the class
prefactors 1/z_alpha jump on equal-part loci, so the polynomiality
statement tested is the one on the distinct-part sublattice.

Degrees are discovered by searching upward from zero; nothing here
asserts what the degree should be.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .engine import h_char, parity_vanishes
from .partitions import Partition

Wall = tuple[tuple[int, ...], tuple[int, ...]]


class ChamberExhaustedError(RuntimeError):
    """Not enough lattice points with the requested sign vector."""


class FitError(RuntimeError):
    """No exact polynomial found up to the degree cap."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or []


def canonical_walls(m: int, n: int) -> tuple[Wall, ...]:
    """One wall per complementary pair, the representative containing row 1.

    Index sets are 0-indexed tuples; proper nonempty subsets only, so
    m = 1 or n = 1 yields no walls at all.
    """
    walls = []
    for i_size in range(1, m):
        for i_set in combinations(range(m), i_size):
            if 0 not in i_set:
                continue
            for j_size in range(1, n):
                for j_set in combinations(range(n), j_size):
                    walls.append((i_set, j_set))
    return tuple(walls)


def _check_region(x: tuple[int, ...], y: tuple[int, ...]) -> None:
    for side, name in ((x, "x"), (y, "y")):
        if not side or any(v < 1 for v in side):
            raise ValueError(f"{name} coordinates must be positive, got {side}")
        if any(side[i] < side[i + 1] for i in range(len(side) - 1)):
            raise ValueError(f"{name} coordinates must be weakly decreasing, got {side}")
    if sum(x) != sum(y):
        raise ValueError(f"coordinate sums differ: {sum(x)} != {sum(y)}")


def wall_signs(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    """Sign of sum_I x - sum_J y for each canonical wall, in canonical order."""
    x, y = tuple(x), tuple(y)
    _check_region(x, y)
    signs = []
    for i_set, j_set in canonical_walls(len(x), len(y)):
        diff = sum(x[i] for i in i_set) - sum(y[j] for j in j_set)
        signs.append(0 if diff == 0 else (1 if diff > 0 else -1))
    return tuple(signs)


@dataclass(frozen=True)
class ChamberPoint:
    x: tuple[int, ...]
    y: tuple[int, ...]
    signs: tuple[int, ...]

    @classmethod
    def at(cls, x, y) -> "ChamberPoint":
        x, y = tuple(x), tuple(y)
        return cls(x=x, y=y, signs=wall_signs(x, y))

    @property
    def m(self) -> int:
        return len(self.x)

    @property
    def n(self) -> int:
        return len(self.y)

    @property
    def off_wall(self) -> bool:
        return 0 not in self.signs

    @property
    def coordinates(self) -> tuple[int, ...]:
        return self.x + self.y

    def sign_map(self) -> dict[Wall, int]:
        return dict(zip(canonical_walls(self.m, self.n), self.signs))


def same_chamber(p: ChamberPoint, q: ChamberPoint) -> bool:
    """Equal sign vectors, the operational definition of one chamber."""
    if (p.m, p.n) != (q.m, q.n):
        raise ValueError(f"mismatched shapes ({p.m},{p.n}) vs ({q.m},{q.n})")
    if not p.off_wall or not q.off_wall:
        raise ValueError("same_chamber requires both points strictly off all walls")
    return p.signs == q.signs


def _strictly_decreasing_tuples(length: int, bound: int, total: int):
    """All strictly decreasing positive tuples with the given sum and bound."""

    def build(prefix: list[int], biggest: int, left: int):
        slots = length - len(prefix)
        if slots == 0:
            if left == 0:
                yield tuple(prefix)
            return
        rest = slots - 1
        min_rest = rest * (rest + 1) // 2  # smallest strictly decreasing tail
        for v in range(min(biggest, left - min_rest), 0, -1):
            if rest * v - min_rest < left - v:
                break  # tails below v only get smaller
            prefix.append(v)
            yield from build(prefix, v - 1, left - v)
            prefix.pop()

    yield from build([], bound, total)


def sample_chamber(
    base: ChamberPoint,
    count: int,
    bound: int,
    seed: int = 0,
) -> list[ChamberPoint]:
    """Distinct strictly-decreasing lattice points sharing base's signs.

    Deterministic for a given seed: the full candidate list under the
    coordinate bound is enumerated, filtered by sign vector, shuffled
    with the seeded RNG, and the first ``count`` points are returned.
    Raises ChamberExhaustedError when fewer than ``count`` exist.
    """
    if not base.off_wall:
        raise ValueError("base point must be off all walls")
    m, n = base.m, base.n
    matches: list[ChamberPoint] = []
    max_total = bound * m
    for total in range(1, max_total + 1):
        ys = list(_strictly_decreasing_tuples(n, bound, total))
        if not ys:
            continue
        for x in _strictly_decreasing_tuples(m, bound, total):
            for y in ys:
                signs = wall_signs(x, y)
                if signs == base.signs:
                    matches.append(ChamberPoint(x=x, y=y, signs=signs))
    if len(matches) < count:
        raise ChamberExhaustedError(
            f"only {len(matches)} lattice points with the requested sign "
            f"vector exist with coordinates <= {bound}, need {count}"
        )
    rng = random.Random(seed)
    rng.shuffle(matches)
    return matches[:count]


def _monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent tuples in nvars variables with total degree <= degree."""
    if nvars == 0:
        return [()]
    out = []
    for first in range(degree + 1):
        for rest in _monomials(nvars - 1, degree - first):
            out.append((first,) + rest)
    return out


def _solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]):
    """Particular solution of an (over)determined rational system, or None.

    Gauss-Jordan; free variables are set to zero.  Returns None when the
    system is inconsistent.
    """
    nrows, ncols = len(rows), len(rows[0]) if rows else 0
    aug = [row[:] + [val] for row, val in zip(rows, rhs)]
    pivot_cols = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c] != 0:
                factor = aug[i][c]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[r])]
        pivot_cols.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if aug[i][ncols] != 0:
            return None
    solution = [Fraction(0)] * ncols
    for row_idx, c in enumerate(pivot_cols):
        solution[c] = aug[row_idx][ncols]
    return solution


@dataclass
class PolynomialFit:
    """Exact interpolating polynomial for one chamber and one (k, l).

    Monomial exponents cover all m + n coordinates; the exponent of the
    last y coordinate is always zero because it is eliminated through
    the equal-sums relation before solving.
    """

    m: int
    n: int
    k: int
    l: int
    degree: int
    variables: tuple[str, ...]
    coefficients: dict[tuple[int, ...], Fraction]
    training: list[tuple[ChamberPoint, Fraction]]
    validation: list[tuple[ChamberPoint, Fraction]]
    chamber_signature: tuple[int, ...]

    def evaluate(self, point: ChamberPoint) -> Fraction:
        if (point.m, point.n) != (self.m, self.n):
            raise ValueError(
                f"point shape ({point.m},{point.n}) does not match fit "
                f"({self.m},{self.n})"
            )
        coords = point.coordinates
        total = Fraction(0)
        for expts, c in self.coefficients.items():
            term = c
            for v, e in zip(coords, expts):
                if e:
                    term *= Fraction(v) ** e
            total += term
        return total

    def to_json_obj(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "l": self.l,
            "degree": self.degree,
            "variables": list(self.variables),
            "coefficients": [
                {"monomial": list(e), "coeff": f"{c.numerator}/{c.denominator}"}
                for e, c in sorted(self.coefficients.items())
            ],
            "training": [
                {"x": list(p.x), "y": list(p.y), "H": f"{v.numerator}/{v.denominator}"}
                for p, v in self.training
            ],
            "validation": [
                {"x": list(p.x), "y": list(p.y), "H": f"{v.numerator}/{v.denominator}"}
                for p, v in self.validation
            ],
            "chamber_signature": list(self.chamber_signature),
        }


def evaluate_fit(fit: PolynomialFit, point: ChamberPoint) -> Fraction:
    return fit.evaluate(point)


def target_value(k: int, l: int, point: ChamberPoint) -> Fraction:
    """The connected Hurwitz number at a lattice point (character formula)."""
    alpha: Partition = point.x
    beta: Partition = point.y
    return h_char(k, l, alpha, beta)


def fit_chamber_polynomial(
    k: int,
    l: int,
    points: list[ChamberPoint],
    degree_cap: int = 12,
    validation_count: int = 10,
) -> PolynomialFit:
    """Minimal-degree exact interpolation of the connected numbers.

    The last ``validation_count`` points are held out; a degree is
    accepted only when the interpolant from the training points has
    exactly zero residual at every held-out point.
    """
    if validation_count < 1:
        raise ValueError("validation_count must be positive")
    if len(points) < validation_count + 1:
        raise ValueError(
            f"need at least {validation_count + 1} points, got {len(points)}"
        )
    first = points[0]
    m, n = first.m, first.n
    for p in points[1:]:
        if not same_chamber(first, p):
            raise ValueError(f"point {p} is not in the base chamber")
    values = [target_value(k, l, p) for p in points]
    training = list(zip(points[:-validation_count], values[:-validation_count]))
    validation = list(zip(points[-validation_count:], values[-validation_count:]))

    nvars = m + n - 1  # y_n eliminated via the equal-sums relation
    variables = tuple(
        [f"x{i + 1}" for i in range(m)] + [f"y{j + 1}" for j in range(n)]
    )

    def reduced_coords(p: ChamberPoint) -> tuple[int, ...]:
        return p.x + p.y[: n - 1]

    diagnostics = []
    for degree in range(degree_cap + 1):
        monos = _monomials(nvars, degree)
        if len(monos) > len(training):
            diagnostics.append(
                f"degree {degree}: needs {len(monos)} training points, "
                f"have {len(training)}"
            )
            break
        rows = []
        for p, _ in training:
            coords = reduced_coords(p)
            rows.append([_monomial_value(coords, expts) for expts in monos])
        solution = _solve_exact(rows, [v for _, v in training])
        if solution is None:
            diagnostics.append(f"degree {degree}: training system inconsistent")
            continue
        coefficients = {
            expts + (0,): c for expts, c in zip(monos, solution) if c != 0
        }
        fit = PolynomialFit(
            m=m,
            n=n,
            k=k,
            l=l,
            degree=degree,
            variables=variables,
            coefficients=coefficients,
            training=training,
            validation=validation,
            chamber_signature=first.signs,
        )
        residuals = [fit.evaluate(p) - v for p, v in validation]
        if all(r == 0 for r in residuals):
            return fit
        bad = sum(1 for r in residuals if r != 0)
        diagnostics.append(
            f"degree {degree}: fits training but {bad}/{len(residuals)} "
            "validation residuals are nonzero"
        )
    raise FitError(
        f"no exact polynomial of degree <= {degree_cap} interpolates the "
        f"(k={k}, l={l}) values on this chamber",
        diagnostics,
    )


def _monomial_value(coords: tuple[int, ...], expts: tuple[int, ...]) -> Fraction:
    total = 1
    for v, e in zip(coords, expts):
        if e:
            total *= v**e
    return Fraction(total)


def parity_compatible(k: int, l: int, point: ChamberPoint) -> bool:
    """Whether walk counts can be nonzero at this point's lengths.

    With the row counts m = len(x) and n = len(y) fixed, this depends
    only on (k + l) - (m + n) mod 2, so a whole chamber's lattice is
    either entirely compatible or entirely vanishing.
    """
    return not parity_vanishes(k, l, point.x, point.y)
