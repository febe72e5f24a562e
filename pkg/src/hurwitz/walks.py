"""Ground-truth walk enumeration in the group algebra of S(d).

Transposition walks are counted here directly, with no character theory,
so this module serves as the independent oracle for the character-sum
engine.  Permutations are tuples in one-line notation on {0,...,d-1};
products compose left to right, i.e. (p * q)(x) = q(p(x)), matching a
walk that starts at p and then applies each transposition step in turn.
Counts are invariant under the opposite convention, but intermediate
group algebra states are only reproducible with the convention fixed.

The monotone-step generating element is built by dynamic programming:
processing the Jucys-Murphy elements J_2, ..., J_d in increasing order
and allowing each one to be applied repeatedly produces every weakly
increasing factor sequence J_{t_1} ... J_{t_k} exactly once, which is
the complete homogeneous function h_k on the alphabet {J_t}.  Strictly
increasing sequences (descending-degree updates) give the elementary
functions e_r instead.

Everything here is exponential in d and hard-capped at d <= 6.
"""

from fractions import Fraction
from functools import cache
from itertools import combinations, permutations

from .characters import character_table
from .partitions import Partition, dimension, partitions_of
from .regular_functions import RegularFunction

MAX_WALK_D = 6
MAX_STEPS = 5
MAX_CENTRAL_D = 5

Perm = tuple[int, ...]


def compose(p: Perm, q: Perm) -> Perm:
    """Apply p, then q."""
    return tuple(q[i] for i in p)


def identity_perm(d: int) -> Perm:
    return tuple(range(d))


def transposition(s: int, t: int, d: int) -> Perm:
    """The transposition swapping s and t, 0-indexed."""
    img = list(range(d))
    img[s], img[t] = t, s
    return tuple(img)


@cache
def cycle_type(p: Perm) -> Partition:
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        n, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            n += 1
        lengths.append(n)
    return tuple(sorted(lengths, reverse=True))


class AlgebraVector:
    """Finitely supported map from permutations of {0..d-1} to rationals."""

    __slots__ = ("d", "coeffs")

    def __init__(self, d: int, coeffs: dict[Perm, Fraction] | None = None):
        self.d = d
        self.coeffs = {p: c for p, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def identity(cls, d: int) -> "AlgebraVector":
        return cls(d, {identity_perm(d): Fraction(1)})

    def __add__(self, other: "AlgebraVector") -> "AlgebraVector":
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, Fraction(0)) + c
        return AlgebraVector(self.d, out)

    def __sub__(self, other: "AlgebraVector") -> "AlgebraVector":
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, Fraction(0)) - c
        return AlgebraVector(self.d, out)

    def scaled(self, q) -> "AlgebraVector":
        q = Fraction(q)
        return AlgebraVector(self.d, {p: q * c for p, c in self.coeffs.items()})

    def __mul__(self, other: "AlgebraVector") -> "AlgebraVector":
        out: dict[Perm, Fraction] = {}
        small, big = self.coeffs, other.coeffs
        for p, cp in small.items():
            for q, cq in big.items():
                r = compose(p, q)
                out[r] = out.get(r, Fraction(0)) + cp * cq
        return AlgebraVector(self.d, out)

    def __pow__(self, n: int) -> "AlgebraVector":
        result = AlgebraVector.identity(self.d)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraVector)
            and self.d == other.d
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return f"AlgebraVector(d={self.d}, support={len(self.coeffs)})"

    def coefficient_of_class(self, mu: Partition) -> Fraction:
        return sum(
            (c for p, c in self.coeffs.items() if cycle_type(p) == mu),
            Fraction(0),
        )


def _check_d(d: int, max_d: int) -> None:
    if d < 1 or d > max_d:
        raise ValueError(f"group algebra computations are capped at d <= {max_d}, got {d}")


def class_sum(mu: Partition, max_d: int = MAX_WALK_D) -> AlgebraVector:
    """Formal sum of all permutations with cycle type mu."""
    d = sum(mu)
    _check_d(d, max_d)
    coeffs = {
        p: Fraction(1) for p in permutations(range(d)) if cycle_type(p) == mu
    }
    return AlgebraVector(d, coeffs)


def jm_element(t: int, d: int, max_d: int = MAX_WALK_D) -> AlgebraVector:
    """Jucys-Murphy element J_t = sum of (s t) over s < t, 1-indexed; J_1 = 0."""
    _check_d(d, max_d)
    if t < 1 or t > d:
        raise ValueError(f"need 1 <= t <= {d}, got {t}")
    coeffs = {
        transposition(s, t - 1, d): Fraction(1) for s in range(t - 1)
    }
    return AlgebraVector(d, coeffs)


def all_transpositions(d: int) -> AlgebraVector:
    out = AlgebraVector(d)
    for t in range(2, d + 1):
        out = out + jm_element(t, d)
    return out


def _monotone_prefix(start: AlgebraVector, k: int) -> AlgebraVector:
    """start * h_k({J_2..J_d}): exactly k weakly increasing JM factors."""
    d = start.d
    levels = [start] + [AlgebraVector(d) for _ in range(k)]
    for t in range(2, d + 1):
        jt = jm_element(t, d)
        for used in range(1, k + 1):
            # ascending order lets the same J_t repeat, once per budget slot
            levels[used] = levels[used] + levels[used - 1] * jt
    return levels[k]


def complete_jm(d: int, k: int, max_d: int = MAX_WALK_D) -> AlgebraVector:
    """h_k evaluated on the Jucys-Murphy alphabet of S(d)."""
    _check_d(d, max_d)
    return _monotone_prefix(AlgebraVector.identity(d), k)


def elementary_jm(d: int, r: int, max_d: int = MAX_WALK_D) -> AlgebraVector:
    """e_r evaluated on the Jucys-Murphy alphabet of S(d)."""
    _check_d(d, max_d)
    levels = [AlgebraVector.identity(d)] + [AlgebraVector(d) for _ in range(r)]
    for t in range(2, d + 1):
        jt = jm_element(t, d)
        for used in range(r, 0, -1):
            # descending order forbids repeats: strictly increasing factors
            levels[used] = levels[used] + levels[used - 1] * jt
    return levels[r]


def powersum_jm(d: int, j: int, max_d: int = MAX_WALK_D) -> AlgebraVector:
    _check_d(d, max_d)
    out = AlgebraVector(d)
    for t in range(2, d + 1):
        out = out + jm_element(t, d) ** j
    return out


def count_walks(
    k: int,
    l: int,
    alpha: Partition,
    beta: Partition,
    max_d: int = MAX_WALK_D,
    max_steps: int = MAX_STEPS,
) -> int:
    """Number of (k+l)-step transposition walks from C_alpha into C_beta
    whose first k edge labels (the larger swapped element) weakly increase.
    """
    d = sum(alpha)
    if d != sum(beta):
        raise ValueError(f"size mismatch: |{alpha!r}| != |{beta!r}|")
    _check_d(d, max_d)
    if k < 0 or l < 0 or k + l > max_steps:
        raise ValueError(f"need k, l >= 0 with k + l <= {max_steps}")
    v = _monotone_prefix(class_sum(alpha, max_d), k)
    h1 = all_transpositions(d)
    for _ in range(l):
        v = v * h1
    total = v.coefficient_of_class(beta)
    assert total.denominator == 1
    return int(total)


def count_walks_direct(k: int, l: int, alpha: Partition, beta: Partition) -> int:
    """Brute-force tuple enumeration, as a second oracle for k + l <= 3."""
    d = sum(alpha)
    if d != sum(beta):
        raise ValueError(f"size mismatch: |{alpha!r}| != |{beta!r}|")
    _check_d(d, MAX_WALK_D)
    if k + l > 3:
        raise ValueError("direct enumeration is limited to k + l <= 3")
    transpositions = [
        (transposition(s, t, d), t) for t in range(d) for s in range(t)
    ]
    starts = [p for p in permutations(range(d)) if cycle_type(p) == alpha]

    def extend(current: Perm, steps_left: int, min_label: int, monotone: bool) -> int:
        if steps_left == 0:
            if monotone:
                return extend(current, l, 0, False) if l else int(cycle_type(current) == beta)
            return int(cycle_type(current) == beta)
        total = 0
        for tau, label in transpositions:
            if monotone and label < min_label:
                continue
            total += extend(
                compose(current, tau),
                steps_left - 1,
                label if monotone else 0,
                monotone,
            )
        return total

    total = 0
    for rho in starts:
        if k:
            total += extend(rho, k, 0, True)
        elif l:
            total += extend(rho, l, 0, False)
        else:
            total += int(cycle_type(rho) == beta)
    return total


def verify_jm_levels(d: int, r: int, max_d: int = MAX_WALK_D) -> bool:
    """Check e_r(J_1,...,J_d) equals the sum of the classes with d - r cycles."""
    _check_d(d, max_d)
    if r < 0 or r > d - 1:
        raise ValueError(f"need 0 <= r <= d - 1, got r={r}")
    lhs = elementary_jm(d, r, max_d)
    rhs = AlgebraVector(d)
    for mu in partitions_of(d):
        if len(mu) == d - r:
            rhs = rhs + class_sum(mu, max_d)
    return lhs == rhs


def verify_central_character(
    d: int, f: RegularFunction, max_d: int = MAX_CENTRAL_D
) -> bool:
    """Check f on the JM alphabet against the central-idempotent expansion.

    The right side is sum over lambda of f(Cont_lambda) * (dim/d!) *
    sum_sigma chi^lambda(sigma) sigma.  Characters of S(d) are real, so
    using sigma rather than its inverse makes no difference; we use
    chi^lambda evaluated at the cycle type of sigma directly.
    """
    _check_d(d, max_d)

    def gen_value(g):
        kind, idx = g
        if kind == "H":
            return complete_jm(d, idx, max_d)
        if kind == "E":
            return elementary_jm(d, idx, max_d)
        if kind == "P":
            return powersum_jm(d, idx, max_d)
        return AlgebraVector.identity(d).scaled(d)

    lhs = f.evaluate_generic(
        gen_value, AlgebraVector.identity(d), lambda q, v: v.scaled(q)
    )

    table = character_table(d)
    fact_d = 1
    for i in range(2, d + 1):
        fact_d *= i
    rhs = AlgebraVector(d)
    perms_by_type: dict[Partition, list[Perm]] = {}
    for p in permutations(range(d)):
        perms_by_type.setdefault(cycle_type(p), []).append(p)
    for lam in partitions_of(d):
        weight = Fraction(dimension(lam), fact_d) * f.evaluate(lam)
        if weight == 0:
            continue
        coeffs = {}
        for mu, ps in perms_by_type.items():
            chi = table.value(lam, mu)
            if chi == 0:
                continue
            for p in ps:
                coeffs[p] = weight * chi
        rhs = rhs + AlgebraVector(d, coeffs)
    return lhs == rhs
