"""Mixed double Hurwitz numbers, three independent ways.

For partitions alpha, beta of d, W(k, l, alpha, beta) counts the
(k+l)-step transposition walks from C_alpha into C_beta whose first k
edge labels weakly increase.  The Fourier route evaluated here is

    W = (1/d!) |C_alpha| |C_beta| sum over lambda of
        chi^lambda_alpha * (h_k h_1^l)(Cont_lambda) * chi^lambda_beta,

always an integer, which is asserted on every call as an end-to-end
checksum of the character and content machinery.

The connected numbers H(k, l, alpha, beta) are coefficients of the
logarithm of the three-variable generating function assembled from the
W values, normalized so that H carries u^l/l! bookkeeping.  Off the
walls of the resonance arrangement (no proper sub-sums of alpha and
beta agree) the logarithm collapses to W = d! H, and H is then equally
given by the character formula with 1/(z_alpha z_beta) prefactors.

``reconstruct_w_from_h`` inverts the logarithm combinatorially: summing
over gluing patterns theta with weight c_theta = d!/prod_i m_i(theta)!,
over ordered splittings of alpha and beta into sub-partitions of the
parts of theta, and over compositions distributing the k monotone and l
free steps across connected factors, the latter with multinomial weight
l!/(l_1! ... l_r!) coming from the exponential u-normalization.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cache, lru_cache
from itertools import combinations
from math import factorial

from . import walks
from .characters import character
from .partitions import (
    Partition,
    class_size,
    multiplicities,
    pad_with_ones,
    partitions_of,
    z_order,
)
from .regular_functions import RegularFunction, eval_hook
from .series import TruncatedSeries

DEFAULT_MAX_SERIES_D = 8


class OnWallError(ValueError):
    """Raised when a chamber-only formula is applied on a resonance wall."""

    def __init__(self, alpha, beta, wall):
        self.wall = wall
        i_set, j_set = wall
        super().__init__(
            f"({alpha}, {beta}) lies on the wall I={sorted(i_set)}, "
            f"J={sorted(j_set)} (1-indexed row sets with equal part sums)"
        )


def _require_same_size(alpha: Partition, beta: Partition) -> int:
    da, db = sum(alpha), sum(beta)
    if da != db:
        raise ValueError(f"size mismatch: |{alpha!r}| = {da} != {db} = |{beta!r}|")
    return da


@cache
def w_char(k: int, l: int, alpha: Partition, beta: Partition) -> int:
    """Walk count via the character sum; asserts integrality."""
    d = _require_same_size(alpha, beta)
    if d < 1:
        raise ValueError("w_char requires d >= 1")
    total = 0
    for lam in partitions_of(d):
        chi_a = character(lam, alpha)
        if chi_a == 0:
            continue
        chi_b = chi_a if beta == alpha else character(lam, beta)
        if chi_b == 0:
            continue
        total += chi_a * eval_hook(lam, k, l) * chi_b
    value = Fraction(class_size(alpha) * class_size(beta) * total, factorial(d))
    if value.denominator != 1 or value < 0:
        raise AssertionError(
            f"character sum for W({k},{l},{alpha},{beta}) is not a "
            f"nonnegative integer: {value}"
        )
    return int(value)


def s_transform(f: RegularFunction, alpha: Partition, beta: Partition) -> Fraction:
    """S^f(alpha, beta) with unicellular-row padding to a common size."""
    d = max(sum(alpha), sum(beta))
    alpha = pad_with_ones(alpha, d)
    beta = pad_with_ones(beta, d)
    if d == 0:
        return f.evaluate(())
    total = Fraction(0)
    for lam in partitions_of(d):
        chi_a = character(lam, alpha)
        if chi_a == 0:
            continue
        chi_b = chi_a if beta == alpha else character(lam, beta)
        if chi_b == 0:
            continue
        total += chi_a * f.evaluate(lam) * chi_b
    return total / (z_order(alpha) * z_order(beta))


def _proper_subset_sums(parts: Partition) -> dict[int, tuple[int, ...]]:
    """Map each achievable proper nonempty subset sum to one witness subset."""
    out: dict[int, tuple[int, ...]] = {}
    idx = range(len(parts))
    for size in range(1, len(parts)):
        for subset in combinations(idx, size):
            s = sum(parts[i] for i in subset)
            if s not in out:
                out[s] = subset
    return out


def find_wall(alpha: Partition, beta: Partition):
    """A witness (I, J) of equal proper sub-sums, 1-indexed, or None."""
    _require_same_size(alpha, beta)
    sums_a = _proper_subset_sums(alpha)
    sums_b = _proper_subset_sums(beta)
    for s, i_set in sums_a.items():
        j_set = sums_b.get(s)
        if j_set is not None:
            return (
                tuple(i + 1 for i in i_set),
                tuple(j + 1 for j in j_set),
            )
    return None


def is_on_wall(alpha: Partition, beta: Partition) -> bool:
    return find_wall(alpha, beta) is not None


def h_char(k: int, l: int, alpha: Partition, beta: Partition) -> Fraction:
    """Connected number via the character formula; only valid off-wall."""
    d = _require_same_size(alpha, beta)
    wall = find_wall(alpha, beta)
    if wall is not None:
        raise OnWallError(alpha, beta, wall)
    total = 0
    for lam in partitions_of(d):
        chi_a = character(lam, alpha)
        if chi_a == 0:
            continue
        chi_b = chi_a if beta == alpha else character(lam, beta)
        if chi_b == 0:
            continue
        total += chi_a * eval_hook(lam, k, l) * chi_b
    return Fraction(total, z_order(alpha) * z_order(beta))


@lru_cache(maxsize=8)
def w_series(orders: tuple[int, int, int]) -> TruncatedSeries:
    """The walk generating function assembled from w_char values.

    The coefficient of z^d t^k u^l p_alpha(A) p_beta(B) is
    W(k, l, alpha, beta)/(d! l!).
    """
    dz, dt, du = orders
    coeffs = {(0, 0, 0, (), ()): Fraction(1)}
    for d in range(1, dz + 1):
        fact_d = factorial(d)
        for alpha in partitions_of(d):
            for beta in partitions_of(d):
                for k in range(dt + 1):
                    for l in range(du + 1):
                        w = w_char(k, l, alpha, beta)
                        if w:
                            coeffs[(d, k, l, alpha, beta)] = Fraction(
                                w, fact_d * factorial(l)
                            )
    return TruncatedSeries(orders, coeffs)


@lru_cache(maxsize=8)
def h_series(orders: tuple[int, int, int]) -> TruncatedSeries:
    """Logarithm of the walk generating function."""
    return w_series(orders).log()


def h_connected(
    k: int,
    l: int,
    alpha: Partition,
    beta: Partition,
    orders: tuple[int, int, int] | None = None,
    max_d: int = DEFAULT_MAX_SERIES_D,
) -> Fraction:
    """Connected (mixed double Hurwitz) number from the series logarithm.

    ``orders`` widens the truncation profile so one logarithm serves a
    whole sweep of queries; it must dominate (d, k, l).
    """
    d = _require_same_size(alpha, beta)
    if d > max_d:
        raise ValueError(f"h_connected is capped at d <= {max_d}, got {d}")
    if orders is None:
        orders = (d, k, l)
    dz, dt, du = orders
    if d > dz or k > dt or l > du:
        raise ValueError(f"orders {orders} do not cover the query (d,k,l)=({d},{k},{l})")
    coeff = h_series(orders).coefficient((d, k, l, alpha, beta))
    return coeff * factorial(l)


def parity_vanishes(k: int, l: int, alpha: Partition, beta: Partition) -> bool:
    """True when the sign homomorphism forces the walk count to vanish."""
    d = _require_same_size(alpha, beta)
    return (k + l) % 2 != (2 * d - len(alpha) - len(beta)) % 2


def genus_classical(l: int, len_alpha: int, len_beta: int) -> Fraction:
    """Genus of the covering surface for classical (k = 0) counts."""
    return Fraction(l + 2 - len_alpha - len_beta, 2)


def fiber_size(theta: Partition) -> int:
    """Number of set partitions of {1..d} with block sizes theta."""
    d = sum(theta)
    denom = 1
    for part in theta:
        denom *= factorial(part)
    for m in multiplicities(theta).values():
        denom *= factorial(m)
    return factorial(d) // denom


def c_theta(theta: Partition) -> int:
    """Gluing weight: fiber size times the product of the part factorials."""
    prod = 1
    for part in theta:
        prod *= factorial(part)
    return fiber_size(theta) * prod


@cache
def _sub_multisets_with_sum(parts: Partition, target: int) -> tuple[tuple[Partition, Partition], ...]:
    """Distinct (sub, rest) splits of a part multiset with sum(sub) = target."""
    results: dict[Partition, Partition] = {}

    def search(i: int, chosen: list[int], remaining: list[int], left: int):
        if left == 0:
            rest = remaining + list(parts[i:])
            results[tuple(chosen)] = tuple(sorted(rest, reverse=True))
            return
        prev = None
        for j in range(i, len(parts)):
            part = parts[j]
            if part == prev or part > left:
                prev = part
                continue
            chosen.append(part)
            search(j + 1, chosen, remaining + list(parts[i:j]), left - part)
            chosen.pop()
            prev = part

    search(0, [], [], target)
    return tuple(sorted(results.items()))


def _splittings(parts: Partition, sizes: tuple[int, ...]):
    """Ordered tuples of sub-partitions of the given sizes, merging to parts."""
    if not sizes:
        if not parts:
            yield ()
        return
    for sub, rest in _sub_multisets_with_sum(parts, sizes[0]):
        for tail in _splittings(rest, sizes[1:]):
            yield (sub,) + tail


def _compositions(total: int, slots: int):
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


def reconstruct_w_from_h(
    k: int,
    l: int,
    alpha: Partition,
    beta: Partition,
    orders: tuple[int, int, int] | None = None,
    max_d: int = DEFAULT_MAX_SERIES_D,
) -> int:
    """Recover the walk count from connected numbers; must equal w_char."""
    d = _require_same_size(alpha, beta)
    if orders is None:
        orders = (d, k, l)

    @cache
    def h_value(kj: int, lj: int, zeta: Partition, eta: Partition) -> Fraction:
        return h_connected(kj, lj, zeta, eta, orders=orders, max_d=max_d)

    total = Fraction(0)
    fact_l = factorial(l)
    for theta in partitions_of(d):
        r = len(theta)
        theta_total = Fraction(0)
        for zetas in _splittings(alpha, theta):
            for etas in _splittings(beta, theta):
                for k_comp in _compositions(k, r):
                    for l_comp in _compositions(l, r):
                        weight = fact_l
                        for lj in l_comp:
                            weight //= factorial(lj)
                        prod = Fraction(weight)
                        for kj, lj, zeta, eta in zip(k_comp, l_comp, zetas, etas):
                            prod *= h_value(kj, lj, zeta, eta)
                            if prod == 0:
                                break
                        theta_total += prod
        total += c_theta(theta) * theta_total
    assert total.denominator == 1 and total >= 0
    return int(total)


@dataclass
class HurwitzValue:
    """One query's results, JSON-serializable for the CLI."""

    d: int
    k: int
    l: int
    alpha: Partition
    beta: Partition
    w: int
    h: Fraction
    on_wall: bool
    method: str

    def to_json_obj(self) -> dict:
        return {
            "d": self.d,
            "k": self.k,
            "l": self.l,
            "alpha": list(self.alpha),
            "beta": list(self.beta),
            "W": str(self.w),
            "H": f"{self.h.numerator}/{self.h.denominator}",
            "on_wall": self.on_wall,
            "method": self.method,
        }


def hurwitz_value(
    k: int,
    l: int,
    alpha: Partition,
    beta: Partition,
    method: str = "char",
    orders: tuple[int, int, int] | None = None,
) -> HurwitzValue:
    """Compute one (W, H) pair by the requested method.

    "char" takes W from the character sum, "series" from the exponential
    formula applied to the series logarithm, "oracle" from group algebra
    walk enumeration.  H is always the connected series coefficient.
    """
    d = _require_same_size(alpha, beta)
    if method == "char":
        w = w_char(k, l, alpha, beta)
    elif method == "series":
        w = reconstruct_w_from_h(k, l, alpha, beta, orders=orders)
    elif method == "oracle":
        w = walks.count_walks(k, l, alpha, beta)
    else:
        raise ValueError(f"unknown method {method!r}")
    h = h_connected(k, l, alpha, beta, orders=orders)
    return HurwitzValue(
        d=d,
        k=k,
        l=l,
        alpha=alpha,
        beta=beta,
        w=w,
        h=h,
        on_wall=is_on_wall(alpha, beta),
        method=method,
    )
