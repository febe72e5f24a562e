"""Integer partition combinatorics.

A partition is represented as a tuple of weakly decreasing positive
integers; the empty partition is ``()``.  Partitions index both the
conjugacy classes and the irreducible representations of the symmetric
group S(d), and double duty is made of them as sparse monomial exponents
elsewhere in the package.  All functions here are pure and all values
immutable, so everything is safe for concurrent use.

Partitions serialize to JSON as plain arrays of integers, e.g. [3, 1, 1].
"""

from functools import cache
from math import factorial

Partition = tuple[int, ...]


def check_partition(parts) -> Partition:
    """Validate and normalize ``parts`` into a partition tuple.

    Raises ValueError unless the entries are positive integers in weakly
    decreasing order.
    """
    p = tuple(parts)
    for x in p:
        if not isinstance(x, int) or x < 1:
            raise ValueError(f"partition parts must be positive integers, got {p!r}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing, got {p!r}")
    return p


@cache
def partitions_of(d: int) -> tuple[Partition, ...]:
    """All partitions of d, in reverse lexicographic order.

    The order starts at (d,) and ends at (1,)*d; partitions_of(0) is the
    single empty partition.  This fixed order is the canonical row and
    column order for character tables and serialized output.
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    if d == 0:
        return ((),)
    result: list[Partition] = []

    def extend(prefix: list[int], remaining: int, biggest: int) -> None:
        if remaining == 0:
            result.append(tuple(prefix))
            return
        for part in range(min(biggest, remaining), 0, -1):
            prefix.append(part)
            extend(prefix, remaining - part, part)
            prefix.pop()

    extend([], d, d)
    return tuple(result)


def multiplicities(alpha: Partition) -> dict[int, int]:
    """Multiplicity m_i of each part size i."""
    m: dict[int, int] = {}
    for part in alpha:
        m[part] = m.get(part, 0) + 1
    return m


def z_order(alpha: Partition) -> int:
    """The centralizer order z_alpha = prod_i i^{m_i} m_i!.

    The conjugacy class of cycle type alpha in S(d) has d!/z_alpha
    elements.  The empty partition gives 1.
    """
    z = 1
    for part, m in multiplicities(alpha).items():
        z *= part**m * factorial(m)
    return z


def class_size(alpha: Partition) -> int:
    """Number of permutations in S(|alpha|) with cycle type alpha."""
    return factorial(sum(alpha)) // z_order(alpha)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not lam:
        return ()
    cols = [0] * lam[0]
    for part in lam:
        for j in range(part):
            cols[j] += 1
    return tuple(cols)


def contents(lam: Partition) -> tuple[int, ...]:
    """Multiset of cell contents, column index minus row index (1-indexed).

    Returned row by row; only the multiset structure matters to callers.
    """
    return tuple(j - i for i, part in enumerate(lam) for j in range(part))


def union(mu1: Partition, mu2: Partition) -> Partition:
    """Merge the parts of two partitions into one, weakly decreasing."""
    return tuple(sorted(mu1 + mu2, reverse=True))


def pad_with_ones(lam: Partition, d: int) -> Partition:
    """Append unicellular rows until the diagram has d cells total."""
    size = sum(lam)
    if d < size:
        raise ValueError(f"cannot pad {lam!r} of size {size} down to {d}")
    return lam + (1,) * (d - size)


def hook_lengths(lam: Partition) -> tuple[int, ...]:
    conj = conjugate(lam)
    return tuple(
        (part - j) + (conj[j] - i) - 1
        for i, part in enumerate(lam)
        for j in range(part)
    )


def dimension(lam: Partition) -> int:
    """Dimension of the irreducible S(d)-representation indexed by lam.

    Hook length formula; agrees with the character at the identity class.
    """
    if not lam:
        raise ValueError("dimension requires a nonempty partition")
    denom = 1
    for h in hook_lengths(lam):
        denom *= h
    num, rem = divmod(factorial(sum(lam)), denom)
    assert rem == 0
    return num
