"""Sparse truncated series over exact rationals.

Keys are tuples (z, t, u, A, B): exponents of the three scalar formal
variables plus two partition-valued monomials recording which power-sum
variables p_mu(A), p_nu(B) a term carries.  Scalar exponents add under
multiplication; partition monomials combine by merging their parts.
The formal variables t and u are never numerically substituted: weights
like e^{cu}/(1 - ct) only ever appear through their truncated expansions,
which keeps all arithmetic in Q.

A series stores its truncation orders (Dz, Dt, Du); every operation
discards keys beyond them, and mixed-order operands truncate to the
componentwise minimum.  Logarithms and exponentials require each
non-constant key to have positive total (z, t, u) degree, which bounds
the number of contributing powers; partition monomials carry no grading
of their own, but every series built here ties |A|, |B| to the z-degree.

Series values are immutable in practice (no mutating API); iteration
order is unspecified, but serialized output is sorted by key.
"""

from fractions import Fraction

from .partitions import Partition, union

SeriesKey = tuple[int, int, int, Partition, Partition]

ZERO_KEY: SeriesKey = (0, 0, 0, (), ())


class TruncatedSeries:
    __slots__ = ("orders", "coeffs")

    def __init__(
        self,
        orders: tuple[int, int, int],
        coeffs: dict[SeriesKey, Fraction] | None = None,
    ):
        dz, dt, du = orders
        self.orders = (dz, dt, du)
        self.coeffs: dict[SeriesKey, Fraction] = {}
        if coeffs:
            for key, c in coeffs.items():
                if c != 0 and key[0] <= dz and key[1] <= dt and key[2] <= du:
                    self.coeffs[key] = Fraction(c)

    @classmethod
    def zero(cls, orders) -> "TruncatedSeries":
        return cls(tuple(orders))

    @classmethod
    def one(cls, orders) -> "TruncatedSeries":
        return cls(tuple(orders), {ZERO_KEY: Fraction(1)})

    @classmethod
    def monomial(cls, orders, key: SeriesKey, coeff=1) -> "TruncatedSeries":
        return cls(tuple(orders), {key: Fraction(coeff)})

    def coefficient(self, key: SeriesKey) -> Fraction:
        return self.coeffs.get(key, Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.orders == other.orders
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return f"TruncatedSeries(orders={self.orders}, terms={len(self.coeffs)})"

    def _common_orders(self, other) -> tuple[int, int, int]:
        return tuple(min(a, b) for a, b in zip(self.orders, other.orders))

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.one(self.orders).scaled(other)
        orders = self._common_orders(other)
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, Fraction(0)) + c
        return TruncatedSeries(orders, out)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return TruncatedSeries(self.orders, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.one(self.orders).scaled(other)
        return self.__add__(other.__neg__())

    def __rsub__(self, other):
        return self.__neg__().__add__(TruncatedSeries.one(self.orders).scaled(other))

    def scaled(self, q) -> "TruncatedSeries":
        q = Fraction(q)
        return TruncatedSeries(self.orders, {k: q * c for k, c in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scaled(other)
        orders = self._common_orders(other)
        dz, dt, du = orders
        # Bucket by z-degree so deep truncation skips whole blocks.
        left = self if len(self.coeffs) <= len(other.coeffs) else other
        right = other if left is self else self
        right_by_z: dict[int, list[tuple[SeriesKey, Fraction]]] = {}
        for key, c in right.coeffs.items():
            right_by_z.setdefault(key[0], []).append((key, c))
        out: dict[SeriesKey, Fraction] = {}
        for (z1, t1, u1, a1, b1), c1 in left.coeffs.items():
            if z1 > dz or t1 > dt or u1 > du:
                continue
            for z2 in range(dz - z1 + 1):
                for (k2, c2) in right_by_z.get(z2, ()):
                    t = t1 + k2[1]
                    if t > dt:
                        continue
                    u = u1 + k2[2]
                    if u > du:
                        continue
                    key = (z1 + z2, t, u, union(a1, k2[3]), union(b1, k2[4]))
                    prev = out.get(key)
                    val = c1 * c2 if prev is None else prev + c1 * c2
                    if val:
                        out[key] = val
                    elif prev is not None:
                        del out[key]
        return TruncatedSeries(orders, out)

    def __rmul__(self, other):
        return self.scaled(other)

    def __pow__(self, n: int) -> "TruncatedSeries":
        result = TruncatedSeries.one(self.orders)
        for _ in range(n):
            result = result * self
        return result

    def _positive_degree_part(self) -> "TruncatedSeries":
        rest = {k: c for k, c in self.coeffs.items() if k != ZERO_KEY}
        for key in rest:
            if key[0] + key[1] + key[2] == 0:
                raise ValueError(
                    "log/exp need every non-constant term to carry a positive "
                    f"power of z, t or u; found key {key}"
                )
        return TruncatedSeries(self.orders, rest)

    def log(self) -> "TruncatedSeries":
        """Series logarithm; the constant term must be exactly 1."""
        if self.coefficient(ZERO_KEY) != 1:
            raise ValueError("log requires constant term 1")
        s = self._positive_degree_part()
        result = TruncatedSeries.zero(self.orders)
        power = s
        j = 1
        while not power.is_zero():
            result = result + power.scaled(Fraction(-1 if j % 2 == 0 else 1, j))
            power = power * s
            j += 1
        return result

    def exp(self) -> "TruncatedSeries":
        """Series exponential; the constant term must be exactly 0."""
        if self.coefficient(ZERO_KEY) != 0:
            raise ValueError("exp requires constant term 0")
        s = self._positive_degree_part()
        result = TruncatedSeries.one(self.orders)
        power = s
        jfact = 1
        j = 1
        while not power.is_zero():
            result = result + power.scaled(Fraction(1, jfact))
            j += 1
            jfact *= j
            power = power * s
        return result

    def derivative_p1(self, side: str) -> "TruncatedSeries":
        """Partial derivative in p_1(A) (side="A") or p_1(B) (side="B").

        Acts on a partition monomial by removing one part equal to 1 and
        multiplying by the number of such parts.
        """
        idx = 3 if side == "A" else 4
        out: dict[SeriesKey, Fraction] = {}
        for key, c in self.coeffs.items():
            mono = key[idx]
            m1 = sum(1 for part in mono if part == 1)
            if m1 == 0:
                continue
            reduced = mono[:-1]  # parts are sorted decreasing, 1s at the end
            new_key = list(key)
            new_key[idx] = reduced
            out_key = tuple(new_key)
            out[out_key] = out.get(out_key, Fraction(0)) + c * m1
        return TruncatedSeries(self.orders, out)

    def sorted_items(self) -> list[tuple[SeriesKey, Fraction]]:
        return sorted(self.coeffs.items())

    def to_json_obj(self) -> list[dict]:
        return [
            {
                "z": z,
                "t": t,
                "u": u,
                "A": list(a),
                "B": list(b),
                "coeff": f"{c.numerator}/{c.denominator}",
            }
            for (z, t, u, a, b), c in self.sorted_items()
        ]
