"""Symmetric-function evaluation on content multisets.

The central character of a symmetric function f applied to the
Jucys-Murphy alphabet of S(d) equals f evaluated on the multiset of
contents of the indexing diagram, so everything downstream reduces to
evaluating complete (h_k), elementary (e_r) and power-sum (p_j)
symmetric functions on small integer multisets.  Those evaluations are
done here with integer dynamic programming, never via monomial
expansion.

The hook evaluation h_k * h_1^l is the weight that turns character sums
into weighted transposition-walk counts: h_k generates the monotone
steps, h_1^l the free ones.  At k = 0 the degenerate hook (0, 1^l) is
read as h_0 * h_1^l = h_1^l, which is forced by h_0 = 1 and makes the
k = 0 column the classical double Hurwitz case.

``RegularFunction`` models polynomial expressions in the generators
H_k, E_k, P_k and SIZE (the number of cells), parsed from strings like
``3/2*H2*E1 + SIZE^2 - P3``.  Evaluation is generic over any
commutative ring given values for the generators, which lets the same
expression be evaluated on contents (rationals) and on Jucys-Murphy
elements (group algebra vectors).
"""

import re
from fractions import Fraction
from functools import cache

from .partitions import Partition, contents

# A monomial is a sorted tuple of ((kind, index), power) pairs; kind is
# one of "H", "E", "P", "SIZE" (index 0 for SIZE).
Monomial = tuple[tuple[tuple[str, int], int], ...]


def power_sum(values: tuple[int, ...], j: int) -> int:
    """p_j on an integer multiset; p_0 is the cardinality."""
    if j == 0:
        return len(values)
    return sum(v**j for v in values)


def eval_hk(values: tuple[int, ...], k: int) -> int:
    """Complete homogeneous symmetric function h_k on an integer multiset.

    DP over the elements: each value may be used with any multiplicity,
    so update degrees in increasing order.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    h = [0] * (k + 1)
    h[0] = 1
    for v in values:
        for j in range(1, k + 1):
            h[j] += v * h[j - 1]
    return h[k]


def eval_er(values: tuple[int, ...], r: int) -> int:
    """Elementary symmetric function e_r on an integer multiset.

    Each value is used at most once: update degrees in decreasing order.
    e_r vanishes once r exceeds the cardinality.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    e = [0] * (r + 1)
    e[0] = 1
    for v in values:
        for j in range(min(r, len(e) - 1), 0, -1):
            e[j] += v * e[j - 1]
    return e[r]


def sum_contents(values: tuple[int, ...]) -> int:
    return sum(values)


@cache
def _hook_parts(lam: Partition, k: int) -> tuple[int, int]:
    c = contents(lam)
    return eval_hk(c, k), sum(c)


def eval_hook(lam: Partition, k: int, l: int) -> int:
    """h_k * h_1^l evaluated on the contents of lam."""
    if k < 0 or l < 0:
        raise ValueError("hook indices must be nonnegative")
    hk, h1 = _hook_parts(lam, k)
    return hk * h1**l


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<gen>H\d+|E\d+|P\d+|SIZE)"
    r"|(?P<op>[*^+-]))"
)


class RegularFunction:
    """Polynomial in the generators H_k, E_k, P_k (k >= 1) and SIZE.

    Stored as a mapping from monomials to rational coefficients.
    """

    def __init__(self, terms: dict[Monomial, Fraction]):
        self.terms = {m: c for m, c in terms.items() if c != 0}

    @classmethod
    def parse(cls, text: str) -> "RegularFunction":
        """Parse expressions like ``3/2*H2*E1 + SIZE^2 - P3``.

        Grammar: terms joined by + and -, each term a * product of
        rational constants and powered generators GEN or GEN^n.
        """
        tokens: list[tuple[str, str]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                if text[pos:].strip():
                    raise ValueError(f"cannot tokenize {text[pos:]!r}")
                break
            tokens.append((m.lastgroup, m.group(m.lastgroup)))
            pos = m.end()
        if not tokens:
            raise ValueError("empty expression")

        def gen_key(name: str) -> tuple[str, int]:
            if name == "SIZE":
                return ("SIZE", 0)
            kind, idx = name[0], int(name[1:])
            if idx < 1:
                raise ValueError(f"generator index must be >= 1 in {name}")
            return (kind, idx)

        terms: dict[Monomial, Fraction] = {}
        sign = Fraction(1)
        coeff: Fraction | None = None
        gens: dict[tuple[str, int], int] = {}
        started = False

        def flush():
            nonlocal coeff, gens, started
            if not started:
                raise ValueError(f"empty term in {text!r}")
            mono = tuple(sorted((g, p) for g, p in gens.items() if p != 0))
            c = sign * (coeff if coeff is not None else Fraction(1))
            terms[mono] = terms.get(mono, Fraction(0)) + c
            coeff, gens, started = None, {}, False

        i = 0
        while i < len(tokens):
            kind, value = tokens[i]
            if kind == "num":
                coeff = (coeff if coeff is not None else Fraction(1)) * Fraction(value)
                started = True
            elif kind == "gen":
                g = gen_key(value)
                power = 1
                if i + 1 < len(tokens) and tokens[i + 1] == ("op", "^"):
                    if i + 2 >= len(tokens) or tokens[i + 2][0] != "num":
                        raise ValueError("^ must be followed by an integer")
                    exp = Fraction(tokens[i + 2][1])
                    if exp.denominator != 1 or exp < 0:
                        raise ValueError("powers must be nonnegative integers")
                    power = int(exp)
                    i += 2
                gens[g] = gens.get(g, 0) + power
                started = True
            elif value == "^":
                raise ValueError("^ must follow a generator")
            elif value == "*":
                if not started:
                    raise ValueError("misplaced *")
            else:  # + or -
                if started:
                    flush()
                sign = Fraction(-1) if value == "-" else Fraction(1)
            i += 1
        flush()
        return cls(terms)

    def evaluate_generic(self, gen_value, one, scalar_mul):
        """Evaluate with ring-supplied generator values.

        gen_value maps (kind, index) to a ring element; one is the ring
        unit; scalar_mul(q, x) multiplies by a Fraction.  Works for plain
        rationals and for group algebra vectors alike.
        """
        total = None
        for mono, c in self.terms.items():
            term = one
            for g, p in mono:
                base = gen_value(g)
                for _ in range(p):
                    term = term * base
            term = scalar_mul(c, term)
            total = term if total is None else total + term
        if total is None:
            return scalar_mul(Fraction(0), one)
        return total

    def evaluate(self, lam: Partition) -> Fraction:
        """Value on a Young diagram: generators act on the contents of lam."""
        c = contents(lam)

        def gen_value(g):
            kind, idx = g
            if kind == "H":
                return Fraction(eval_hk(c, idx))
            if kind == "E":
                return Fraction(eval_er(c, idx))
            if kind == "P":
                return Fraction(power_sum(c, idx))
            return Fraction(sum(lam))

        return self.evaluate_generic(gen_value, Fraction(1), lambda q, x: q * x)

    def __repr__(self):
        if not self.terms:
            return "RegularFunction(0)"
        parts = []
        for mono, c in sorted(self.terms.items()):
            factors = []
            if c != 1 or not mono:
                factors.append(str(c))
            for (kind, idx), p in mono:
                name = "SIZE" if kind == "SIZE" else f"{kind}{idx}"
                factors.append(name if p == 1 else f"{name}^{p}")
            parts.append("*".join(factors))
        return f"RegularFunction({' + '.join(parts)})"


def eval_regular(f: RegularFunction, lam: Partition) -> Fraction:
    return f.evaluate(lam)
