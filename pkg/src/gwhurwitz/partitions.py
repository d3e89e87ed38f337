"""Integer partitions and the class algebra of formal partition sums.

Partitions are canonical tuples of weakly decreasing positive integers;
the empty partition () is a first-class degree-0 value.  `ClassSum` holds a
formal rational linear combination of partitions of one fixed degree.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .qseries import format_rational


def as_partition(parts) -> tuple:
    """Canonicalize and validate an iterable of parts."""
    parts = tuple(sorted((int(p) for p in parts), reverse=True))
    if any(p < 1 for p in parts):
        raise ValueError(f"partition parts must be positive, got {parts}")
    return parts


def check_partition(mu) -> tuple:
    mu = tuple(mu)
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)) or any(p < 1 for p in mu):
        raise ValueError(f"not a canonical partition: {mu}")
    return mu


def size(mu) -> int:
    return sum(mu)


def length(mu) -> int:
    return len(mu)


def multiplicity_of_one(mu) -> int:
    return sum(1 for p in mu if p == 1)


def enumerate_partitions(d: int) -> list:
    """All partitions of d, exactly once, in reverse-lexicographic order."""
    if d < 0:
        raise ValueError("d must be >= 0")
    out = []

    def descend(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(maxpart, remaining), 0, -1):
            prefix.append(p)
            descend(remaining - p, p, prefix)
            prefix.pop()

    descend(d, d, [])
    return out


def partition_count(d: int) -> int:
    return len(enumerate_partitions(d))


def euler_partition_counts(dmax: int) -> list:
    """p(0..dmax) via the pentagonal-number recurrence (independent oracle)."""
    p = [0] * (dmax + 1)
    p[0] = 1
    for n in range(1, dmax + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > n and g2 > n:
                break
            sign = -1 if k % 2 == 0 else 1
            if g1 <= n:
                total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def aut_size(mu) -> int:
    """Order of the part-permuting automorphism group: product of mult!'s."""
    out = 1
    run = 1
    for i in range(1, len(mu) + 1):
        if i < len(mu) and mu[i] == mu[i - 1]:
            run += 1
        else:
            out *= math.factorial(run)
            run = 1
    return out


def z_factor(mu) -> int:
    """Centralizer order of a permutation of cycle type mu: Aut(mu) * prod(parts)."""
    out = aut_size(mu)
    for p in mu:
        out *= p
    return out


def subpartitions_by_removing_ones(mu) -> list:
    """All ways to strip parts equal to 1, with binomial multiplicities.

    Returns pairs (mu_tilde, C(m1(mu), m1(mu_tilde))) where mu = (1^i, mu_tilde);
    includes mu itself and, when all parts are 1, the empty partition.
    """
    mu = check_partition(mu)
    m1 = multiplicity_of_one(mu)
    core = tuple(p for p in mu if p > 1)
    out = []
    for keep in range(m1, -1, -1):
        sub = core + (1,) * keep
        out.append((sub, math.comb(m1, keep)))
    return out


def format_partition(mu) -> str:
    return "(" + ",".join(str(p) for p in mu) + ")"


def parse_partition(text: str) -> tuple:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    text = text.strip()
    if not text:
        return ()
    return as_partition(int(p) for p in text.split(","))


class ClassSum:
    """A formal rational combination of partitions of one fixed degree."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms=None):
        if degree < 1:
            raise ValueError("class sums live in degree >= 1")
        self.degree = degree
        clean = {}
        for mu, c in (terms or {}).items():
            mu = check_partition(mu)
            if size(mu) != degree:
                raise ValueError(f"{mu} is not a partition of {degree}")
            c = Fraction(c)
            if c:
                clean[mu] = c
        self.terms = clean

    @classmethod
    def single(cls, mu, coefficient=1):
        mu = check_partition(mu)
        return cls(size(mu), {mu: coefficient})

    def coefficient(self, mu) -> Fraction:
        return self.terms.get(check_partition(mu), Fraction(0))

    def _check_degree(self, other):
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other):
        self._check_degree(other)
        terms = dict(self.terms)
        for mu, c in other.terms.items():
            terms[mu] = terms.get(mu, Fraction(0)) + c
        return ClassSum(self.degree, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return ClassSum(self.degree, {mu: v * c for mu, v in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, ClassSum) and self.degree == other.degree
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.degree, tuple(sorted(self.terms.items()))))

    def items_canonical(self):
        """(partition, coefficient) pairs in reverse-lexicographic order."""
        return [(mu, self.terms[mu]) for mu in enumerate_partitions(self.degree)
                if mu in self.terms]

    def to_dict(self) -> dict:
        return {format_partition(mu): format_rational(c)
                for mu, c in self.items_canonical()}

    def __repr__(self):
        if not self.terms:
            return f"ClassSum({self.degree}, 0)"
        body = " + ".join(f"{c}*{format_partition(mu)}"
                          for mu, c in self.items_canonical())
        return f"ClassSum({self.degree}, {body})"


def classsum_combine(a: ClassSum, b: ClassSum, op: str = "add") -> ClassSum:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    raise ValueError(f"unknown op {op!r}")


def classsum_scale(c, a: ClassSum) -> ClassSum:
    return a.scale(c)
