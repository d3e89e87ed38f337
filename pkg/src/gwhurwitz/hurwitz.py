"""Hurwitz numbers of target curves: character sums and brute-force counts.

`hurwitz_disconnected` evaluates the character-sum formula; the monodromy
oracle counts permutation tuples directly (product of h commutators times
one permutation per branch profile equals the identity), so every
normalization in the package can be pinned against honest enumeration.
Transitivity is tracked through the join of the generators' orbit
partitions, which turns the transitive count into the same dynamic
programming sweep over (partial product, partial orbit join) pairs.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .characters import CharacterTable, f2_shifted
from .partitions import ClassSum, check_partition, z_factor
from .qseries import MultiSeries

DEFAULT_ORACLE_BOUND = 5


@dataclass(frozen=True)
class BranchData:
    """A target genus, a degree, and an ordered list of branch profiles."""

    target_genus: int
    degree: int
    profiles: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.target_genus < 0 or self.degree < 1:
            raise ValueError("need target_genus >= 0 and degree >= 1")
        profiles = tuple(check_partition(p) for p in self.profiles)
        for p in profiles:
            if sum(p) != self.degree:
                raise ValueError(f"profile {p} is not a partition of {self.degree}")
        object.__setattr__(self, "profiles", profiles)


# ----------------------------------------------------------- character side


def hurwitz_disconnected(branch: BranchData) -> Fraction:
    """Weighted count of possibly-disconnected covers via character sums."""
    d = branch.degree
    table = CharacterTable.build(d)
    dfact = math.factorial(d)
    exponent = 2 - 2 * branch.target_genus
    total = Fraction(0)
    for lam in table.partitions:
        dim = table.dim(lam)
        term = Fraction(dim, dfact) ** exponent
        for eta in branch.profiles:
            term *= Fraction(dfact, z_factor(eta)) * Fraction(table.chi(lam, eta), dim)
        total += term
    return total


def hurwitz_classsum(h: int, d: int, args) -> Fraction:
    """Multilinear extension of the disconnected count to formal class sums."""
    args = list(args)
    for a in args:
        if not isinstance(a, ClassSum) or a.degree != d:
            raise ValueError("arguments must be class sums of the stated degree")
    total = Fraction(0)
    for combo in itertools.product(*(a.items_canonical() for a in args)):
        coeff = Fraction(1)
        profiles = []
        for mu, c in combo:
            coeff *= c
            profiles.append(mu)
        if coeff:
            total += coeff * hurwitz_disconnected(BranchData(h, d, tuple(profiles)))
    return total


def double_hurwitz_exp_series(mu, eta, u_order: int) -> MultiSeries:
    """Generating series of double covers with exponentiated simple branching.

    The u^b coefficient is (-1)^b/b! times the disconnected double Hurwitz
    number with b extra simple branch points.  The normalization constant
    1/(z(mu) z(eta)) is pinned by the explicit-profile regression test
    against `hurwitz_disconnected`.
    """
    mu = check_partition(mu)
    eta = check_partition(eta)
    d = sum(mu)
    if sum(eta) != d:
        raise ValueError(f"size mismatch: |{mu}| != |{eta}|")
    table = CharacterTable.build(d)
    norm = Fraction(1, z_factor(mu) * z_factor(eta))
    coeffs = {}
    for lam in table.partitions:
        weight = norm * table.chi(lam, mu) * table.chi(lam, eta)
        if not weight:
            continue
        ev = -f2_shifted(lam)
        power = Fraction(1)
        for n in range(u_order):
            if power:
                coeffs[(n,)] = coeffs.get((n,), Fraction(0)) + weight * power
            power = power * ev / (n + 1)
    return MultiSeries(("u",), (0,), (u_order,), coeffs)


# ------------------------------------------------------------- brute force


def _set_partitions(n: int):
    """All set partitions of range(n) as canonical tuples of sorted tuples."""
    if n == 0:
        return [()]
    out = []

    def grow(i, blocks):
        if i == n:
            out.append(tuple(sorted(tuple(b) for b in blocks)))
            return
        for b in blocks:
            b.append(i)
            grow(i + 1, blocks)
            b.pop()
        blocks.append([i])
        grow(i + 1, blocks)
        blocks.pop()

    grow(0, [])
    return out


class _GroupContext:
    """Cached multiplication and orbit data for one symmetric group."""

    def __init__(self, d: int):
        self.d = d
        self.perms = list(itertools.permutations(range(d)))
        self.index = {p: i for i, p in enumerate(self.perms)}
        n = len(self.perms)
        self.mult = [[self.index[tuple(p[q[x]] for x in range(d))]
                      for q in self.perms] for p in self.perms]
        self.inv = [0] * n
        for i, p in enumerate(self.perms):
            q = [0] * d
            for x in range(d):
                q[p[x]] = x
            self.inv[i] = self.index[tuple(q)]
        self.identity = self.index[tuple(range(d))]

        self.cycle_type = [self._cycle_type(p) for p in self.perms]
        self.class_elements = {}
        for i, ct in enumerate(self.cycle_type):
            self.class_elements.setdefault(ct, []).append(i)

        self.partitions = _set_partitions(d)
        self.part_index = {p: i for i, p in enumerate(self.partitions)}
        self.discrete = self.part_index[tuple((i,) for i in range(d))]
        self.top = self.part_index[(tuple(range(d)),)]
        self.orbit_of = [self._orbit_partition(p) for p in self.perms]
        self._join = {}
        self._comm = None

    def _cycle_type(self, p) -> tuple:
        seen = [False] * self.d
        lengths = []
        for x in range(self.d):
            if seen[x]:
                continue
            m = 0
            y = x
            while not seen[y]:
                seen[y] = True
                y = p[y]
                m += 1
            lengths.append(m)
        return tuple(sorted(lengths, reverse=True))

    def _orbit_partition(self, p) -> int:
        seen = [False] * self.d
        blocks = []
        for x in range(self.d):
            if seen[x]:
                continue
            block = []
            y = x
            while not seen[y]:
                seen[y] = True
                block.append(y)
                y = p[y]
            blocks.append(tuple(sorted(block)))
        return self.part_index[tuple(sorted(blocks))]

    def join(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        key = (i, j)
        got = self._join.get(key)
        if got is not None:
            return got
        parent = list(range(self.d))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for part in (self.partitions[i], self.partitions[j]):
            for block in part:
                for other in block[1:]:
                    parent[find(other)] = find(block[0])
        blocks = {}
        for x in range(self.d):
            blocks.setdefault(find(x), []).append(x)
        canon = tuple(sorted(tuple(sorted(b)) for b in blocks.values()))
        out = self.part_index[canon]
        self._join[key] = out
        return out

    def commutator_distribution(self):
        """Counts of ([a,b], orbit-join(a,b)) over all pairs (a, b)."""
        if self._comm is None:
            dist = {}
            n = len(self.perms)
            for a in range(n):
                arow = self.mult[a]
                ainv = self.inv[a]
                for b in range(n):
                    c = self.mult[self.mult[arow[b]][ainv]][self.inv[b]]
                    key = (c, self.join(self.orbit_of[a], self.orbit_of[b]))
                    dist[key] = dist.get(key, 0) + 1
            self._comm = dist
        return self._comm


@lru_cache(maxsize=None)
def _group_context(d: int) -> _GroupContext:
    return _GroupContext(d)


def monodromy_oracle(branch: BranchData, transitive_only: bool = False,
                     degree_bound: int = DEFAULT_ORACLE_BOUND) -> Fraction:
    """Count monodromy tuples by direct enumeration, divided by d!.

    Tuples are (a_1, b_1, .., a_h, b_h, s_1, .., s_n) with the product of
    commutators times the s_j equal to the identity and each s_j in the
    conjugacy class of the j-th profile; with `transitive_only` the group
    generated by all entries must act transitively.
    """
    d = branch.degree
    if d > degree_bound:
        raise ValueError(f"degree {d} exceeds the brute-force bound {degree_bound}")
    ctx = _group_context(d)
    state = {(ctx.identity, ctx.discrete): 1}
    for _ in range(branch.target_genus):
        dist = ctx.commutator_distribution()
        new = {}
        for (g1, p1), c1 in state.items():
            row = ctx.mult[g1]
            for (g2, p2), c2 in dist.items():
                key = (row[g2], ctx.join(p1, p2))
                new[key] = new.get(key, 0) + c1 * c2
        state = new
    for eta in branch.profiles:
        elements = ctx.class_elements[eta]
        new = {}
        for (g1, p1), c1 in state.items():
            row = ctx.mult[g1]
            for g2 in elements:
                key = (row[g2], ctx.join(p1, ctx.orbit_of[g2]))
                new[key] = new.get(key, 0) + c1
        state = new
    if transitive_only:
        count = state.get((ctx.identity, ctx.top), 0)
    else:
        count = sum(c for (g, _p), c in state.items() if g == ctx.identity)
    return Fraction(count, math.factorial(d))


# ------------------------------------------------- connected from splittings


def _submultisets_of_size(mu, size: int):
    """Distinct sub-multisets of the parts of mu with the given total."""
    values = sorted(set(mu), reverse=True)
    counts = [mu.count(v) for v in values]
    out = []

    def grow(i, remaining, chosen):
        if remaining == 0:
            rest = list(chosen) + [0] * (len(values) - len(chosen))
            out.append(tuple(rest))
            return
        if i == len(values):
            return
        v = values[i]
        for take in range(min(counts[i], remaining // v), -1, -1):
            chosen.append(take)
            grow(i + 1, remaining - take * v, chosen)
            chosen.pop()

    grow(0, size, [])
    result = []
    for takes in out:
        sub = []
        for v, t in zip(values, takes):
            sub.extend([v] * t)
        result.append(tuple(sub))
    return result


def _profile_splits(profiles, d1: int):
    """All ways to carve a degree-d1 sub-profile out of every branch profile."""
    per_profile = []
    for eta in profiles:
        subs = []
        for sub in _submultisets_of_size(eta, d1):
            rest = list(eta)
            for p in sub:
                rest.remove(p)
            subs.append((sub, tuple(rest)))
        per_profile.append(subs)
    return itertools.product(*per_profile)


@lru_cache(maxsize=None)
def _disconnected_cached(h: int, d: int, profiles: tuple) -> Fraction:
    return hurwitz_disconnected(BranchData(h, d, profiles))


@lru_cache(maxsize=None)
def _connected_cached(h: int, d: int, profiles: tuple) -> Fraction:
    """Connected count by removing splittings with a marked-sheet recursion.

    The component containing a marked sheet has degree d1 and is connected;
    summing over d1 < d with weight d1/d and over all distributions of each
    profile's parts removes every disconnected configuration exactly once.
    The whole recursion is validated against the transitive oracle.
    """
    total = _disconnected_cached(h, d, profiles)
    for d1 in range(1, d):
        weight = Fraction(d1, d)
        for split in _profile_splits(profiles, d1):
            left = tuple(sorted(s for s, _r in split))
            right = tuple(sorted(r for _s, r in split))
            total -= (weight * _connected_cached(h, d1, left)
                      * _disconnected_cached(h, d - d1, right))
    return total


def hurwitz_connected(branch: BranchData) -> Fraction:
    """Weighted count of connected covers with the prescribed profiles."""
    profiles = tuple(sorted(branch.profiles))
    return _connected_cached(branch.target_genus, branch.degree, profiles)
