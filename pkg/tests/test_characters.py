"""Character values against representation traces, orthogonality, and the
class-algebra structure constants obtained by brute-force group enumeration."""

import itertools
import math
from fractions import Fraction as F

import pytest

from gwhurwitz.characters import (CharacterTable, chi, dim_hook, f2_shifted,
                                  f_eta, transposition_class)
from gwhurwitz.partitions import enumerate_partitions, z_factor


def _cycle_type(p):
    seen, out = set(), []
    for x in range(len(p)):
        if x in seen:
            continue
        n, y = 0, x
        while y not in seen:
            seen.add(y)
            y = p[y]
            n += 1
        out.append(n)
    return tuple(sorted(out, reverse=True))


class TestSpotValues:
    def test_trivial_representation(self):
        for d in range(1, 7):
            for mu in enumerate_partitions(d):
                assert chi((d,), mu) == 1

    def test_sign_representation(self):
        for d in range(2, 7):
            for mu in enumerate_partitions(d):
                assert chi((1,) * d, mu) == (-1) ** (d - len(mu))

    def test_standard_rep_trace_oracle(self):
        # the 2-dimensional irreducible realized on the sum-zero subspace of
        # R^3 with basis f1 = e0-e1, f2 = e1-e2; a vector (a, b-a, -b) has
        # coordinates (a, b), and permutations permute the e-coordinates
        def expand(v):
            return (v[0], -v[2])

        def matrix_columns(p):
            cols = []
            for src in [(1, -1, 0), (0, 1, -1)]:
                img = [0, 0, 0]
                for i, c in enumerate(src):
                    img[p[i]] += c
                cols.append(expand(img))
            return cols

        for p in itertools.permutations(range(3)):
            cols = matrix_columns(p)
            trace = cols[0][0] + cols[1][1]
            assert trace == chi((2, 1), _cycle_type(p))
        assert chi((2, 1), (3,)) == -1

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            chi((2,), (1, 1, 1))


class TestDimensions:
    def test_examples(self):
        assert dim_hook((4,)) == 1
        assert dim_hook((2, 1)) == 2
        assert dim_hook((2, 2)) == 2

    def test_dim_equals_identity_column(self):
        for d in range(0, 11):
            for lam in enumerate_partitions(d):
                assert dim_hook(lam) == chi(lam, (1,) * d)

    def test_squares_sum_to_group_order(self):
        for d in range(1, 9):
            total = sum(dim_hook(lam) ** 2 for lam in enumerate_partitions(d))
            assert total == math.factorial(d)


class TestOrthogonality:
    @pytest.mark.parametrize("d", range(1, 9))
    def test_columns(self, d):
        table = CharacterTable.build(d)
        for mu in table.partitions:
            for nu in table.partitions:
                total = sum(table.chi(lam, mu) * table.chi(lam, nu)
                            for lam in table.partitions)
                assert total == (z_factor(mu) if mu == nu else 0)

    @pytest.mark.parametrize("d", range(1, 9))
    def test_rows(self, d):
        table = CharacterTable.build(d)
        for lam in table.partitions:
            for lam2 in table.partitions:
                total = sum(F(table.chi(lam, mu) * table.chi(lam2, mu), z_factor(mu))
                            for mu in table.partitions)
                assert total == (1 if lam == lam2 else 0)


class TestCentralCharacters:
    def test_identity_class(self):
        for d in range(1, 8):
            for lam in enumerate_partitions(d):
                assert f_eta((1,) * d, lam) == 1

    def test_degree_two(self):
        assert f_eta((2,), (2,)) == 1
        assert f_eta((2,), (1, 1)) == -1

    def test_f2_examples(self):
        assert f2_shifted(()) == 0
        assert f2_shifted((2,)) == 1
        assert f2_shifted((1, 1)) == -1

    @pytest.mark.parametrize("d", range(2, 9))
    def test_f2_equals_transposition_central_character(self, d):
        eta = transposition_class(d)
        for lam in enumerate_partitions(d):
            assert f2_shifted(lam) == f_eta(eta, lam)

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_class_algebra_structure_constants(self, d):
        # c_{ijk} = #{(x,y) in C_i x C_j : xy = fixed z in C_k}; the scalars
        # by which class sums act must satisfy f_i f_j = sum_k c_{ijk} f_k
        perms = list(itertools.permutations(range(d)))
        classes = {}
        for p in perms:
            classes.setdefault(_cycle_type(p), []).append(p)
        reps = {elems[0]: ct for ct, elems in classes.items()}
        for ci, ei in classes.items():
            for cj, ej in classes.items():
                counts = {ct: 0 for ct in classes}
                for x in ei:
                    for y in ej:
                        xy = tuple(x[y[t]] for t in range(d))
                        if xy in reps:
                            counts[reps[xy]] += 1
                for lam in enumerate_partitions(d):
                    lhs = f_eta(ci, lam) * f_eta(cj, lam)
                    rhs = sum(F(counts[ck]) * f_eta(ck, lam) for ck in classes)
                    assert lhs == rhs


class TestTableCache:
    def test_build_is_consistent(self):
        t1 = CharacterTable.build(6)
        t2 = CharacterTable.build(6)
        assert t1 is t2
        assert t1.matrix == [[chi(l, m) for m in t1.partitions] for l in t1.partitions]
