import random
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import (
    EX_NINE, EX_NINE_NECKLACE, EX_SIX_BASES, EX_SIX_MATRIX, EX_SIX_NECKLACE,
    decorated_perms,
)
from positroid_lab.chordclass import DecoratedPermutation, parse_decorated
from positroid_lab.errors import InvariantError
from positroid_lab.exact import RationalMatrix
from positroid_lab.oracle import enumerate_decorated
from positroid_lab.permcore import identity, perm
from positroid_lab.posbij import (
    BruhatInterval, GrassmannNecklace, Positroid, decorated_perm_from_interval,
    decorated_perm_from_necklace, full_positroid, grassmann_necklace,
    interval_from_decorated_perm, is_positroid, is_totally_nonnegative,
    matroid_of_matrix, necklace_from_positroid, positroid_from_interval,
    positroid_from_necklace, positroid_of, shifted_anti_exceedance_set,
    top_interval, verify_basis_exchange,
)


class TestNecklace:
    def test_nine_vertex(self, ex_nine):
        assert shifted_anti_exceedance_set(ex_nine, 1) == (1, 2, 4, 8)
        assert grassmann_necklace(ex_nine).entries == EX_NINE_NECKLACE

    def test_six_vertex(self, ex_six):
        assert shifted_anti_exceedance_set(ex_six, 6) == (2, 6)
        assert grassmann_necklace(ex_six).entries == EX_SIX_NECKLACE

    def test_identities(self):
        n = 4
        ccw = DecoratedPermutation(identity(n))
        assert all(e == () for e in grassmann_necklace(ccw).entries)
        cw = DecoratedPermutation(identity(n), frozenset(range(1, n + 1)))
        assert all(e == (1, 2, 3, 4) for e in grassmann_necklace(cw).entries)
        N = GrassmannNecklace(n, ((1, 2, 3, 4),) * 4)
        assert decorated_perm_from_necklace(N) == cw

    def test_inverse_map(self, ex_nine, ex_six):
        assert str(decorated_perm_from_necklace(GrassmannNecklace(9, EX_NINE_NECKLACE))) == EX_NINE
        assert decorated_perm_from_necklace(GrassmannNecklace(6, EX_SIX_NECKLACE)) == ex_six

    def test_invalid_necklace(self):
        with pytest.raises(InvariantError):
            GrassmannNecklace(3, ((1,), (1,), (2,)))
        with pytest.raises(InvariantError):
            GrassmannNecklace(3, ((1,), (2,)))

    @given(decorated_perms())
    def test_entries_have_size_k(self, wd):
        assert all(len(e) == wd.k for e in grassmann_necklace(wd).entries)


class TestPositroid:
    def test_six_vertex_bases(self):
        M = positroid_from_necklace(GrassmannNecklace(6, EX_SIX_NECKLACE))
        assert M.bases == EX_SIX_BASES
        assert necklace_from_positroid(M).entries == EX_SIX_NECKLACE
        assert is_positroid(EX_SIX_BASES, 6)
        assert verify_basis_exchange(EX_SIX_BASES)

    def test_nine_vertex_size(self):
        assert len(positroid_from_necklace(GrassmannNecklace(9, EX_NINE_NECKLACE))) == 22

    def test_small_cases(self):
        single = {(1, 3)}
        assert is_positroid(single, 4) and verify_basis_exchange(single)
        assert not is_positroid({(1, 3), (2, 4)}, 4)
        assert not verify_basis_exchange({(1, 3), (2, 4)})
        N = necklace_from_positroid(Positroid(4, 2, frozenset({(1, 2)})))
        assert set(N.entries) == {(1, 2)}
        full = necklace_from_positroid(full_positroid(5, 2))
        assert full.entries == ((1, 2), (2, 3), (3, 4), (4, 5), (1, 5))
        M = positroid_from_necklace(GrassmannNecklace(3, ((1, 2, 3),) * 3))
        assert M.bases == {(1, 2, 3)}


class TestInterval:
    def test_examples(self, ex_nine, ex_six):
        I = interval_from_decorated_perm(ex_nine)
        assert (I.u, I.v, I.k) == (perm("428157369"), perm("578912346"), 4)
        J = interval_from_decorated_perm(ex_six)
        assert (J.u, J.v, J.k) == (perm("241365"), perm("561234"), 2)
        S = interval_from_decorated_perm(parse_decorated("3,4,1,2"))
        assert (S.u, S.v) == (perm("1234"), perm("3412"))
        assert decorated_perm_from_interval(I) == ex_nine
        assert decorated_perm_from_interval(J) == ex_six

    def test_identity_interval(self):
        wd = decorated_perm_from_interval(BruhatInterval(identity(5), identity(5), 2))
        assert wd == DecoratedPermutation(identity(5), frozenset({1, 2}))

    def test_initial_sets(self):
        I = BruhatInterval(perm("241365"), perm("561234"), 2)
        assert positroid_from_interval(I).bases == EX_SIX_BASES
        assert positroid_from_interval(top_interval(5, 2)) == full_positroid(5, 2)
        small = positroid_from_interval(BruhatInterval(perm("1243"), perm("1423"), 2))
        assert small.bases == {(1, 2), (1, 4)}

    def test_bad_interval(self):
        with pytest.raises(InvariantError):
            BruhatInterval(perm("123"), perm("213"), 2)
        with pytest.raises(InvariantError):
            BruhatInterval(perm("312"), perm("132"), 2)


@pytest.mark.parametrize("n", range(0, 7))
def test_round_trips_and_initial_sets(n):
    for wd in enumerate_decorated(n):
        N = grassmann_necklace(wd)
        assert decorated_perm_from_necklace(N) == wd
        I = interval_from_decorated_perm(wd)
        assert decorated_perm_from_interval(I) == wd
        M = positroid_from_necklace(N)
        assert necklace_from_positroid(M) == N
        assert positroid_from_interval(I) == M


class TestMatrices:
    def test_six_vertex_matrix(self):
        assert matroid_of_matrix(EX_SIX_MATRIX) == EX_SIX_BASES
        # the matrix is not totally nonnegative even though its matroid is a positroid
        A = RationalMatrix(EX_SIX_MATRIX)
        assert A.exact_minor((2, 5)) == -3
        assert not is_totally_nonnegative(A)

    def test_coordinate_matrix(self):
        A = [[0, 1, 0, 0], [0, 0, 0, 1]]
        assert matroid_of_matrix(A) == {(2, 4)}
        assert is_totally_nonnegative(A)
        # minors 1, 0, 1: nonnegative after all
        assert is_totally_nonnegative([[1, 0, -1], [0, 1, 0]])
        assert RationalMatrix([[1, 0, 1], [0, 1, -1]]).exact_minor((1, 3)) == -1
        assert not is_totally_nonnegative([[1, 0, 1], [0, 1, -1]])

    def test_rational_entries(self):
        A = [[Fraction(1, 2), 1, 0], [0, Fraction(-2, 3), 1]]
        assert matroid_of_matrix(A) == {(1, 2), (1, 3), (2, 3)}

    def test_rank_deficient(self):
        with pytest.raises(InvariantError):
            matroid_of_matrix([[1, 2, 3], [2, 4, 6]])

    def test_random_matrices_are_matroids(self):
        rng = random.Random(20261014)
        trials = 0
        while trials < 200:
            n = rng.randint(2, 8)
            k = rng.randint(1, n)
            rows = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) if rng.random() < 0.7 else 0
                     for _ in range(n)] for _ in range(k)]
            try:
                bases = matroid_of_matrix(rows)
            except InvariantError:
                continue
            trials += 1
            assert verify_basis_exchange(bases)

    def test_tnn_matrices_give_positroids(self):
        rng = random.Random(7)
        hits = 0
        for _ in range(400):
            n, k = rng.randint(3, 6), 2
            rows = [[rng.randint(0, 2) for _ in range(n)] for _ in range(k)]
            try:
                bases = matroid_of_matrix(rows)
            except InvariantError:
                continue
            if is_totally_nonnegative(rows):
                hits += 1
                assert is_positroid(bases, n)
        assert hits > 20


def test_positroid_of(ex_six):
    assert positroid_of(ex_six).bases == EX_SIX_BASES
