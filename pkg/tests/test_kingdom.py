import math
from itertools import permutations

import pytest

from conftest import P
from kingperm.inflation import P2413, P3142
from kingperm.kingdom import (KNOWN_COUNTS, census, count_kings, count_kings_dp,
                              expected_princeless_count, generate_kings,
                              has_prince, kings_without_princes,
                              kings_without_princes_filtered, princes)
from kingperm.patterns import contains
from kingperm.perm_core import Permutation, is_king, standardize


def brute_kings(n):
    return [Permutation(t) for t in permutations(range(1, n + 1)) if is_king(t)]


class TestGenerate:
    def test_k4(self):
        assert list(generate_kings(4)) == [P("2413"), P("3142")]

    def test_empty(self):
        assert list(generate_kings(2)) == [] and list(generate_kings(3)) == []

    def test_k5_size(self):
        assert len(list(generate_kings(5))) == 14

    @pytest.mark.parametrize("n", range(1, 8))
    def test_against_filter(self, n):
        # brute list is lexicographic as well
        assert list(generate_kings(n)) == brute_kings(n)

    def test_bad_n(self):
        with pytest.raises(ValueError):
            list(generate_kings(0))


class TestCount:
    @pytest.mark.parametrize("n,c", sorted(KNOWN_COUNTS.items()))
    def test_table(self, n, c):
        assert count_kings(n) == c

    @pytest.mark.parametrize("n", range(1, 12))
    def test_dp_oracle(self, n):
        if n <= 9:
            assert count_kings_dp(n) == KNOWN_COUNTS[n]
        else:
            assert count_kings_dp(n) == count_kings(n)

    def test_parallel_same(self):
        assert count_kings(8, jobs=2) == 5242

    def test_census(self):
        c = census(6, materialize=True)
        assert c.count == len(c.kings) == 90
        assert all(is_king(p) for p in c.kings)
        assert census(7).count == 646 and census(7).kings is None

    def test_trend(self):
        assert 0.12 < count_kings(9) / math.factorial(9) < 0.145


class TestPrinces:
    def test_examples(self):
        assert P("41352") in princes(P("524613"))
        assert P("3142") in princes(P("41352"))
        assert princes(Permutation((7, 5, 8, 6, 2, 4, 1, 3, 10, 12, 9, 11))) == set()
        assert P("51362847") in princes(P("361472958"))

    def test_has_prince(self):
        assert has_prince(P("524613"))
        assert not has_prince(P("2413"))
        assert has_prince(P("24153"))

    def test_non_king(self):
        with pytest.raises(ValueError):
            princes(P("1234"))
        with pytest.raises(ValueError):
            has_prince(P("12"))

    def test_k4_has_no_princes(self):
        assert not any(has_prince(p) for p in generate_kings(4))


class TestPrinceless:
    def test_small(self):
        assert kings_without_princes(4) == {P2413, P3142}
        assert kings_without_princes(6) == set()

    @pytest.mark.parametrize("n", range(4, 9))
    def test_filter_matches_construction(self, n):
        got = kings_without_princes_filtered(n)
        assert got == kings_without_princes(n)
        assert len(got) == expected_princeless_count(n)

    def test_counts(self):
        assert [expected_princeless_count(n) for n in range(4, 13)] == [2, 0, 0, 0, 8, 0, 0, 0, 48]

    def test_twelve_construction(self):
        built = kings_without_princes(12)
        assert len(built) == 48
        assert all(is_king(p) and not has_prince(p) for p in built)

    @pytest.mark.parametrize("n", [8, 12])
    def test_prefixes(self, n):
        allowed = {P("24135"), P("31425"), P("35241"), P("42531")}
        assert all(is_king(q) for q in allowed)
        for p in kings_without_princes(n):
            assert standardize(p[:5]) in allowed


class TestStructure:
    @pytest.mark.parametrize("n", range(4, 9))
    def test_basis(self, n):
        for p in generate_kings(n):
            assert contains(p, P2413) or contains(p, P3142)

    @pytest.mark.parametrize("n", range(6, 9))
    def test_k5_cover(self, n):
        k5 = list(generate_kings(5))
        for p in generate_kings(n):
            assert any(contains(p, q) for q in k5)
