from functools import reduce
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from nsgp.errors import ExplosionGuard, SingleGenerator, TableTooShort
from nsgp.factorization import (
    InvariantId,
    factorizations,
    generator_gap_gcd,
    invariant_table,
    length_recurrence_threshold,
    length_sets,
    length_sum,
)
from nsgp.semigroup import NumericalSemigroup

from oracles import brute_factorizations, brute_lengths, random_semigroup_list

MCN = NumericalSemigroup([6, 9, 20])
S91023 = NumericalSemigroup([9, 10, 23])

# exhaustive box search a <= 10, b <= 6, c <= 3; note 7*6 + 2*9 = 60 as well
Z60 = [(0, 0, 3), (1, 6, 0), (4, 4, 0), (7, 2, 0), (10, 0, 0)]


def test_factorizations_of_60():
    assert brute_factorizations([6, 9, 20], 60) == Z60
    assert factorizations(MCN, 60) == Z60


def test_unique_factorization_of_71():
    assert factorizations(S91023, 71) == [(2, 3, 1)]
    assert factorizations(S91023, 80) == [(0, 8, 0), (3, 3, 1)]


def test_non_element_has_no_factorizations():
    assert factorizations(MCN, 7) == []
    assert factorizations(MCN, -3) == []
    assert factorizations(MCN, 0) == [(0, 0, 0)]


def test_explosion_guard():
    with pytest.raises(ExplosionGuard):
        factorizations(MCN, 600, cap=10)


def test_length_sum():
    assert length_sum(MCN, 60) == 3 + 7 + 8 + 9 + 10 == 37
    assert length_sum(MCN, 0) == 0
    assert length_sum(MCN, 43) == 0
    assert length_sum(S91023, 71) == 6


@pytest.mark.parametrize("gens, d", [([6, 9, 20], 1), ([9, 10, 23], 1), ([3, 7], 4)])
def test_generator_gap_gcd(gens, d):
    assert generator_gap_gcd(NumericalSemigroup(gens)) == d


def test_generator_gap_gcd_arithmetic_progression():
    # same step as <10, 14, 18>, which has gcd 2 and is rejected
    assert generator_gap_gcd(NumericalSemigroup([11, 15, 19])) == 4


def test_generator_gap_gcd_single():
    with pytest.raises(SingleGenerator):
        generator_gap_gcd(NumericalSemigroup([1]))


def test_invariant_tables_mcnugget():
    assert invariant_table(MCN, "max", 140)[138] == 23
    assert invariant_table(MCN, "numlens", 60)[60] == len(brute_lengths([6, 9, 20], 60)) == 5
    assert invariant_table(MCN, "linf", 60)[60] == min(max(a) for a in Z60) == 3
    for f in InvariantId:
        t = invariant_table(MCN, f, 50)
        assert t[0] == (1 if f is InvariantId.LEN_COUNT else 0)
        assert all(t[n] == 0 for n in MCN.gaps())
        assert t(-5) == 0


def test_table_too_short():
    with pytest.raises(TableTooShort):
        invariant_table(MCN, "max", 10)(11)


@pytest.mark.parametrize("gens", random_semigroup_list(101, 12, top=25))
def test_tables_match_enumeration(gens):
    s = NumericalSemigroup(gens)
    bound = 150
    tables = {f: invariant_table(s, f, bound) for f in InvariantId}
    for n in range(bound + 1):
        zs = brute_factorizations(gens, n)
        lengths = {sum(a) for a in zs}
        assert tables[InvariantId.MAX_LEN][n] == (max(lengths) if zs else 0)
        assert tables[InvariantId.MIN_LEN][n] == (min(lengths) if zs else 0)
        assert tables[InvariantId.LEN_COUNT][n] == len(lengths)
        assert tables[InvariantId.MIN_LINF][n] == (min(max(a) for a in zs) if zs else 0)


@pytest.mark.parametrize("gens", random_semigroup_list(102, 15))
def test_dp_matches_length_sets_to_500(gens):
    s = NumericalSemigroup(gens)
    sets = length_sets(s, 500)
    mx = invariant_table(s, "max", 500)
    mn = invariant_table(s, "min", 500)
    for n in range(501):
        if sets[n]:
            assert mx[n] == sets[n].bit_length() - 1
            assert mn[n] == (sets[n] & -sets[n]).bit_length() - 1
        else:
            assert mx[n] == mn[n] == 0


@pytest.mark.parametrize("gens", random_semigroup_list(103, 10, top=20))
def test_enumeration_matches_box_search(gens):
    s = NumericalSemigroup(gens)
    for n in range(0, 120, 7):
        assert factorizations(s, n) == brute_factorizations(gens, n)


@pytest.mark.parametrize("gens", random_semigroup_list(104, 15))
def test_eventual_length_recurrences(gens):
    s = NumericalSemigroup(gens)
    g = s.generators
    tmax = length_recurrence_threshold(s, "max")
    tmin = length_recurrence_threshold(s, "min")
    top = max(tmax, tmin) + 3 * g[0] * g[-1]
    mx = invariant_table(s, "max", top + g[-1])
    mn = invariant_table(s, "min", top + g[-1])
    assert all(mx[n + g[0]] == mx[n] + 1 for n in range(tmax, top))
    assert all(mn[n + g[-1]] == mn[n] + 1 for n in range(tmin, top))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 30), st.integers(2, 30), st.integers(0, 400))
def test_two_generators_lengths_are_distinct(a, b, n):
    if a == b or gcd(a, b) != 1:
        return
    s = NumericalSemigroup([a, b])
    zs = factorizations(s, n)
    assert invariant_table(s, "numlens", n)[n] == len(zs)
