"""Brute-force engine against textbook semigroups and pairwise identities."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grepunit import oracle
from grepunit.errors import CapacityError, NotNumericalSemigroupError


def sg(*gens):
    return oracle.GenericSemigroup.from_values(gens)


def test_rejects_non_semigroup_generators():
    with pytest.raises(NotNumericalSemigroupError):
        sg(4, 6)  # gcd 2, infinite complement
    with pytest.raises(NotNumericalSemigroupError):
        sg(0, 3)
    with pytest.raises(NotNumericalSemigroupError):
        sg(-2, 3)


def test_sieve_membership():
    s = oracle.sieve(sg(3, 8), 20)
    members = {0, 3, 6, 8, 9, 11, 12, 14, 15, 16, 17, 18, 19, 20}
    for x in range(21):
        assert (x in s) == (x in members)
    assert -5 not in s
    with pytest.raises(CapacityError):
        31 in s
    s = oracle.sieve(sg(7, 8, 10), 30)
    assert 19 not in s
    assert 20 in s


def test_sieve_cap():
    with pytest.raises(CapacityError):
        oracle.sieve(sg(2, 3), 100, cap=10)


def test_apery_set_of_mcnugget_semigroup():
    # <6, 9, 20>: Ap(S, 6) residues 0..5
    table = oracle.apery_set(sg(6, 9, 20), 6)
    assert table.values() == [0, 9, 20, 29, 40, 49]


def test_apery_set_known_values():
    assert oracle.apery_set(sg(7, 8, 10), 7).values() == [0, 8, 10, 16, 18, 20, 26]
    assert oracle.apery_set(sg(2, 3), 2).values() == [0, 3]


def test_apery_needs_member_modulus():
    with pytest.raises(ValueError):
        oracle.apery_set(sg(6, 9, 20), 7)


def test_invariants_of_known_semigroups():
    # McNugget semigroup <6, 9, 20>
    inv = oracle.basic_invariants(sg(6, 9, 20))
    assert inv.frobenius == 43
    assert inv.genus == 22
    # <7, 8, 10>
    inv = oracle.basic_invariants(sg(7, 8, 10))
    assert inv.frobenius == 19
    assert inv.genus == 11
    assert inv.n_below == 9


def test_whole_line_has_no_gaps():
    inv = oracle.basic_invariants(sg(1))
    assert inv.frobenius == -1
    assert inv.genus == 0
    assert inv.n_below == 0


def test_smallest_proper_semigroup():
    inv = oracle.basic_invariants(sg(2, 3))
    assert inv.frobenius == 1
    assert inv.genus == 1
    assert inv.n_below == 1
    assert oracle.pseudo_frobenius(sg(2, 3)) == [1]


def test_pseudo_frobenius_known_values():
    assert oracle.pseudo_frobenius(sg(7, 8, 10)) == [13, 19]
    assert oracle.pseudo_frobenius(sg(3, 8)) == [13]
    assert oracle.pseudo_frobenius(sg(6, 9, 20)) == [43]  # symmetric, type 1


def test_minimal_generators_drop_redundant():
    assert oracle.minimal_generators([3, 8, 11, 14]) == [3, 8]
    assert oracle.minimal_generators([40, 43, 52, 79]) == [40, 43, 52, 79]
    assert oracle.minimal_generators([7, 8, 10, 15]) == [7, 8, 10]
    assert oracle.minimal_generators([1, 5]) == [1]


def test_length_set_values():
    # 18 = 6+6+6 = 9+9 over <6, 9, 20>
    assert oracle.length_set(sg(6, 9, 20), 18) == frozenset({2, 3})
    assert oracle.length_set(sg(6, 9, 20), 7) == frozenset()
    assert oracle.length_set(sg(6, 9, 20), 0) == frozenset({0})
    # 26 = 8+8+10 is the only factorization over <7, 8, 10>
    assert oracle.length_set(sg(7, 8, 10), 26) == frozenset({3})
    assert oracle.length_set(sg(7, 8, 10), 19) == frozenset()
    with pytest.raises(CapacityError):
        oracle.length_set(sg(6, 9, 20), 10**6)


def test_wilf_data_known_semigroup():
    data = oracle.wilf_data(sg(7, 8, 10))
    assert data.frobenius == 19
    assert data.embedding_dimension == 3
    assert data.type == 2
    assert data.n_below == 9
    assert data.wilf_ok  # 19 <= 3*9 - 1
    assert data.type_bound_ok  # 19 <= 3*9 - 1


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 40), st.integers(2, 40))
def test_two_generator_identities(p, q):
    if math.gcd(p, q) != 1 or p == q:
        return
    inv = oracle.basic_invariants(sg(p, q))
    assert inv.frobenius == p * q - p - q
    assert inv.genus == (p - 1) * (q - 1) // 2
    assert oracle.pseudo_frobenius(sg(p, q)) == [p * q - p - q]


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(2, 60), min_size=2, max_size=4))
def test_gap_count_matches_gap_list(gens):
    if math.gcd(*gens) != 1:
        return
    inv = oracle.basic_invariants(oracle.GenericSemigroup.from_values(gens))
    gaps = inv.sieve.gaps()
    assert inv.genus == len(gaps)
    assert inv.frobenius == (max(gaps) if gaps else -1)
