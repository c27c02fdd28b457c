import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ptchain.algebra import A, B
from ptchain.permutations import (
    LabeledPermutation,
    collapse,
    format_permutation,
    normalize,
    parse_permutation,
    perm_stats,
    perm_transitions,
    phi,
    phi_inverse,
    project_perm,
    transported_transitions,
)
from ptchain.tableaux import PermutationTableau, empty_tableau, enumerate_tableaux, tableau_stats

from samples import EXAMPLE

perms = st.integers(1, 8).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)


def oracle_crossings(p):
    n = len(p)
    count = 0
    for i, j in itertools.product(range(1, n + 1), repeat=2):
        if i < j <= p[i - 1] < p[j - 1]:
            count += 1
        if p[i - 1] < p[j - 1] < i < j:
            count += 1
    return count


def oracle_stats(p):
    f = sum(1 for i in range(2, len(p) + 1) if p[i - 1] < p[0] and all(p[k - 1] > p[i - 1] for k in range(i + 1, len(p) + 1)))
    u = sum(1 for i in range(2, len(p) + 1) if p[i - 1] > p[0] and all(p[k - 1] < p[i - 1] for k in range(2, i)))
    return oracle_crossings(p), f, u


def test_phi_examples():
    assert phi(EXAMPLE) == (7, 4, 8, 3, 6, 2, 1, 5)
    assert phi(empty_tableau(5)) == (1, 2, 3, 4, 5)
    assert phi(PermutationTableau((1,), ((1,),))) == (2, 1)


def test_phi_inverse_examples():
    assert phi_inverse((7, 4, 8, 3, 6, 2, 1, 5)) == EXAMPLE
    assert phi_inverse((1, 2, 3, 4)) == empty_tableau(4)
    assert phi_inverse((2, 1)) == PermutationTableau((1,), ((1,),))


def test_stats_examples():
    s = perm_stats((7, 4, 8, 3, 6, 2, 1, 5))
    assert (s.crossings, s.f, s.u, s.weak_excedances) == (4, 2, 1, frozenset({1, 2, 3, 5}))
    # the identity is the image of the all-empty tableau, whose n-1 lower rows are unrestricted
    s = perm_stats((1, 2, 3))
    assert (s.crossings, s.f, s.u) == (0, 0, 2)
    s = perm_stats((2, 1))
    assert (s.crossings, s.f, s.u) == (0, 1, 0)


@given(perms)
def test_stats_match_oracle(p):
    s = perm_stats(p)
    assert (s.crossings, s.f, s.u) == oracle_stats(p)
    assert s.weak_excedances == frozenset(i for i in range(1, len(p) + 1) if p[i - 1] >= i)
    assert s.fixed_points == frozenset(i for i in range(1, len(p) + 1) if p[i - 1] == i)


def test_projection_examples():
    assert project_perm((7, 4, 8, 3, 6, 2, 1, 5)) == (1, 1, 0, 1, 0, 0, 0)
    assert project_perm((1, 2, 3, 4)) == (1, 1, 1)
    assert project_perm((2, 1)) == (0,)


@pytest.mark.parametrize("n", range(1, 8))
def test_phi_is_a_statistic_preserving_bijection(n):
    images = set()
    for t in enumerate_tableaux(n):
        p = phi(t)
        images.add(p)
        s = perm_stats(p)
        assert (s.crossings, s.f, s.u) == tableau_stats(t)
        assert phi_inverse(p) == t
    assert len(images) == math.factorial(n)


def test_collapse_examples():
    p = LabeledPermutation.from_one_line((3, 4, 6, 7), (6, 7, 4, 3))
    c = collapse(p, 7)
    assert c.ground == (3, 4, 6) and c.images == (6, 3, 4)
    assert normalize(c) == (3, 1, 2)
    c = collapse(LabeledPermutation.from_one_line((3, 6), (6, 3)), 6)
    assert c.as_dict() == {3: 3}
    with pytest.raises(ValueError):
        collapse(LabeledPermutation.from_one_line((1, 2), (1, 2)), 2)
    with pytest.raises(ValueError):
        collapse(p, 5)


def test_normalize_examples():
    assert normalize(LabeledPermutation.from_one_line((3, 4, 6), (6, 3, 4))) == (3, 1, 2)
    assert normalize(LabeledPermutation.from_one_line((1, 2, 3), (2, 3, 1))) == (2, 3, 1)
    assert normalize(LabeledPermutation.from_one_line((5,), (5,))) == (1,)


def test_perm_chain_examples():
    # 21 sits over the one-cell tableau, whose only move is the entry at rate a/2
    assert perm_transitions((2, 1)) == [((1, 2), A * Fraction(1, 2))]
    assert perm_transitions((1, 2)) == [((2, 1), B * Fraction(1, 2))]


@pytest.mark.parametrize("n", range(2, 7))
def test_perm_chain_is_the_tableau_chain_through_phi(n):
    for p in itertools.permutations(range(1, n + 1)):
        assert sorted(perm_transitions(p), key=str) == sorted(transported_transitions(p), key=str)


@given(perms)
def test_parse_format_round_trip(p):
    assert parse_permutation(format_permutation(p)) == p


def test_parse_rejects_non_permutations():
    assert parse_permutation("2413") == (2, 4, 1, 3)
    with pytest.raises(ValueError):
        parse_permutation("1,1,2")
