import itertools
from fractions import Fraction

import pytest

from ptchain.algebra import A, B, ONE, Q
from ptchain.analysis import build_system, verify_balance
from ptchain.moves import (
    MoveKind,
    enter_left,
    exit_right,
    hop_left,
    hop_right,
    project,
    pt_transitions,
)
from ptchain.pasep import pasep_transitions
from ptchain.tableaux import PermutationTableau, empty_tableau, enumerate_tableaux, weight
from ptchain.verify import outrates_suite

from samples import EXAMPLE


def T(shape, *rows):
    return PermutationTableau(tuple(shape), tuple(tuple(r) for r in rows))


def test_project_examples():
    assert project(EXAMPLE) == (1, 1, 0, 1, 0, 0, 0)
    assert project(empty_tableau(2)) == (1,)
    assert project(T((2, 1, 0), (0, 1), (1,), ())) == (0, 1, 0, 1)


def test_enter_left_examples():
    m = enter_left(T((1,), (1,)))
    assert (m.kind, m.target, m.rate) == (MoveKind.ENTER_LEFT, empty_tableau(2), A * Fraction(1, 2))
    m = enter_left(T((1, 0), (1,), ()))
    assert (m.target, m.rate) == (empty_tableau(3), A * Fraction(1, 3))
    assert enter_left(T((1, 1), (1,), (1,))) is None


def test_hop_right_cases():
    m = hop_right(T((2, 2), (1, 1), (0, 0)), 2)
    assert m.kind is MoveKind.HOP_RIGHT_1
    assert m.target == T((2, 1), (1, 1), (0,))
    assert weight(m.target) == weight(T((2, 2), (1, 1), (0, 0)))
    src = T((1, 1), (1,), (1,))
    m = hop_right(src, 2)
    assert (m.kind, m.target) == (MoveKind.HOP_RIGHT_2, T((1, 0), (1,), ()))
    assert weight(m.target) == weight(src) * Q.monomial_inverse()
    src = T((1, 1), (0,), (1,))
    m = hop_right(src, 2)
    assert (m.kind, m.target) == (MoveKind.HOP_RIGHT_3, T((1, 0), (1,), ()))
    assert weight(m.target) == weight(src) * A.monomial_inverse()


def test_hop_right_rejects_ineligible_rows():
    with pytest.raises(ValueError):
        hop_right(T((1, 1), (1,), (1,)), 1)
    with pytest.raises(ValueError):
        hop_right(T((1, 1, 1), (1,), (1,), (1,)), 2)


def test_exit_right_examples():
    m = exit_right(empty_tableau(2))
    assert (m.kind, m.target, m.rate) == (MoveKind.EXIT_RIGHT, T((1,), (1,)), B * Fraction(1, 2))
    m = exit_right(T((1, 0), (1,), ()))
    assert (m.target, m.rate) == (T((2,), (1, 1)), B * Fraction(1, 3))
    assert exit_right(T((1,), (1,))) is None


def test_hop_left_examples():
    m = hop_left(T((1, 0), (1,), ()), 1)
    assert m.target == T((1, 1), (1,), (1,))
    assert project(m.target) == (1, 0)
    m = hop_left(T((2, 1, 0), (0, 1), (1,), ()), 2)
    assert m.target.rows[2] == (1,)
    with pytest.raises(ValueError):
        hop_left(T((1, 1), (1,), (1,)), 1)


def test_n1_transitions():
    [m] = pt_transitions(T((1,), (1,)))
    assert (m.kind, m.target, m.rate) == (MoveKind.ENTER_LEFT, empty_tableau(2), A * Fraction(1, 2))
    [m] = pt_transitions(empty_tableau(2))
    assert (m.kind, m.target, m.rate) == (MoveKind.EXIT_RIGHT, T((1,), (1,)), B * Fraction(1, 2))


@pytest.mark.parametrize("hp", range(2, 8))
def test_moves_project_onto_pasep_moves(hp):
    for s in enumerate_tableaux(hp):
        lifted = sorted((project(m.target), m.rate) for m in pt_transitions(s))
        assert lifted == sorted(pasep_transitions(project(s)), key=lambda e: e[0])


def expected_ratio(s, m):
    """wt(target) / wt(source), including the boundary cases that pick up an extra a or b."""
    if m.kind is MoveKind.ENTER_LEFT:
        # with lambda_1 = 1 the new zero row is empty, hence unrestricted
        return A * B.monomial_inverse() if s.shape[0] == 1 else A
    if m.kind is MoveKind.EXIT_RIGHT:
        # with two rows the inserted 1 lands in row 1
        return B * A.monomial_inverse() if s.n_rows == 2 else B
    if m.kind is MoveKind.HOP_RIGHT_1:
        return B.monomial_inverse() if s.shape[m.row_index - 1] == 1 else ONE
    if m.kind is MoveKind.HOP_RIGHT_2:
        return Q.monomial_inverse()
    if m.kind is MoveKind.HOP_RIGHT_3:
        return A.monomial_inverse() if m.row_index == 2 else ONE
    return Q


@pytest.mark.parametrize("hp", range(2, 8))
def test_weight_ratio_per_move(hp):
    for s in enumerate_tableaux(hp):
        for m in pt_transitions(s):
            assert weight(m.target) == weight(s) * expected_ratio(s, m), (str(s), m.kind)


@pytest.mark.parametrize("n", range(1, 6))
def test_balance_identity(n):
    report = verify_balance(build_system("pt", n), weight)
    assert report.passed, report.violations[:3]


def test_inflow_accounting():
    report = outrates_suite(4)
    assert report.passed, report.violations[:3]


def test_move_dict_fields():
    [m] = pt_transitions(T((1,), (1,)))
    d = m.to_dict()
    assert set(d) >= {"kind", "row_index", "site_index", "target", "rate"}
    assert d["site_index"] == 0


def test_moves_are_deterministic_and_distinct():
    for s in enumerate_tableaux(5):
        moves = pt_transitions(s)
        assert moves == pt_transitions(s)
        assert len({m.site_index for m in moves}) == len(moves)
        for a, b in itertools.combinations(moves, 2):
            assert a.target != b.target
