from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ptchain.algebra import A, B, ONE, Q
from ptchain.moves import class_out_rate, state_class
from ptchain.pasep import PasepParams, out_rate, particle_hole, pasep_transitions
from ptchain.tableaux import all_states

from samples import box_rationals

words = st.lists(st.integers(0, 1), min_size=1, max_size=10).map(tuple)


def test_transition_examples():
    assert pasep_transitions((1, 0)) == [((0, 1), ONE * Fraction(1, 3))]
    assert pasep_transitions((0, 0)) == [((1, 0), A * Fraction(1, 3))]
    assert pasep_transitions((1,)) == [((0,), B * Fraction(1, 2))]


def test_particle_hole_examples():
    assert particle_hole((1, 1, 0)) == (1, 0, 0)
    assert particle_hole((0, 0, 0)) == (1, 1, 1)


@given(words)
def test_particle_hole_is_an_involution(x):
    assert particle_hole(particle_hole(x)) == x


@given(words)
def test_particle_hole_maps_transitions_with_swapped_rates(x):
    mapped = sorted((particle_hole(y), r.swap_ab()) for y, r in pasep_transitions(x))
    assert mapped == sorted(pasep_transitions(particle_hole(x)), key=lambda e: e[0])


@given(words, box_rationals, box_rationals, box_rationals)
def test_out_rate_never_exceeds_one(x, q, a, b):
    total = PasepParams(q, a, b).evaluate(out_rate(x))
    assert 0 < total <= 1


@given(words)
def test_out_rate_matches_class_formula(x):
    cls, n = state_class(x)
    assert out_rate(x) == class_out_rate(cls, n, len(x))


def test_class_examples():
    assert state_class((1, 0)) == (1, 1)
    assert class_out_rate(1, 1, 2) == ONE * Fraction(1, 3)
    assert state_class((1, 0, 1)) == (2, 1)
    assert class_out_rate(2, 1, 3) == (ONE + Q + B) * Fraction(1, 4)
    assert state_class((0, 1)) == (4, 1)
    assert class_out_rate(4, 1, 2) == (Q + A + B) * Fraction(1, 3)
    with pytest.raises(ValueError):
        state_class(())


@pytest.mark.parametrize("n", range(1, 7))
def test_every_state_has_a_class(n):
    classes = {state_class(x)[0] for x in all_states(n)}
    assert classes == ({1, 2, 3, 4} if n >= 2 else {2, 3})


def test_params_box():
    assert PasepParams(Fraction(1), Fraction(1), Fraction(1)).in_box()
    assert not PasepParams(Fraction(2), Fraction(1), Fraction(1)).in_box()
    with pytest.raises(ValueError):
        PasepParams(Fraction(1), Fraction(0), Fraction(1)).check()
