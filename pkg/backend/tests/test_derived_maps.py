import pytest

from app.exceptions import InvalidMarkedWordError, InvalidPermutationError
from app.descents.counting import Family, iter_family
from app.descents.derived_maps import (
    MarkKind,
    MarkedWord,
    cycle_to_u,
    cyclesu_inverse,
    cyclesu_map,
    fixed_one_window,
    mark_top,
    mark_zero,
    phi_T0,
    phi_T0_inverse,
    phi_U,
    phi_U_inverse,
    u_to_cycle,
    zero_mark_descents_ok,
)
from app.descents.perm_core import Permutation, descent_set, is_cyclic


def test_marked_word_properties():
    tau = MarkedWord.parse("0 3 1")
    assert tau.kind is MarkKind.ZERO
    assert tau.marked_pos == 1
    assert tau.missing_value == 2
    assert tau.restore() == Permutation((2, 3, 1))

    rc = tau.reverse_complement()
    assert rc.word == (3, 1, 4)
    assert rc.kind is MarkKind.TOP
    assert rc.marked_pos == 3
    assert str(rc) == "3 1 4"


@pytest.mark.parametrize("word", [
    (0, 4, 1),      # two markers
    (1, 2, 3),      # no marker
    (0, 1, 1),      # repeated entry
    (0, 2, 3),      # restores to the identity
])
def test_marked_word_validation(word):
    with pytest.raises(InvalidMarkedWordError):
        MarkedWord(word)


def test_mark_rejects_bad_positions():
    with pytest.raises(InvalidPermutationError):
        mark_top(Permutation((2, 3, 1)), 4)
    with pytest.raises(InvalidPermutationError):
        mark_zero(Permutation((2, 3, 1)), 0)


def test_maps_check_the_marker():
    with pytest.raises(InvalidMarkedWordError):
        phi_T0(MarkedWord((4, 3, 1)))
    with pytest.raises(InvalidMarkedWordError):
        phi_U(MarkedWord((0, 1, 2)))


def test_u_example():
    tau = MarkedWord.parse("4 3 1")
    pi = u_to_cycle(tau)
    assert pi == Permutation((4, 3, 1, 2))
    assert cycle_to_u(pi) == tau
    sigma = phi_U(tau)
    assert sigma == Permutation((3, 2, 1))
    assert phi_U_inverse(sigma) == tau


def test_t0_example():
    tau = MarkedWord.parse("0 1 2")
    assert phi_T0(tau) == Permutation((1, 2, 3))
    assert phi_T0_inverse(Permutation((1, 2, 3))) == tau


def test_single_letter():
    assert phi_U(MarkedWord((2,))) == Permutation((1,))
    assert phi_T0(MarkedWord((0,))) == Permutation((1,))
    assert phi_T0_inverse(Permutation((1,))) == MarkedWord((0,))


def test_t0_3_maps_onto_s_3():
    words = list(iter_family(Family.T0, 3))
    assert len(words) == 6
    assert {phi_T0(tau) for tau in words} == set(iter_family(Family.S, 3))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_marked_maps_are_descent_preserving_bijections(n):
    everything = set(iter_family(Family.S, n))
    for family, forward, backward, value in (
        (Family.U, phi_U, phi_U_inverse, n),
        (Family.T0, phi_T0, phi_T0_inverse, 1),
    ):
        images = set()
        for tau in iter_family(family, n):
            sigma = forward(tau)
            images.add(sigma)
            assert descent_set(sigma) == descent_set(tau)
            assert sigma(tau.marked_pos) == value
            assert backward(sigma) == tau
        assert images == everything


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_u_words_round_trip_through_cycles(n):
    for tau in iter_family(Family.U, n):
        pi = u_to_cycle(tau)
        assert is_cyclic(pi)
        assert pi(tau.marked_pos) == n + 1
        assert cycle_to_u(pi) == tau


def test_zero_marks_force_descents():
    for n in range(1, 6):
        assert all(zero_mark_descents_ok(tau) for tau in iter_family(Family.T0, n))


def test_fixed_one_window():
    assert fixed_one_window(5, 1) == frozenset({2, 3, 4})
    assert fixed_one_window(5, 3) == frozenset({1, 4})
    assert fixed_one_window(5, 5) == frozenset({1, 2, 3})
    assert fixed_one_window(1, 1) == frozenset()


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_cyclesu_on_four_cycles(m):
    window = fixed_one_window(4, m)
    images = set()
    for pi in iter_family(Family.C, 4):
        sigma = cyclesu_map(pi, m)
        images.add(sigma)
        assert sigma(m) == 1
        assert descent_set(sigma).intersect(window) == descent_set(pi).intersect(window)
        assert cyclesu_inverse(sigma) == (pi, m)
    assert images == {sigma for sigma in iter_family(Family.S, 4) if sigma(m) == 1}


def test_cyclesu_requires_a_cycle():
    with pytest.raises(InvalidPermutationError):
        cyclesu_map(Permutation((2, 1, 3)), 1)
