import pytest
from hypothesis import given

from app.exceptions import InvalidPermutationError, InvalidSubsetError, NotCyclicError, ParseError
from app.descents.perm_core import (
    CycleDecomposition,
    DescentSet,
    Partition,
    Permutation,
    all_subsets,
    associated_partition,
    canonical_cycle_form,
    composition_of,
    cycle_ending_with,
    cycle_type,
    descent_set,
    from_cycles,
    is_cyclic,
    is_derangement,
    reverse_complement,
    reverse_complement_word,
    subset_from_composition,
    to_cycles,
)
from app.descents.utils import parse_cycles, parse_descent_set, parse_permutation, parse_word
from tests.strategies import permutations_of_size, subsets_of_size


def test_descent_set_examples():
    assert descent_set(Permutation((2, 3, 4, 5, 1))) == DescentSet.of(5, 4)
    assert descent_set(Permutation((2, 3, 4, 5, 1))).restrict(4) == DescentSet.of(4)
    assert descent_set((4, 3, 1)) == DescentSet.of(3, 1, 2)
    assert descent_set(parse_permutation("2 5 1 7 3 6 4")) == DescentSet.of(7, 2, 4, 6)


def test_descent_set_accepts_marked_words():
    assert descent_set((0, 3, 1)) == DescentSet.of(3, 2)
    assert descent_set((3, 1, 4)) == DescentSet.of(3, 1)


def test_canonical_cycle_form_examples():
    p = parse_permutation("2 5 1 7 3 6 4")
    assert str(canonical_cycle_form(p)) == "(5,3,1,2)(6)(7,4)"
    assert canonical_cycle_form(p).is_canonical
    assert str(canonical_cycle_form(Permutation((2, 3, 4, 1)))) == "(4,1,2,3)"
    assert str(canonical_cycle_form(Permutation((3, 2, 1)))) == "(2)(3,1)"


def test_to_cycles_of_identity():
    assert to_cycles(Permutation.identity(3)).cycles == ((1,), (2,), (3,))


def test_from_cycles_single_cycle():
    assert from_cycles([(2, 3, 1, 4)]).word == (4, 3, 1, 2)


def test_from_cycles_accepts_any_rotation_and_order():
    p = parse_permutation("2 5 1 7 3 6 4")
    assert from_cycles([(4, 7), (2, 5, 3, 1), (6,)]) == p


def test_from_cycles_rejects_bad_decompositions():
    with pytest.raises(InvalidPermutationError):
        from_cycles([(1, 2), (2, 3)])
    with pytest.raises(InvalidPermutationError):
        CycleDecomposition(((1, 3),), n=3)


def test_permutation_rejects_non_permutations():
    with pytest.raises(InvalidPermutationError):
        Permutation((1, 1, 2))
    with pytest.raises(InvalidPermutationError):
        Permutation(())


def test_cycle_ending_with():
    assert cycle_ending_with(from_cycles([(2, 3, 1, 4)]), 1) == (4, 2, 3, 1)
    assert cycle_ending_with(from_cycles([(1, 2, 3)]), 3) == (1, 2, 3)
    with pytest.raises(NotCyclicError):
        cycle_ending_with(Permutation((3, 2, 1)), 3)


def test_reverse_complement_examples():
    assert reverse_complement(Permutation((2, 3, 1))) == Permutation((3, 1, 2))
    assert reverse_complement_word((0, 3, 1)) == (3, 1, 4)


def test_composition_and_partition_examples():
    assert composition_of({3, 5, 8, 12}, 13).parts == (3, 2, 3, 4, 1)
    assert associated_partition({3, 5, 8, 12}, 13).parts == (4, 3, 3, 2, 1)
    assert composition_of(set(), 5).parts == (5,)
    assert composition_of({2, 8}, 12).parts == (2, 6, 4)
    assert subset_from_composition((2, 6, 4)) == DescentSet.of(12, 2, 8)
    assert DescentSet.of(12, 2, 8).partition().parts == (6, 4, 2)


def test_composition_rejects_out_of_range():
    with pytest.raises(InvalidSubsetError):
        composition_of({5}, 5)
    with pytest.raises(InvalidSubsetError):
        composition_of({0}, 5)


def test_cycle_type_examples():
    p = parse_permutation("2 5 1 7 3 6 4")
    assert cycle_type(p) == Partition((4, 2, 1))
    assert not is_cyclic(p)
    assert not is_derangement(p)
    assert cycle_type(Permutation.identity(4)) == Partition((1, 1, 1, 1))
    assert cycle_type(parse_permutation("3 4 1 2 5 9 11 12 6 7 8 10")) == Partition((5, 2, 2, 2, 1))


def test_all_subsets_order():
    assert [str(s) for s in all_subsets(4)] == [
        "{}", "{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}", "{1,2,3}",
    ]
    assert [str(s) for s in all_subsets(1)] == ["{}"]


def test_parsing():
    assert str(parse_cycles(" (5, 3,1,2)(6) (7,4) ")) == "(5,3,1,2)(6)(7,4)"
    assert parse_word("3,1,2") == (3, 1, 2)
    assert parse_descent_set("{2,8}", 12) == DescentSet.of(12, 2, 8)
    assert parse_descent_set("2, 8", 12) == DescentSet.of(12, 2, 8)
    assert parse_descent_set("", 4) == DescentSet.of(4)
    assert parse_descent_set("{}", 4) == DescentSet.of(4)


@pytest.mark.parametrize("text", ["(1,2", "1 x 3", "", "()"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_permutation(text)


@given(permutations_of_size())
def test_cycles_round_trip(p):
    assert from_cycles(to_cycles(p)) == p
    canonical = canonical_cycle_form(p)
    assert canonical.is_canonical
    assert from_cycles(canonical) == p


@given(permutations_of_size(min_n=2))
def test_reverse_complement_reflects_descents(p):
    rc = reverse_complement(p)
    assert reverse_complement(rc) == p
    n = p.n
    for i in range(1, n):
        assert (i in descent_set(rc)) == ((n - i) in descent_set(p))


@given(subsets_of_size())
def test_partition_invariant_under_reversal(subset):
    assert associated_partition(subset) == associated_partition(subset.reversed())
    assert subset_from_composition(composition_of(subset)) == subset
