from math import factorial

import pytest

from app.exceptions import InvalidPermutationError, InvalidSubsetError
from app.descents.counting import (
    Family,
    alpha,
    alpha_fixed_one,
    beta,
    beta_fixed_one,
    closed_form_distribution,
    count_by_enumeration,
    descent_distribution,
    exact_classes,
    family_size,
    fixed_one_evaluation,
    iter_family,
    iter_with_descents_in,
    multinomial,
)
from app.descents.derived_maps import fixed_one_window
from app.descents.necklaces import count_necklace_multisets
from app.descents.perm_core import DescentSet, Partition, all_subsets, descent_set, is_cyclic
from app.descents.worked_examples import EXACT_CLASS_MISMATCH


def test_multinomial():
    assert multinomial((2, 6, 4)) == 13860
    assert multinomial((1, 1, 1)) == 6
    assert multinomial(()) == 1


def test_alpha_beta_examples():
    assert alpha(4, {2}) == 5
    assert beta(4, {2}) == 6
    assert alpha(4, {1}) == 3
    assert alpha(4, set()) == 1
    assert alpha(4, {1, 2, 3}) == 1
    assert beta(12, {2, 8}) == 13860
    assert alpha(5, DescentSet.of(5, 1, 3)) == alpha(5, DescentSet.of(5, 2, 4))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_closed_forms_match_enumeration(n):
    for subset in all_subsets(n):
        assert alpha(n, subset) == count_by_enumeration(n, subset)
        assert beta(n, subset) == count_by_enumeration(n, subset, exact=False)


@pytest.mark.parametrize("family, n, expected", [
    (Family.S, 4, 24),
    (Family.C, 5, 24),
    (Family.T0, 4, 24),
    (Family.U, 4, 24),
    (Family.DERANGEMENTS, 4, 9),
    (Family.DERANGEMENTS, 1, 0),
])
def test_family_sizes(family, n, expected):
    items = list(iter_family(family, n))
    assert len(items) == expected
    assert len(set(items)) == expected
    assert family_size(family, n) == expected


def test_family_members():
    assert all(is_cyclic(pi) for pi in iter_family(Family.C, 5))
    assert all(not pi.fixed_points() for pi in iter_family('derangements', 5))
    assert {str(tau) for tau in iter_family(Family.T0, 3)} == {
        "0 3 1", "2 0 1", "2 3 0", "0 1 2", "3 0 2", "3 1 0",
    }
    with pytest.raises(InvalidPermutationError):
        list(iter_family(Family.S, 0))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_fixed_one_counts(n):
    for m in range(1, n + 1):
        window = fixed_one_window(n, m)
        fixing = [sigma for sigma in iter_family(Family.S, n) if sigma(m) == 1]
        assert len(fixing) == factorial(n - 1)
        for subset in all_subsets(n):
            if not subset.elements <= window:
                continue
            exact = sum(1 for s in fixing if descent_set(s).intersect(window) == subset)
            inside = sum(1 for s in fixing if descent_set(s).intersect(window).issubset(subset))
            assert alpha_fixed_one(n, m, subset) == exact
            assert beta_fixed_one(n, m, subset) == inside


def test_fixed_one_rejects_blocked_positions():
    with pytest.raises(InvalidSubsetError):
        beta_fixed_one(5, 3, {2})
    with pytest.raises(InvalidPermutationError):
        beta_fixed_one(5, 6, set())
    with pytest.raises(InvalidSubsetError):
        fixed_one_evaluation(5, 3, {3})


def test_fixed_one_evaluation():
    assert fixed_one_evaluation(5, 3, set()) == (2, 1, 2)
    assert fixed_one_evaluation(4, 1, set()) == (1, 3)
    assert fixed_one_evaluation(4, 4, {1}) == (1, 2, 1)
    assert fixed_one_evaluation(1, 1, set()) == (1,)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_fixed_one_counts_match_necklaces(n):
    # the lone bead of block {m} cuts every necklace open at one place
    for m in range(1, n + 1):
        window = fixed_one_window(n, m)
        for subset in all_subsets(n):
            if not subset.elements <= window:
                continue
            evaluation = fixed_one_evaluation(n, m, subset)
            assert count_necklace_multisets(evaluation, Partition((n,))) == beta_fixed_one(n, m, subset)


def test_exact_classes_of_five_cycles():
    classes = exact_classes(Family.C, 5)
    assert sum(len(members) for members in classes.values()) == 24
    subsets = [DescentSet(frozenset(elements), 5) for elements in EXACT_CLASS_MISMATCH]
    for subset, expected in zip(subsets, EXACT_CLASS_MISMATCH.values()):
        assert tuple(sorted(str(pi) for pi in classes[subset])) == expected
    assert subsets[0].partition() == subsets[1].partition()
    assert len(classes[subsets[0]]) != len(classes[subsets[1]])


def test_iter_with_descents_in():
    found = list(iter_with_descents_in(4, {2}))
    assert len(found) == 6 == len(set(found))
    assert all(descent_set(sigma).issubset(DescentSet.of(4, 2)) for sigma in found)
    assert [str(s) for s in iter_with_descents_in(3, set())] == ["1 2 3"]


def test_cycles_and_permutations_share_a_distribution():
    n = 5
    cycles = descent_distribution(iter_family(Family.C, n + 1), n, 'C')
    closed = closed_form_distribution(n)
    assert cycles.rows() == closed.rows()
    assert cycles.total == factorial(n)
    assert cycles.get({2}) == alpha(n, {2})


def test_distribution_frame():
    frame = closed_form_distribution(4).to_frame()
    assert list(frame.columns) == ['descent_set', 'size', 'count']
    assert len(frame) == 8
    assert frame['count'].sum() == 24
    assert frame.iloc[0].to_dict() == {'descent_set': '{}', 'size': 0, 'count': 1}
