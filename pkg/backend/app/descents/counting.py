"""Enumeration of the permutation families and exact descent counts."""
from __future__ import annotations

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial
from typing import Iterable, Iterator

import pandas as pd

from app.exceptions import InvalidPermutationError, InvalidSubsetError
from app.descents.derived_maps import fixed_one_window, mark_top, mark_zero
from app.descents.perm_core import (
    DescentSet,
    Permutation,
    all_subsets,
    composition_of,
    descent_set,
    from_cycles,
    is_derangement,
)

logger = logging.getLogger(__name__)


class Family(str, Enum):
    S = 'S'
    C = 'C'
    T0 = 'T0'
    U = 'U'
    DERANGEMENTS = 'derangements'


def _cycles(n: int) -> Iterator[Permutation]:
    # every n-cycle is (1, a_2, ..., a_n) for exactly one ordering of 2..n
    for rest in permutations(range(2, n + 1)):
        yield from_cycles([(1,) + rest], n)


def iter_family(family, n: int) -> Iterator:
    """Yield each element of the family once.

    Args:
        family: One of ``Family`` (or its value).
        n: Size parameter; C_n holds n-cycles, T0_n and U_n marked words of length n.
    """
    family = Family(family)
    if n < 1:
        raise InvalidPermutationError(f"n must be positive, got {n}")
    if family is Family.S:
        for word in permutations(range(1, n + 1)):
            yield Permutation(word)
    elif family is Family.C:
        yield from _cycles(n)
    elif family is Family.T0:
        for pi in _cycles(n):
            for k in range(1, n + 1):
                yield mark_zero(pi, k)
    elif family is Family.U:
        for pi in _cycles(n):
            for k in range(1, n + 1):
                yield mark_top(pi, k)
    else:
        for word in permutations(range(1, n + 1)):
            sigma = Permutation(word)
            if is_derangement(sigma):
                yield sigma


def family_size(family, n: int) -> int:
    family = Family(family)
    if family is Family.S:
        return factorial(n)
    if family is Family.C:
        return factorial(n - 1)
    if family in (Family.T0, Family.U):
        return n * factorial(n - 1)
    # derangement numbers: d(n) = n d(n-1) + (-1)^n
    d = 1
    for k in range(1, n + 1):
        d = k * d + (-1) ** k
    return d


@lru_cache(maxsize=None)
def multinomial(parts: tuple[int, ...]) -> int:
    result, total = 1, 0
    for part in parts:
        total += part
        result *= comb(total, part)
    return result


def beta(n: int, I) -> int:
    """|{sigma in S_n : D(sigma) subset of I}|, the multinomial of the composition of I."""
    return multinomial(tuple(composition_of(I, n).parts))


def _as_subset(n: int, I) -> DescentSet:
    return I if isinstance(I, DescentSet) else DescentSet(frozenset(I), n)


def alpha(n: int, I) -> int:
    """|{sigma in S_n : D(sigma) = I}| by inclusion-exclusion over beta."""
    subset = _as_subset(n, I)
    elements = sorted(subset.elements)
    total = 0
    for k in range(len(elements) + 1):
        sign = (-1) ** (len(elements) - k)
        for part in combinations(elements, k):
            total += sign * beta(n, DescentSet(frozenset(part), n))
    return total


def _fixed_one_bounds(n: int, m: int, I) -> list[int]:
    if not 1 <= m <= n:
        raise InvalidPermutationError(f"m={m} is outside 1..{n}")
    subset = _as_subset(n, I)
    if not subset.elements <= fixed_one_window(n, m):
        raise InvalidSubsetError(f"{subset} must avoid {{{m - 1},{m}}} for m={m}")
    cuts = set(subset.elements) | ({m - 1, m} & set(range(1, n)))
    return [0] + sorted(cuts) + [n]


def fixed_one_evaluation(n: int, m: int, I) -> tuple[int, ...]:
    """Block sizes of I with m-1 and m added as cuts; the block {m} has size 1.

    Necklaces of length n with this evaluation are counted by ``beta_fixed_one``:
    the single bead lettered by {m} fixes where each necklace is cut open.
    """
    bounds = _fixed_one_bounds(n, m, I)
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def beta_fixed_one(n: int, m: int, I) -> int:
    """|{sigma : sigma(m) = 1 and D(sigma) outside {m-1, m} lies in I}|."""
    bounds = _fixed_one_bounds(n, m, I)
    # drop the singleton block {m}
    blocks = tuple(b - a for a, b in zip(bounds, bounds[1:]) if not (a == m - 1 and b == m))
    return multinomial(blocks)


def alpha_fixed_one(n: int, m: int, I) -> int:
    """|{sigma : sigma(m) = 1 and D(sigma) outside {m-1, m} equals I}|."""
    subset = _as_subset(n, I)
    elements = sorted(subset.elements)
    total = 0
    for k in range(len(elements) + 1):
        sign = (-1) ** (len(elements) - k)
        for part in combinations(elements, k):
            total += sign * beta_fixed_one(n, m, DescentSet(frozenset(part), n))
    return total


def count_by_enumeration(n: int, I, exact: bool = True) -> int:
    """Brute-force counterpart of ``alpha`` (exact) and ``beta`` (containment)."""
    subset = _as_subset(n, I)
    total = 0
    for sigma in iter_family(Family.S, n):
        d = descent_set(sigma)
        if (d == subset) if exact else d.issubset(subset):
            total += 1
    return total


def iter_with_descents_in(n: int, I) -> Iterator[Permutation]:
    """Permutations whose descents lie in I: increasing runs on the blocks of I."""
    parts = composition_of(_as_subset(n, I)).parts

    def fill(idx, remaining, word):
        if idx == len(parts):
            yield Permutation(tuple(word))
            return
        for chosen in combinations(remaining, parts[idx]):
            rest = [v for v in remaining if v not in chosen]
            yield from fill(idx + 1, rest, word + list(chosen))

    yield from fill(0, list(range(1, n + 1)), [])


def exact_classes(family, n: int) -> dict[DescentSet, list]:
    """Members of the family grouped by their full descent set."""
    classes = defaultdict(list)
    for item in iter_family(family, n):
        classes[descent_set(item)].append(item)
    return classes


@dataclass
class DescentDistribution:
    """Counts of descent sets (read in [n-1]) over one family."""
    n: int
    source: str
    counts: Counter = field(default_factory=Counter)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def get(self, I) -> int:
        return self.counts.get(_as_subset(self.n, I), 0)

    def rows(self) -> list[tuple[DescentSet, int]]:
        return [(subset, self.counts.get(subset, 0)) for subset in all_subsets(self.n)]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [{'descent_set': str(subset), 'size': len(subset), 'count': count}
             for subset, count in self.rows()]
        )


def descent_distribution(items: Iterable, n: int, source: str) -> DescentDistribution:
    """Tally D(w) restricted to [n-1] over ``items``."""
    counts = Counter(descent_set(item).restrict(n) for item in items)
    return DescentDistribution(n=n, source=source, counts=counts)


def closed_form_distribution(n: int) -> DescentDistribution:
    counts = Counter({subset: alpha(n, subset) for subset in all_subsets(n)})
    return DescentDistribution(n=n, source='closed form', counts=counts)
