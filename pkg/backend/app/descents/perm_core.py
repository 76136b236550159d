"""Permutation values: one-line words, cycle forms, descent sets, compositions.

All types are frozen dataclasses. Words are 1-indexed in the mathematical sense
(``p(1)`` is ``word[0]``); values 0 and n+1 only ever appear in marked words.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import accumulate, combinations
from typing import Iterable, Iterator, Optional, Sequence, Union

from app.exceptions import InvalidPermutationError, InvalidSubsetError, NotCyclicError

logger = logging.getLogger(__name__)

WordLike = Union['Permutation', Sequence[int]]


def _word_of(seq) -> tuple[int, ...]:
    word = getattr(seq, 'word', seq)
    return tuple(word)


def format_one_line(seq) -> str:
    return ' '.join(str(v) for v in _word_of(seq))


def format_cycles(cycles) -> str:
    cycles = getattr(cycles, 'cycles', cycles)
    return ''.join('(' + ','.join(str(v) for v in cycle) + ')' for cycle in cycles)


def format_descent_set(elements) -> str:
    elements = getattr(elements, 'elements', elements)
    return '{' + ','.join(str(i) for i in sorted(elements)) + '}'


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n} in one-line notation."""
    word: tuple[int, ...]

    def __post_init__(self):
        try:
            word = tuple(int(v) for v in self.word)
        except (TypeError, ValueError) as e:
            raise InvalidPermutationError(f"Non-integer entry in {self.word!r}") from e
        if not word:
            raise InvalidPermutationError("A permutation needs at least one entry")
        if sorted(word) != list(range(1, len(word) + 1)):
            raise InvalidPermutationError(
                f"{format_one_line(word)} is not a permutation of 1..{len(word)}"
            )
        object.__setattr__(self, 'word', word)

    @classmethod
    def identity(cls, n: int) -> 'Permutation':
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __str__(self) -> str:
        return format_one_line(self.word)

    def inverse(self) -> 'Permutation':
        inv = [0] * self.n
        for i, v in enumerate(self.word, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def fixed_points(self) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.word, start=1) if i == v)


@dataclass(frozen=True)
class CycleDecomposition:
    """Cycles of a permutation of [n]; ``n`` is inferred when omitted."""
    cycles: tuple[tuple[int, ...], ...]
    n: Optional[int] = None

    def __post_init__(self):
        cycles = tuple(tuple(int(v) for v in cycle) for cycle in self.cycles)
        if any(len(cycle) == 0 for cycle in cycles):
            raise InvalidPermutationError("Empty cycle in decomposition")
        values = [v for cycle in cycles for v in cycle]
        n = len(values) if self.n is None else self.n
        if sorted(values) != list(range(1, n + 1)):
            raise InvalidPermutationError(
                f"{format_cycles(cycles)} does not partition 1..{n}"
            )
        object.__setattr__(self, 'cycles', cycles)
        object.__setattr__(self, 'n', n)

    @property
    def is_canonical(self) -> bool:
        firsts = [cycle[0] for cycle in self.cycles]
        return (all(cycle[0] == max(cycle) for cycle in self.cycles)
                and firsts == sorted(firsts))

    def canonical(self) -> 'CycleDecomposition':
        rotated = []
        for cycle in self.cycles:
            k = cycle.index(max(cycle))
            rotated.append(cycle[k:] + cycle[:k])
        rotated.sort(key=lambda cycle: cycle[0])
        return CycleDecomposition(tuple(rotated), self.n)

    def to_permutation(self) -> Permutation:
        return from_cycles(self)

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    def __str__(self) -> str:
        return format_cycles(self.cycles)


@dataclass(frozen=True)
class DescentSet:
    """A subset of [n-1], read as a set of descent positions."""
    elements: frozenset[int]
    n: int

    def __post_init__(self):
        elements = frozenset(int(i) for i in self.elements)
        bad = sorted(i for i in elements if not 1 <= i <= self.n - 1)
        if bad:
            raise InvalidSubsetError(
                f"Elements {bad} lie outside [1, {self.n - 1}] for n={self.n}"
            )
        object.__setattr__(self, 'elements', elements)

    @classmethod
    def of(cls, n: int, *elements: int) -> 'DescentSet':
        return cls(frozenset(elements), n)

    def __contains__(self, i) -> bool:
        return i in self.elements

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.elements))

    def __len__(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return format_descent_set(self.elements)

    @property
    def sort_key(self) -> tuple:
        return (len(self.elements), tuple(sorted(self.elements)))

    def issubset(self, other: 'DescentSet') -> bool:
        return self.elements <= other.elements

    def restrict(self, n: int) -> 'DescentSet':
        """Intersect with [n-1] and re-read as a subset for size n."""
        return DescentSet(frozenset(i for i in self.elements if i <= n - 1), n)

    def intersect(self, allowed: Iterable[int]) -> 'DescentSet':
        return DescentSet(self.elements & frozenset(allowed), self.n)

    def reversed(self) -> 'DescentSet':
        return DescentSet(frozenset(self.n - i for i in self.elements), self.n)

    def composition(self) -> 'Composition':
        return composition_of(self)

    def partition(self) -> 'Partition':
        return associated_partition(self)


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not parts or any(p <= 0 for p in parts):
            raise InvalidSubsetError(f"Composition parts must be positive: {parts}")
        object.__setattr__(self, 'parts', parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not parts or any(p <= 0 for p in parts):
            raise InvalidSubsetError(f"Partition parts must be positive: {parts}")
        if list(parts) != sorted(parts, reverse=True):
            raise InvalidSubsetError(f"Partition parts must be non-increasing: {parts}")
        object.__setattr__(self, 'parts', parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return '(' + ','.join(str(p) for p in self.parts) + ')'


def descent_set(seq: WordLike) -> DescentSet:
    """Positions i with seq(i) > seq(i+1).

    Works for any word of distinct integers, including marked words that
    contain 0 or n+1.
    """
    word = _word_of(seq)
    return DescentSet(
        frozenset(i for i in range(1, len(word)) if word[i - 1] > word[i]),
        len(word),
    )


def to_cycles(p: Permutation) -> CycleDecomposition:
    """Cycles in discovery order, each starting from its smallest unvisited value."""
    seen = [False] * (p.n + 1)
    cycles = []
    for start in range(1, p.n + 1):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = p(x)
        cycles.append(tuple(cycle))
    return CycleDecomposition(tuple(cycles), p.n)


def from_cycles(cycles, n: Optional[int] = None) -> Permutation:
    """Rebuild the one-line word from cycles (any rotation, any order)."""
    if not isinstance(cycles, CycleDecomposition):
        cycles = CycleDecomposition(tuple(tuple(c) for c in cycles), n)
    word = [0] * cycles.n
    for cycle in cycles.cycles:
        for k, v in enumerate(cycle):
            word[v - 1] = cycle[(k + 1) % len(cycle)]
    return Permutation(tuple(word))


def canonical_cycle_form(p: Permutation) -> CycleDecomposition:
    return to_cycles(p).canonical()


def is_cyclic(p: Permutation) -> bool:
    x, steps = p(1), 1
    while x != 1:
        x = p(x)
        steps += 1
    return steps == p.n


def cycle_ending_with(p: Permutation, last: int) -> tuple[int, ...]:
    """Write the single n-cycle ``p`` as a sequence ending with ``last``."""
    if not 1 <= last <= p.n:
        raise InvalidPermutationError(f"{last} is not a value of a permutation of size {p.n}")
    if not is_cyclic(p):
        raise NotCyclicError(f"{p} is not a single {p.n}-cycle")
    seq = []
    x = p(last)
    while x != last:
        seq.append(x)
        x = p(x)
    seq.append(last)
    return tuple(seq)


def reverse_complement_word(word: Sequence[int]) -> tuple[int, ...]:
    """``i -> n+1 - word(n+1-i)``; on marked words this exchanges 0 and n+1."""
    n = len(word)
    return tuple(n + 1 - v for v in reversed(word))


def reverse_complement(p: Permutation) -> Permutation:
    return Permutation(reverse_complement_word(p.word))


def _subset_of(I, n: Optional[int]) -> DescentSet:
    if isinstance(I, DescentSet):
        if n is not None and n != I.n:
            return DescentSet(I.elements, n)
        return I
    if n is None:
        raise InvalidSubsetError("n is required when the subset is not a DescentSet")
    return DescentSet(frozenset(I), n)


def composition_of(I, n: Optional[int] = None) -> Composition:
    """(i_1, i_2 - i_1, ..., n - i_k) for I = {i_1 < ... < i_k}."""
    subset = _subset_of(I, n)
    cuts = [0] + sorted(subset.elements) + [subset.n]
    return Composition(tuple(b - a for a, b in zip(cuts, cuts[1:])))


def associated_partition(I, n: Optional[int] = None) -> Partition:
    return Partition(tuple(sorted(composition_of(I, n).parts, reverse=True)))


def subset_from_composition(parts) -> DescentSet:
    parts = tuple(getattr(parts, 'parts', parts))
    composition = Composition(parts)
    return DescentSet(frozenset(list(accumulate(composition.parts))[:-1]), composition.n)


def all_subsets(n: int) -> Iterator[DescentSet]:
    """Every subset of [n-1], ordered by size and then lexicographically."""
    for k in range(n):
        for combo in combinations(range(1, n), k):
            yield DescentSet(frozenset(combo), n)


def cycle_type(p: Permutation) -> Partition:
    return Partition(tuple(sorted((len(c) for c in to_cycles(p).cycles), reverse=True)))


def is_derangement(p: Permutation) -> bool:
    return not p.fixed_points()
