"""Necklaces, necklace multisets and the cycle-type preserving transfer.

A permutation whose descents lie in I is read as a multiset of necklaces, one
per cycle, by lettering each value with the block of I it falls in. Relabelling
the blocks (``alpha``) and reading the beads back in periodic lexicographic
order gives a permutation with descents in J and the same cycle type.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cmp_to_key, lru_cache
from typing import Iterator, Sequence

from app.exceptions import InvalidNecklaceError, InvalidSubsetError
from app.descents.perm_core import (
    DescentSet,
    Partition,
    Permutation,
    associated_partition,
    composition_of,
    descent_set,
    to_cycles,
)

logger = logging.getLogger(__name__)


def _min_rotation(word: tuple[int, ...]) -> tuple[int, ...]:
    return min(word[k:] + word[:k] for k in range(len(word)))


@dataclass(frozen=True)
class Necklace:
    """Rotation class of a word over the letters 1, 2, ...; stored as its minimal rotation."""
    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(v) for v in self.word)
        if not word:
            raise InvalidNecklaceError("A necklace needs at least one letter")
        if min(word) < 1:
            raise InvalidNecklaceError(f"Letters must be positive: {word}")
        object.__setattr__(self, 'word', _min_rotation(word))

    def __len__(self) -> int:
        return len(self.word)

    def __lt__(self, other: 'Necklace') -> bool:
        return self.word < other.word

    @property
    def period(self) -> int:
        length = len(self.word)
        return next(d for d in range(1, length + 1)
                    if length % d == 0 and self.word[d:] + self.word[:d] == self.word)

    @property
    def is_primitive(self) -> bool:
        return self.period == len(self.word)

    def content(self, size: int) -> tuple[int, ...]:
        counts = [0] * size
        for letter in self.word:
            counts[letter - 1] += 1
        return tuple(counts)

    def letter(self, offset: int) -> int:
        return self.word[offset % len(self.word)]

    def __str__(self) -> str:
        return '(' + ','.join(str(v) for v in self.word) + ')'


def canonical_necklace(word: Sequence[int]) -> Necklace:
    return Necklace(tuple(word))


def periodic_compare(n1: Necklace, off1: int, n2: Necklace, off2: int) -> int:
    """Compare the infinite periodic readings starting at the given offsets.

    The first len(n1) + len(n2) letters decide; returns -1, 0 or 1.
    """
    for k in range(len(n1) + len(n2)):
        a, b = n1.letter(off1 + k), n2.letter(off2 + k)
        if a != b:
            return -1 if a < b else 1
    return 0


@dataclass(frozen=True)
class NecklaceMultiset:
    """Sorted necklaces (repetitions kept) over an alphabet of ``alphabet_size`` letters."""
    necklaces: tuple[Necklace, ...]
    alphabet_size: int

    def __post_init__(self):
        object.__setattr__(self, 'necklaces', tuple(sorted(self.necklaces, key=lambda nk: nk.word)))
        if any(max(nk.word) > self.alphabet_size for nk in self.necklaces):
            raise InvalidNecklaceError(f"Letters exceed the alphabet size {self.alphabet_size}")

    @property
    def evaluation(self) -> tuple[int, ...]:
        counts = [0] * self.alphabet_size
        for nk in self.necklaces:
            for letter in nk.word:
                counts[letter - 1] += 1
        return tuple(counts)

    @property
    def cycle_structure(self) -> Partition:
        return Partition(tuple(sorted((len(nk) for nk in self.necklaces), reverse=True)))

    @property
    def size(self) -> int:
        return sum(len(nk) for nk in self.necklaces)

    def format(self) -> str:
        return ''.join(str(nk) for nk in self.necklaces)

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class TransferPlan:
    """Block relabelling between two subsets with the same associated partition.

    Block j of I (size r_j) is lettered alpha[j-1], the block of J with the same size.
    """
    source: DescentSet
    target: DescentSet
    alpha: tuple[int, ...]

    def inverse(self) -> 'TransferPlan':
        inv = [0] * len(self.alpha)
        for j, k in enumerate(self.alpha, start=1):
            inv[k - 1] = j
        return TransferPlan(self.target, self.source, tuple(inv))


def plan_transfer(I: DescentSet, J: DescentSet) -> TransferPlan:
    """Match blocks of equal size in order of appearance."""
    if I.n != J.n:
        raise InvalidSubsetError(f"Subsets live in different ranges: n={I.n} and n={J.n}")
    if associated_partition(I) != associated_partition(J):
        raise InvalidSubsetError(
            f"{I} and {J} have different associated partitions "
            f"{associated_partition(I)} and {associated_partition(J)}"
        )
    r, s = composition_of(I).parts, composition_of(J).parts
    used = [False] * len(s)
    alpha = []
    for size in r:
        k = next(k for k in range(len(s)) if not used[k] and s[k] == size)
        used[k] = True
        alpha.append(k + 1)
    return TransferPlan(I, J, tuple(alpha))


def _block_letters(I: DescentSet, alpha: Sequence[int]) -> list[int]:
    letters = [0]
    for j, size in enumerate(composition_of(I).parts):
        letters.extend([alpha[j]] * size)
    return letters


def permutation_to_necklaces(pi: Permutation, I: DescentSet, alpha: Sequence[int]) -> NecklaceMultiset:
    """Letter every value by its block of I (renamed through alpha), one necklace per cycle."""
    if not descent_set(pi).issubset(I):
        raise InvalidSubsetError(f"D({pi}) = {descent_set(pi)} is not contained in {I}")
    if len(alpha) != len(I) + 1:
        raise InvalidSubsetError(f"alpha needs {len(I) + 1} entries, got {len(alpha)}")
    letters = _block_letters(I, alpha)
    necklaces = [Necklace(tuple(letters[v] for v in cycle)) for cycle in to_cycles(pi).cycles]
    return NecklaceMultiset(tuple(necklaces), len(alpha))


def necklaces_to_permutation(multiset: NecklaceMultiset, J: DescentSet) -> Permutation:
    """Rank all beads by their periodic reading and follow each necklace.

    Equal readings are ordered by necklace instance and then by offset, so the
    result is deterministic.
    """
    evaluation = multiset.evaluation
    if tuple(composition_of(J).parts) != evaluation:
        raise InvalidSubsetError(
            f"Evaluation {evaluation} does not match the composition of {J}"
        )
    necklaces = multiset.necklaces
    beads = [(idx, off) for idx, nk in enumerate(necklaces) for off in range(len(nk))]

    def compare(b1, b2):
        result = periodic_compare(necklaces[b1[0]], b1[1], necklaces[b2[0]], b2[1])
        if result:
            return result
        return (b1 > b2) - (b1 < b2)

    beads.sort(key=cmp_to_key(compare))
    label = {bead: rank for rank, bead in enumerate(beads, start=1)}
    word = [0] * len(beads)
    for (idx, off), lab in label.items():
        nxt = (idx, (off + 1) % len(necklaces[idx]))
        word[lab - 1] = label[nxt]
    return Permutation(tuple(word))


def gr_transfer(pi: Permutation, I: DescentSet, J: DescentSet) -> Permutation:
    """Move pi with D(pi) in I to sigma with D(sigma) in J and the same cycle type."""
    plan = plan_transfer(I, J)
    multiset = permutation_to_necklaces(pi, I, plan.alpha)
    sigma = necklaces_to_permutation(multiset, J)
    logger.debug(f"transfer {pi} {I}->{J} via {multiset.format()} gives {sigma}")
    return sigma


def multiset_permutations(content: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Distinct words with ``content[i]`` copies of letter i+1, in lexicographic order."""
    counts = list(content)
    total = sum(counts)
    word: list[int] = []

    def extend():
        if len(word) == total:
            yield tuple(word)
            return
        for letter, left in enumerate(counts, start=1):
            if left:
                counts[letter - 1] -= 1
                word.append(letter)
                yield from extend()
                word.pop()
                counts[letter - 1] += 1

    yield from extend()


@lru_cache(maxsize=None)
def necklaces_with_content(content: tuple[int, ...], primitive: bool = True) -> tuple[Necklace, ...]:
    """Necklaces with the given letter content; Lyndon words when ``primitive``."""
    found = []
    for word in multiset_permutations(content):
        rotations = [word[k:] + word[:k] for k in range(1, len(word))]
        if primitive:
            if all(word < rot for rot in rotations):
                found.append(Necklace(word))
        elif all(word <= rot for rot in rotations):
            found.append(Necklace(word))
    return tuple(found)


def _bounded_contents(length: int, remaining: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    if not remaining:
        if length == 0:
            yield ()
        return
    for take in range(min(length, remaining[0]) + 1):
        for rest in _bounded_contents(length - take, remaining[1:]):
            yield (take,) + rest


def iter_necklace_multisets(evaluation: Sequence[int], shape: Partition,
                            primitive: bool = True) -> Iterator[NecklaceMultiset]:
    """Every multiset of necklaces with the given evaluation and cycle structure.

    Raises:
        InvalidSubsetError: The evaluation and the shape have different totals.
    """
    evaluation = tuple(evaluation)
    parts = tuple(sorted(shape.parts, reverse=True))
    if sum(evaluation) != sum(parts):
        raise InvalidSubsetError(
            f"Evaluation {evaluation} has {sum(evaluation)} letters but {shape} needs {sum(parts)}"
        )
    return _multisets(evaluation, parts, primitive)


def _multisets(evaluation: tuple[int, ...], parts: tuple[int, ...], primitive: bool) -> Iterator[NecklaceMultiset]:
    def words_of(length, remaining):
        words = []
        for content in _bounded_contents(length, remaining):
            if sum(content) == length:
                words.extend(necklaces_with_content(content, primitive))
        return sorted(words)

    def choose(idx, remaining, chosen):
        if idx == len(parts):
            if not any(remaining):
                yield NecklaceMultiset(tuple(chosen), len(evaluation))
            return
        length = parts[idx]
        floor = chosen[-1] if idx and parts[idx - 1] == length else None
        for nk in words_of(length, remaining):
            if floor is not None and nk < floor:
                continue
            content = nk.content(len(evaluation))
            left = tuple(a - b for a, b in zip(remaining, content))
            chosen.append(nk)
            yield from choose(idx + 1, left, chosen)
            chosen.pop()

    yield from choose(0, evaluation, [])


def count_necklace_multisets(evaluation: Sequence[int], shape: Partition, primitive: bool = True) -> int:
    """Number of necklace multisets with the given evaluation and cycle structure.

    Only primitive necklaces are counted unless ``primitive`` is False; that is
    the set in bijection with permutations of the given cycle type.
    """
    return sum(1 for _ in iter_necklace_multisets(evaluation, shape, primitive))
