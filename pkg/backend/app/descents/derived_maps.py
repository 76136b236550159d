"""Bijections derived from phi on marked cycle words.

U_n collects the one-line words of n-cycles with one entry replaced by n+1,
T0_n those with one entry replaced by 0. ``phi_U`` and ``phi_T0`` send them to
permutations of [n] with the same descent set, and ``cyclesu_map`` uses
``phi_T0`` to reach the permutations that send a chosen position to 1.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

from app.exceptions import InvalidMarkedWordError, InvalidPermutationError
from app.descents.perm_core import (
    DescentSet,
    Permutation,
    cycle_ending_with,
    descent_set,
    format_one_line,
    from_cycles,
    is_cyclic,
    reverse_complement_word,
)
from app.descents.phi_engine import phi, psi
from app.descents.utils import parse_word

logger = logging.getLogger(__name__)


class MarkKind(str, Enum):
    ZERO = 'zero'   # T0_n
    TOP = 'top'     # U_n


@dataclass(frozen=True)
class MarkedWord:
    """An n-cycle's one-line word with the entry at ``marked_pos`` replaced by a marker."""
    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(v) for v in self.word)
        object.__setattr__(self, 'word', word)
        n = len(word)
        if n == 0:
            raise InvalidMarkedWordError("Empty marked word")
        markers = [v for v in word if v in (0, n + 1)]
        if len(markers) != 1:
            raise InvalidMarkedWordError(
                f"{format_one_line(word)} must contain exactly one of 0 or {n + 1}"
            )
        rest = sorted(v for v in word if v not in (0, n + 1))
        if len(set(rest)) != n - 1 or any(not 1 <= v <= n for v in rest):
            raise InvalidMarkedWordError(f"{format_one_line(word)} has repeated or out-of-range entries")
        if not is_cyclic(self.restore()):
            raise InvalidMarkedWordError(
                f"Restoring {self.missing_value} in {format_one_line(word)} does not give an {n}-cycle"
            )

    @classmethod
    def parse(cls, text: str) -> 'MarkedWord':
        return cls(parse_word(text))

    @property
    def n(self) -> int:
        return len(self.word)

    @property
    def kind(self) -> MarkKind:
        return MarkKind.ZERO if 0 in self.word else MarkKind.TOP

    @property
    def marked_pos(self) -> int:
        marker = 0 if self.kind is MarkKind.ZERO else self.n + 1
        return self.word.index(marker) + 1

    @property
    def missing_value(self) -> int:
        present = set(self.word)
        return next(v for v in range(1, self.n + 1) if v not in present)

    def restore(self) -> Permutation:
        """The underlying n-cycle."""
        word = list(self.word)
        word[self.marked_pos - 1] = self.missing_value
        return Permutation(tuple(word))

    def reverse_complement(self) -> 'MarkedWord':
        return MarkedWord(reverse_complement_word(self.word))

    def __str__(self) -> str:
        return format_one_line(self.word)


def _check_position(pi: Permutation, k: int) -> None:
    if not 1 <= k <= pi.n:
        raise InvalidPermutationError(f"Position {k} is outside 1..{pi.n}")


def mark_top(pi: Permutation, k: int) -> MarkedWord:
    """Replace pi(k) by n+1."""
    _check_position(pi, k)
    word = list(pi.word)
    word[k - 1] = pi.n + 1
    return MarkedWord(tuple(word))


def mark_zero(pi: Permutation, k: int) -> MarkedWord:
    """Replace pi(k) by 0."""
    _check_position(pi, k)
    word = list(pi.word)
    word[k - 1] = 0
    return MarkedWord(tuple(word))


def _require(tau: MarkedWord, kind: MarkKind) -> MarkedWord:
    if not isinstance(tau, MarkedWord):
        tau = MarkedWord(tuple(tau))
    if tau.kind is not kind:
        expected = 'n+1' if kind is MarkKind.TOP else '0'
        raise InvalidMarkedWordError(f"{tau} is not marked with {expected}")
    return tau


def u_to_cycle(tau: MarkedWord) -> Permutation:
    """Element of U_n to the (n+1)-cycle (t_1, ..., t_{n-1}, k, n+1).

    The t's list the restored n-cycle written so that it ends with the marked
    position k; the result has the same descents as tau in [n-1].
    """
    tau = _require(tau, MarkKind.TOP)
    n, k = tau.n, tau.marked_pos
    seq = cycle_ending_with(tau.restore(), k)
    return from_cycles([seq + (n + 1,)], n + 1)


def cycle_to_u(pi: Permutation) -> MarkedWord:
    """Inverse of :func:`u_to_cycle`: drop the last entry of the one-line word."""
    if not is_cyclic(pi):
        raise InvalidPermutationError(f"{pi} is not a single cycle")
    return MarkedWord(pi.word[:-1])


def phi_U(tau: MarkedWord) -> Permutation:
    return phi(u_to_cycle(tau))


def phi_U_inverse(sigma: Permutation) -> MarkedWord:
    return cycle_to_u(psi(sigma))


def phi_T0(tau: MarkedWord) -> Permutation:
    """T0_n to S_n: descent set kept, and sigma(k) = 1 for the zero position k."""
    tau = _require(tau, MarkKind.ZERO)
    sigma_rc = phi_U(tau.reverse_complement())
    return Permutation(reverse_complement_word(sigma_rc.word))


def phi_T0_inverse(sigma: Permutation) -> MarkedWord:
    rc_sigma = Permutation(reverse_complement_word(sigma.word))
    return phi_U_inverse(rc_sigma).reverse_complement()


def fixed_one_window(n: int, m: int) -> frozenset[int]:
    """J = [n-1] minus {m-1, m}: the positions where the fixed-one map keeps descents."""
    return frozenset(range(1, n)) - {m - 1, m}


def cyclesu_map(pi: Permutation, m: int) -> Permutation:
    """Send an n-cycle and a position m to sigma with sigma(m) = 1.

    Descents are kept at every position outside {m-1, m}.
    """
    if not is_cyclic(pi):
        raise InvalidPermutationError(f"{pi} is not a single {pi.n}-cycle")
    return phi_T0(mark_zero(pi, m))


def cyclesu_inverse(sigma: Permutation) -> tuple[Permutation, int]:
    m = sigma.word.index(1) + 1
    return phi_T0_inverse(sigma).restore(), m


def zero_mark_descents_ok(tau: MarkedWord) -> bool:
    """A zero at position i forces a descent at i-1 (when i > 1) and none at i."""
    d: DescentSet = descent_set(tau)
    i = tau.marked_pos
    return (i == 1 or (i - 1) in d) and i not in d
