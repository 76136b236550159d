"""Switch algorithms between (n+1)-cycles and permutations of [n].

``phi`` cuts an (n+1)-cycle at its left-to-right maxima and repairs the
resulting cycles one at a time by switching consecutive values; ``psi`` runs the
mirror procedure on the concatenated canonical cycle form of a permutation.
Both can record every switch in a :class:`SwitchTrace`.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Optional

from app.exceptions import InvalidPermutationError, SwitchContractError
from app.descents.perm_core import (
    Permutation,
    canonical_cycle_form,
    cycle_ending_with,
    format_cycles,
    from_cycles,
)

logger = logging.getLogger(__name__)

Position = tuple[int, int]
Snapshot = tuple[tuple[int, ...], ...]


class _WorkingForm:
    """Mutable list of groups with a value -> (group, offset) index."""

    def __init__(self, groups):
        self.groups = [list(g) for g in groups]
        self.pos_index: dict[int, Position] = {}
        for gi, group in enumerate(self.groups):
            for off, v in enumerate(group):
                self.pos_index[v] = (gi, off)

    def value_at(self, pos: Position) -> int:
        return self.groups[pos[0]][pos[1]]

    def switch(self, x: int, y: int) -> None:
        px, py = self.pos_index[x], self.pos_index[y]
        self.groups[px[0]][px[1]] = y
        self.groups[py[0]][py[1]] = x
        self.pos_index[x], self.pos_index[y] = py, px

    def snapshot(self) -> Snapshot:
        return tuple(tuple(g) for g in self.groups)


class WorkingCycles(_WorkingForm):
    """The evolving cycle form of the permutation being built by ``phi``."""

    def __init__(self, cycles):
        super().__init__(cycles)
        self.n = len(self.pos_index)

    @property
    def cycles(self):
        return self.groups

    def succ(self, x: int) -> int:
        ci, off = self.pos_index[x]
        cycle = self.groups[ci]
        return cycle[(off + 1) % len(cycle)]


class WorkingBlocks(_WorkingForm):
    """The evolving (n+1)-cycle of ``psi``, kept as blocks of one long cycle.

    The last block is always ``(n+1,)``. Block boundaries never move.
    """

    def __init__(self, blocks):
        super().__init__(blocks)
        self.n = len(self.pos_index) - 1

    @property
    def blocks(self):
        return self.groups

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(v for block in self.groups for v in block)

    @property
    def boundaries(self) -> tuple[int, ...]:
        starts, offset = [], 0
        for block in self.groups:
            starts.append(offset)
            offset += len(block)
        return tuple(starts)

    def succ(self, x: int) -> int:
        bi, off = self.pos_index[x]
        block = self.groups[bi]
        if off + 1 < len(block):
            return block[off + 1]
        return self.groups[(bi + 1) % len(self.groups)][0]


@dataclass(frozen=True)
class SwitchEvent:
    iteration: int
    step: str
    values: tuple[int, int]
    positions: tuple[Position, Position]
    state: Snapshot


@dataclass
class SwitchTrace:
    """Ordered record of every switch made by one run of ``phi`` or ``psi``.

    ``values`` of an event lists the entry on the side of the cycle (or block)
    being repaired first.
    """
    kind: str
    initial: Snapshot
    events: list[SwitchEvent] = field(default_factory=list)

    def swaps(self) -> list[tuple[int, int]]:
        return [event.values for event in self.events]

    def iteration_events(self, i: int) -> list[SwitchEvent]:
        return [event for event in self.events if event.iteration == i]

    def states(self) -> list[Snapshot]:
        return [self.initial] + [event.state for event in self.events]

    def format_state(self, state: Snapshot) -> str:
        if self.kind == 'psi':
            return '(' + ';'.join(','.join(str(v) for v in block) for block in state) + ')'
        return format_cycles(state)

    def to_lines(self) -> list[str]:
        return [
            f"iter={e.iteration} step={e.step} swap=({e.values[0]},{e.values[1]})"
            for e in self.events
        ]

    def narrate(self) -> list[str]:
        """Readable log: one line per switch, cascaded switches indented under their trigger."""
        lines = [f"start {self.format_state(self.initial)}"]
        for e in self.events:
            lead = "  then " if e.step.startswith('II') else ""
            lines.append(f"{lead}switch {e.values[0]} and {e.values[1]} -> {self.format_state(e.state)}")
        return lines


def _record(state, trace, i, step, x, y):
    positions = (state.pos_index[x], state.pos_index[y])
    if positions[0][0] == positions[1][0]:
        raise SwitchContractError(
            f"Iteration {i}: switching {x} and {y} inside the same cycle {state.groups[positions[0][0]]}"
        )
    state.switch(x, y)
    if trace is not None:
        trace.events.append(SwitchEvent(i, step, (x, y), positions, state.snapshot()))


def _repair(i: int, state: _WorkingForm, holds: Callable[[int, int], bool],
            pick: Callable[[list[int]], int], trace: Optional[SwitchTrace], steps: tuple[str, str]):
    """Shared main-loop iteration: steps I, II and III on group ``i`` (1-based)."""
    gi = i - 1
    z = state.groups[gi][-1]
    candidates = [eps for eps in (1, -1) if holds(z, z + eps)]
    if not candidates:
        return
    eps = pick([z + eps for eps in candidates]) - z
    logger.debug(f"{steps[0]} iteration {i}: z={z}, eps={eps:+d}")

    while holds(z, z + eps):
        _record(state, trace, i, steps[0], z, z + eps)
        p1 = state.pos_index[z + eps]
        p2 = state.pos_index[z]
        # Walk left while the predecessors are consecutive values
        while p1[1] != 0:
            if p2[1] == 0:
                raise SwitchContractError(
                    f"Iteration {i}: cascade reached the leading entry of group {p2[0] + 1}"
                )
            q1, q2 = (p1[0], p1[1] - 1), (p2[0], p2[1] - 1)
            x, y = state.value_at(q1), state.value_at(q2)
            if abs(x - y) != 1:
                break
            _record(state, trace, i, steps[1], x, y)
            p1, p2 = q1, q2
        z += eps


def split_at_ltr_maxima(pi: Permutation) -> list[tuple[int, ...]]:
    """Cut the cycle, written ending with n+1, before each left-to-right maximum.

    Example:
        (1,2,...,n+1) -> (1)(2)...(n)
    """
    if pi.n < 2:
        raise InvalidPermutationError("phi needs an (n+1)-cycle with n >= 1")
    seq = cycle_ending_with(pi, pi.n)[:-1]
    blocks, current, best = [], [], 0
    for v in seq:
        if v > best and current:
            blocks.append(tuple(current))
            current = []
        best = max(best, v)
        current.append(v)
    blocks.append(tuple(current))
    return blocks


def condition_P(pi: Permutation, state: WorkingCycles, x: int, y: int) -> bool:
    n = state.n
    if not (1 <= x <= n and 1 <= y <= n):
        return False
    return pi(x) > pi(y) and state.succ(x) < state.succ(y)


def fix_cycle(i: int, pi: Permutation, state: WorkingCycles, trace: Optional[SwitchTrace] = None) -> None:
    """Repair cycle ``i`` (1-based) of ``state`` in place."""
    _repair(
        i, state,
        holds=lambda x, y: condition_P(pi, state, x, y),
        pick=lambda ys: max(ys, key=state.succ),
        trace=trace,
        steps=('I', 'II'),
    )


def _phi(pi: Permutation, trace: bool):
    if not isinstance(pi, Permutation):
        pi = Permutation(tuple(pi))
    blocks = split_at_ltr_maxima(pi)
    state = WorkingCycles(blocks)
    record = SwitchTrace('phi', state.snapshot()) if trace else None
    for i in range(1, len(blocks)):
        fix_cycle(i, pi, state, record)
    sigma = from_cycles(state.cycles, state.n)
    return sigma, record


def phi(pi: Permutation) -> Permutation:
    """Map an (n+1)-cycle to a permutation of [n] with the same descents in [n-1].

    Args:
        pi: A single cycle of length n+1.

    Returns:
        sigma with D(sigma) = D(pi) & [n-1] and sigma^-1(n) = pi^-1(n+1).
    """
    return _phi(pi, trace=False)[0]


def phi_traced(pi: Permutation) -> tuple[Permutation, SwitchTrace]:
    return _phi(pi, trace=True)


def merge_blocks(sigma: Permutation) -> WorkingBlocks:
    """Canonical cycle form as consecutive blocks, followed by the block (n+1)."""
    cycles = canonical_cycle_form(sigma).cycles
    return WorkingBlocks(list(cycles) + [(sigma.n + 1,)])


def condition_Q(sigma: Permutation, state: WorkingBlocks, x: int, y: int) -> bool:
    n = state.n
    if not (1 <= x <= n and 1 <= y <= n):
        return False
    return state.succ(x) > state.succ(y) and sigma(x) < sigma(y)


def unfix_block(i: int, sigma: Permutation, state: WorkingBlocks, trace: Optional[SwitchTrace] = None) -> None:
    """Undo the repair of block ``i`` (1-based) of ``state`` in place."""
    _repair(
        i, state,
        holds=lambda x, y: condition_Q(sigma, state, x, y),
        pick=lambda ys: min(ys, key=state.succ),
        trace=trace,
        steps=("I'", "II'"),
    )


def _psi(sigma: Permutation, trace: bool):
    if not isinstance(sigma, Permutation):
        sigma = Permutation(tuple(sigma))
    state = merge_blocks(sigma)
    record = SwitchTrace('psi', state.snapshot()) if trace else None
    r = len(state.blocks) - 1
    for i in range(r - 1, 0, -1):
        unfix_block(i, sigma, state, record)
    pi = from_cycles([state.entries], sigma.n + 1)
    return pi, record


def psi(sigma: Permutation) -> Permutation:
    """Inverse of :func:`phi`: a permutation of [n] to an (n+1)-cycle."""
    return _psi(sigma, trace=False)[0]


def psi_traced(sigma: Permutation) -> tuple[Permutation, SwitchTrace]:
    return _psi(sigma, trace=True)


def _pattern(values) -> tuple[int, ...]:
    order = sorted(values)
    return tuple(order.index(v) for v in values)


def check_trace_lemmas(pi: Permutation, trace: SwitchTrace) -> list[str]:
    """Check a ``phi`` trace against the structural invariants of the switch process.

    Returns:
        Human-readable violations; empty when the run behaved.
    """
    if trace.kind != 'phi':
        raise SwitchContractError("Invariant checks apply to phi traces only")
    violations = []
    initial = trace.initial
    firsts = [cycle[0] for cycle in initial]
    lasts = [cycle[-1] for cycle in initial]
    patterns = [_pattern(cycle) for cycle in initial]

    def check_state(state, where):
        for ci, cycle in enumerate(state):
            if cycle[0] != max(cycle):
                violations.append(f"{where}: cycle {ci + 1} {cycle} does not start with its maximum")
            if _pattern(cycle) != patterns[ci]:
                violations.append(f"{where}: cycle {ci + 1} changed its relative order")

    check_state(initial, "initial state")
    current = WorkingCycles(initial)
    for i in range(1, len(initial)):
        events = trace.iteration_events(i)
        a_next = firsts[i]
        frozen = set(firsts[i:]) | set(lasts[i:])
        last_values = [current.groups[i - 1][-1]]

        for event in events:
            u, v = event.values
            where = f"iteration {i} switch ({u},{v})"
            if abs(u - v) != 1:
                violations.append(f"{where}: values differ by more than 1")
            (cu, _), (cv, _) = event.positions
            if cu == cv:
                violations.append(f"{where}: both entries lie in cycle {cu + 1}")
            if min(cu, cv) < i - 1:
                violations.append(f"{where}: moves an entry of an already repaired cycle")
            for w in (u, v):
                if w >= a_next:
                    violations.append(f"{where}: moves {w} >= {a_next}")
                if w in frozen:
                    violations.append(f"{where}: moves the first or last entry {w} of a later cycle")
                if current.succ(w) >= a_next:
                    violations.append(f"{where}: moves {w}, which precedes {current.succ(w)} >= {a_next}")
            if event.step == 'I':
                last_values.append(v)
            current.switch(u, v)
            if current.snapshot() != event.state:
                violations.append(f"{where}: recorded state does not match the replayed state")
                current = WorkingCycles(event.state)
            check_state(event.state, where)

        steps = {b - a for a, b in zip(last_values, last_values[1:])}
        if len(steps) > 1 or (steps and steps.pop() not in (1, -1)):
            violations.append(f"iteration {i}: last entries {last_values} do not move in one direction")
        pi_values = [pi(z) for z in last_values]
        if any(a <= b for a, b in zip(pi_values, pi_values[1:])):
            violations.append(f"iteration {i}: pi over the last entries {last_values} is not decreasing")

    if violations:
        logger.warning(f"{len(violations)} invariant violations for {pi}")
    return violations
