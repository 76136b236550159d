"""Verification suites.

Each suite splits its enumeration space into independent chunks. A chunk worker
returns a :class:`SuiteTally`; tallies merge associatively and an optional
``finalize`` step compares the merged counts against closed forms.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial
from typing import Callable, Optional

from app.models import Failure
from app.descents.counting import (
    Family,
    alpha,
    alpha_fixed_one,
    beta,
    beta_fixed_one,
    exact_classes,
    family_size,
    fixed_one_evaluation,
    iter_family,
    iter_with_descents_in,
)
from app.descents.derived_maps import (
    cyclesu_inverse,
    cyclesu_map,
    fixed_one_window,
    mark_top,
    mark_zero,
    phi_T0,
    phi_T0_inverse,
    phi_U,
    phi_U_inverse,
    zero_mark_descents_ok,
)
from app.descents.necklaces import count_necklace_multisets, gr_transfer, permutation_to_necklaces, plan_transfer
from app.descents.perm_core import (
    DescentSet,
    Partition,
    Permutation,
    all_subsets,
    canonical_cycle_form,
    composition_of,
    cycle_ending_with,
    cycle_type,
    descent_set,
    from_cycles,
    is_cyclic,
    is_derangement,
)
from app.descents.phi_engine import check_trace_lemmas, phi, phi_traced, psi, psi_traced, split_at_ltr_maxima
from app.descents.worked_examples import (
    C5_TABLE,
    EXACT_CLASS_MISMATCH,
    SWITCH_EXAMPLES,
    TRANSFER_EXAMPLES,
    TRANSFER_NECKLACES,
)
from app.descents.utils import parse_permutation

logger = logging.getLogger(__name__)

# necklace counts for lambda = (n+1) get expensive quickly
NECKLACE_CROSSCHECK_N = 6


@dataclass
class SuiteTally:
    checked: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)
    counts: Counter = field(default_factory=Counter)
    limit: int = 50

    def fail(self, label, expected, actual) -> None:
        self.failed += 1
        logger.warning(f"counterexample {label}: expected {expected}, got {actual}")
        if len(self.failures) < self.limit:
            self.failures.append(Failure(input=str(label), expected=str(expected), actual=str(actual)))

    def expect(self, label, expected, actual) -> bool:
        if expected != actual:
            self.fail(label, expected, actual)
            return False
        return True

    def merge(self, other: 'SuiteTally') -> 'SuiteTally':
        return SuiteTally(
            checked=self.checked + other.checked,
            failed=self.failed + other.failed,
            failures=(self.failures + other.failures)[:self.limit],
            counts=self.counts + other.counts,
            limit=self.limit,
        )


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    chunks: Callable[[int], list]
    run_chunk: Callable[[int, object, SuiteTally], None]
    bound: str = 'exhaustive'           # exhaustive | necklace | closed | fixed
    default_n: int = 6
    finalize: Optional[Callable[[int, SuiteTally], None]] = None
    fixed_n: Optional[int] = None


def _cycles_with_second(size: int, t: int):
    """size-cycles sending 1 to t."""
    others = [v for v in range(2, size + 1) if v != t]
    for rest in permutations(others):
        yield from_cycles([(1, t) + rest], size)


def _perms_starting(n: int, v: int):
    others = [u for u in range(1, n + 1) if u != v]
    for rest in permutations(others):
        yield Permutation((v,) + rest)


def _cycle_chunks(size: int) -> list:
    return list(range(2, size + 1))


def _subsets_of(elements) -> list[frozenset]:
    elements = sorted(elements)
    return [frozenset(c) for k in range(len(elements) + 1) for c in combinations(elements, k)]


# -- phi / psi -------------------------------------------------------------

def _bij_chunks(n):
    return [('C', t) for t in _cycle_chunks(n + 1)] + [('S', v) for v in range(1, n + 1)]


def _bij_run(n, key, tally):
    # checked counts elements of C_{n+1}; the S_n side only re-confirms them
    family, first = key
    if family == 'C':
        for pi in _cycles_with_second(n + 1, first):
            tally.checked += 1
            tally.expect(f"psi(phi({pi}))", pi, psi(phi(pi)))
    else:
        for sigma in _perms_starting(n, first):
            tally.expect(f"phi(psi({sigma}))", sigma, phi(psi(sigma)))


def _descents_run(n, t, tally):
    for pi in _cycles_with_second(n + 1, t):
        sigma = phi(pi)
        tally.checked += 1
        tally.expect(f"D(phi({pi}))", descent_set(pi).restrict(n), descent_set(sigma))
        tally.expect(f"position of n in phi({pi})", pi.word.index(n + 1), sigma.word.index(n))


def _table_run(n, key, tally):
    seen = set()
    for cycle, one_line, image, descents in C5_TABLE:
        pi = from_cycles([cycle], 5)
        sigma = phi(pi)
        seen.add(pi)
        tally.checked += 1
        tally.expect(f"one-line of {cycle}", one_line, str(pi))
        tally.expect(f"phi{cycle}", image, str(sigma))
        tally.expect(f"D(phi{cycle})", DescentSet(frozenset(descents), 4), descent_set(sigma))
        tally.expect(f"D{cycle} in [3]", DescentSet(frozenset(descents), 4), descent_set(pi).restrict(4))
    tally.expect("table covers C_5", 24, len(seen))


def _examples_run(n, key, tally):
    for example in SWITCH_EXAMPLES:
        tally.checked += 1
        if example.kind == 'phi':
            pi = from_cycles([example.source])
            sigma, trace = phi_traced(pi)
            tally.expect(f"{example.name} split", example.split, tuple(split_at_ltr_maxima(pi)))
            tally.expect(f"{example.name} image", example.target, canonical_cycle_form(sigma).cycles)
            tally.expect(f"{example.name} one-line", example.target_one_line, str(sigma))
            tally.expect(f"{example.name} descents", descent_set(pi).restrict(sigma.n), descent_set(sigma))
        else:
            sigma = from_cycles(example.source)
            pi, trace = psi_traced(sigma)
            tally.expect(f"{example.name} image", example.target, cycle_ending_with(pi, pi.n))
        tally.expect(f"{example.name} switches", example.swaps, tuple(trace.swaps()))

    for example in TRANSFER_EXAMPLES:
        tally.checked += 1
        pi = parse_permutation(example.permutation)
        I = DescentSet(frozenset(example.source), pi.n)
        J = DescentSet(frozenset(example.target), pi.n)
        sigma = gr_transfer(pi, I, J)
        tally.expect(f"transfer {I}->{J}", example.image, str(sigma))
        tally.expect(f"transfer {I}->{J} cycles", from_cycles(example.image_cycles), sigma)
    pi = parse_permutation(TRANSFER_EXAMPLES[0].permutation)
    I = DescentSet(frozenset(TRANSFER_EXAMPLES[0].source), pi.n)
    J = DescentSet(frozenset(TRANSFER_EXAMPLES[0].target), pi.n)
    multiset = permutation_to_necklaces(pi, I, plan_transfer(I, J).alpha)
    tally.expect("necklaces of the transfer example", TRANSFER_NECKLACES,
                 tuple(nk.word for nk in multiset.necklaces))

    by_exact = exact_classes(Family.C, 5)
    shapes = set()
    for elements, expected in EXACT_CLASS_MISMATCH.items():
        subset = DescentSet(frozenset(elements), 5)
        tally.checked += 1
        tally.expect(f"5-cycles with D = {subset}", expected, tuple(sorted(str(pi) for pi in by_exact[subset])))
        shapes.add(subset.partition())
    tally.expect("one partition for the exact classes", 1, len(shapes))


# -- distributions -----------------------------------------------------------

def _cor_cycles_run(n, key, tally):
    family, first = key
    if family == 'C':
        for pi in _cycles_with_second(n + 1, first):
            tally.checked += 1
            tally.counts[('C', descent_set(pi).restrict(n))] += 1
    else:
        for sigma in _perms_starting(n, first):
            tally.checked += 1
            tally.counts[('S', descent_set(sigma))] += 1


def _cor_cycles_finalize(n, tally):
    for subset in all_subsets(n):
        expected = alpha(n, subset)
        tally.expect(f"#C_{n + 1} with D in [{n - 1}] = {subset}", expected, tally.counts[('C', subset)])
        tally.expect(f"#S_{n} with D = {subset}", expected, tally.counts[('S', subset)])
        contained = sum(tally.counts[('C', DescentSet(part, n))] for part in _subsets_of(subset.elements))
        tally.expect(f"#C_{n + 1} with D in [{n - 1}] inside {subset}", beta(n, subset), contained)
        if n <= NECKLACE_CROSSCHECK_N:
            # a cycle with prefix descents in I is one primitive necklace on n+1 letters
            evaluation = composition_of(subset).parts + (1,)
            tally.expect(f"necklaces of length {n + 1} for {subset}", beta(n, subset),
                         count_necklace_multisets(evaluation, Partition((n + 1,))))


def _sn_distribution(n) -> Counter:
    return Counter(descent_set(sigma) for sigma in iter_family(Family.S, n))


def _marked_run(n, k, tally, top):
    images = set()
    for pi in iter_family(Family.C, n):
        tau = mark_top(pi, k) if top else mark_zero(pi, k)
        sigma = phi_U(tau) if top else phi_T0(tau)
        tally.checked += 1
        images.add(sigma)
        tally.expect(f"D of image of {tau}", descent_set(tau), descent_set(sigma))
        tally.expect(f"image of {tau} at position {k}", n if top else 1, sigma(k))
        back = phi_U_inverse(sigma) if top else phi_T0_inverse(sigma)
        tally.expect(f"inverse of image of {tau}", tau, back)
        if not top:
            if not zero_mark_descents_ok(tau):
                tally.fail(f"descents around the zero of {tau}", "i-1 in D and i not in D", descent_set(tau))
            tally.counts[descent_set(tau)] += 1
    tally.expect(f"distinct images for marked position {k}", family_size(Family.C, n), len(images))


def _biju_run(n, k, tally):
    _marked_run(n, k, tally, top=True)


def _elishift_run(n, k, tally):
    _marked_run(n, k, tally, top=False)


def _elishift_finalize(n, tally):
    reference = _sn_distribution(n)
    for subset in all_subsets(n):
        tally.expect(f"#T0_{n} with D = {subset}", reference[subset], tally.counts[subset])


def _cyclesu_run(n, m, tally):
    window = fixed_one_window(n, m)
    images = set()
    by_cycles = Counter()
    for pi in iter_family(Family.C, n):
        sigma = cyclesu_map(pi, m)
        tally.checked += 1
        images.add(sigma)
        tally.expect(f"cyclesu({pi}, {m}) at {m}", 1, sigma(m))
        tally.expect(f"D(cyclesu({pi}, {m})) outside {{{m - 1},{m}}}",
                     descent_set(pi).intersect(window), descent_set(sigma).intersect(window))
        tally.expect(f"inverse of cyclesu({pi}, {m})", (pi, m), cyclesu_inverse(sigma))
        by_cycles[descent_set(pi).intersect(window).elements] += 1
    tally.expect(f"distinct images for m={m}", family_size(Family.C, n), len(images))

    by_perms = Counter(
        descent_set(sigma).intersect(window).elements
        for sigma in iter_family(Family.S, n) if sigma(m) == 1
    )
    for part in _subsets_of(window):
        subset = DescentSet(part, n)
        tally.expect(f"m={m}: #cycles vs #permutations with D outside {{{m - 1},{m}}} = {subset}",
                     by_perms[part], by_cycles[part])
        tally.expect(f"m={m}: closed form for D = {subset}", alpha_fixed_one(n, m, subset), by_cycles[part])
        contained = sum(by_cycles[q] for q in _subsets_of(part))
        tally.expect(f"m={m}: closed form for D inside {subset}", beta_fixed_one(n, m, subset), contained)
        if n <= NECKLACE_CROSSCHECK_N:
            tally.expect(f"m={m}: necklaces of length {n} for D inside {subset}",
                         beta_fixed_one(n, m, subset),
                         count_necklace_multisets(fixed_one_evaluation(n, m, subset), Partition((n,))))


# -- necklaces ---------------------------------------------------------------

def integer_partitions(n: int, largest: Optional[int] = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - part, part):
            yield (part,) + rest


def _gr_chunks(n):
    return list(integer_partitions(n))


def _gr_run(n, shape, tally):
    shape = Partition(tuple(shape))
    descents = [descent_set(sigma) for sigma in iter_family(Family.S, n) if cycle_type(sigma) == shape]
    for subset in all_subsets(n):
        tally.checked += 1
        from_perms = sum(1 for d in descents if d.issubset(subset))
        from_necklaces = count_necklace_multisets(composition_of(subset).parts, shape)
        tally.expect(f"type {shape}, D inside {subset}", from_perms, from_necklaces)


def _subsets_chunks(n):
    return [tuple(sorted(s.elements)) for s in all_subsets(n)]


def _subsets_run(n, key, tally):
    I = DescentSet(frozenset(key), n)
    sources = list(iter_with_descents_in(n, I))
    shape = I.partition()
    for J in all_subsets(n):
        if J.partition() != shape:
            continue
        images = set()
        for pi in sources:
            sigma = gr_transfer(pi, I, J)
            tally.checked += 1
            images.add(sigma)
            if not descent_set(sigma).issubset(J):
                tally.fail(f"transfer {pi} {I}->{J}", f"descents inside {J}", descent_set(sigma))
            tally.expect(f"cycle type of transfer {pi} {I}->{J}", cycle_type(pi), cycle_type(sigma))
            tally.expect(f"transfer back {sigma} {J}->{I}", pi, gr_transfer(sigma, J, I))
        tally.expect(f"image size {I}->{J}", beta(n, J), len(images))
        tally.expect(
            f"derangements {I}->{J}",
            sum(1 for sigma in iter_with_descents_in(n, J) if is_derangement(sigma)),
            sum(1 for sigma in images if is_derangement(sigma)),
        )


# -- traces and probabilities ------------------------------------------------

def _lemmas_run(n, t, tally):
    for pi in _cycles_with_second(n + 1, t):
        sigma, trace = phi_traced(pi)
        tally.checked += 1
        for violation in check_trace_lemmas(pi, trace):
            tally.fail(f"trace of {pi}", "no violation", violation)


def _independence_chunks(n):
    return list(range(1, n + 2))


def _independence_run(n, v, tally):
    for pi in _perms_starting(n + 1, v):
        prefix = descent_set(pi).restrict(n)
        tally.checked += 1
        tally.counts[('all', prefix)] += 1
        if is_cyclic(pi):
            tally.counts[('cyclic', prefix)] += 1


def _independence_finalize(n, tally):
    total = factorial(n + 1)
    p_cyclic = Fraction(1, n + 1)
    for subset in all_subsets(n):
        joint = Fraction(tally.counts[('cyclic', subset)], total)
        marginal = Fraction(tally.counts[('all', subset)], total)
        tally.expect(f"P(cyclic and D in [{n - 1}] = {subset})", p_cyclic * marginal, joint)
        tally.expect(f"P(D = {subset}) over S_{n}", Fraction(alpha(n, subset), factorial(n)),
                     Fraction(tally.counts[('cyclic', subset)], factorial(n)))


def _alpha_beta_run(n, key, tally):
    alphas = {subset: alpha(n, subset) for subset in all_subsets(n)}
    tally.expect(f"sum of alpha({n}, I)", factorial(n), sum(alphas.values()))
    for subset, value in alphas.items():
        tally.checked += 1
        tally.expect(f"alpha({n}, {subset}) under reversal", value, alphas[subset.reversed()])
        below = sum(alphas[DescentSet(part, n)] for part in _subsets_of(subset.elements))
        tally.expect(f"beta({n}, {subset})", beta(n, subset), below)
    if n <= 8:
        reference = _sn_distribution(n)
        for subset, value in alphas.items():
            tally.expect(f"alpha({n}, {subset}) by enumeration", reference[subset], value)


SUITES = {
    suite.name: suite for suite in (
        Suite('bij_roundtrip', 'psi(phi(pi)) = pi on C_{n+1} and phi(psi(sigma)) = sigma on S_n',
              _bij_chunks, _bij_run, default_n=8),
        Suite('descents', 'D(phi(pi)) = D(pi) & [n-1] and the position of n is kept',
              lambda n: _cycle_chunks(n + 1), _descents_run, default_n=8),
        Suite('table1', 'phi on all 5-cycles against the embedded table',
              lambda n: [None], _table_run, bound='fixed', fixed_n=4),
        Suite('examples', 'worked switch runs and the 12-letter transfer',
              lambda n: [None], _examples_run, bound='fixed', fixed_n=20),
        Suite('cor_cycles', 'prefix descent distribution of C_{n+1} equals that of S_n',
              lambda n: [('C', t) for t in _cycle_chunks(n + 1)] + [('S', v) for v in range(1, n + 1)],
              _cor_cycles_run, default_n=8, finalize=_cor_cycles_finalize),
        Suite('cor_biju', 'U_n to S_n keeps descents and sends the marked position to n',
              lambda n: list(range(1, n + 1)), _biju_run, default_n=8),
        Suite('cor_elishift', 'T0_n to S_n keeps descents and sends the marked position to 1',
              lambda n: list(range(1, n + 1)), _elishift_run, default_n=8, finalize=_elishift_finalize),
        Suite('cor_cyclesu', 'n-cycles with a chosen position to permutations fixing 1 there',
              lambda n: list(range(1, n + 1)), _cyclesu_run, bound='necklace', default_n=7),
        Suite('thm_gr', 'permutations by cycle type and descents against necklace multisets',
              _gr_chunks, _gr_run, bound='necklace', default_n=7),
        Suite('prop_subsets', 'cycle-type preserving transfer between subsets with equal partitions',
              _subsets_chunks, _subsets_run, bound='necklace', default_n=7),
        Suite('lemmas_trace', 'structural invariants of every traced phi run',
              lambda n: _cycle_chunks(n + 1), _lemmas_run, bound='necklace', default_n=7),
        Suite('independence', 'being cyclic is independent of the descents in [n-1]',
              _independence_chunks, _independence_run, default_n=8, finalize=_independence_finalize),
        Suite('alpha_beta', 'closed forms for descent counts',
              lambda n: [None], _alpha_beta_run, bound='closed', default_n=8),
    )
}


def run_chunk(name: str, n: int, key, limit: int = 50) -> SuiteTally:
    """Process entry point: run one chunk of a suite, never raising."""
    tally = SuiteTally(limit=limit)
    try:
        SUITES[name].run_chunk(n, key, tally)
    except Exception as e:
        logger.error(f"Suite {name} chunk {key} crashed: {str(e)}", exc_info=True)
        tally.fail(f"{name} chunk {key}", "completion", f"{type(e).__name__}: {e}")
    return tally


def finalize(name: str, n: int, tally: SuiteTally) -> SuiteTally:
    suite = SUITES[name]
    if suite.finalize is None:
        return tally
    try:
        suite.finalize(n, tally)
    except Exception as e:
        logger.error(f"Suite {name} finalize crashed: {str(e)}", exc_info=True)
        tally.fail(f"{name} finalize", "completion", f"{type(e).__name__}: {e}")
    return tally
