"""Golden data: the images of all 5-cycles, four hand-checked switch runs and a
transfer example on 12 letters.

Cycles of C_{n+1} are written ending with n+1; permutations of [n] by their
canonical cycle form.
"""
from dataclasses import dataclass

# (cycle, one-line of the cycle, image under phi, descent set)
C5_TABLE = (
    ((1, 2, 3, 4, 5), '2 3 4 5 1', '1 2 3 4', ()),
    ((2, 1, 3, 4, 5), '3 1 4 5 2', '2 1 3 4', (1,)),
    ((3, 2, 1, 4, 5), '4 1 2 5 3', '3 1 2 4', (1,)),
    ((4, 3, 2, 1, 5), '5 1 2 3 4', '4 1 2 3', (1,)),
    ((1, 3, 2, 4, 5), '3 4 2 5 1', '1 3 2 4', (2,)),
    ((1, 4, 3, 2, 5), '4 5 2 3 1', '1 4 2 3', (2,)),
    ((3, 1, 2, 4, 5), '2 4 1 5 3', '2 3 1 4', (2,)),
    ((3, 1, 4, 2, 5), '4 5 1 2 3', '3 4 1 2', (2,)),
    ((4, 3, 1, 2, 5), '2 5 1 3 4', '2 4 1 3', (2,)),
    ((1, 2, 4, 3, 5), '2 4 5 3 1', '1 2 4 3', (3,)),
    ((2, 4, 1, 3, 5), '3 4 5 1 2', '1 3 4 2', (3,)),
    ((4, 1, 2, 3, 5), '2 3 5 1 4', '2 3 4 1', (3,)),
    ((2, 3, 1, 4, 5), '4 3 1 5 2', '3 2 1 4', (1, 2)),
    ((2, 4, 3, 1, 5), '5 4 1 3 2', '4 2 1 3', (1, 2)),
    ((4, 2, 3, 1, 5), '5 3 1 2 4', '4 3 1 2', (1, 2)),
    ((1, 4, 2, 3, 5), '4 3 5 2 1', '3 2 4 1', (1, 3)),
    ((2, 1, 4, 3, 5), '4 1 5 3 2', '2 1 4 3', (1, 3)),
    ((2, 3, 4, 1, 5), '5 3 4 1 2', '4 2 3 1', (1, 3)),
    ((3, 4, 2, 1, 5), '5 1 4 2 3', '4 1 3 2', (1, 3)),
    ((4, 2, 1, 3, 5), '3 1 5 2 4', '3 1 4 2', (1, 3)),
    ((1, 3, 4, 2, 5), '3 5 4 2 1', '1 4 3 2', (2, 3)),
    ((3, 4, 1, 2, 5), '2 5 4 1 3', '2 4 3 1', (2, 3)),
    ((4, 1, 3, 2, 5), '3 5 2 1 4', '3 4 2 1', (2, 3)),
    ((3, 2, 4, 1, 5), '5 4 2 1 3', '4 3 2 1', (1, 2, 3)),
)


@dataclass(frozen=True)
class SwitchExample:
    """A run of phi (or psi) checked by hand, switch by switch."""
    name: str
    kind: str
    source: tuple           # cycle ending with n+1 for phi, cycles for psi
    target: tuple           # cycles for phi, cycle ending with n+1 for psi
    swaps: tuple
    split: tuple = ()
    target_one_line: str = ''


EXAMPLE_1 = SwitchExample(
    name='example-1',
    kind='phi',
    source=(11, 4, 10, 1, 7, 16, 9, 3, 5, 12, 20, 2, 6, 14, 18, 8, 13, 19, 15, 17, 21),
    target=((11, 4, 9, 3, 5), (16, 10, 1, 7, 15), (20, 2, 6, 13, 18, 8, 12, 19, 14, 17)),
    swaps=((7, 6), (1, 2), (6, 5), (2, 3), (10, 9),
           (12, 13), (13, 14), (6, 7), (2, 1), (14, 15)),
    split=((11, 4, 10, 1, 7), (16, 9, 3, 5, 12), (20, 2, 6, 14, 18, 8, 13, 19, 15, 17)),
    target_one_line='7 6 5 9 11 13 15 12 3 1 4 19 18 17 16 10 20 8 14 2',
)

EXAMPLE_2 = SwitchExample(
    name='example-2',
    kind='phi',
    source=(2, 9, 17, 6, 11, 19, 7, 13, 12, 15, 8, 14, 1, 4, 5, 10, 18, 3, 16, 20),
    target=((1,), (4,), (17, 6, 10), (19, 8, 13, 12, 15, 9, 14, 2, 5, 7, 11, 18, 3, 16)),
    swaps=((2, 1), (9, 8), (8, 7), (7, 6), (6, 5), (5, 4), (11, 10), (7, 6)),
    split=((2,), (9,), (17, 6, 11), (19, 7, 13, 12, 15, 8, 14, 1, 4, 5, 10, 18, 3, 16)),
    target_one_line='1 5 16 4 7 10 11 13 14 17 18 15 12 2 9 19 6 3 8',
)

EXAMPLE_3 = SwitchExample(
    name='example-3',
    kind='psi',
    source=EXAMPLE_1.target,
    target=EXAMPLE_1.source,
    swaps=((15, 14), (14, 13), (7, 6), (1, 2), (13, 12),
           (5, 6), (3, 2), (9, 10), (6, 7), (2, 1)),
)

EXAMPLE_4 = SwitchExample(
    name='example-4',
    kind='psi',
    source=EXAMPLE_2.target,
    target=EXAMPLE_2.source,
    swaps=((10, 11), (6, 7), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (1, 2)),
)

SWITCH_EXAMPLES = (EXAMPLE_1, EXAMPLE_2, EXAMPLE_3, EXAMPLE_4)


@dataclass(frozen=True)
class TransferExample:
    permutation: str
    source: tuple
    target: tuple
    image: str
    image_cycles: tuple


TRANSFER_SOURCE = '3 4 1 2 5 9 11 12 6 7 8 10'
# canonical necklaces of the source permutation read with I = {2,8}
TRANSFER_NECKLACES = ((1, 1, 3, 1, 3), (1, 3), (2, 3), (2, 3), (3,))

TRANSFER_EXAMPLES = (
    TransferExample(
        permutation=TRANSFER_SOURCE,
        source=(2, 8),
        target=(4, 6),
        image='3 7 8 9 10 11 1 2 4 5 6 12',
        image_cycles=((5, 10), (6, 11), (12,), (9, 4), (8, 2, 7, 1, 3)),
    ),
    TransferExample(
        permutation=TRANSFER_SOURCE,
        source=(2, 8),
        target=(2, 6),
        image='7 8 5 9 10 11 1 2 3 4 6 12',
        image_cycles=((1, 7), (2, 8), (12,), (11, 6), (10, 4, 9, 3, 5)),
    ),
)

# 5-cycles by exact descent set: {1,2} and {1,4} share the partition (3,1,1)
# but hold different numbers of 5-cycles, so no cycle-type preserving bijection
# runs between the two exact classes
EXACT_CLASS_MISMATCH = {
    (1, 2): ('5 3 1 2 4',),
    (1, 4): ('3 1 4 5 2', '4 1 2 5 3'),
}
