class DescentsError(Exception):
    """Base class for every error raised by the package."""


class InvalidPermutationError(DescentsError, ValueError):
    """A word or cycle decomposition is not a permutation of [n]."""


class NotCyclicError(InvalidPermutationError):
    """A single n-cycle was required."""


class InvalidMarkedWordError(InvalidPermutationError):
    """A marked word is not in T0_n or U_n."""


class InvalidSubsetError(DescentsError, ValueError):
    """A descent set or subset pair is out of range or incompatible."""


class ParseError(DescentsError, ValueError):
    """Text input does not follow the permutation / subset grammar."""


class BoundExceededError(DescentsError, ValueError):
    """Requested n is past the bound of the active profile."""


class SwitchContractError(DescentsError, RuntimeError):
    """An internal invariant of the switch algorithms failed."""


class InvalidNecklaceError(DescentsError, ValueError):
    """A necklace or necklace multiset is malformed or inconsistent."""
