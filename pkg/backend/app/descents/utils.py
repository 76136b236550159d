import re
import time
import logging
import functools

import psutil

from app.exceptions import ParseError
from app.descents.perm_core import (
    CycleDecomposition,
    DescentSet,
    Permutation,
    from_cycles,
)

logger = logging.getLogger(__name__)

_CYCLES_RE = re.compile(r'(\([^()]*\))+')
_GROUP_RE = re.compile(r'\(([^()]*)\)')
SLOW_CALL_SECONDS = 30.0


def _parse_ints(tokens, text):
    try:
        return tuple(int(token) for token in tokens)
    except ValueError as e:
        raise ParseError(f"Expected integers in {text!r}") from e


def parse_word(text: str) -> tuple[int, ...]:
    """Parse one-line notation, e.g. ``"2 5 1 7 3 6 4"`` (commas also accepted)."""
    tokens = text.replace(',', ' ').split()
    if not tokens:
        raise ParseError("Empty word")
    return _parse_ints(tokens, text)


def parse_cycles(text: str) -> CycleDecomposition:
    """Parse cycle notation such as ``"(5,3,1,2)(6)(7,4)"``; whitespace is ignored."""
    compact = re.sub(r'\s+', '', text)
    if not compact or not _CYCLES_RE.fullmatch(compact):
        raise ParseError(f"Malformed cycle notation: {text!r}")
    cycles = []
    for group in _GROUP_RE.findall(compact):
        tokens = [t for t in group.split(',') if t]
        if not tokens:
            raise ParseError(f"Empty cycle in {text!r}")
        cycles.append(_parse_ints(tokens, text))
    return CycleDecomposition(tuple(cycles))


def parse_permutation(text: str) -> Permutation:
    """Accept either one-line or cycle notation."""
    if '(' in text:
        return from_cycles(parse_cycles(text))
    return Permutation(parse_word(text))


def parse_descent_set(text: str, n: int) -> DescentSet:
    """``"2,8"``, ``"{2,8}"``, ``""`` and ``"{}"`` are all accepted."""
    body = text.strip()
    if body.startswith('{') and body.endswith('}'):
        body = body[1:-1]
    tokens = body.replace(',', ' ').split()
    return DescentSet(frozenset(_parse_ints(tokens, text)), n)


def performance_monitor(func):
    """
    Decorator logging wall time and resident-memory growth of a call.
    """
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        process = psutil.Process()
        before_rss = process.memory_info().rss
        start_time = time.perf_counter()
        try:
            return func(*args, **kwargs)
        finally:
            execution_time = time.perf_counter() - start_time
            rss_diff = process.memory_info().rss - before_rss

            logger.info(f"{func.__name__} statistics:")
            logger.info(f"  - elapsed: {execution_time:.2f}s")
            logger.info(f"  - RSS growth: {rss_diff / (1024 * 1024):.2f} MB")

            if execution_time > SLOW_CALL_SECONDS:
                logger.warning(f"{func.__name__} took too long: {execution_time:.2f}s")

    return wrapper
