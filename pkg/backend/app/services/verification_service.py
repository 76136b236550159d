"""
Verification Service

This module runs the verification suites: it resolves the size bound of the
active profile, fans chunks out to worker processes and merges their tallies
into a VerificationReport.
"""

import time
import logging
import concurrent.futures

from tqdm import tqdm

from app.exceptions import BoundExceededError
from app.models import VerificationReport
from app.descents import tasks
from app.descents.utils import performance_monitor

logger = logging.getLogger(__name__)


class VerificationService:
    """Service for exhaustive verification runs"""

    def __init__(self, config):
        """
        Args:
            config: Config class of the active profile.
        """
        self.config = config

    def max_n(self, suite):
        if suite.bound == 'necklace':
            return self.config.MAX_NECKLACE_N
        if suite.bound == 'closed':
            return self.config.MAX_EXHAUSTIVE_N + 2
        return self.config.MAX_EXHAUSTIVE_N

    def resolve_n(self, name, n=None):
        """Pick the size a suite runs at, enforcing the profile bound."""
        suite = tasks.SUITES[name]
        if suite.fixed_n is not None:
            return suite.fixed_n
        bound = self.max_n(suite)
        if n is None:
            return min(suite.default_n, bound)
        if n > bound:
            raise BoundExceededError(
                f"Suite {name} is limited to n <= {bound} in the {self.config.PROFILE} profile"
            )
        return n

    @performance_monitor
    def verify_suite(self, name, n=None, jobs=None):
        """
        Run one suite to completion.

        Args:
            name: Suite name (see ``tasks.SUITES``)
            n: Size parameter; the suite default when None
            jobs: Worker processes; the profile default when None

        Returns:
            VerificationReport. Counterexamples are reported, never raised.
        """
        if name not in tasks.SUITES:
            raise KeyError(f"Unknown suite {name!r}")
        n = self.resolve_n(name, n)
        jobs = jobs or self.config.DEFAULT_JOBS
        limit = self.config.MAX_REPORTED_FAILURES
        chunks = tasks.SUITES[name].chunks(n)
        logger.info(f"Suite {name}: n={n}, {len(chunks)} chunks, {jobs} jobs")

        start_time = time.perf_counter()
        tally = tasks.SuiteTally(limit=limit)
        progress = tqdm(total=len(chunks), desc=name, disable=not self.config.SHOW_PROGRESS, leave=False)

        if jobs == 1 or len(chunks) == 1:
            for key in chunks:
                tally = tally.merge(tasks.run_chunk(name, n, key, limit))
                progress.update(1)
        else:
            with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
                futures = [executor.submit(tasks.run_chunk, name, n, key, limit) for key in chunks]
                for future in concurrent.futures.as_completed(futures):
                    tally = tally.merge(future.result())
                    progress.update(1)
        progress.close()

        tally = tasks.finalize(name, n, tally)
        millis = (time.perf_counter() - start_time) * 1000.0

        if tally.failed:
            logger.warning(f"Suite {name} (n={n}): {tally.failed} failures out of {tally.checked} checks")
        else:
            logger.info(f"Suite {name} (n={n}): {tally.checked} checked in {millis:.0f} ms")

        return VerificationReport(
            suite=name,
            n=n,
            checked=tally.checked,
            failures=tally.failures,
            failed=tally.failed,
            millis=round(millis, 3),
        )


def verify_suite(name, n=None, jobs=None, config=None):
    """Module-level shortcut used by the CLI and the tests."""
    if config is None:
        from config import StandardConfig
        config = StandardConfig
    return VerificationService(config).verify_suite(name, n=n, jobs=jobs)
