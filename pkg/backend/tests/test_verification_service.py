import pytest

from config import StandardConfig
from app.exceptions import BoundExceededError
from app.descents import tasks
from app.services.verification_service import VerificationService, verify_suite

SMALL_N = {
    'bij_roundtrip': 5,
    'descents': 5,
    'cor_cycles': 5,
    'cor_biju': 5,
    'cor_elishift': 5,
    'cor_cyclesu': 4,
    'thm_gr': 4,
    'prop_subsets': 4,
    'lemmas_trace': 5,
    'independence': 4,
    'alpha_beta': 6,
    'table1': None,
    'examples': None,
}


@pytest.fixture
def service(testing_config):
    return VerificationService(testing_config)


def test_every_suite_is_covered():
    assert set(SMALL_N) == set(tasks.SUITES)


@pytest.mark.parametrize("name", sorted(SMALL_N))
def test_suites_pass(service, name):
    report = service.verify_suite(name, n=SMALL_N[name], jobs=1)
    assert report.passed, report.failures
    assert report.checked > 0
    assert report.failed == 0


def test_fixed_suites_ignore_n(service):
    assert service.resolve_n('table1', 7) == 4
    assert service.resolve_n('examples') == 20


def test_default_n_is_capped_by_the_profile(service, testing_config):
    assert service.resolve_n('bij_roundtrip') == testing_config.MAX_EXHAUSTIVE_N
    assert service.resolve_n('thm_gr') == testing_config.MAX_NECKLACE_N
    assert service.resolve_n('alpha_beta') == testing_config.MAX_EXHAUSTIVE_N + 2


def test_standard_profile_defaults():
    standard = type('PinnedStandard', (StandardConfig,), {'MAX_EXHAUSTIVE_N': 8})
    service = VerificationService(standard)
    for name in ('bij_roundtrip', 'descents', 'cor_cycles', 'cor_biju', 'cor_elishift', 'independence'):
        assert service.resolve_n(name) == 8
    for name in ('thm_gr', 'prop_subsets', 'cor_cyclesu', 'lemmas_trace'):
        assert service.resolve_n(name) == 7


def test_roundtrip_counts_each_cycle_once(service):
    # one check per element of C_5, the S_4 direction adds no extra count
    report = service.verify_suite('bij_roundtrip', n=4, jobs=1)
    assert report.passed
    assert report.checked == 24


def test_bound_exceeded(service, testing_config):
    with pytest.raises(BoundExceededError):
        service.verify_suite('bij_roundtrip', n=testing_config.MAX_EXHAUSTIVE_N + 1)
    with pytest.raises(BoundExceededError):
        service.resolve_n('thm_gr', testing_config.MAX_NECKLACE_N + 1)


def test_unknown_suite(service):
    with pytest.raises(KeyError):
        service.verify_suite('nope')


def test_worker_pool_matches_inline_run(service):
    inline = service.verify_suite('descents', n=4, jobs=1)
    pooled = service.verify_suite('descents', n=4, jobs=2)
    assert pooled.passed
    assert pooled.checked == inline.checked == 24


def test_module_level_shortcut(testing_config):
    report = verify_suite('cor_cycles', n=3, config=testing_config)
    assert report.suite == 'cor_cycles'
    assert report.n == 3
    assert report.passed


def test_crashing_chunk_is_reported(service, mocker):
    def explode(n, key, tally):
        tally.checked += 1
        raise RuntimeError(f"chunk {key} exploded")

    broken = tasks.Suite('broken', 'always crashes', lambda n: [1, 2], explode, default_n=3)
    mocker.patch.dict(tasks.SUITES, {'broken': broken})

    report = service.verify_suite('broken', jobs=1)
    assert not report.passed
    assert report.failed == 2
    assert {f.expected for f in report.failures} == {'completion'}
    assert report.failures[0].actual.startswith('RuntimeError: chunk')


def test_failure_list_is_capped(service, mocker):
    def noisy(n, key, tally):
        for i in range(10):
            tally.checked += 1
            tally.fail(f"case {key}.{i}", 0, 1)

    noisy_suite = tasks.Suite('noisy', 'always fails', lambda n: list(range(10)), noisy, default_n=3)
    mocker.patch.dict(tasks.SUITES, {'noisy': noisy_suite})
    mocker.patch.object(service.config, 'MAX_REPORTED_FAILURES', 5)

    report = service.verify_suite('noisy', jobs=1)
    assert report.failed == 100
    assert len(report.failures) == 5


def test_tally_merge():
    a = tasks.SuiteTally(checked=2, limit=3)
    a.fail('x', 1, 2)
    b = tasks.SuiteTally(checked=5, limit=3)
    b.counts['k'] += 4
    for label in 'pqr':
        b.fail(label, 1, 2)
    merged = a.merge(b)
    assert merged.checked == 7
    assert merged.failed == 4
    assert [f.input for f in merged.failures] == ['x', 'p', 'q']
    assert merged.counts['k'] == 4


def test_integer_partitions():
    assert list(tasks.integer_partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
