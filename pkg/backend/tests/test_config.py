import logging

from config import ExtendedConfig, StandardConfig, TestingConfig, config_by_name
from app import init_app


def _tagged_handlers():
    return [h for h in logging.getLogger('app').handlers if getattr(h, '_descents_handler', False)]


def test_profiles():
    assert config_by_name['default'] is StandardConfig
    assert config_by_name['testing'].MAX_NECKLACE_N < config_by_name['standard'].MAX_NECKLACE_N
    assert ExtendedConfig.MAX_EXHAUSTIVE_N >= 9
    assert TestingConfig.DEFAULT_JOBS == 1


def test_profile_names_resolve():
    assert init_app('testing') is TestingConfig
    assert init_app('unknown-profile') is StandardConfig
    assert init_app() is StandardConfig


def test_handlers_attached_once():
    init_app(TestingConfig)
    init_app(TestingConfig)
    assert len(_tagged_handlers()) == 1
    assert logging.getLogger('app').propagate is False


def test_log_level_override():
    config = init_app(TestingConfig, log_level='error')
    assert config.LOG_LEVEL == 'ERROR'
    assert issubclass(config, TestingConfig)
    assert _tagged_handlers()[0].level == logging.ERROR


def test_log_file(tmp_path):
    log_dir = tmp_path / 'logs'
    profile = type('FileLogging', (TestingConfig,), {'LOG_DIR': str(log_dir)})
    init_app(profile)
    logging.getLogger('app.descents').info("file handler check")
    for handler in _tagged_handlers():
        handler.flush()

    log_file = log_dir / TestingConfig.LOG_FILE
    assert log_file.exists()
    assert "file handler check" in log_file.read_text(encoding='utf-8')
    init_app(TestingConfig)
