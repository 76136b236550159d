import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


def _env_flag(name, default='false'):
    return os.environ.get(name, default).strip().lower() in ('1', 'true', 'yes', 'on')


class Config:
    """Base configuration."""
    PROFILE = 'standard'
    TESTING = False

    # Logging
    LOG_LEVEL = os.environ.get('DESCENTS_LOG_LEVEL', 'WARNING')
    LOG_DIR = os.environ.get('DESCENTS_LOG_DIR')
    LOG_FILE = 'descents.log'

    # Verification sweeps
    DEFAULT_JOBS = int(os.environ.get('DESCENTS_JOBS', '1'))
    MAX_EXHAUSTIVE_N = int(os.environ.get('DESCENTS_MAX_N', '8'))
    MAX_NECKLACE_N = 7
    MAX_TABLE_N = 8
    MAX_REPORTED_FAILURES = 50
    SHOW_PROGRESS = _env_flag('DESCENTS_PROGRESS')

    # Performance configuration
    SLOW_SUITE_SECONDS = 30.0  # seconds


class StandardConfig(Config):
    """Desk-scale bounds (n <= 8)."""
    PROFILE = 'standard'


class ExtendedConfig(Config):
    """Opt-in bounds: n = 9 for the cycle suites, n = 8 for necklace suites."""
    PROFILE = 'extended'
    MAX_EXHAUSTIVE_N = max(9, int(os.environ.get('DESCENTS_MAX_N', '9')))
    MAX_NECKLACE_N = 8
    SLOW_SUITE_SECONDS = 300.0


class TestingConfig(Config):
    """Testing configuration."""
    PROFILE = 'testing'
    TESTING = True
    LOG_LEVEL = 'DEBUG'
    LOG_DIR = None
    DEFAULT_JOBS = 1
    MAX_EXHAUSTIVE_N = 6
    MAX_NECKLACE_N = 5
    SHOW_PROGRESS = False


# Map profile name to config class
config_by_name = {
    'standard': StandardConfig,
    'extended': ExtendedConfig,
    'testing': TestingConfig,
    'default': StandardConfig
}
