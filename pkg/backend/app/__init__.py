"""Descent-preserving cycle bijections.

The package root only wires configuration and logging; the algorithms live in
``app.descents`` and the command surface in ``app.cli``.
"""
import os
import logging
from logging.handlers import RotatingFileHandler

__version__ = '1.0.0'

_HANDLER_TAG = '_descents_handler'


def _resolve_config(config_object):
    from config import config_by_name, StandardConfig

    if config_object is None:
        return StandardConfig
    if isinstance(config_object, str):
        # Profile name
        return config_by_name.get(config_object, StandardConfig)
    return config_object


def init_app(config_object=None, log_level=None):
    """Configure logging for the package and return the resolved config class.

    Args:
        config_object: A config class, a profile name, or None for the default profile.
        log_level: Optional override of the profile's LOG_LEVEL.

    Returns:
        The config class in effect.
    """
    config = _resolve_config(config_object)
    if log_level:
        config = type(config.__name__, (config,), {'LOG_LEVEL': log_level.upper()})
    logger = logging.getLogger('app')

    # Handlers are attached once per process
    for handler in list(logger.handlers):
        if getattr(handler, _HANDLER_TAG, False):
            logger.removeHandler(handler)
            handler.close()

    level = getattr(logging, str(config.LOG_LEVEL).upper(), logging.WARNING)

    if config.LOG_DIR:
        try:
            os.makedirs(config.LOG_DIR, exist_ok=True)
            file_handler = RotatingFileHandler(
                os.path.join(config.LOG_DIR, config.LOG_FILE),
                maxBytes=10485760,  # 10MB
                backupCount=10,
                encoding='utf-8',
                delay=True
            )
        except OSError as e:
            logger.warning(f"Error creating log file handler: {str(e)}")
            file_handler = logging.NullHandler()
        file_handler.setFormatter(logging.Formatter(
            '%(asctime)s %(levelname)s: %(message)s [in %(pathname)s:%(lineno)d]'
        ))
        file_handler.setLevel(logging.DEBUG)
        setattr(file_handler, _HANDLER_TAG, True)
        logger.addHandler(file_handler)

    # Console output goes to stderr, stdout is reserved for command output
    console_handler = logging.StreamHandler()
    console_handler.setFormatter(logging.Formatter('%(levelname)s: %(message)s'))
    console_handler.setLevel(level)
    setattr(console_handler, _HANDLER_TAG, True)
    logger.addHandler(console_handler)

    # The file log keeps DEBUG detail even when the console is quieter
    logger.setLevel(logging.DEBUG if config.LOG_DIR else level)
    logger.propagate = False
    logger.info(f"Logging configured (profile={config.PROFILE}, level={config.LOG_LEVEL})")
    return config
