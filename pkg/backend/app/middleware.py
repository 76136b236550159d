import time
import logging
import functools

logger = logging.getLogger(__name__)


class CommandLogger:
    """Middleware for logging CLI commands and their outcome."""

    @staticmethod
    def before_command(name, params):
        """Log command details before it runs."""
        try:
            logger.info(f"=== Command: {name} ===")
            shown = {k: v for k, v in params.items() if v is not None}
            logger.info(f"Parameters: {shown}")
        except Exception as e:
            # Logging must never break a command
            print(f"Error in before_command logging: {str(e)}")
        return time.perf_counter()

    @staticmethod
    def after_command(name, start_time, exit_code):
        """Log duration and exit code after the command returns."""
        try:
            duration = time.perf_counter() - start_time
            logger.info(f"Command {name} completed in {duration:.4f} seconds")
            logger.info(f"Exit code: {exit_code}")
            logger.info("=== End of command ===")
        except Exception as e:
            print(f"Error in after_command logging: {str(e)}")
        return exit_code

    @classmethod
    def wrap(cls, name):
        """Decorator form: ``@CommandLogger.wrap('map')`` around ``func(args) -> exit code``."""
        def decorator(func):
            @functools.wraps(func)
            def wrapper(args, *rest, **kwargs):
                start_time = cls.before_command(name, dict(vars(args)))
                exit_code = 2
                try:
                    exit_code = func(args, *rest, **kwargs)
                    return exit_code
                finally:
                    cls.after_command(name, start_time, exit_code)
            return wrapper
        return decorator
