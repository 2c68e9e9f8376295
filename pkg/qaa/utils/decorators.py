"""
Command Decorators

Timing and error translation shared by the CLI commands.
"""

from functools import wraps
from time import perf_counter
import logging

import click

from .errors import QAAError, ValidationError

logger = logging.getLogger(__name__)


def log_execution_time(f):
    """Decorator to log command execution time"""
    @wraps(f)
    def decorated_function(*args, **kwargs):
        start_time = perf_counter()
        try:
            result = f(*args, **kwargs)
            execution_time = perf_counter() - start_time
            logger.debug(f"{f.__name__} executed in {execution_time:.4f}s")
            return result
        except (click.UsageError, ValidationError) as e:
            execution_time = perf_counter() - start_time
            logger.warning(f"{f.__name__} rejected its parameters after {execution_time:.4f}s: {str(e)}")
            raise
        except Exception as e:
            execution_time = perf_counter() - start_time
            logger.error(f"{f.__name__} failed after {execution_time:.4f}s: {str(e)}")
            raise
    return decorated_function


def cli_errors(f):
    """Decorator mapping toolkit errors onto click exits.

    ValidationError becomes a usage error (exit 2); any other QAAError
    exits 1 with its message on stderr.
    """
    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except ValidationError as e:
            raise click.UsageError(str(e))
        except QAAError as e:
            raise click.ClickException(f"{type(e).__name__}: {e}")
    return decorated_function
