"""
Quantum Amplitude Arithmetic Toolkit
Main Package - Configuration Factory
"""

from .config import get_config, set_active_config
from .utils.logging_config import setup_logging

__version__ = '0.1.0'


def configure(config_name=None, log_level=None):
    """Configuration factory

    Args:
        config_name: Configuration name ('development', 'production', 'testing')
        log_level: Optional override of the configured LOG_LEVEL

    Returns:
        The installed configuration class
    """
    config_class = get_config(config_name)
    if log_level:
        config_class = type(config_class.__name__, (config_class,), {'LOG_LEVEL': log_level.upper()})

    set_active_config(config_class)
    setup_logging(config_class)
    return config_class
