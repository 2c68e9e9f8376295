"""
Configuration for the Quantum Amplitude Arithmetic Toolkit
"""
import logging
import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)

# Simulation width beyond which no override is honoured
HARD_QUBIT_CAP = 28
DEFAULT_MAX_QUBITS = 24


def _resolve_max_qubits(raw=None):
    """Resolve the simulation width cap from QAA_MAX_QUBITS.

    Values above the hard cap are clamped; non-numeric or non-positive values
    fall back to the default.
    """
    raw = raw if raw is not None else os.environ.get('QAA_MAX_QUBITS')
    if raw in (None, ''):
        return DEFAULT_MAX_QUBITS
    try:
        value = int(raw)
    except (TypeError, ValueError):
        logger.warning(f"Ignoring non-integer QAA_MAX_QUBITS={raw!r}")
        return DEFAULT_MAX_QUBITS
    if value < 1:
        logger.warning(f"Ignoring non-positive QAA_MAX_QUBITS={raw!r}")
        return DEFAULT_MAX_QUBITS
    if value > HARD_QUBIT_CAP:
        logger.warning(f"QAA_MAX_QUBITS={value} exceeds hard cap, clamped to {HARD_QUBIT_CAP}")
        return HARD_QUBIT_CAP
    return value


class Config:
    """Base configuration"""

    # =============================================================================
    # SIMULATION
    # =============================================================================

    MAX_QUBITS = _resolve_max_qubits()
    CHECK_NORM = os.environ.get('QAA_CHECK_NORM', 'True') == 'True'
    NORM_TOLERANCE = float(os.environ.get('QAA_NORM_TOLERANCE', '1e-10'))
    MEMORY_HEADROOM = float(os.environ.get('QAA_MEMORY_HEADROOM', '0.5'))

    # =============================================================================
    # ORACLE CHECKS
    # =============================================================================

    ORACLE_TOLERANCE = float(os.environ.get('QAA_ORACLE_TOLERANCE', '1e-10'))
    ROUNDTRIP_TOLERANCE = float(os.environ.get('QAA_ROUNDTRIP_TOLERANCE', '1e-9'))

    # =============================================================================
    # POLYNOMIAL FITTING
    # =============================================================================

    FIT_GRID_POINTS = int(os.environ.get('QAA_FIT_GRID_POINTS', '10000'))
    REMEZ_MAX_ITERATIONS = int(os.environ.get('QAA_REMEZ_MAX_ITERATIONS', '50'))
    REMEZ_DEFECT_TOLERANCE = float(os.environ.get('QAA_REMEZ_DEFECT_TOLERANCE', '0.1'))

    # =============================================================================
    # LOGGING CONFIGURATION
    # =============================================================================

    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'INFO')
    LOG_FORMAT = os.environ.get('LOG_FORMAT', '%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    LOG_DIR = os.environ.get('LOG_DIR', 'logs')
    LOG_TO_FILE = os.environ.get('LOG_TO_FILE', 'False') == 'True'

    # =============================================================================
    # PERFORMANCE SETTINGS
    # =============================================================================

    SLOW_SIMULATION_THRESHOLD = float(os.environ.get('QAA_SLOW_SIMULATION_THRESHOLD', '5.0'))
    SWEEP_WORKERS = int(os.environ.get('QAA_SWEEP_WORKERS', '4'))

    ENV = os.environ.get('QAA_ENV', 'development')


class DevelopmentConfig(Config):
    """Development configuration"""
    DEBUG = True
    TESTING = False
    ENV = 'development'


class ProductionConfig(Config):
    """Production configuration"""
    DEBUG = False
    TESTING = False
    ENV = 'production'

    LOG_TO_FILE = os.environ.get('LOG_TO_FILE', 'True') == 'True'


class TestingConfig(Config):
    """Testing configuration"""
    DEBUG = True
    TESTING = True
    ENV = 'testing'

    LOG_TO_FILE = False
    LOG_LEVEL = 'WARNING'
    SWEEP_WORKERS = 2


# Configuration dictionary
config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': DevelopmentConfig
}

_active = None


def get_config(config_name=None):
    """Get configuration object based on environment"""
    if config_name is None:
        config_name = os.environ.get('QAA_ENV', 'development')
    return config.get(config_name, DevelopmentConfig)


def set_active_config(config_class):
    """Install the configuration the simulator and builders read"""
    global _active
    _active = config_class


def active_config():
    """Return the installed configuration, defaulting to the environment's"""
    return _active if _active is not None else get_config()
