"""
Pytest Configuration and Fixtures
"""

import sys
import os
import pytest

import numpy as np
from click.testing import CliRunner

# Add parent directory to path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from qaa import configure


@pytest.fixture(autouse=True)
def testing_config():
    """Install the testing configuration for every test"""
    config_class = configure('testing')
    yield config_class


@pytest.fixture
def simulator(testing_config):
    """Statevector simulator bound to the testing configuration"""
    from qaa.sim.simulator import Simulator
    return Simulator(testing_config)


@pytest.fixture
def rng():
    """Seeded random generator"""
    return np.random.default_rng(20241019)


@pytest.fixture
def runner():
    """Create test CLI runner"""
    return CliRunner()


@pytest.fixture
def temp_dir(tmp_path):
    """Create temporary directory for file tests"""
    return str(tmp_path)


@pytest.fixture
def capped_config(testing_config):
    """Testing configuration with a 3-qubit simulation cap"""
    return type('CappedConfig', (testing_config,), {'MAX_QUBITS': 3})
