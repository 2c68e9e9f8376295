"""
Simulation Package
Statevector simulator, cost model and OpenQASM export/import
"""

from .simulator import Simulator, apply, flag_amplitude, run, simulate_flag
from .cost_model import CostModel, count_resources, decompose_circuit
from .qasm import export_qasm, import_qasm, roundtrip_flag_amplitude

__all__ = [
    'Simulator',
    'apply',
    'flag_amplitude',
    'run',
    'simulate_flag',
    'CostModel',
    'count_resources',
    'decompose_circuit',
    'export_qasm',
    'import_qasm',
    'roundtrip_flag_amplitude',
]
