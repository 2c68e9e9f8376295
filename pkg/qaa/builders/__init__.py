"""
Circuit Builders Package
"""

from .base import CircuitBuilder
from .primitives import (LcuBranch, add_block, binary_controlled_ry, lcu_combine,
                         multiply_block, weighted_preparer)
from .stateprep import (build_alternative, build_basic, build_complex, build_improved,
                        closed_form, load_constant, prepare)
from .linsys import build_reciprocal_circuit, evaluate_reciprocal, reciprocal_sweep
from .polyeval import build_eval_circuit, evaluate_point, power_gadget, qram_load_fragment

__all__ = [
    'CircuitBuilder',
    'LcuBranch',
    'add_block',
    'binary_controlled_ry',
    'lcu_combine',
    'multiply_block',
    'weighted_preparer',
    'build_alternative',
    'build_basic',
    'build_complex',
    'build_improved',
    'closed_form',
    'load_constant',
    'prepare',
    'build_reciprocal_circuit',
    'evaluate_reciprocal',
    'reciprocal_sweep',
    'build_eval_circuit',
    'evaluate_point',
    'power_gadget',
    'qram_load_fragment',
]
