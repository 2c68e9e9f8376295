"""
Data Models Package
Typed models for circuits, states, resources and construction parameters
"""

from .gate import GateKind, GateOp
from .layout import Register, RegisterKind, RegisterLayout
from .circuit import Circuit, FlagPredicate
from .state import StateVector, complex_to_dict
from .resources import ResourceReport
from .plans import AngleFactor, PrepSpec, ReciprocalPlan, ToeplitzSystem, ceil_log2
from .polynomial import FitReport, PiecewisePolynomial, QramStub

__all__ = [
    'GateKind',
    'GateOp',
    'Register',
    'RegisterKind',
    'RegisterLayout',
    'Circuit',
    'FlagPredicate',
    'StateVector',
    'complex_to_dict',
    'ResourceReport',
    'AngleFactor',
    'PrepSpec',
    'ReciprocalPlan',
    'ToeplitzSystem',
    'ceil_log2',
    'FitReport',
    'PiecewisePolynomial',
    'QramStub',
]
