"""
Function Catalogue
Named target functions for the piecewise fitter
"""

from typing import Callable, Dict, List

import numpy as np
from scipy.special import expit

from ..utils.errors import ValidationError

TargetFunction = Callable[[np.ndarray], np.ndarray]


def _sigmoid(**_) -> TargetFunction:
    return expit


def _tanh(**_) -> TargetFunction:
    return np.tanh


def _modified_relu(alpha: float = 0.01, **_) -> TargetFunction:
    alpha = float(alpha)
    return lambda x: np.maximum(alpha * np.asarray(x, dtype=float), x)


def _identity(**_) -> TargetFunction:
    return lambda x: np.asarray(x, dtype=float)


def _constant(value: float = 0.0, **_) -> TargetFunction:
    value = float(value)
    return lambda x: np.full(np.shape(x), value)


FUNCTION_FACTORIES: Dict[str, Callable[..., TargetFunction]] = {
    'sigmoid': _sigmoid,
    'tanh': _tanh,
    'modified_relu': _modified_relu,
    'identity': _identity,
    'constant': _constant,
}


def get_function(name: str, **params) -> TargetFunction:
    """Create a vectorized target function by name

    Raises:
        ValidationError: If the name is unknown
    """
    factory = FUNCTION_FACTORIES.get(name)
    if not factory:
        raise ValidationError(f"Unknown function: {name}. Available: {list(FUNCTION_FACTORIES.keys())}")
    return factory(**params)


def get_available_functions() -> List[str]:
    return list(FUNCTION_FACTORIES.keys())
