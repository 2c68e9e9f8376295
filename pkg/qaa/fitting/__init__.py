"""
Polynomial Fitting Package
"""

from .functions import get_available_functions, get_function
from .remez import eval_classical, fit, max_error_on
from .tables import load_table, save_table

__all__ = [
    'get_available_functions',
    'get_function',
    'eval_classical',
    'fit',
    'max_error_on',
    'load_table',
    'save_table',
]
