"""
Coefficient Table Store
JSON files holding a fitted piecewise polynomial and its fit report.
Coefficients are stored as scaled integers so a save/load cycle is bit-exact.
"""

import json
import logging
import os
from typing import Optional, Tuple

from ..models.polynomial import FitReport, PiecewisePolynomial
from ..utils.errors import FitError, ValidationError

logger = logging.getLogger(__name__)


def table_to_dict(poly: PiecewisePolynomial, report: Optional[FitReport] = None) -> dict:
    data = poly.to_dict()
    data['fit_report'] = report.to_dict() if report else {}
    return data


def save_table(path: str, poly: PiecewisePolynomial, report: Optional[FitReport] = None) -> str:
    """Save a coefficient table to JSON"""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(table_to_dict(poly, report), f, indent=2)
    logger.info(f"Saved {poly.function} coefficient table to {path}")
    return path


def load_table(path: str) -> Tuple[PiecewisePolynomial, FitReport]:
    """Load a coefficient table from JSON

    Raises:
        ValidationError: If the file is missing or malformed
    """
    if not os.path.exists(path):
        raise ValidationError(f"Coefficient table not found: {path}")
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
        poly = PiecewisePolynomial.from_dict(data)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError, FitError) as e:
        raise ValidationError(f"Invalid coefficient table {path}: {e}") from e
    return poly, FitReport.from_dict(data.get('fit_report'))
