"""
Parameter Validation Utilities

Validation patterns shared by the builders and the command-line front end.
Each validate_* helper returns None when the value passes and an error
message otherwise; require() turns a message into a ValidationError.
"""

import math
import numbers
from typing import Any, Iterable, Optional

from .errors import ValidationError


def validate_integer(value: Any, field_name: str = "Value",
                     min_value: Optional[int] = None,
                     max_value: Optional[int] = None) -> Optional[str]:
    """Validate that a value is an integer within optional bounds

    Args:
        value: Value to validate
        field_name: Name of the field for error message
        min_value: Optional minimum value
        max_value: Optional maximum value

    Returns:
        None if validation passes, error message string if validation fails
    """
    if isinstance(value, float) and value.is_integer():
        value = int(value)
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        return f"{field_name} must be an integer"

    value = int(value)
    if min_value is not None and value < min_value:
        return f"{field_name} must be at least {min_value}"

    if max_value is not None and value > max_value:
        return f"{field_name} must be at most {max_value}"

    return None


def validate_numeric(value: Any, field_name: str = "Value",
                     min_value: Optional[float] = None,
                     max_value: Optional[float] = None) -> Optional[str]:
    """Validate that a value is a finite number within optional bounds

    Args:
        value: Value to validate
        field_name: Name of the field for error message
        min_value: Optional minimum value
        max_value: Optional maximum value

    Returns:
        None if validation passes, error message string if validation fails
    """
    try:
        numeric_value = float(value)
    except (ValueError, TypeError):
        return f"{field_name} must be a number"

    if not math.isfinite(numeric_value):
        return f"{field_name} must be finite"

    if min_value is not None and numeric_value < min_value:
        return f"{field_name} must be at least {min_value}"

    if max_value is not None and numeric_value > max_value:
        return f"{field_name} must be at most {max_value}"

    return None


def validate_choice(value: Any, choices: Iterable[Any], field_name: str = "Value") -> Optional[str]:
    """Validate that a value is one of the allowed choices"""
    choices = list(choices)
    if value not in choices:
        return f"{field_name} must be one of: {', '.join(str(c) for c in choices)}"
    return None


def validate_open_interval(value: float, low: float, high: float,
                           field_name: str = "Value") -> Optional[str]:
    """Validate low < value < high"""
    message = validate_numeric(value, field_name)
    if message:
        return message
    if not low < float(value) < high:
        return f"{field_name} must lie in the open interval ({low}, {high})"
    return None


def require(*messages: Optional[str]) -> None:
    """Raise ValidationError for the first non-empty message

    Raises:
        ValidationError: If any message is set
    """
    for message in messages:
        if message:
            raise ValidationError(message)
