"""Utilities for converting raw document values into model values."""

import re
from decimal import Decimal
from fractions import Fraction
from typing import Any, Tuple, Union

from dmmm_scheduler.errors import NonPositiveValueError, SchemaTypeError

_DIGIT_RUNS = re.compile(r"(\d+)")

IdKey = Tuple[Tuple[Union[str, int], ...], str]


def id_key(value: str) -> IdKey:
    """Natural sort key: digit runs compare numerically, so ``t2 < t10``.

    Ids equal under numeric comparison (``t1`` and ``t01``) fall back to the raw string.
    """
    parts = _DIGIT_RUNS.split(value)
    return tuple(int(part) if index % 2 else part for index, part in enumerate(parts)), value


def positive_int(value: Any, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        if isinstance(value, (Decimal, float)) and value == int(value):
            value = int(value)
        else:
            raise SchemaTypeError(f"TYPE ERROR: {field} must be an integer, got {value!r}")
    if value < 1:
        raise NonPositiveValueError(f"VALUE ERROR: non-positive {field} {value}")
    return value


def non_negative_int(value: Any, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaTypeError(f"TYPE ERROR: {field} must be an integer, got {value!r}")
    if value < 0:
        raise NonPositiveValueError(f"VALUE ERROR: negative {field} {value}")
    return value


def speed_factor(value: Any) -> Fraction:
    """Accept ints, decimals, floats and ``"p/q"`` strings; keep the value exact."""
    if isinstance(value, bool):
        raise SchemaTypeError(f"TYPE ERROR: speed_factor must be numeric, got {value!r}")
    try:
        if isinstance(value, float):
            factor = Fraction(str(value))
        elif isinstance(value, (int, Decimal, str, Fraction)):
            factor = Fraction(value)
        else:
            raise TypeError(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise SchemaTypeError(f"TYPE ERROR: speed_factor must be numeric, got {value!r}") from exc
    if factor <= 0:
        raise NonPositiveValueError(f"VALUE ERROR: non-positive speed_factor {value}")
    return factor


def format_speed_factor(value: Fraction) -> Union[int, str]:
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"
