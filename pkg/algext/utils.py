"""
algext.utils
~~~~~~~~~~~~
This module contains various utility functions.
"""
import math
from fractions import Fraction
from typing import Any, List, Union

from .constants import SATURATED_LOG

Number = Union[int, float, Fraction]


def snake_to_camel(word: str) -> str:
    """Converts string in snake case to camel case.
    For example, "point_count" becomes "PointCount"
    """
    return ''.join(x.capitalize() or '_' for x in word.split('_'))


def kind_to_module(kind: str) -> str:
    """Converts an experiment kind to the name of the module implementing it.
    For example, "weil-check" becomes "weil_check_experiment"
    """
    return f"{kind.lower().replace('-', '_')}_experiment"


def to_list(obj: Any) -> List:
    """Converts an object to a list. If the object is already a list,
    does nothing.

    :param obj: Object to convert
    """
    return obj if isinstance(obj, list) else [obj]


def log_base(value: Number, base: Number) -> float:
    """Logarithm that saturates instead of failing.

    log(0) is -SATURATED_LOG and log(inf) is SATURATED_LOG, so parameter
    formulas stay total. Callers that care check :func:`is_saturated`.

    :param value: Non-negative argument
    :param base: Logarithm base (> 1)
    :rtype: float
    """
    value = float(value)
    if value <= 0:
        return -SATURATED_LOG
    if math.isinf(value):
        return SATURATED_LOG
    return math.log(value) / math.log(float(base))


def log_inverse(value: Number, base: Number = 2) -> float:
    """log_base(1/value), with 1/0 read as +infinity.
    """
    if float(value) <= 0:
        return SATURATED_LOG
    return -log_base(value, base)


def is_saturated(value: float) -> bool:
    """Tells whether a logarithm hit the saturation sentinel.
    """
    return abs(value) >= SATURATED_LOG


def ceil_log2(value: int) -> int:
    """Smallest w with 2^w >= value (0 for value <= 1).
    """
    return int(value - 1).bit_length() if value > 1 else 0


def floor_log2(value: int) -> int:
    """Largest w with 2^w <= value. value must be positive.
    """
    return int(value).bit_length() - 1


def int_to_bits(value: int, width: int) -> str:
    """Fixed-width big-endian bit string of a non-negative integer.
    """
    if width == 0:
        return ""
    return format(value, f"0{width}b")


def bits_to_int(bits: str) -> int:
    """Inverse of :func:`int_to_bits`.
    """
    return int(bits, 2) if bits else 0


def parse_number(text: str) -> Number:
    """Parses config numbers: integers, floats, fractions such as ``1/8``
    and powers such as ``2^20`` or ``2^-10``.

    :raises ValueError: text is not a number
    """
    text = text.strip()
    if "^" in text:
        base, exp = text.split("^", 1)
        base_value = parse_number(base)
        exp_value = parse_number(exp)
        if isinstance(exp_value, int) and exp_value < 0:
            return Fraction(base_value) ** exp_value
        return base_value ** exp_value
    if "/" in text:
        return Fraction(text)
    try:
        return int(text)
    except ValueError:
        return float(text)


def number_token(value: Number) -> str:
    """Text form of a number that :func:`parse_number` reads back exactly.
    """
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else \
            f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return str(value)
    return repr(float(value))
