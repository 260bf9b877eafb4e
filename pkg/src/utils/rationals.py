"""
Rational numbers in documents and reports: exact "p/q" strings plus a
12-significant-digit decimal rendering for humans.
"""

import re
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Any, Dict

from ..exceptions import SchemaError

_RATIONAL = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")

DECIMAL_DIGITS = 12


def parse_rational(value: Any, pointer: str = "") -> Fraction:
    """Accept "p/q", "p" or a JSON integer; floats are refused."""
    if isinstance(value, bool):
        raise SchemaError(pointer, f"expected a rational string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise SchemaError(pointer, f"expected a rational string, got {value!r}")
    match = _RATIONAL.match(value)
    if not match:
        raise SchemaError(pointer, f"cannot parse rational {value!r}")
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise SchemaError(pointer, f"zero denominator in {value!r}")
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


def decimal_string(value: Fraction, digits: int = DECIMAL_DIGITS) -> str:
    value = Fraction(value)
    with localcontext() as context:
        context.prec = digits
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def rational_field(value: Fraction) -> Dict[str, str]:
    """{"exact": "1/3", "decimal": "0.333333333333"}"""
    return {'exact': format_rational(value), 'decimal': decimal_string(value)}
