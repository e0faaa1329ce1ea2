"""Decimal conversion for integers past the interpreter's str/int digit limit."""

from __future__ import annotations

import math

# Stay below CPython's default int<->str limit (4300 digits).
_CHUNK = 4000


def parse_int(text: str) -> int:
    text = text.strip()
    if not text:
        raise ValueError("empty integer literal")
    sign = 1
    if text[0] in "+-":
        sign = -1 if text[0] == "-" else 1
        text = text[1:]
    if not text.isdigit():
        raise ValueError(f"not an integer: {text[:40]!r}")
    return sign * _parse_digits(text)


def _parse_digits(digits: str) -> int:
    if len(digits) <= _CHUNK:
        return int(digits)
    half = len(digits) // 2
    low = digits[half:]
    return _parse_digits(digits[:half]) * 10 ** len(low) + _parse_digits(low)


def to_decimal(value: int) -> str:
    if value < 0:
        return "-" + to_decimal(-value)
    if value.bit_length() < 13000:
        return str(value)
    digits = decimal_digits(value)
    return _format(value, digits)


def _format(value: int, width: int) -> str:
    if width <= _CHUNK:
        return str(value).zfill(width)
    half = width // 2
    high, low = divmod(value, 10**half)
    return _format(high, width - half) + _format(low, half)


def decimal_digits(value: int) -> int:
    """Number of decimal digits of |value| (1 for zero)."""
    value = abs(value)
    if value < 10:
        return 1
    guess = int(value.bit_length() * math.log10(2))
    # guess is within one of the true floor(log10); fix up exactly.
    while 10**guess > value:
        guess -= 1
    while 10 ** (guess + 1) <= value:
        guess += 1
    return guess + 1
