import argparse
import json
from fractions import Fraction
from typing import Any, Dict, Union


def format_fraction(value: Union[Fraction, int]) -> str:
    """Wire form 'p/q' in lowest terms, integers as 'p/1'"""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    """Parse 'p/q' or an integer; decimal or exponent forms are refused"""
    text = text.strip()
    numerator, sep, denominator = text.partition("/")
    try:
        if sep:
            return Fraction(int(numerator), int(denominator))
        return Fraction(int(numerator))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"'{text}' is not a rational of the form p/q")


def fraction_arg(text: str) -> Fraction:
    """argparse type for rational options"""
    try:
        return parse_fraction(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def nonnegative_int(text: str) -> int:
    """argparse type for seeds"""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not an integer")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def positive_int(text: str) -> int:
    """argparse type for counts that must be at least 1"""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def dump_json(data: Dict[Any, Any]) -> str:
    """Stable JSON text: sorted keys, two-space indent, trailing newline"""
    return json.dumps(data, indent=2, sort_keys=True) + "\n"
