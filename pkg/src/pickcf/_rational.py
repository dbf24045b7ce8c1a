"""Parsing and formatting of exact rational scalars for the JSON wire format."""
from fractions import Fraction


def to_fraction(value):
    """Coerce ``value`` (int, Fraction, or ``"p/q"`` string) to a Fraction.

    Floats are rejected: exact paths never accept binary approximations.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def fraction_str(q):
    """Canonical ``"p/q"`` string (always with a denominator, q > 0)."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def fractions_of(values):
    return tuple(to_fraction(v) for v in values)
