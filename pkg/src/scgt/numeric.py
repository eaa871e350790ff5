"""Shared numeric conventions for the exact and floating-point backends.

Values are either exact (``int`` / ``Fraction``) or ``float``. Comparisons
between exact operands are exact; as soon as a float is involved the
absolute tolerance applies.
"""

import os
from fractions import Fraction
from numbers import Rational

DEFAULT_TOLERANCE = 1e-9


def get_tolerance(tol=None):
    if tol is not None:
        return float(tol)
    env = os.environ.get("SCGT_TOLERANCE")
    if env:
        return float(env)
    return DEFAULT_TOLERANCE


def is_exact(x):
    return isinstance(x, Rational)


def close(a, b, tol=None):
    if is_exact(a) and is_exact(b):
        return a == b
    return abs(a - b) <= get_tolerance(tol)


def nonnegative(x, tol=None):
    if is_exact(x):
        return x >= 0
    return x >= -get_tolerance(tol)


def div(a, b):
    """``a / b`` that stays exact when both operands are exact."""
    if is_exact(a) and is_exact(b):
        return Fraction(a) / b
    return a / b


def parse_number(x):
    """JSON scalar to number. Strings such as ``"1/3"`` become exact fractions."""
    if isinstance(x, bool):
        raise TypeError(f"not a number: {x!r}")
    if isinstance(x, (int, float)):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not a number: {x!r}")


def to_json_number(x, digits=None):
    if isinstance(x, int):
        return x
    x = float(x)
    if digits is not None:
        x = round(x, digits)
        if x == 0:
            x = 0.0
    return x


def to_json_exact(x):
    """Lossless JSON form: ints stay ints, other fractions become ``"p/q"`` strings."""
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return to_json_number(x)
