"""Parsing and printing of exact rationals ("p/q" strings, bare integers)."""

from fractions import Fraction
import math


def to_fraction(x):
    """Coerce ints, Fractions and ``"p/q"`` strings to :class:`Fraction`.

    Floats are refused so nothing inexact leaks into lattice arithmetic.
    """
    if type(x) is Fraction:
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} {x!r} as an exact rational")


def fmt(x):
    """Exact string form: ``"3"``, ``"-1/2"``; infinities as ``"inf"``/``"-inf"``."""
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return repr(x)
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def json_value(x):
    """Value for a surface file: bare int when integral, else ``"p/q"``."""
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else fmt(x)


def rational_sqrt(x):
    """Exact square root of a nonnegative rational, or None if irrational."""
    x = Fraction(x)
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    rp, rq = math.isqrt(p), math.isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None
