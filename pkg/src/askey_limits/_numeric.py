"""Scalar helpers shared by every module.

All core routines are written with plain ``+ - * /`` so that they work
unchanged on binary64 floats and on ``mpmath.mpf`` values.  A precision of
53 bits selects float arithmetic; anything larger switches to mpmath at
that working precision.
"""

from __future__ import annotations

import math

import mpmath

DEFAULT_PREC = 53


def as_real(x, prec: int = DEFAULT_PREC):
    """Convert x to the working scalar type for the given precision."""
    if prec <= DEFAULT_PREC:
        return float(x)
    with mpmath.workprec(prec):
        return mpmath.mpf(x)


def sqrt(x):
    """Square root dispatching on the scalar type of x."""
    if isinstance(x, mpmath.mpf):
        return mpmath.sqrt(x)
    return math.sqrt(x)


def is_finite_real(x) -> bool:
    try:
        return math.isfinite(float(x))
    except (TypeError, ValueError, OverflowError):
        return False
