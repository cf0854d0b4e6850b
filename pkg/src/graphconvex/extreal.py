"""Tolerance-aware comparisons and +inf-safe helpers.

Values handled here are "extended reals": ordinary ints/floats plus +inf
(``math.inf``).  -inf is never produced by this package.  Unit-weight
graphs keep every distance an exact int, so the relative tolerance used
below degrades to exact equality on integer data.
"""

from __future__ import annotations

import math

INF = math.inf
DEFAULT_TOL = 1e-9


def approx_eq(a, b, tol: float = DEFAULT_TOL) -> bool:
    """Equality up to relative tolerance: |a-b| <= tol * max(1, |a|, |b|).

    Exact on ints (the band is smaller than any integer gap); +inf is
    equal only to +inf.
    """
    if a == b:
        return True
    if math.isinf(a) or math.isinf(b):
        return False
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def approx_le(a, b, tol: float = DEFAULT_TOL) -> bool:
    """a <= b, also accepting an overshoot inside the approx_eq band."""
    return a <= b or approx_eq(a, b, tol)


def scaled(c, v):
    """c * v for c >= 0 under the convention 0 * inf = 0."""
    if c == 0:
        return 0
    return c * v


def exact_div(a, b):
    """a / b, staying an int when both are ints and the division is exact."""
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return a / b
