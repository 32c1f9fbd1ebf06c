"""Floating-point winding-number oracle.

The only module that touches floats.  It exists to cross-check the
exact winding route with an argument-principle contour integral; the
result is used for sanity assertions only and never enters an exact
computation.
"""

from __future__ import annotations

import cmath
import math

from .errors import ZeroSymbol
from .symbols import RationalSymbol


def winding_contour(f: RationalSymbol, points: int = 4096) -> float:
    """(1/2*pi*i) integral of f'/f over |z| = 1 by the trapezoid rule.

    For f = z^w num/den the logarithmic derivative is
    w/z + num'/num - den'/den; on a uniform grid of the circle the
    trapezoid rule coincides with the midpoint-free Riemann sum.
    """
    if f.is_zero():
        raise ZeroSymbol("winding of the zero symbol")
    nump = f.num.derivative()
    denp = f.den.derivative()
    total = 0.0 + 0.0j
    for k in range(points):
        z = cmath.exp(2j * math.pi * k / points)
        logd = f.shift / z
        if f.num.degree > 0:
            logd += nump.eval_complex(z) / f.num.eval_complex(z)
        if f.den.degree > 0:
            logd -= denp.eval_complex(z) / f.den.eval_complex(z)
        total += logd * (1j * z)
    total *= 1.0 / (2j * math.pi) * (2 * math.pi / points)
    return total.real


def winding_oracle(f: RationalSymbol, points: int = 4096, tol: float = 1e-3) -> int:
    """Rounded contour integral; raises if it is not near an integer."""
    w = winding_contour(f, points)
    nearest = round(w)
    if abs(w - nearest) >= tol:
        raise ArithmeticError(
            f"contour integral {w} is not within {tol} of an integer"
        )
    return nearest
