"""One-dimensional quadrature used by the volume formulas."""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Sequence

import numpy as np


@lru_cache(maxsize=8)
def _legendre(order: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(order)


def gauss_legendre(f: Callable[[float], float], breakpoints: Sequence[float], order: int = 20) -> float:
    """Composite Gauss-Legendre rule over consecutive ``breakpoints``."""
    x, w = _legendre(order)
    total = 0.0
    for a, b in zip(breakpoints[:-1], breakpoints[1:]):
        half, mid = 0.5 * (b - a), 0.5 * (a + b)
        total += half * sum(float(wi) * f(mid + half * float(xi)) for xi, wi in zip(x, w))
    return float(total)


def graded_breakpoints(a: float, b: float, singular_at: float, ratio: float = 0.25) -> list[float]:
    """Breakpoints on [a, b] refined geometrically toward ``singular_at >= b``.

    Consecutive panels shrink by ``ratio`` in their distance to the
    singularity, which keeps a logarithmic end-point blow-up resolved.
    """
    gap = singular_at - b
    pts = [a]
    d = singular_at - a
    while True:
        d *= ratio
        t = singular_at - d
        if t >= b or d <= gap / ratio:
            break
        pts.append(t)
    pts.append(b)
    return pts


def adaptive_simpson(
    f: Callable[[float], float], a: float, b: float, tol: float = 1e-12, max_depth: int = 60
) -> float:
    """Adaptive Simpson quadrature with Richardson correction."""

    def simpson(fa, fm, fb, h):
        return h * (fa + 4.0 * fm + fb) / 6.0

    def recurse(a, b, fa, fm, fb, whole, tol, depth):
        m = 0.5 * (a + b)
        lm, rm = 0.5 * (a + m), 0.5 * (m + b)
        flm, frm = f(lm), f(rm)
        left = simpson(fa, flm, fm, m - a)
        right = simpson(fm, frm, fb, b - m)
        delta = left + right - whole
        if depth <= 0 or abs(delta) <= 15.0 * tol:
            return left + right + delta / 15.0
        return recurse(a, m, fa, flm, fm, left, tol / 2.0, depth - 1) + recurse(
            m, b, fm, frm, fb, right, tol / 2.0, depth - 1
        )

    if a == b:
        return 0.0
    fa, fb, fm = f(a), f(b), f(0.5 * (a + b))
    return recurse(a, b, fa, fm, fb, simpson(fa, fm, fb, b - a), tol, max_depth)
