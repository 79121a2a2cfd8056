"""Hyperbolic volume formulas and lower bounds.

Angles are in radians here.  ``f`` is the edge length of the regular
truncated tetrahedron with dihedral angle ``t``:
``cosh f(t) = cos t / (2 cos t - 1)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import DomainError
from .quadrature import adaptive_simpson, gauss_legendre, graded_breakpoints

CATALAN = 0.915965594177219015054603514932384110774
V8 = 4.0 * CATALAN  # regular ideal octahedron = 8 * Lobachevsky(pi/4)
THIRD_PI = math.pi / 3.0


# ---------------------------------------------------------------------------
# Lobachevsky function
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1)
def _zeta_even(terms: int = 40) -> tuple[float, ...]:
    # zeta(2n) = |B_2n| (2 pi)^(2n) / (2 (2n)!), Bernoulli numbers by Akiyama-Tanigawa
    m = 2 * terms
    a = [Fraction(0)] * (m + 1)
    bern = []
    for i in range(m + 1):
        a[i] = Fraction(1, i + 1)
        for j in range(i, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        bern.append(a[0])
    out = []
    for n in range(1, terms + 1):
        b = abs(bern[2 * n])
        out.append(float(b * Fraction(2**(2 * n - 1)) / math.factorial(2 * n)) * math.pi ** (2 * n))
    return tuple(out)


def lobachevsky(theta: float) -> float:
    """Lobachevsky function  -int_0^theta log|2 sin t| dt.

    Odd and pi-periodic.  Evaluated on (-pi/2, pi/2] from the expansion
    theta (1 - log 2|theta|) + theta * sum zeta(2n) (theta/pi)^(2n) / (n (2n+1)).
    """
    x = math.remainder(theta, math.pi)  # into [-pi/2, pi/2]
    if x == 0.0:
        return 0.0
    sign = 1.0 if x > 0 else -1.0
    x = abs(x)
    q = (x / math.pi) ** 2
    s = 0.0
    qn = 1.0
    for n, z in enumerate(_zeta_even(), start=1):
        qn *= q
        term = z * qn / (n * (2 * n + 1))
        s += term
        if term < 1e-18:
            break
    return sign * (x * (1.0 - math.log(2.0 * x)) + x * s)


# ---------------------------------------------------------------------------
# Regular truncated tetrahedra
# ---------------------------------------------------------------------------


def f(t: float) -> float:
    """Edge length of the regular truncated tetrahedron with dihedral angle t."""
    if not 0.0 <= t < THIRD_PI:
        raise DomainError(f"f(t) needs 0 <= t < pi/3, got {t!r}")
    denom = 2.0 * math.cos(t) - 1.0
    y = 2.0 * math.sin(0.5 * t) ** 2 / denom  # cosh f - 1
    return math.log1p(y + math.sqrt(y * (y + 2.0)))


def theta_of_r(r: float) -> float:
    """Inverse of :func:`f`: the dihedral angle with edge length ``r``.

    Solves cosh r = cos t / (2 cos t - 1) in closed form,
    cos t = 1 / (2 - sech r), arranged to stay accurate near r = 0 and for
    large r.
    """
    if r < 0:
        raise DomainError(f"edge length must be >= 0, got {r!r}")
    e = math.exp(-r)
    one_minus_sech = (1.0 - e) ** 2 / (1.0 + e * e)
    one_minus_cos = one_minus_sech / (1.0 + one_minus_sech)
    return 2.0 * math.asin(math.sqrt(0.5 * one_minus_cos))


def integral_f(theta: float, method: str = "gauss") -> float:
    """int_0^theta f(t) dt for 0 <= theta < pi/3.

    ``method`` is "gauss" (composite Gauss-Legendre graded toward the
    logarithmic singularity at pi/3) or "simpson" (adaptive Simpson).
    """
    if not 0.0 <= theta < THIRD_PI:
        raise DomainError(f"need 0 <= theta < pi/3, got {theta!r}")
    if theta == 0.0:
        return 0.0
    pts = graded_breakpoints(0.0, theta, THIRD_PI)
    if method == "gauss":
        return gauss_legendre(f, pts)
    if method == "simpson":
        # panel by panel, so the log singularity near pi/3 stays isolated
        tol = 1e-13 / len(pts)
        return sum(adaptive_simpson(f, a, b, tol=tol) for a, b in zip(pts[:-1], pts[1:]))
    raise ValueError(f"unknown quadrature method {method!r}")


def trunc_tet_volume(theta: float, method: str = "gauss") -> float:
    """Volume of the regular truncated tetrahedron T_theta."""
    return V8 - 3.0 * integral_f(theta, method)


def rho3(r: float, method: str = "gauss") -> float:
    """Volume of the regular truncated tetrahedron with edge length r over
    its total face area 4 (pi - 3 theta)."""
    th = theta_of_r(r)
    return trunc_tet_volume(th, method) / (4.0 * (math.pi - 3.0 * th))


# ---------------------------------------------------------------------------
# Bounds
# ---------------------------------------------------------------------------


class BoundKind(enum.Enum):
    ATKINSON_VERTEX_COUNT = "AtkinsonVertexCount"
    MIYAMOTO_BOUNDARY = "MiyamotoBoundary"
    GRAPH_TYPE_QUADS = "GraphTypeQuads"


@dataclass(frozen=True)
class VolumeBound:
    name: BoundKind
    inputs: dict = field(hash=False)
    value: float
    strict: bool
    formula: str
    clamped: bool = False

    def __post_init__(self) -> None:
        if not math.isfinite(self.value) or self.value < 0:
            raise ValueError(f"bound value must be finite and >= 0, got {self.value}")

    def as_dict(self) -> dict:
        return {
            "name": self.name.value,
            "inputs": {k: str(v) if isinstance(v, Fraction) else v for k, v in self.inputs.items()},
            "value": round(self.value, 6),
            "strict": self.strict,
            "formula": self.formula,
            "clamped": self.clamped,
        }


def atkinson_lower(n3: int, n4: int) -> VolumeBound:
    """Vertex-count lower bound for polyhedra without prismatic 4-circuits.

    Negative raw values are clamped to 0 and flagged.
    """
    if n3 < 0 or n4 < 0:
        raise ValueError("vertex counts must be non-negative")
    raw = (4 * n4 + n3 - 8) / 32.0 * V8
    return VolumeBound(
        BoundKind.ATKINSON_VERTEX_COUNT,
        {"N3": n3, "N4": n4},
        max(raw, 0.0),
        strict=True,
        formula="(4*N4 + N3 - 8)/32 * V8",
        clamped=raw < 0,
    )


def mirrored_polygon_chi(corner_orders: Sequence[int]) -> Fraction:
    """Orbifold Euler characteristic of a polygon with mirrored sides and
    corner reflectors of the given orders: 1 - k/2 + sum 1/(2 n_i)."""
    if len(corner_orders) < 3:
        raise ValueError("a polygon has at least 3 corners")
    if any(n < 2 for n in corner_orders):
        raise ValueError("corner orders are integers >= 2")
    k = len(corner_orders)
    return 1 - Fraction(k, 2) + sum(Fraction(1, 2 * n) for n in corner_orders)


def mirrored_polygon_area(corner_orders: Sequence[int]) -> float:
    """Hyperbolic area -2 pi chi (0 for Euclidean polygons)."""
    return -2.0 * math.pi * float(mirrored_polygon_chi(corner_orders))


def _check_k(k: int) -> None:
    if int(k) != k or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")


def return_path_angle(k: int, chi_boundary: float | Fraction) -> float:
    _check_k(k)
    if chi_boundary >= 0:
        raise ValueError("boundary Euler characteristic must be negative")
    return math.pi / (3.0 * (1.0 - k * float(chi_boundary)))


def return_path_bound(k: int, chi_boundary: float | Fraction) -> float:
    """Lower bound on return-path length: the edge length f(theta) of T_theta
    with theta = pi / (3 (1 - k chi))."""
    return f(return_path_angle(k, chi_boundary))


def miyamoto_theorem_bound(k: int, x: float | Fraction, method: str = "gauss") -> float:
    """Volume lower bound for a 3-orbifold Q with totally geodesic boundary,
    x = -chi(boundary of Q), k the maximal order of an elliptic element:
    2 pi x rho3(R) with R = f(pi / (3 (1 + k x))) / 2."""
    _check_k(k)
    if x <= 0:
        raise ValueError("x = -chi(boundary) must be positive")
    xf = float(x)
    radius = 0.5 * f(math.pi / (3.0 * (1.0 + k * xf)))
    th = theta_of_r(radius)
    return 2.0 * math.pi * xf / (4.0 * (math.pi - 3.0 * th)) * (V8 - 3.0 * integral_f(th, method))


def miyamoto_orbifold_bound(k: int, x: float | Fraction, method: str = "gauss") -> VolumeBound:
    """Volume bound for a polyhedron from mirrored right-angled faces.

    ``x`` is -chi of the collection of faces (as mirrored 2-orbifolds) in the
    polyhedron.  Cutting the polyhedral orbifold along them gives an orbifold
    whose boundary holds two copies of each face, so chi(boundary) = -2x, and
    the polyhedron has half its volume:
    ``miyamoto_theorem_bound(k, 2x) / 2 = 2 pi x rho3(R)``,
    ``R = f(pi / (3 (1 + 2 k x))) / 2``.
    """
    _check_k(k)
    if x <= 0:
        raise ValueError("x = -chi of the cut faces must be positive")
    radius = 0.5 * f(math.pi / (3.0 * (1.0 + 2 * k * float(x))))
    value = 0.5 * miyamoto_theorem_bound(k, 2 * x, method)
    return VolumeBound(
        BoundKind.MIYAMOTO_BOUNDARY,
        {"k": k, "x": x, "R": radius},
        value,
        strict=False,
        formula="2 pi x rho3(R),  R = f(pi/(3(1 + 2 k x)))/2",
    )


def graph_type_bound(m1: int = 0, m2: int = 0, m3: int = 0, m4: int = 0, l: float = 0.0) -> VolumeBound:
    """(pi/6) (sum i m_i) rho3(l/2) for quadrilaterals with i corners of pi/3."""
    ms = (m1, m2, m3, m4)
    if any(m < 0 for m in ms):
        raise ValueError("quadrilateral counts must be non-negative")
    if sum(ms) < 2:
        raise ValueError("a prism tree has at least two leaves (m1+m2+m3+m4 >= 2)")
    if l < 0:
        raise ValueError("return-path length bound l must be >= 0")
    weight = sum((i + 1) * m for i, m in enumerate(ms))
    return VolumeBound(
        BoundKind.GRAPH_TYPE_QUADS,
        {"m1": m1, "m2": m2, "m3": m3, "m4": m4, "l": l},
        math.pi / 6.0 * weight * rho3(l / 2.0),
        strict=False,
        formula="(pi/6) * (m1 + 2 m2 + 3 m3 + 4 m4) * rho3(l/2)",
    )
