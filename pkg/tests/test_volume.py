import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hakenpoly.errors import DomainError
from hakenpoly.volume import (
    CATALAN,
    THIRD_PI,
    V8,
    BoundKind,
    atkinson_lower,
    f,
    graph_type_bound,
    integral_f,
    lobachevsky,
    miyamoto_orbifold_bound,
    miyamoto_theorem_bound,
    mirrored_polygon_area,
    mirrored_polygon_chi,
    return_path_angle,
    return_path_bound,
    rho3,
    theta_of_r,
    trunc_tet_volume,
)
from oracles import f_mp, integral_f_mp, lobachevsky_mp, theta_bisection

# -- Lobachevsky -------------------------------------------------------------


def test_lobachevsky_special_values():
    assert lobachevsky(0.0) == 0.0
    assert abs(lobachevsky(math.pi / 2)) < 1e-14
    assert abs(lobachevsky(math.pi)) < 1e-14
    assert abs(8 * lobachevsky(math.pi / 4) - 3.663862) < 1e-5
    # maximum at pi/6
    assert lobachevsky(math.pi / 6) == pytest.approx(0.5074708, abs=1e-7)
    assert lobachevsky(math.pi / 6) > max(lobachevsky(math.pi / 6 - 1e-3), lobachevsky(math.pi / 6 + 1e-3))


@given(st.floats(-10, 10, allow_nan=False))
def test_lobachevsky_matches_clausen(x):
    assert abs(lobachevsky(x) - lobachevsky_mp(x)) < 1e-10


@given(st.floats(0.01, 3.1))
def test_lobachevsky_odd_and_periodic(x):
    assert lobachevsky(-x) == pytest.approx(-lobachevsky(x), abs=1e-12)
    assert lobachevsky(x + math.pi) == pytest.approx(lobachevsky(x), abs=1e-10)


def test_v8_two_routes():
    assert abs(trunc_tet_volume(0.0) - 8 * lobachevsky(math.pi / 4)) < 1e-8
    assert V8 == pytest.approx(4 * CATALAN)
    assert abs(V8 - 3.663862) < 1e-5


# -- f and theta -------------------------------------------------------------


def test_f_values():
    assert f(0.0) == 0.0
    assert f(THIRD_PI - 1e-12) > 10
    c = math.cos(math.pi / 6)
    assert f(math.pi / 6) == pytest.approx(math.acosh(c / (2 * c - 1)), rel=1e-14)


@pytest.mark.parametrize("t", [-0.1, THIRD_PI, 1.5])
def test_f_domain(t):
    with pytest.raises(DomainError):
        f(t)


@given(st.floats(0.0, THIRD_PI - 0.01))
def test_f_matches_mpmath(t):
    assert f(t) == pytest.approx(float(f_mp(t)), rel=1e-12, abs=1e-15)


@given(st.floats(0.0, THIRD_PI - 0.01))
def test_theta_inverts_f(t):
    assert abs(theta_of_r(f(t)) - t) < 1e-10


@given(st.floats(0.0, 30.0))
def test_f_inverts_theta(r):
    th = theta_of_r(r)
    assert 0 <= th < THIRD_PI
    if th < THIRD_PI - 0.01:
        assert abs(f(th) - r) < 1e-10
        # cosh r = cos t / (2 cos t - 1), well conditioned away from pi/3
        c = math.cos(th)
        assert c / (2 * c - 1) == pytest.approx(math.cosh(r), rel=1e-10)


@given(st.floats(0.0, 20.0))
def test_theta_matches_bisection(r):
    assert abs(theta_of_r(r) - theta_bisection(r)) < 1e-12


def test_theta_examples():
    assert theta_of_r(0.0) == 0.0
    assert abs(theta_of_r(f(0.2)) - 0.2) < 1e-10
    for s in (0.1, 0.5, 1.0):
        t = s * (THIRD_PI - 1e-3)
        assert abs(theta_of_r(f(t)) - t) < 1e-10
    assert THIRD_PI - theta_of_r(40.0) < 1e-15
    assert theta_of_r(1.0) < theta_of_r(2.0)
    with pytest.raises(DomainError):
        theta_of_r(-1.0)


# -- truncated tetrahedra and rho3 -------------------------------------------


@pytest.mark.parametrize("theta", [0.1, 0.5, math.pi / 4, 1.0, THIRD_PI - 1e-6])
def test_two_quadratures_agree(theta):
    g, s = integral_f(theta, "gauss"), integral_f(theta, "simpson")
    assert abs(g - s) < 1e-8
    assert abs(g - integral_f_mp(theta)) < 1e-9


def test_trunc_tet_volume():
    assert abs(trunc_tet_volume(0.0) - 3.663862) < 1e-5
    assert trunc_tet_volume(0.3) > trunc_tet_volume(0.6)
    assert abs(trunc_tet_volume(math.pi / 4) - trunc_tet_volume(math.pi / 4, "simpson")) < 1e-8
    with pytest.raises(DomainError):
        trunc_tet_volume(THIRD_PI)


@pytest.mark.parametrize("theta", [0.05, 0.3, 0.7, 1.0])
def test_schlafli_derivative(theta):
    h = 1e-5
    d = (trunc_tet_volume(theta + h) - trunc_tet_volume(theta - h)) / (2 * h)
    assert abs(d + 3 * f(theta)) < 1e-6


def test_rho3_at_zero():
    assert abs(rho3(0.0) - 0.291560) < 1e-5
    assert abs(rho3(0.0) * 4 * math.pi - V8) < 1e-8
    assert rho3(1.0) > rho3(0.0)


def test_rho3_monotone_on_grid():
    values = [rho3(5.0 * i / 999) for i in range(1000)]
    assert all(b > a for a, b in zip(values, values[1:]))


# -- bounds ------------------------------------------------------------------


@pytest.mark.parametrize(
    "n3, n4, lower", [(0, 3, 0.457), (8, 1, 0.457), (3, 2, 0.343)]
)
def test_vertex_count_values(n3, n4, lower):
    b = atkinson_lower(n3, n4)
    assert b.name is BoundKind.ATKINSON_VERTEX_COUNT and b.strict
    assert lower < b.value < lower + 0.001
    assert b.value == pytest.approx((4 * n4 + n3 - 8) / 32 * V8)


def test_vertex_count_clamps():
    assert atkinson_lower(8, 0).value == 0.0 and not atkinson_lower(8, 0).clamped
    b = atkinson_lower(4, 0)
    assert b.value == 0.0 and b.clamped
    with pytest.raises(ValueError):
        atkinson_lower(-1, 3)


def test_mirrored_polygons():
    assert mirrored_polygon_chi([2, 2, 2, 3]) == Fraction(-1, 12)
    assert mirrored_polygon_area([2, 2, 2, 3]) == pytest.approx(math.pi / 6)
    assert mirrored_polygon_chi([2, 2, 2, 2]) == 0
    assert mirrored_polygon_chi([2, 3, 7]) == Fraction(-1, 84)
    assert mirrored_polygon_area([2, 3, 7]) == pytest.approx(math.pi * (1 - 1 / 2 - 1 / 3 - 1 / 7))
    with pytest.raises(ValueError):
        mirrored_polygon_chi([2, 2])


def test_return_path():
    assert return_path_angle(3, Fraction(-1, 6)) == pytest.approx(2 * math.pi / 9)
    assert return_path_bound(3, Fraction(-1, 6)) == pytest.approx(f(2 * math.pi / 9))
    assert return_path_bound(1, -1) == pytest.approx(f(math.pi / 6))
    assert return_path_bound(1, -1e9) < 1e-8
    with pytest.raises(ValueError):
        return_path_bound(1, 0)
    with pytest.raises(ValueError):
        return_path_bound(0, -1)


def test_miyamoto_value():
    b = miyamoto_orbifold_bound(3, Fraction(1, 6))
    assert abs(b.value - 0.406419) < 1e-5
    assert abs(miyamoto_orbifold_bound(3, Fraction(1, 6), "simpson").value - b.value) < 1e-8
    assert b.name is BoundKind.MIYAMOTO_BOUNDARY and not b.strict


@pytest.mark.parametrize("k, x", [(1, 0.3), (2, Fraction(1, 12)), (3, Fraction(1, 6)), (5, 2.0)])
def test_miyamoto_is_half_the_doubled_boundary_bound(k, x):
    b = miyamoto_orbifold_bound(k, x)
    assert b.value == pytest.approx(0.5 * miyamoto_theorem_bound(k, 2 * x), rel=1e-14)
    assert b.value == pytest.approx(2 * math.pi * float(x) * rho3(b.inputs["R"]), rel=1e-12)
    # second quadrature scheme
    assert abs(b.value - miyamoto_orbifold_bound(k, x, "simpson").value) < 1e-8


def test_miyamoto_limits_and_errors():
    # decays like sqrt(x) log(1/x)
    values = [miyamoto_orbifold_bound(1, 10.0**-e).value for e in range(2, 14, 2)]
    assert all(b < a for a, b in zip(values, values[1:]))
    assert values[-1] < 1e-5
    with pytest.raises(ValueError):
        miyamoto_orbifold_bound(3, 0)
    with pytest.raises(ValueError):
        miyamoto_orbifold_bound(0, 1)


def test_graph_type_values():
    assert abs(graph_type_bound(m1=2).value - 0.305322) < 1e-5
    # weight 3 and 4 with two leaves
    assert graph_type_bound(m1=1, m2=1).value == pytest.approx(math.pi / 6 * 3 * rho3(0.0))
    assert graph_type_bound(m1=1, m2=1).value > 0.4579
    assert graph_type_bound(m2=2).value == pytest.approx(0.610644, abs=1e-6)
    assert graph_type_bound(m1=2, l=1.0).value > graph_type_bound(m1=2).value


def test_graph_type_preconditions():
    with pytest.raises(ValueError):
        graph_type_bound(m3=1)
    with pytest.raises(ValueError):
        graph_type_bound(m1=2, l=-1)
    with pytest.raises(ValueError):
        graph_type_bound(m1=-1, m2=3)


def test_bound_serialization():
    d = miyamoto_orbifold_bound(3, Fraction(1, 6)).as_dict()
    assert d["value"] == 0.406419 and d["inputs"]["x"] == "1/6"
