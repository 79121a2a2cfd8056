import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FIXTURES, generated_polyhedra
from hakenpoly.andreev import check_andreev, find_prismatic_circuits, ideal_vertices, tetrahedron_is_hyperbolic
from hakenpoly.errors import ObtuseLabel
from hakenpoly.library import (
    PI_3,
    PI_4,
    all_right,
    coxeter_triangular_prism,
    cube,
    dodecahedron,
    lambert_cube,
    octahedron,
    prism,
    pyramid,
    random_labels,
    random_polyhedron,
    tetrahedron,
    tetrahedron_353,
)
from hakenpoly.polyhedron import RIGHT, Angle, LabeledAbstractPolyhedron, label_polyhedron, relabel_vertices
from oracles import prismatic_circuits_bruteforce


def circuit_sets(p, k):
    return {frozenset(c.faces) for c in find_prismatic_circuits(p, k)}


# -- prismatic circuits ------------------------------------------------------


@pytest.mark.parametrize("name", FIXTURES)
def test_circuits_match_bruteforce_on_fixtures(name, data):
    p = data(name).base
    assert p.num_faces <= 12
    for k in (3, 4):
        assert circuit_sets(p, k) == prismatic_circuits_bruteforce(p, k)


def test_circuits_match_bruteforce_on_generated():
    for p in generated_polyhedra(25, seed=5, max_vertices=10):
        if p.num_faces > 10:
            continue
        for k in (3, 4):
            assert circuit_sets(p, k) == prismatic_circuits_bruteforce(p, k)


def test_circuit_counts():
    assert len(find_prismatic_circuits(cube(), 4)) == 3
    assert len(find_prismatic_circuits(cube(), 3)) == 0
    assert len(find_prismatic_circuits(prism(3), 3)) == 1
    assert len(find_prismatic_circuits(tetrahedron(), 3)) == 0  # the three edges meet at a vertex
    assert len(find_prismatic_circuits(dodecahedron(), 3)) == 0
    assert len(find_prismatic_circuits(dodecahedron(), 4)) == 0
    assert len(find_prismatic_circuits(prism(5), 4)) == 5


# -- individual conditions ---------------------------------------------------


def test_lambert_cube_passes():
    r = check_andreev(lambert_cube())
    assert r.realizable
    assert len(r.prismatic_3) == 0 and len(r.prismatic_4) == 3
    assert r.ideal_vertices == frozenset()


def test_all_right_cube_fails_condition_5():
    r = check_andreev(all_right(cube()))
    assert r.failed_conditions() == [5]
    assert all(v.total == 2 for v in r.violations[5])


def test_square_pyramid_fails_condition_7():
    r = check_andreev(all_right(pyramid(4)))
    assert r.failed_conditions() == [7]
    assert r.ideal_vertices == frozenset({4})


def test_degree_five_vertex_fails_condition_1():
    r = check_andreev(all_right(pyramid(5)))
    assert 1 in r.failed_conditions()


def test_condition_2_and_3():
    lp = label_polyhedron(cube(), {(0, 1): PI_3, (0, 3): PI_3, (0, 4): PI_4})
    assert 2 in check_andreev(lp).failed_conditions()
    oct_ = label_polyhedron(octahedron(), {octahedron().edges[0]: PI_3})
    assert 3 in check_andreev(oct_).failed_conditions()
    assert check_andreev(all_right(octahedron())).realizable


def test_condition_4_on_prism():
    assert check_andreev(coxeter_triangular_prism((2, 2, 2))).failed_conditions() == [4]
    assert check_andreev(coxeter_triangular_prism((3, 4, 3))).realizable


def test_condition_6_triangular_prism():
    # laterals pi/3 keep (4) happy; all-right triangles reach 3pi
    lp = label_polyhedron(prism(3), {(0, 3): PI_3, (1, 4): PI_3, (2, 5): PI_3})
    r = check_andreev(lp)
    assert 6 in r.failed_conditions()
    assert r.violations[6][0].total == 3


def test_ideal_vertex_detection():
    lp = label_polyhedron(cube(), {(0, 1): PI_3, (0, 3): PI_3, (0, 4): PI_3})
    assert ideal_vertices(lp) == frozenset({0})


def test_tetrahedra_are_outside_andreev():
    r = check_andreev(tetrahedron_353())
    assert r.too_few_vertices and not r.realizable
    assert tetrahedron_is_hyperbolic(tetrahedron_353())
    assert not tetrahedron_is_hyperbolic(all_right(tetrahedron()))  # spherical
    # (2,3,3 / 2,3,3) spherical simplex vs the hyperbolic 3-5-3
    with pytest.raises(ValueError):
        tetrahedron_is_hyperbolic(lambert_cube())


def test_obtuse_label_rejected():
    with pytest.raises(ObtuseLabel):
        label_polyhedron(cube(), {(0, 1): Angle(2, 3)})


# -- properties --------------------------------------------------------------

labeled = st.builds(
    lambda seed, steps: random_labels(
        random.Random(seed), random_polyhedron(random.Random(seed), steps, max_vertices=12), orders=(2, 3, 4, 6)
    ),
    st.integers(0, 2**32 - 1),
    st.integers(1, 8),
)


@given(labeled, st.integers(0, 10**6))
@settings(max_examples=60)
def test_circuit_conditions_monotone_in_labels(lp, k):
    """Raising a label never repairs (4) or (5); lowering one never breaks them."""
    e = k % lp.base.num_edges
    before = set(check_andreev(lp).failed_conditions()) & {4, 5}
    up = list(lp.labels)
    up[e] = RIGHT
    after_up = set(check_andreev(LabeledAbstractPolyhedron(lp.base, tuple(up))).failed_conditions()) & {4, 5}
    assert before <= after_up
    down = list(lp.labels)
    down[e] = Angle.pi_over(7)
    after_down = set(check_andreev(LabeledAbstractPolyhedron(lp.base, tuple(down))).failed_conditions()) & {4, 5}
    assert after_down <= before


@given(labeled, st.randoms(use_true_random=False))
@settings(max_examples=40)
def test_report_invariant_under_relabeling(lp, rnd):
    perm = list(range(lp.num_vertices))
    rnd.shuffle(perm)
    a, b = check_andreev(lp), check_andreev(relabel_vertices(lp, perm))
    assert a.realizable == b.realizable
    assert a.failed_conditions() == b.failed_conditions()
    assert {c: len(v) for c, v in a.violations.items()} == {c: len(v) for c, v in b.violations.items()}
    assert {perm[v] for v in a.ideal_vertices} == set(b.ideal_vertices)
    assert sorted(c.angle_sum(lp) for c in a.prismatic_4) == sorted(
        c.angle_sum(relabel_vertices(lp, perm)) for c in b.prismatic_4
    )


def test_every_violation_is_exact():
    lp = all_right(cube())
    for v in check_andreev(lp).violations[5]:
        assert isinstance(v.total, Fraction)
