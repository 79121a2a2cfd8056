from itertools import combinations

import pytest

from conftest import generated_polyhedra
from hakenpoly.andreev import find_prismatic_circuits
from hakenpoly.decomposition import (
    Verdict,
    classify,
    component_codes,
    count_free_quads,
    dunbar_cut,
    essential_circuits,
    is_generalized_tetrahedron,
    is_prism,
    polyhedron_type,
    prism_tree,
    reglue,
)
from hakenpoly.errors import NoFreeQuad
from hakenpoly.library import (
    all_right,
    coxeter_triangular_prism,
    cube,
    dodecahedron,
    glued_pentagonal_prisms,
    lambert_cube,
    prism,
    tetrahedron,
    tetrahedron_353,
    truncated_coxeter_prism,
)
from hakenpoly.polyhedron import glue, isomorphic, label_polyhedron, truncate
from oracles import prismatic_circuits_bruteforce


def three_prism_chain():
    g = glued_pentagonal_prisms()
    p = prism(5)
    q = p.faces.index(next(f for f in p.faces if set(f) == {0, 1, 5, 6}))
    return glue(g, 0, p, q, [p.faces[q][(i + 1) % 4] for i in range(4)])


# -- Dunbar decomposition ----------------------------------------------------


def test_lambert_cube_is_one_component():
    d = dunbar_cut(lambert_cube())
    assert len(d.components) == 1 and d.cut_circuits == ()


def test_tetrahedron_is_identity():
    d = dunbar_cut(tetrahedron_353())
    assert len(d.components) == 1 and d.components[0] == tetrahedron_353()


def test_coxeter_prism_cuts_into_two_truncated_tetrahedra():
    d = dunbar_cut(coxeter_triangular_prism((3, 4, 3)))
    assert len(d.components) == 2
    assert d.turnover_types == ((3, 3, 4),)
    for c in classify(coxeter_triangular_prism((3, 4, 3))):
        assert c.verdict is Verdict.SMALL
        assert len(c.witness.truncated_vertices) == 1
    assert polyhedron_type(coxeter_triangular_prism((3, 4, 3))) == "decomposable"


def test_euclidean_turnover_is_not_cut():
    d = dunbar_cut(coxeter_triangular_prism((2, 2, 2)))
    assert len(d.components) == 1 and d.turnover_types == ()


def test_components_have_no_hyperbolic_turnovers():
    d = dunbar_cut(coxeter_triangular_prism((3, 4, 3)))
    assert len(d.components) == len(d.cut_circuits) + 1
    for comp in d.components:
        assert dunbar_cut(comp).cut_circuits == ()
        # circuits left over only run parallel to the all-right cap face
        assert essential_circuits(comp) == []
    for t in d.turnover_types:
        assert sum(1 / x for x in t) < 1


def test_cut_keeps_crossed_labels():
    lp = coxeter_triangular_prism((3, 4, 3))
    d = dunbar_cut(lp)
    crossed = sorted(lp.labels[e].denominator for e in d.cut_circuits[0].edges)
    for comp in d.components:
        assert sorted(a.denominator for a in comp.labels) == sorted([2] * 4 + [3] * 2 + crossed)


def test_cut_order_does_not_matter():
    # a prism stacked with extra truncated corners has several 3-circuits
    from hakenpoly.polyhedron import truncate_labeled

    lp = truncate_labeled(coxeter_triangular_prism((3, 4, 3)), [0])
    lp = truncate_labeled(lp, [lp.num_vertices - 1])
    a, b = dunbar_cut(lp, order="canonical"), dunbar_cut(lp, order="reverse")
    assert len(a.cut_circuits) == len(b.cut_circuits)
    assert component_codes(a) == component_codes(b)
    with pytest.raises(ValueError):
        dunbar_cut(lp, order="random")


# -- generalized tetrahedra --------------------------------------------------


TRUNCATIONS = [truncate(tetrahedron(), s) for r in range(5) for s in combinations(range(4), r)]


@pytest.mark.parametrize("k", range(16))
def test_every_truncation_pattern_is_recognized(k):
    p = TRUNCATIONS[k]
    w = is_generalized_tetrahedron(all_right(p))
    assert w is not None
    assert len(w.truncated_vertices) == p.num_faces - 4
    assert w.tetrahedron.base.num_vertices == 4


def test_recognition_agrees_with_exhaustive_truncation():
    for p in generated_polyhedra(80, seed=11):
        expected = any(isomorphic(p, t) for t in TRUNCATIONS)
        assert (is_generalized_tetrahedron(all_right(p)) is not None) == expected


def test_non_tetrahedra():
    assert is_generalized_tetrahedron(lambert_cube()) is None
    assert is_generalized_tetrahedron(all_right(dodecahedron())) is None
    # a triangle whose edges are not all right cannot be a truncation face
    assert is_generalized_tetrahedron(coxeter_triangular_prism((3, 4, 3))) is None


def test_truncated_prism_witness():
    w = is_generalized_tetrahedron(truncated_coxeter_prism())
    assert w is not None and len(w.truncated_vertices) == 1


def test_classification_dichotomy():
    assert [c.verdict for c in classify(tetrahedron_353())] == [Verdict.SMALL]
    assert [c.verdict for c in classify(lambert_cube())] == [Verdict.HAKEN]
    assert "essential" in classify(lambert_cube())[0].evidence


# -- prisms and prism trees --------------------------------------------------


def test_is_prism():
    assert is_prism(cube()) == 4
    assert is_prism(lambert_cube().base) == 4
    assert is_prism(prism(5)) == 5
    assert is_prism(prism(3)) == 3
    assert is_prism(dodecahedron()) is None
    assert is_prism(glued_pentagonal_prisms()) is None


def test_prism_tree_two_prisms():
    g = glued_pentagonal_prisms()
    separating = [c for c in prismatic_circuits_bruteforce(g, 4)]
    t = prism_tree(g)
    assert [n.n for n in t.nodes] == [5, 5]
    assert t.edges == ((0, 1),) and t.leaf_count == 2 and t.is_tree()
    assert len(separating) >= 1


def test_prism_tree_absent():
    assert prism_tree(cube()) is None
    assert prism_tree(dodecahedron()) is None
    assert find_prismatic_circuits(dodecahedron(), 4) == ()


def test_prism_tree_chain_of_three():
    t = prism_tree(three_prism_chain())
    assert sorted(n.n for n in t.nodes) == [5, 5, 5]
    assert t.is_tree() and t.leaf_count == 2
    assert sorted(t.degree(i) for i in range(3)) == [1, 1, 2]


@pytest.mark.parametrize("build", [glued_pentagonal_prisms, three_prism_chain])
def test_reglue_round_trip(build):
    p = build()
    q = reglue(prism_tree(p))
    assert isomorphic(p, q)
    # vertex ids are preserved, so the edge sets coincide exactly
    assert set(p.edges) == set(q.edges)
    assert {frozenset(f) for f in p.faces} == {frozenset(f) for f in q.faces}


def test_leaf_count_at_least_two_on_generated_trees():
    for p in generated_polyhedra(60, seed=3):
        t = prism_tree(p)
        if t is not None:
            assert t.is_tree()
            assert all(n.n >= 5 for n in t.nodes)
            if len(t.nodes) >= 2:
                assert t.leaf_count >= 2


# -- free quadrilaterals -----------------------------------------------------


@pytest.mark.parametrize(
    "name, counts",
    [("two_pentagonal_prisms", (2, 0, 0, 0)), ("two_pentagonal_prisms_m1_m2", (1, 1, 0, 0))],
)
def test_free_quad_counts(data, name, counts):
    lp = data(name)
    fq = count_free_quads(prism_tree(lp), lp)
    assert fq.counts == counts
    assert fq.m == prism_tree(lp).leaf_count


def test_no_free_quad(data):
    lp = data("two_pentagonal_prisms_no_free_quad")
    with pytest.raises(NoFreeQuad):
        count_free_quads(prism_tree(lp), lp)
    right = all_right(glued_pentagonal_prisms())
    with pytest.raises(NoFreeQuad):
        count_free_quads(prism_tree(right), right)


def test_free_quads_need_right_or_third_labels():
    from hakenpoly.library import PI_4

    g = glued_pentagonal_prisms()
    lp = label_polyhedron(g, {g.edges[0]: PI_4})
    with pytest.raises(ValueError):
        count_free_quads(prism_tree(lp), lp)


def test_strict_prism_tree(monkeypatch):
    from hakenpoly import decomposition
    from hakenpoly.errors import AmbiguousCut

    p = three_prism_chain()
    assert prism_tree(p, strict=True) is not None
    # two cut orders reach the same pieces; make them look inequivalent
    monkeypatch.setattr(decomposition, "_signature", lambda pieces: id(pieces))
    assert prism_tree(p).ambiguous
    with pytest.raises(AmbiguousCut):
        prism_tree(p, strict=True)
