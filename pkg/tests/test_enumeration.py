import networkx as nx
import pytest

from hakenpoly.andreev import check_andreev
from hakenpoly.enumeration import degree_sequence_graphs, polyhedral_graphs, search_right_angled
from hakenpoly.errors import ScaleExceeded
from hakenpoly.library import all_right, cube, octahedron, pyramid
from hakenpoly.polyhedron import canonical_code, degree_census, isomorphic
from oracles import three_connected_bruteforce

KNOWN_CLASSES = {
    (0, 4): 1,
    (1, 4): 1,
    (0, 6): 1,
    (2, 4): 1,
    (0, 8): 2,
    (1, 6): 2,
    (2, 6): 9,
    (0, 10): 5,
    (1, 8): 8,
}


@pytest.mark.parametrize("n4, n3", sorted(KNOWN_CLASSES))
def test_polyhedral_graph_counts(n4, n3):
    graphs = polyhedral_graphs(n4, n3)
    assert len(graphs) == KNOWN_CLASSES[(n4, n3)]
    assert len({canonical_code(p) for p in graphs}) == len(graphs)
    for p in graphs:
        c = degree_census(p)
        assert (c.n3, c.n4) == (n3, n4) and p.num_vertices == n3 + n4


@pytest.mark.slow
@pytest.mark.parametrize("n4, n3, count", [(0, 12, 14), (2, 8, 64)])
def test_polyhedral_graph_counts_large(n4, n3, count):
    assert len(polyhedral_graphs(n4, n3)) == count


def atlas_census(n4, n3):
    """Polyhedral graphs with the given degrees, from the networkx atlas of
    all graphs on at most 7 vertices."""
    target = sorted([3] * n3 + [4] * n4)
    out = []
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() != n3 + n4 or sorted(d for _, d in g.degree()) != target:
            continue
        if nx.check_planarity(g)[0] and three_connected_bruteforce(g):
            out.append(g)
    return out


@pytest.mark.parametrize("n4, n3", [(0, 4), (1, 4), (0, 6), (2, 4), (1, 6)])
def test_counts_match_graph_atlas(n4, n3):
    ours = polyhedral_graphs(n4, n3)
    atlas = atlas_census(n4, n3)
    assert len(ours) == len(atlas)
    for g in atlas:
        assert sum(nx.is_isomorphic(g, p.graph()) for p in ours) == 1


def test_generator_covers_every_degree_sequence_graph():
    # every graph the generator yields has the right degrees and is simple
    for edges in degree_sequence_graphs(1, 6):
        g = nx.Graph(edges)
        assert g.number_of_edges() == len(edges) == 11
        assert sorted(d for _, d in g.degree()) == [3] * 6 + [4]


def test_known_members():
    assert any(isomorphic(p, cube()) for p in polyhedral_graphs(0, 8))
    assert any(isomorphic(p, pyramid(4)) for p in polyhedral_graphs(1, 4))
    assert any(isomorphic(p, octahedron()) for p in polyhedral_graphs(6, 0))


@pytest.mark.parametrize("n4", [0, 1, 2])
@pytest.mark.parametrize("n3", range(9))
def test_parity(n4, n3):
    if (3 * n3 + 4 * n4) % 2:
        assert search_right_angled(n4, n3) == []
        assert polyhedral_graphs(n4, n3) == []


@pytest.mark.parametrize("n4, n3", [(1, 6), (1, 4), (0, 8)])
def test_search_examples_are_empty(n4, n3):
    assert search_right_angled(n4, n3) == []


def test_search_survivor_is_andreev_realizable():
    (oct_,) = search_right_angled(6, 0)
    assert isomorphic(oct_, octahedron())
    assert check_andreev(all_right(oct_)).realizable


def test_square_pyramid_killed_by_condition_7():
    (p,) = polyhedral_graphs(1, 4)
    assert check_andreev(all_right(p)).failed_conditions() == [7]


def test_scale_guard():
    with pytest.raises(ScaleExceeded):
        search_right_angled(1, 12)
    with pytest.raises(ValueError):
        search_right_angled(-1, 6)
