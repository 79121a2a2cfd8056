"""Exhaustive enumeration of polyhedral graphs with a prescribed degree census."""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

import networkx as nx

from .andreev import check_andreev
from .errors import PolyhedronError, ScaleExceeded
from .polyhedron import AbstractPolyhedron, build_from_faces, canonical_code, label_polyhedron

MAX_VERTICES = 12


def degree_sequence_graphs(n4: int, n3: int) -> Iterator[list[tuple[int, int]]]:
    """Connected simple graphs with ``n4`` vertices of degree 4 and ``n3`` of
    degree 3, vertices numbered in breadth-first order.

    Every connected graph with this census appears at least once: number
    its vertices by a breadth-first search from a vertex of the largest
    degree, listing the children of each vertex in non-increasing degree.
    Generation only produces such numberings, which keeps the number of
    labelled duplicates small.
    """
    n = n4 + n3
    if n == 0 or (4 * n4 + 3 * n3) % 2:
        return
    deg = [0] * n
    res = [0] * n
    adj: list[set[int]] = [set() for _ in range(n)]
    edges: list[tuple[int, int]] = []
    left = {4: n4, 3: n3}

    def new_degrees(k: int, cap: int):
        # non-increasing degree sequences of length k drawn from what is left;
        # the counts stay reserved while the caller uses the yielded tuple
        if k == 0:
            yield ()
            return
        for d in (4, 3):
            if d <= cap and left[d] > 0:
                left[d] -= 1
                for rest in new_degrees(k - 1, d):
                    yield (d,) + rest
                left[d] += 1

    def rec(v: int, touched: int) -> Iterator[list[tuple[int, int]]]:
        while v < touched and res[v] == 0:
            v += 1
        if v == touched:
            if touched == n:
                yield list(edges)
            return
        need = res[v]
        old = [w for w in range(v + 1, touched) if res[w] > 0 and w not in adj[v]]
        for k_old in range(min(need, len(old)), -1, -1):
            k_new = need - k_old
            if touched + k_new > n:
                continue
            for chosen in combinations(old, k_old):
                for degs in new_degrees(k_new, 4):
                    fresh = list(range(touched, touched + k_new))
                    for w, d in zip(fresh, degs):
                        deg[w] = d
                        res[w] = d
                    targets = chosen + tuple(fresh)
                    for w in targets:
                        adj[v].add(w)
                        adj[w].add(v)
                        res[w] -= 1
                        edges.append((v, w))
                    res[v] = 0
                    yield from rec(v + 1, touched + k_new)
                    res[v] = need
                    for w in reversed(targets):
                        edges.pop()
                        res[w] += 1
                        adj[v].discard(w)
                        adj[w].discard(v)

    root = 4 if n4 else 3
    left[root] -= 1
    deg[0] = res[0] = root
    yield from rec(0, 1)


def polyhedron_from_graph(edges: list[tuple[int, int]]) -> AbstractPolyhedron | None:
    """Faces of the (unique) planar embedding of a 3-connected planar graph,
    or None if the graph is not planar or not 3-connected."""
    g = nx.Graph(edges)
    planar, emb = nx.check_planarity(g)
    if not planar:
        return None
    seen: set[tuple[int, int]] = set()
    faces = []
    for u, v in emb.edges():
        if (u, v) not in seen:
            faces.append(emb.traverse_face(u, v, mark_half_edges=seen))
    try:
        return build_from_faces(faces)  # rejects graphs that are not 3-connected
    except PolyhedronError:
        return None


def polyhedral_graphs(n4: int, n3: int) -> list[AbstractPolyhedron]:
    """All polyhedra (up to isomorphism) with n4 four-valent and n3 trivalent
    vertices, in canonical-code order."""
    found: dict[tuple, AbstractPolyhedron] = {}
    for edges in degree_sequence_graphs(n4, n3):
        p = polyhedron_from_graph(edges)
        if p is None:
            continue
        code = canonical_code(p)
        if code not in found:
            found[code] = p
    return [found[c] for c in sorted(found)]


def search_right_angled(n4: int, n3: int) -> list[AbstractPolyhedron]:
    """Polyhedra with the given degree census that pass every Andreev
    condition with all dihedral angles pi/2.

    Degree-4 vertices are then exactly the ideal ones (degree-3 vertices have
    angle sum 3pi/2 and are finite).
    """
    if n4 < 0 or n3 < 0:
        raise ValueError("vertex counts must be non-negative")
    if n4 + n3 > MAX_VERTICES:
        raise ScaleExceeded(f"N3 + N4 = {n3 + n4} exceeds the exhaustive-search limit {MAX_VERTICES}")
    if (3 * n3 + 4 * n4) % 2:
        return []
    return [p for p in polyhedral_graphs(n4, n3) if check_andreev(label_polyhedron(p)).realizable]
