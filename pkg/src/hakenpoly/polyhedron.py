"""Abstract polyhedra: cellulations of the 2-sphere with dihedral-angle labels.

A polyhedron is given by its list of faces, each a cyclic sequence of vertex
indices.  Because the 1-skeleton of an abstract polyhedron is 3-connected and
planar, the face list fixes the embedding up to reflection, so no separate
rotation system is needed.  Faces are re-oriented on construction so that
every edge is traversed in opposite directions by its two faces.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, pi
from typing import Hashable, Iterable, Mapping, NamedTuple, Sequence

import networkx as nx

from .errors import (
    DegreeTooLow,
    LabelError,
    NonManifoldEdge,
    NonManifoldVertex,
    NotSimple,
    NotSphere,
    NotThreeConnected,
    ObtuseLabel,
    PolyhedronError,
)

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


# ---------------------------------------------------------------------------
# Angles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Angle:
    """Dihedral angle ``pi * numerator / denominator``, stored in lowest terms.

    Only non-obtuse angles in (0, pi/2] are representable.
    """

    numerator: int
    denominator: int

    def __post_init__(self) -> None:
        n, d = self.numerator, self.denominator
        if not (isinstance(n, int) and isinstance(d, int)) or isinstance(n, bool):
            raise TypeError(f"angle numerator/denominator must be integers, got {n!r}/{d!r}")
        if d <= 0 or n <= 0:
            raise ObtuseLabel(f"angle pi*{n}/{d} is not positive")
        g = gcd(n, d)
        n, d = n // g, d // g
        if 2 * n > d:
            raise ObtuseLabel(f"angle pi*{n}/{d} exceeds pi/2")
        object.__setattr__(self, "numerator", n)
        object.__setattr__(self, "denominator", d)

    @classmethod
    def pi_over(cls, n: int) -> "Angle":
        return cls(1, n)

    @property
    def fraction(self) -> Fraction:
        """The angle as an exact multiple of pi."""
        return Fraction(self.numerator, self.denominator)

    @property
    def is_coxeter(self) -> bool:
        return self.numerator == 1

    @property
    def order(self) -> int | None:
        return self.denominator if self.numerator == 1 else None

    @property
    def radians(self) -> float:
        return pi * self.numerator / self.denominator

    @property
    def key(self) -> tuple[int, int]:
        return (self.numerator, self.denominator)

    def __str__(self) -> str:
        if self.numerator == 1:
            return f"pi/{self.denominator}"
        return f"{self.numerator}pi/{self.denominator}"


RIGHT = Angle(1, 2)


def angle_sum(angles: Iterable[Angle]) -> Fraction:
    """Exact sum of angles, in units of pi."""
    return sum((a.fraction for a in angles), Fraction(0))


# ---------------------------------------------------------------------------
# Abstract polyhedra
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AbstractPolyhedron:
    """A validated cellulation of S^2 with a simple, 3-connected 1-skeleton.

    Construct with :func:`build_from_faces`, which orients the faces
    coherently; the raw constructor expects coherently oriented faces and
    validates everything else.
    """

    faces: tuple[tuple[int, ...], ...]
    num_vertices: int
    edges: tuple[Edge, ...] = field(init=False, compare=False, repr=False)
    edge_faces: tuple[tuple[int, int], ...] = field(init=False, compare=False, repr=False)
    neighbors: tuple[tuple[int, ...], ...] = field(init=False, compare=False, repr=False)
    vertex_faces: tuple[tuple[int, ...], ...] = field(init=False, compare=False, repr=False)
    _edge_index: dict = field(init=False, compare=False, repr=False)
    _next_dart: dict = field(init=False, compare=False, repr=False)
    _dart_face: dict = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        faces, nv = self.faces, self.num_vertices
        next_dart: dict[Edge, Edge] = {}
        dart_face: dict[Edge, int] = {}
        for fi, face in enumerate(faces):
            k = len(face)
            for i in range(k):
                u, v, w = face[i], face[(i + 1) % k], face[(i + 2) % k]
                if (u, v) in dart_face:
                    raise NotSphere(f"faces are not coherently oriented at edge {edge_key(u, v)}")
                dart_face[(u, v)] = fi
                next_dart[(u, v)] = (v, w)
        for u, v in dart_face:
            if (v, u) not in dart_face:
                raise NonManifoldEdge(f"edge {edge_key(u, v)} lies in only one face")

        edges = sorted({edge_key(u, v) for u, v in dart_face})
        edge_index = {e: i for i, e in enumerate(edges)}
        edge_faces = tuple(tuple(sorted((dart_face[e], dart_face[(e[1], e[0])]))) for e in edges)

        adj: list[list[int]] = [[] for _ in range(nv)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        neighbors = []
        vertex_faces = []
        for v in range(nv):
            if not adj[v]:
                raise PolyhedronError(f"vertex {v} lies on no face")
            start = (v, min(adj[v]))
            ring, ring_faces = [], []
            d = start
            while True:
                ring.append(d[1])
                ring_faces.append(dart_face[d])
                d = next_dart[(d[1], d[0])]
                if d == start:
                    break
            if len(ring) != len(adj[v]):
                raise NonManifoldVertex(f"the faces around vertex {v} do not form a single disc")
            neighbors.append(tuple(ring))
            vertex_faces.append(tuple(ring_faces))

        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "edge_faces", edge_faces)
        object.__setattr__(self, "neighbors", tuple(neighbors))
        object.__setattr__(self, "vertex_faces", tuple(vertex_faces))
        object.__setattr__(self, "_edge_index", edge_index)
        object.__setattr__(self, "_next_dart", next_dart)
        object.__setattr__(self, "_dart_face", dart_face)

        if nv - len(edges) + len(faces) != 2:
            raise NotSphere(
                f"Euler characteristic V - E + F = {nv} - {len(edges)} + {len(faces)} != 2"
            )
        low = [v for v in range(nv) if len(adj[v]) < 3]
        if low:
            raise DegreeTooLow(f"vertices {low} have degree < 3")
        if not is_three_connected(self):
            raise NotThreeConnected("1-skeleton is not 3-connected")

    # -- sizes ---------------------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    # -- lookups -------------------------------------------------------------

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self._edge_index[edge_key(u, v)]
        except KeyError:
            raise KeyError(f"({u}, {v}) is not an edge") from None

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self._edge_index

    def face_edges(self, f: int) -> tuple[int, ...]:
        face = self.faces[f]
        k = len(face)
        return tuple(self.edge_id(face[i], face[(i + 1) % k]) for i in range(k))

    def vertex_edges(self, v: int) -> tuple[int, ...]:
        return tuple(self.edge_id(v, w) for w in self.neighbors[v])

    def shared_edge(self, f: int, g: int) -> int | None:
        """Edge id common to faces ``f`` and ``g``, or None."""
        common = set(self.face_edges(f)) & set(self.face_edges(g))
        return common.pop() if common else None

    def face_adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {f: set() for f in range(self.num_faces)}
        for f, g in self.edge_faces:
            adj[f].add(g)
            adj[g].add(f)
        return adj

    def rotate(self, dart: Edge, mirror: bool = False) -> Edge:
        """Next dart around ``dart[0]`` in the embedding (or its mirror)."""
        v, u = dart
        if not mirror:
            return self._next_dart[(u, v)]
        # inverse rotation: the dart (v, w) whose successor is (v, u)
        w = self._next_dart_inverse(v, u)
        return (v, w)

    def _next_dart_inverse(self, v: int, u: int) -> int:
        # rot(v, w) = (v, u)  <=>  next_dart[(w, v)] = (v, u)  <=>  w precedes v in face of dart (v, u)
        face = self.faces[self._dart_face[(v, u)]]
        i = face.index(v)
        return face[i - 1]

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.num_vertices))
        g.add_edges_from(self.edges)
        return g

    def __str__(self) -> str:
        return f"AbstractPolyhedron(V={self.num_vertices}, E={self.num_edges}, F={self.num_faces})"


def build_from_faces(faces: Sequence[Sequence[int]]) -> AbstractPolyhedron:
    """Validate a face list and return the polyhedron it describes.

    The orientation of ``faces[0]`` is kept; every other face is flipped if
    needed to agree with it.
    """
    faces = [tuple(int(v) for v in f) for f in faces]
    if not faces:
        raise PolyhedronError("no faces given")
    for f in faces:
        if len(f) < 3:
            raise NotSimple(f"face {list(f)} has fewer than 3 vertices (bigon or loop)")
        if len(set(f)) != len(f):
            raise NotSimple(f"face {list(f)} repeats a vertex")
    verts = {v for f in faces for v in f}
    nv = len(verts)
    if verts != set(range(nv)):
        raise PolyhedronError("vertex indices must be dense in 0..V-1")

    edge_count: Counter[Edge] = Counter()
    for f in faces:
        for i in range(len(f)):
            edge_count[edge_key(f[i], f[(i + 1) % len(f)])] += 1
    bad = sorted(e for e, c in edge_count.items() if c != 2)
    if bad:
        raise NonManifoldEdge(f"edges {bad[:5]} do not lie in exactly two faces")

    _check_vertex_links(faces, nv)
    return AbstractPolyhedron(tuple(_orient(faces)), nv)


def _check_vertex_links(faces: list[tuple[int, ...]], nv: int) -> None:
    at_vertex: dict[int, list[int]] = {v: [] for v in range(nv)}
    for fi, f in enumerate(faces):
        for v in f:
            at_vertex[v].append(fi)
    edge_faces: dict[Edge, list[int]] = {}
    for fi, f in enumerate(faces):
        for i in range(len(f)):
            edge_faces.setdefault(edge_key(f[i], f[(i + 1) % len(f)]), []).append(fi)
    for v, fs in at_vertex.items():
        adj: dict[int, set[int]] = {f: set() for f in fs}
        for e, (f, g) in edge_faces.items():
            if v in e:
                adj[f].add(g)
                adj[g].add(f)
        seen = {fs[0]}
        stack = [fs[0]]
        while stack:
            for g in adj[stack.pop()]:
                if g not in seen:
                    seen.add(g)
                    stack.append(g)
        if len(seen) != len(fs):
            raise NonManifoldVertex(f"the faces around vertex {v} do not form a single disc")


def _orient(faces: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    by_edge: dict[Edge, list[int]] = {}
    for fi, f in enumerate(faces):
        for i in range(len(f)):
            by_edge.setdefault(edge_key(f[i], f[(i + 1) % len(f)]), []).append(fi)
    oriented: dict[int, tuple[int, ...]] = {0: faces[0]}
    queue = deque([0])
    while queue:
        fi = queue.popleft()
        f = oriented[fi]
        for i in range(len(f)):
            u, v = f[i], f[(i + 1) % len(f)]
            for gi in by_edge[edge_key(u, v)]:
                if gi == fi:
                    continue
                g = faces[gi]
                # g must traverse the shared edge as v -> u
                j = g.index(v)
                want = g if g[(j + 1) % len(g)] == u else tuple(reversed(g))
                if gi in oriented:
                    if oriented[gi] != want:
                        raise NotSphere("surface is not orientable")
                else:
                    oriented[gi] = want
                    queue.append(gi)
    if len(oriented) != len(faces):
        raise NotSphere("face list is not connected")
    return [oriented[i] for i in range(len(faces))]


# ---------------------------------------------------------------------------
# Structural predicates
# ---------------------------------------------------------------------------


def _as_graph(g: "AbstractPolyhedron | nx.Graph | Iterable[tuple[int, int]]") -> nx.Graph:
    if isinstance(g, AbstractPolyhedron):
        return g.graph()
    if isinstance(g, nx.Graph):
        return g
    out = nx.Graph()
    out.add_edges_from(g)
    return out


def is_three_connected(g: "AbstractPolyhedron | nx.Graph | Iterable[tuple[int, int]]") -> bool:
    """True iff deleting any two vertices leaves the graph connected.

    Accepts a polyhedron, a networkx graph, or an edge list, so that
    candidate skeleta can be tested before a polyhedron is built.
    """
    graph = _as_graph(g)
    n = graph.number_of_nodes()
    if n < 4 or not nx.is_connected(graph):
        return False
    # 3-connected iff every single-vertex deletion leaves a biconnected graph
    for v in list(graph):
        rest = graph.subgraph(x for x in graph if x != v)
        if not nx.is_biconnected(rest):
            return False
    return True


class DegreeCensus(NamedTuple):
    n3: int
    n4: int
    higher: int
    edges: int


def degree_census(p: AbstractPolyhedron) -> DegreeCensus:
    """Counts of degree-3, degree-4 and higher-degree vertices, plus E."""
    degs = Counter(p.degree(v) for v in range(p.num_vertices))
    n3, n4 = degs.get(3, 0), degs.get(4, 0)
    higher = p.num_vertices - n3 - n4
    e = p.num_edges
    if higher == 0:
        assert 2 * e == 3 * n3 + 4 * n4, "handshake identity violated"
    return DegreeCensus(n3, n4, higher, e)


def edges_from_degree_counts(n3: int, n4: int) -> int:
    """Edge count forced by ``2E = 3*N3 + 4*N4``; odd totals are impossible."""
    total = 3 * n3 + 4 * n4
    if total % 2:
        raise ValueError(f"3*{n3} + 4*{n4} = {total} is odd; no graph has this degree sequence")
    return total // 2


# ---------------------------------------------------------------------------
# Duality
# ---------------------------------------------------------------------------


def dual(p: "AbstractPolyhedron | LabeledAbstractPolyhedron"):
    """Planar dual.  Dual vertex ``i`` is face ``i`` of ``p``; dual face ``j``
    is the ring of faces around vertex ``j``.  Labels transfer across the
    edge bijection when ``p`` is labeled."""
    if isinstance(p, LabeledAbstractPolyhedron):
        base = p.base
        d = dual(base)
        mapping = {base.edge_faces[i]: p.labels[i] for i in range(base.num_edges)}
        return LabeledAbstractPolyhedron(d, tuple(mapping[e] for e in d.edges))
    return build_from_faces([list(ring) for ring in p.vertex_faces])


# ---------------------------------------------------------------------------
# Labeled polyhedra
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LabeledAbstractPolyhedron:
    """Polyhedron with one Angle per edge, aligned with ``base.edges``."""

    base: AbstractPolyhedron
    labels: tuple[Angle, ...]

    def __post_init__(self) -> None:
        if len(self.labels) != self.base.num_edges:
            raise LabelError(
                f"{len(self.labels)} labels given for {self.base.num_edges} edges"
            )
        for a in self.labels:
            if not isinstance(a, Angle):
                raise LabelError(f"label {a!r} is not an Angle")

    @property
    def num_vertices(self) -> int:
        return self.base.num_vertices

    def label(self, u: int, v: int) -> Angle:
        return self.labels[self.base.edge_id(u, v)]

    def label_map(self) -> dict[Edge, Angle]:
        return dict(zip(self.base.edges, self.labels))

    def vertex_angles(self, v: int) -> tuple[Angle, ...]:
        return tuple(self.labels[e] for e in self.base.vertex_edges(v))

    def with_labels(self, changes: Mapping[Edge, Angle]) -> "LabeledAbstractPolyhedron":
        labels = list(self.labels)
        for (u, v), a in changes.items():
            labels[self.base.edge_id(u, v)] = a
        return LabeledAbstractPolyhedron(self.base, tuple(labels))

    def __str__(self) -> str:
        counts = Counter(str(a) for a in self.labels)
        desc = ", ".join(f"{n}x{a}" for a, n in sorted(counts.items()))
        return f"Labeled{self.base} [{desc}]"


def label_polyhedron(
    p: AbstractPolyhedron,
    angles: Mapping[tuple[int, int], Angle] | None = None,
    default: Angle = RIGHT,
) -> LabeledAbstractPolyhedron:
    """Label ``p``; edges missing from ``angles`` get ``default`` (pi/2)."""
    labels = [default] * p.num_edges
    for (u, v), a in (angles or {}).items():
        if not p.has_edge(u, v):
            raise LabelError(f"({u}, {v}) is not an edge of the polyhedron")
        labels[p.edge_id(u, v)] = a
    return LabeledAbstractPolyhedron(p, tuple(labels))


# ---------------------------------------------------------------------------
# Canonical forms and isomorphism
# ---------------------------------------------------------------------------


def _bfs_code(p: AbstractPolyhedron, start: Edge, mirror: bool, edge_key_of) -> tuple[tuple, list[int]]:
    # neighbors[v] lists the ring around v in rotation order
    rings = p.neighbors
    number = {start[0]: 0}
    order = [start[0]]
    ref = {start[0]: start[1]}
    code: list = []
    i = 0
    while i < len(order):
        v = order[i]
        ring = rings[v]
        deg = len(ring)
        code.append(("d", deg))
        j = ring.index(ref[v])
        step = -1 if mirror else 1
        for k in range(deg):
            w = ring[(j + step * k) % deg]
            if w not in number:
                number[w] = len(order)
                order.append(w)
                ref[w] = v
            code.append((number[w], edge_key_of(v, w)))
        i += 1
    return tuple(code), order


def _starts(p: AbstractPolyhedron):
    # codes open with the degree of the start vertex, so only minimum-degree
    # starts can attain the minimum
    low = min(p.degree(v) for v in range(p.num_vertices))
    for u, v in p.edges:
        for dart in ((u, v), (v, u)):
            if p.degree(dart[0]) == low:
                for mirror in (False, True):
                    yield dart, mirror


def _key_fn(p, labels):
    if labels is None:
        return lambda u, v: 0
    return lambda u, v: labels[p.edge_id(u, v)].key


def canonical_code(p: "AbstractPolyhedron | LabeledAbstractPolyhedron") -> tuple:
    """Complete isomorphism invariant for (labeled) polyhedra.

    Minimum over all starting darts and both orientations of a breadth-first
    traversal code of the embedding.  3-connected planar graphs have an
    embedding unique up to reflection, so graph isomorphism and map
    isomorphism coincide and this code decides both.
    """
    base, labels = (p.base, p.labels) if isinstance(p, LabeledAbstractPolyhedron) else (p, None)
    key = _key_fn(base, labels)
    return min(_bfs_code(base, s, m, key)[0] for s, m in _starts(base))


def isomorphic(a, b) -> bool:
    return canonical_code(a) == canonical_code(b)


def automorphisms(p: "AbstractPolyhedron | LabeledAbstractPolyhedron") -> list[tuple[int, ...]]:
    """All (label-preserving) automorphisms, each as a vertex permutation."""
    base, labels = (p.base, p.labels) if isinstance(p, LabeledAbstractPolyhedron) else (p, None)
    key = _key_fn(base, labels)
    results = [(_bfs_code(base, s, m, key)) for s, m in _starts(base)]
    best = min(code for code, _ in results)
    orders = [order for code, order in results if code == best]
    ref = orders[0]
    perms = set()
    for order in orders:
        perm = [0] * base.num_vertices
        for i, v in enumerate(ref):
            perm[v] = order[i]
        perms.add(tuple(perm))
    return sorted(perms)


def relabel_vertices(
    p: "AbstractPolyhedron | LabeledAbstractPolyhedron", perm: Sequence[int]
):
    """Rename vertex ``v`` to ``perm[v]``."""
    if isinstance(p, LabeledAbstractPolyhedron):
        base = relabel_vertices(p.base, perm)
        mapping = {edge_key(perm[u], perm[v]): a for (u, v), a in p.label_map().items()}
        return LabeledAbstractPolyhedron(base, tuple(mapping[e] for e in base.edges))
    return build_from_faces([[perm[v] for v in f] for f in p.faces])


# ---------------------------------------------------------------------------
# Constructions on tagged face lists
# ---------------------------------------------------------------------------


def from_tagged_faces(
    faces: Sequence[Sequence[Hashable]],
) -> tuple[AbstractPolyhedron, tuple[Hashable, ...]]:
    """Build a polyhedron from faces over arbitrary hashable vertex names.

    Returns the polyhedron and the name of each vertex (dense index order
    follows first appearance).
    """
    index: dict[Hashable, int] = {}
    for f in faces:
        for t in f:
            if t not in index:
                index[t] = len(index)
    p = build_from_faces([[index[t] for t in f] for f in faces])
    tags = [None] * len(index)
    for t, i in index.items():
        tags[i] = t
    return p, tuple(tags)


def truncate(p: AbstractPolyhedron, vertices: Iterable[int]) -> AbstractPolyhedron:
    """Cut off each listed vertex, replacing it by a new face."""
    return truncate_tagged(p, vertices)[0]


def truncate_tagged(p: AbstractPolyhedron, vertices: Iterable[int]):
    cut = set(vertices)
    faces: list[list[Hashable]] = []
    for f in p.faces:
        out: list[Hashable] = []
        k = len(f)
        for i, v in enumerate(f):
            if v in cut:
                out.append(("t", v, f[i - 1]))
                out.append(("t", v, f[(i + 1) % k]))
            else:
                out.append(("v", v))
        faces.append(out)
    for v in sorted(cut):
        faces.append([("t", v, w) for w in p.neighbors[v]])
    return from_tagged_faces(faces)


def truncate_labeled(lp: LabeledAbstractPolyhedron, vertices: Iterable[int]) -> LabeledAbstractPolyhedron:
    """Truncate vertices; new faces get all-right edges, old edges keep labels."""
    p, tags = truncate_tagged(lp.base, vertices)
    labels = []
    for u, v in p.edges:
        a, b = tags[u], tags[v]
        if a[0] == "v" and b[0] == "v":
            labels.append(lp.label(a[1], b[1]))
        elif a[0] == "t" and b[0] == "t" and a[1] == b[1]:
            labels.append(RIGHT)
        else:
            t = a if a[0] == "t" else b
            labels.append(lp.label(t[1], t[2]))
    return LabeledAbstractPolyhedron(p, tuple(labels))


def glue_tagged(
    faces1: Sequence[Sequence[Hashable]],
    cap1: Sequence[Hashable],
    faces2: Sequence[Sequence[Hashable]],
    cap2: Sequence[Hashable],
) -> list[list[Hashable]]:
    """Glue two tagged face lists along the faces ``cap1`` and ``cap2``.

    ``cap1[i]`` is identified with ``cap2[i]``; both caps are removed along
    with their vertices, and the faces meeting the caps along corresponding
    edges are merged.  Inverse of cutting along a prismatic circuit.
    """
    k = len(cap1)
    if len(cap2) != k:
        raise PolyhedronError("glued faces have different sizes")
    rename = dict(zip(cap2, cap1))
    faces2 = [[rename.get(t, t) for t in f] for f in faces2]
    caps = set(cap1)

    def is_cap(f):
        return set(f) == caps and len(f) == k

    rest1 = [list(f) for f in faces1 if not is_cap(f)]
    rest2 = [list(f) for f in faces2 if not is_cap(f)]

    def inner_path(face, a, b):
        # path strictly between a and b that avoids the edge a-b
        n = len(face)
        i = face.index(a)
        if face[(i + 1) % n] == b:
            rot = face[i + 1:] + face[: i + 1]  # b ... a
            return rot[1:-1][::-1]
        rot = face[i:] + face[:i]  # a ... b at end
        return rot[1:-1]

    merged: list[list[Hashable]] = []
    used1: set[int] = set()
    used2: set[int] = set()
    for i in range(k):
        a, b = cap1[i], cap1[(i + 1) % k]
        f1 = [j for j, f in enumerate(rest1) if a in f and b in f and _adjacent(f, a, b)]
        f2 = [j for j, f in enumerate(rest2) if a in f and b in f and _adjacent(f, a, b)]
        if len(f1) != 1 or len(f2) != 1:
            raise PolyhedronError("cap edge does not border exactly one face on each side")
        used1.add(f1[0])
        used2.add(f2[0])
        # x-path runs from the b side to the a side, y-path from a back to b
        x = inner_path(rest1[f1[0]], a, b)[::-1]
        y = inner_path(rest2[f2[0]], a, b)
        merged.append(x + y)
    out = [f for j, f in enumerate(rest1) if j not in used1]
    out += [f for j, f in enumerate(rest2) if j not in used2]
    out += merged
    for f in out:
        if caps & set(f):
            raise PolyhedronError("cap vertices must have degree 3 to be glued")
    return out


def _adjacent(face, a, b) -> bool:
    i = face.index(a)
    n = len(face)
    return face[(i + 1) % n] == b or face[i - 1] == b


def glue(
    p1: AbstractPolyhedron, f1: int, p2: AbstractPolyhedron, f2: int, correspondence: Sequence[int]
) -> AbstractPolyhedron:
    """Glue ``p1`` and ``p2`` along faces ``f1`` and ``f2``.

    ``correspondence[i]`` is the vertex of ``p2`` matched with
    ``p1.faces[f1][i]``; the matched vertices must run around ``f2`` in
    cyclic order (either direction).
    """
    cap1 = [("a", v) for v in p1.faces[f1]]
    cap2 = [("b", v) for v in correspondence]
    if set(correspondence) != set(p2.faces[f2]):
        raise PolyhedronError("correspondence does not cover the second face")
    faces = glue_tagged(
        [[("a", v) for v in f] for f in p1.faces], cap1, [[("b", v) for v in f] for f in p2.faces], cap2
    )
    return from_tagged_faces(faces)[0]
