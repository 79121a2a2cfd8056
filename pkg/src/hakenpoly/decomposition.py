"""Dunbar decomposition, small/Haken classification and prism trees.

Cutting a polyhedron along a prismatic k-circuit splits each crossed edge at
its midpoint and caps both sides with a new k-gon whose edges are right
angled.  Vertices are tracked by hashable tags through successive cuts:
``("v", i)`` for vertex ``i`` of the input and ``("m", (a, b))`` for the
midpoint of the edge between tags ``a`` and ``b``.  Faces carry origins:
``("f", i)`` for an untouched input face, ``("part", i)`` for a piece of
input face ``i`` and ``("cap", key)`` for a cutting face.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Hashable, Sequence

from .andreev import PrismaticCircuit, find_prismatic_circuits
from .errors import AmbiguousCut, CrossingCircuits, NoFreeQuad, PolyhedronError
from .polyhedron import (
    RIGHT,
    AbstractPolyhedron,
    Angle,
    LabeledAbstractPolyhedron,
    canonical_code,
    from_tagged_faces,
    glue_tagged,
    label_polyhedron,
)

Tag = Hashable


@dataclass(frozen=True)
class Piece:
    """A labeled polyhedron together with vertex tags and face origins."""

    lp: LabeledAbstractPolyhedron
    tags: tuple[Tag, ...]
    origins: tuple[tuple, ...]

    @classmethod
    def from_polyhedron(cls, lp: LabeledAbstractPolyhedron) -> "Piece":
        p = lp.base
        return cls(lp, tuple(("v", i) for i in range(p.num_vertices)), tuple(("f", i) for i in range(p.num_faces)))

    @property
    def base(self) -> AbstractPolyhedron:
        return self.lp.base

    def tagged_faces(self) -> list[list[Tag]]:
        return [[self.tags[v] for v in f] for f in self.base.faces]

    def cap_faces(self) -> list[int]:
        return [i for i, o in enumerate(self.origins) if o[0] == "cap"]

    def key(self) -> tuple:
        faces = []
        for f in self.tagged_faces():
            rots = [tuple(f[i:] + f[:i]) for i in range(len(f))]
            rf = f[::-1]
            rots += [tuple(rf[i:] + rf[:i]) for i in range(len(f))]
            faces.append(min(rots, key=repr))
        return tuple(sorted(faces, key=repr))


def _sorted_pair(a: Tag, b: Tag) -> tuple[Tag, Tag]:
    return (a, b) if repr(a) <= repr(b) else (b, a)


def circuit_sides(p: AbstractPolyhedron, circuit: PrismaticCircuit) -> tuple[frozenset[int], frozenset[int]]:
    """Vertex sets on the two sides of a prismatic circuit."""
    crossed = {p.edges[e] for e in circuit.edges}
    adj: dict[int, list[int]] = {v: [] for v in range(p.num_vertices)}
    for e in p.edges:
        if e not in crossed:
            adj[e[0]].append(e[1])
            adj[e[1]].append(e[0])

    def component(start):
        seen = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return frozenset(seen)

    u0, v0 = p.edges[circuit.edges[0]]
    a = component(u0)
    b = frozenset(range(p.num_vertices)) - a
    if not b or component(v0) != b:
        raise PolyhedronError(f"circuit {circuit.faces} does not separate the sphere into two discs")
    for e in circuit.edges:
        x, y = p.edges[e]
        if (x in a) == (y in a):
            raise PolyhedronError(f"crossed edge {p.edges[e]} does not join the two sides")
    return a, b


def cut_piece(piece: Piece, circuit: PrismaticCircuit, cap_key: Hashable) -> tuple[Piece, Piece]:
    """Cut along ``circuit``; returns the pieces on each side, both capped."""
    p = piece.base
    tags = piece.tags
    sides = circuit_sides(p, circuit)
    crossed = {p.edges[e]: e for e in circuit.edges}
    mid = {e: ("m", _sorted_pair(tags[p.edges[e][0]], tags[p.edges[e][1]])) for e in circuit.edges}

    tag_label: dict[frozenset, Angle] = {}
    for (u, v), a in piece.lp.label_map().items():
        tag_label[frozenset((tags[u], tags[v]))] = a
    for e in circuit.edges:
        u, v = p.edges[e]
        a = piece.lp.labels[e]
        tag_label[frozenset((tags[u], mid[e]))] = a
        tag_label[frozenset((tags[v], mid[e]))] = a
    cap = [mid[e] for e in circuit.edges]
    for i in range(len(cap)):
        tag_label[frozenset((cap[i], cap[(i + 1) % len(cap)]))] = RIGHT

    out = []
    for side in sides:
        faces: list[list[Tag]] = []
        origins: list[tuple] = []
        for fi, face in enumerate(p.faces):
            inside = [x in side for x in face]
            if all(inside):
                faces.append([tags[x] for x in face])
                origins.append(piece.origins[fi])
            elif any(inside):
                seq: list[tuple[bool, Tag]] = []
                k = len(face)
                for i, x in enumerate(face):
                    y = face[(i + 1) % k]
                    seq.append((x in side, tags[x]))
                    e = crossed.get((x, y) if x < y else (y, x))
                    if e is not None:
                        seq.append((None, mid[e]))
                mids = [i for i, (s, _) in enumerate(seq) if s is None]
                if len(mids) != 2:
                    raise PolyhedronError(f"face {fi} is crossed {len(mids)} times by the circuit")
                n = len(seq)
                for start in mids:
                    if seq[(start + 1) % n][0]:
                        break
                arc = [seq[start][1]]
                j = (start + 1) % n
                while seq[j][0] is not None:
                    arc.append(seq[j][1])
                    j = (j + 1) % n
                arc.append(seq[j][1])
                faces.append(arc)
                o = piece.origins[fi]
                origins.append(o if o[0] == "part" else ("part", o[1]) if o[0] == "f" else ("part", o))
        faces.append(list(cap))
        origins.append(("cap", cap_key))
        base, new_tags = from_tagged_faces(faces)
        labels = tuple(tag_label[frozenset((new_tags[u], new_tags[v]))] for u, v in base.edges)
        out.append(Piece(LabeledAbstractPolyhedron(base, labels), new_tags, tuple(origins)))
    return out[0], out[1]


def _face_parallel(p: AbstractPolyhedron, side: frozenset[int], lp: LabeledAbstractPolyhedron | None = None) -> bool:
    """True if ``side`` is exactly the vertex set of one face (all-right when
    ``lp`` is given)."""
    for fi, f in enumerate(p.faces):
        if len(f) == len(side) and set(f) == side:
            if lp is None:
                return True
            return all(lp.labels[e] == RIGHT for e in p.face_edges(fi))
    return False


# ---------------------------------------------------------------------------
# Dunbar decomposition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DunbarDecomposition:
    components: tuple[LabeledAbstractPolyhedron, ...]
    cut_circuits: tuple[PrismaticCircuit, ...]
    turnover_types: tuple[tuple[int, int, int] | None, ...]
    component_tags: tuple[tuple[Tag, ...], ...] = field(repr=False, default=())
    cut_edges: tuple[tuple[tuple[Tag, Tag], ...], ...] = field(repr=False, default=())


def turnover_type(lp: LabeledAbstractPolyhedron, circuit: PrismaticCircuit) -> tuple[int, int, int] | None:
    """Cone orders (p, q, r) of the turnover around a 3-circuit, sorted;
    None unless the three crossed labels are integer submultiples of pi."""
    labels = [lp.labels[e] for e in circuit.edges]
    if not all(a.is_coxeter for a in labels):
        return None
    return tuple(sorted(a.denominator for a in labels))  # type: ignore[return-value]


def is_hyperbolic_turnover(lp: LabeledAbstractPolyhedron, circuit: PrismaticCircuit) -> bool:
    # 1/p + 1/q + 1/r < 1, read off the crossed angles
    return circuit.angle_sum(lp) < 1


def essential_circuits(lp: LabeledAbstractPolyhedron) -> list[tuple[PrismaticCircuit, tuple[frozenset, frozenset]]]:
    """Prismatic 3-circuits along which the decomposition cuts: hyperbolic
    turnover, and not parallel to an all-right triangular face."""
    p = lp.base
    out = []
    for c in find_prismatic_circuits(p, 3):
        if not is_hyperbolic_turnover(lp, c):
            continue
        sides = circuit_sides(p, c)
        if any(len(s) == 3 and _face_parallel(p, s, lp) for s in sides):
            continue
        out.append((c, sides))
    return out


def _crossing(s1: tuple[frozenset, frozenset], s2: tuple[frozenset, frozenset]) -> bool:
    return all(x & y for x in s1 for y in s2)


def dunbar_cut(lp: LabeledAbstractPolyhedron, *, order: str = "canonical") -> DunbarDecomposition:
    """Cut along all essential prismatic 3-circuits, recursively.

    ``order`` selects the first circuit cut at each step ("canonical" or
    "reverse"); the final components do not depend on it.
    """
    if order not in ("canonical", "reverse"):
        raise ValueError("order must be 'canonical' or 'reverse'")
    comps: list[Piece] = []
    cuts: list[PrismaticCircuit] = []
    turnovers: list = []
    cut_edges: list = []
    stack = [Piece.from_polyhedron(lp)]
    while stack:
        piece = stack.pop()
        ess = essential_circuits(piece.lp)
        if not ess:
            comps.append(piece)
            continue
        for (c1, s1), (c2, s2) in combinations(ess, 2):
            if _crossing(s1, s2):
                raise CrossingCircuits(f"prismatic 3-circuits {c1.faces} and {c2.faces} interleave")
        c = ess[0][0] if order == "canonical" else ess[-1][0]
        p = piece.base
        key = tuple(sorted(_sorted_pair(piece.tags[p.edges[e][0]], piece.tags[p.edges[e][1]]) for e in c.edges))
        a, b = cut_piece(piece, c, key)
        cuts.append(c)
        turnovers.append(turnover_type(piece.lp, c))
        cut_edges.append(key)
        stack.extend([b, a])
    comps.sort(key=lambda pc: repr(pc.key()))
    return DunbarDecomposition(
        components=tuple(pc.lp for pc in comps),
        cut_circuits=tuple(cuts),
        turnover_types=tuple(turnovers),
        component_tags=tuple(pc.tags for pc in comps),
        cut_edges=tuple(cut_edges),
    )


# ---------------------------------------------------------------------------
# Generalized tetrahedra and classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TetrahedronWitness:
    truncation_faces: tuple[int, ...]
    truncated_vertices: tuple[int, ...]
    tetrahedron: LabeledAbstractPolyhedron


def is_generalized_tetrahedron(lp: LabeledAbstractPolyhedron) -> TetrahedronWitness | None:
    """Witness that ``lp`` is a tetrahedron with some vertices truncated.

    Truncation faces are all-right triangles with degree-3 corners that meet
    only non-triangular faces; contracting the chosen ones must leave a
    tetrahedron.
    """
    p = lp.base
    need = p.num_faces - 4
    if need < 0:
        return None
    adj = p.face_adjacency()
    cands = []
    for f, face in enumerate(p.faces):
        if len(face) != 3 or any(p.degree(v) != 3 for v in face):
            continue
        if any(lp.labels[e] != RIGHT for e in p.face_edges(f)):
            continue
        if any(len(p.faces[g]) == 3 for g in adj[f]):
            continue
        cands.append(f)
    for chosen in combinations(cands, need):
        name = {v: ("v", v) for v in range(p.num_vertices)}
        for f in chosen:
            for v in p.faces[f]:
                name[v] = ("T", f)
        faces = []
        for f, face in enumerate(p.faces):
            if f in chosen:
                continue
            seq = [name[v] for v in face]
            seq = [t for i, t in enumerate(seq) if t != seq[i - 1]]
            faces.append(seq)
        try:
            tet, tags = from_tagged_faces(faces)
        except PolyhedronError:
            continue
        if tet.num_vertices != 4:
            continue
        labels = []
        for u, v in tet.edges:
            a = [x for x in range(p.num_vertices) if name[x] == tags[u]]
            b = [x for x in range(p.num_vertices) if name[x] == tags[v]]
            e = next(p.edge_id(x, y) for x in a for y in b if p.has_edge(x, y))
            labels.append(lp.labels[e])
        truncated = tuple(i for i, t in enumerate(tags) if t[0] == "T")
        return TetrahedronWitness(tuple(chosen), truncated, LabeledAbstractPolyhedron(tet, tuple(labels)))
    return None


class Verdict(enum.Enum):
    SMALL = "small"
    HAKEN = "haken"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    witness: TetrahedronWitness | None
    component: LabeledAbstractPolyhedron

    @property
    def evidence(self) -> str:
        if self.witness is not None:
            n = len(self.witness.truncated_vertices)
            return f"generalized tetrahedron with {n} truncated vertex(es)"
        return "not a generalized tetrahedron: contains an essential 2-suborbifold"


def classify_component(lp: LabeledAbstractPolyhedron) -> Classification:
    w = is_generalized_tetrahedron(lp)
    return Classification(Verdict.SMALL if w else Verdict.HAKEN, w, lp)


def classify(lp: LabeledAbstractPolyhedron) -> list[Classification]:
    """Small/Haken verdict for every component of the Dunbar decomposition."""
    return [classify_component(c) for c in dunbar_cut(lp).components]


def polyhedron_type(lp: LabeledAbstractPolyhedron) -> str:
    """'small' or 'haken' for a single-component decomposition, otherwise
    'decomposable'."""
    parts = classify(lp)
    if len(parts) == 1:
        return parts[0].verdict.value
    return "decomposable"


# ---------------------------------------------------------------------------
# Prisms and prism trees
# ---------------------------------------------------------------------------


def prism_faces(p: AbstractPolyhedron) -> tuple[int, int, int] | None:
    """(n, top face, bottom face) if ``p`` is an n-prism."""
    n = p.num_faces - 2
    if n < 3 or p.num_vertices != 2 * n or p.num_edges != 3 * n:
        return None
    big = [f for f in range(p.num_faces) if len(p.faces[f]) == n]
    for a, b in combinations(big, 2):
        sa, sb = set(p.faces[a]), set(p.faces[b])
        if sa & sb:
            continue
        ok = True
        for f in range(p.num_faces):
            if f in (a, b):
                continue
            face = p.faces[f]
            if len(face) != 4:
                ok = False
                break
            top = [v in sa for v in face]
            bottom = [v in sb for v in face]
            if sum(top) != 2 or sum(bottom) != 2:
                ok = False
                break
            # the two top corners must be adjacent around the quad
            i, j = [k for k in range(4) if top[k]]
            if (j - i) % 4 not in (1, 3):
                ok = False
                break
        if ok:
            return n, a, b
    return None


def is_prism(p: AbstractPolyhedron) -> int | None:
    """n if ``p`` is two n-gons joined by a belt of n quadrilaterals."""
    r = prism_faces(p)
    return r[0] if r else None


@dataclass(frozen=True)
class PrismNode:
    n: int
    piece: Piece = field(repr=False)


@dataclass(frozen=True)
class PrismTree:
    """Decomposition of a graph-type polyhedron into n-prisms (n >= 5)
    glued along quadrilaterals.  ``edges`` join node indices."""

    nodes: tuple[PrismNode, ...]
    edges: tuple[tuple[int, int], ...]
    ambiguous: bool = False

    def degree(self, i: int) -> int:
        return sum(i in e for e in self.edges)

    @property
    def leaves(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self.nodes)) if self.degree(i) == 1)

    @property
    def leaf_count(self) -> int:
        return len(self.leaves)

    def is_tree(self) -> bool:
        n = len(self.nodes)
        if len(self.edges) != n - 1:
            return False
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            ra, rb = find(a), find(b)
            if ra == rb:
                return False
            parent[ra] = rb
        return True


def _prism_candidates(piece: Piece) -> list[PrismaticCircuit]:
    p = piece.base
    caps = set(piece.cap_faces())
    out = []
    for c in find_prismatic_circuits(p, 4):
        if caps & set(c.faces):
            continue
        sides = circuit_sides(p, c)
        if any(len(s) == 4 and _face_parallel(p, s) for s in sides):
            continue
        out.append(c)
    return out


def _plan(piece: Piece, memo: dict) -> list[tuple[Piece, ...]]:
    """All minimal-size decompositions of ``piece`` into n-prisms, n >= 5."""
    key = piece.key()
    if key in memo:
        return memo[key]
    n = is_prism(piece.base)
    if n is not None:
        memo[key] = [(piece,)] if n >= 5 else []
        return memo[key]
    best: list[tuple[Piece, ...]] = []
    for c in _prism_candidates(piece):
        p = piece.base
        ck = tuple(sorted(_sorted_pair(piece.tags[p.edges[e][0]], piece.tags[p.edges[e][1]]) for e in c.edges))
        a, b = cut_piece(piece, c, ck)
        pa, pb = _plan(a, memo), _plan(b, memo)
        if not pa or not pb:
            continue
        combo = [x + y for x in pa[:1] for y in pb[:1]]
        if not best or len(combo[0]) < len(best[0]):
            best = combo
        elif len(combo[0]) == len(best[0]):
            best = best + combo
    memo[key] = best
    return best


def _tree_from_pieces(pieces: Sequence[Piece]) -> tuple[tuple[int, int], ...]:
    where: dict = {}
    for i, pc in enumerate(pieces):
        for f in pc.cap_faces():
            where.setdefault(pc.origins[f][1], []).append(i)
    return tuple(sorted(tuple(sorted(v)) for v in where.values()))


def _signature(pieces: Sequence[Piece]) -> tuple:
    edges = _tree_from_pieces(pieces)
    degs = [sum(i in e for e in edges) for i in range(len(pieces))]
    return tuple(sorted((is_prism(pc.base), d) for pc, d in zip(pieces, degs)))


def prism_tree(p: AbstractPolyhedron | LabeledAbstractPolyhedron, *, strict: bool = False) -> PrismTree | None:
    """Decompose a non-prism into n-prisms (n >= 5) glued along quadrilaterals.

    Cuts along prismatic 4-circuits are searched for a decomposition with
    the fewest pieces; among those the first in canonical circuit order wins
    and ``ambiguous`` records whether an inequivalent alternative existed
    (with ``strict`` that raises AmbiguousCut instead).  Returns None for
    prisms and for polyhedra that are not of graph type.
    """
    lp = p if isinstance(p, LabeledAbstractPolyhedron) else label_polyhedron(p)
    if is_prism(lp.base) is not None:
        return None
    plans = _plan(Piece.from_polyhedron(lp), {})
    if not plans:
        return None
    pieces = plans[0]
    ambiguous = len({_signature(pl) for pl in plans}) > 1
    if ambiguous and strict:
        raise AmbiguousCut(f"{len(plans)} minimal prism decompositions are inequivalent")
    nodes = tuple(PrismNode(is_prism(pc.base), pc) for pc in pieces)  # type: ignore[arg-type]
    return PrismTree(nodes, _tree_from_pieces(pieces), ambiguous)


def reglue(tree: PrismTree) -> AbstractPolyhedron:
    """Glue the pieces of a prism tree back together.  Vertex ``i`` of the
    result is vertex ``i`` of the polyhedron the tree was built from."""
    pieces = [node.piece for node in tree.nodes]
    faces = pieces[0].tagged_faces()
    done = {0}
    pending = list(tree.edges)
    while pending:
        for a, b in pending:
            if (a in done) != (b in done):
                new = b if a in done else a
                pc = pieces[new]
                cap_key = next(
                    pc.origins[f][1]
                    for f in pc.cap_faces()
                    if any(pieces[o].origins[g] == pc.origins[f] for o in done for g in pieces[o].cap_faces())
                )
                cap_face = next(f for f in pc.cap_faces() if pc.origins[f][1] == cap_key)
                cap = [pc.tags[v] for v in pc.base.faces[cap_face]]
                faces = glue_tagged(faces, cap, pc.tagged_faces(), cap)
                done.add(new)
                pending.remove((a, b))
                break
        else:
            raise PolyhedronError("prism tree is disconnected")
    index = {t: t[1] for f in faces for t in f}
    from .polyhedron import build_from_faces

    return build_from_faces([[index[t] for t in f] for f in faces])


# ---------------------------------------------------------------------------
# Free quadrilaterals of leaf prisms
# ---------------------------------------------------------------------------

PI_3 = Angle.pi_over(3)


@dataclass(frozen=True)
class FreeQuadCounts:
    m1: int
    m2: int
    m3: int
    m4: int
    chosen_faces: tuple[int, ...]

    @property
    def counts(self) -> tuple[int, int, int, int]:
        return (self.m1, self.m2, self.m3, self.m4)

    @property
    def m(self) -> int:
        return self.m1 + self.m2 + self.m3 + self.m4

    @property
    def weighted(self) -> int:
        """Sum of i * m_i: the number of pi/3 corners over chosen quads."""
        return self.m1 + 2 * self.m2 + 3 * self.m3 + 4 * self.m4


def quad_corner_count(lp: LabeledAbstractPolyhedron, f: int) -> int | None:
    """Number of pi/3 corners of quadrilateral face ``f`` if all its sides are
    right-angled, else None.  A corner's angle is the label of the edge
    leaving that vertex transversally to the face."""
    p = lp.base
    face = p.faces[f]
    if len(face) != 4 or any(lp.labels[e] != RIGHT for e in p.face_edges(f)):
        return None
    count = 0
    for v in face:
        if p.degree(v) != 3:
            return None
        out = [w for w in p.neighbors[v] if w not in face]
        a = lp.label(v, out[0])
        count += a == PI_3
    return count


def count_free_quads(tree: PrismTree, lp: LabeledAbstractPolyhedron) -> FreeQuadCounts:
    """For each leaf prism pick a free quadrilateral with right-angled sides
    and at least one pi/3 corner (fewest pi/3 corners, then lowest face id),
    and tally leaves by that quadrilateral's number of pi/3 corners."""
    if any(a not in (RIGHT, PI_3) for a in lp.labels):
        raise ValueError("count_free_quads needs all labels in {pi/2, pi/3}")
    m = [0, 0, 0, 0, 0]
    chosen = []
    for leaf in tree.leaves:
        pc = tree.nodes[leaf].piece
        best = None
        for fi, o in enumerate(pc.origins):
            if o[0] != "f" or len(pc.base.faces[fi]) != 4:
                continue
            c = quad_corner_count(lp, o[1])
            if c is None or c == 0:
                continue
            if best is None or (c, o[1]) < best:
                best = (c, o[1])
        if best is None:
            raise NoFreeQuad(f"leaf prism {leaf} has no free hyperbolic quadrilateral with right-angled sides")
        m[best[0]] += 1
        chosen.append(best[1])
    return FreeQuadCounts(m[1], m[2], m[3], m[4], tuple(chosen))


def component_codes(d: DunbarDecomposition) -> list[tuple]:
    return sorted(canonical_code(c) for c in d.components)
