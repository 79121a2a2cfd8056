"""Prismatic circuits and Andreev's realizability conditions.

All angle comparisons are exact: sums are Fractions in units of pi.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import cos

import numpy as np

from .errors import ObtuseLabel
from .polyhedron import AbstractPolyhedron, LabeledAbstractPolyhedron, angle_sum

ONE = Fraction(1)
TWO = Fraction(2)
THREE = Fraction(3)


@dataclass(frozen=True)
class PrismaticCircuit:
    """A prismatic k-circuit: a k-cycle of faces whose crossed edges are
    pairwise vertex-disjoint.

    ``faces[i]`` and ``faces[i+1]`` meet along ``edges[i]`` (edge ids of the
    polyhedron).  The face cycle is stored in its least rotation/reflection.
    """

    k: int
    faces: tuple[int, ...]
    edges: tuple[int, ...]

    def edge_pairs(self, p: AbstractPolyhedron) -> tuple[tuple[int, int], ...]:
        return tuple(p.edges[e] for e in self.edges)

    def angle_sum(self, lp: LabeledAbstractPolyhedron) -> Fraction:
        return angle_sum(lp.labels[e] for e in self.edges)


def _k_cycles(adj: dict[int, set[int]], k: int):
    """Simple k-cycles, each once, as tuples starting at their least node
    with ``cycle[1] < cycle[-1]``."""
    for s in sorted(adj):
        path = [s]

        def extend():
            last = path[-1]
            if len(path) == k:
                if s in adj[last] and path[1] < path[-1]:
                    yield tuple(path)
                return
            for n in sorted(adj[last]):
                if n > s and n not in path:
                    path.append(n)
                    yield from extend()
                    path.pop()

        yield from extend()


@lru_cache(maxsize=512)
def find_prismatic_circuits(p: AbstractPolyhedron, k: int) -> tuple[PrismaticCircuit, ...]:
    """All prismatic k-circuits of ``p`` (k is 3 or 4), canonically sorted."""
    if k < 3:
        raise ValueError("circuits have length at least 3")
    adj = p.face_adjacency()
    out = []
    for cyc in _k_cycles(adj, k):
        edges = tuple(p.shared_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k))
        ends = [v for e in edges for v in p.edges[e]]
        if len(set(ends)) == len(ends):
            out.append(PrismaticCircuit(k, cyc, edges))
    return tuple(sorted(out, key=lambda c: c.faces))


def triangular_prism_triangles(p: AbstractPolyhedron) -> tuple[int, int] | None:
    """The two triangular faces if ``p`` is combinatorially a triangular prism."""
    if p.num_vertices != 6 or p.num_faces != 5:
        return None
    tris = [f for f in range(p.num_faces) if len(p.faces[f]) == 3]
    if len(tris) != 2 or set(p.faces[tris[0]]) & set(p.faces[tris[1]]):
        return None
    return tris[0], tris[1]


# ---------------------------------------------------------------------------
# Andreev's theorem
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    condition: int
    detail: str
    vertices: tuple[int, ...] = ()
    edges: tuple[int, ...] = ()
    total: Fraction | None = None  # angle sum in units of pi


@dataclass(frozen=True)
class AndreevReport:
    realizable: bool
    violations: dict[int, tuple[Violation, ...]]
    ideal_vertices: frozenset[int]
    finite_vertices: frozenset[int]
    too_few_vertices: bool = False
    prismatic_3: tuple[PrismaticCircuit, ...] = field(default=(), repr=False)
    prismatic_4: tuple[PrismaticCircuit, ...] = field(default=(), repr=False)

    def failed_conditions(self) -> list[int]:
        return [c for c in range(1, 8) if self.violations[c]]


def _pi(x: Fraction) -> str:
    if x.denominator == 1:
        return "pi" if x == 1 else f"{x.numerator}pi"
    return f"{x}*pi"


def _ideal(lp: LabeledAbstractPolyhedron) -> frozenset[int]:
    p = lp.base
    out = set()
    for v in range(p.num_vertices):
        d = p.degree(v)
        if d == 4 or (d == 3 and angle_sum(lp.vertex_angles(v)) == ONE):
            out.add(v)
    return frozenset(out)


def ideal_vertices(lp: LabeledAbstractPolyhedron) -> frozenset[int]:
    """Degree-4 vertices together with degree-3 vertices whose three labels
    sum to exactly pi."""
    return _ideal(lp)


def _condition_7(lp: LabeledAbstractPolyhedron, ideal: frozenset[int]) -> list[Violation]:
    p = lp.base
    adj = p.face_adjacency()
    face_sets = [set(f) for f in p.faces]
    out = []
    for v in sorted(ideal):
        around = p.vertex_faces[v]
        for fi, fk in combinations(around, 2):
            if fk in adj[fi] or face_sets[fi] & face_sets[fk] != {v}:
                continue
            for fj in sorted(adj[fi] & adj[fk]):
                e_ij = p.shared_edge(fi, fj)
                e_jk = p.shared_edge(fj, fk)
                if v in p.edges[e_ij] or v in p.edges[e_jk]:
                    continue
                total = lp.labels[e_ij].fraction + lp.labels[e_jk].fraction
                if total >= ONE:
                    out.append(
                        Violation(
                            7,
                            f"faces {fi},{fk} meet only at ideal vertex {v}; via face {fj} "
                            f"the edge angles sum to {_pi(total)} >= pi",
                            (v,),
                            (e_ij, e_jk),
                            total,
                        )
                    )
    return out


def check_andreev(lp: LabeledAbstractPolyhedron) -> AndreevReport:
    """Evaluate conditions (1)-(7) of Andreev's theorem exactly.

    Every condition is checked independently and all violations are listed.
    A polyhedron with at most 4 vertices is outside the theorem's scope: it
    is reported with ``too_few_vertices`` and is never marked realizable.
    """
    p = lp.base
    for a in lp.labels:
        if a.fraction > Fraction(1, 2):
            raise ObtuseLabel(f"label {a} exceeds pi/2")

    v: dict[int, list[Violation]] = {c: [] for c in range(1, 8)}
    for x in range(p.num_vertices):
        d = p.degree(x)
        if d not in (3, 4):
            v[1].append(Violation(1, f"vertex {x} has degree {d}", (x,)))
        total = angle_sum(lp.vertex_angles(x))
        if d == 3 and total < ONE:
            v[2].append(Violation(2, f"vertex {x}: angle sum {_pi(total)} < pi", (x,), p.vertex_edges(x), total))
        if d == 4 and total != TWO:
            v[3].append(Violation(3, f"vertex {x}: angle sum {_pi(total)} != 2pi", (x,), p.vertex_edges(x), total))

    c3 = find_prismatic_circuits(p, 3)
    c4 = find_prismatic_circuits(p, 4)
    for c in c3:
        total = c.angle_sum(lp)
        if total >= ONE:
            v[4].append(Violation(4, f"prismatic 3-circuit {c.faces}: sum {_pi(total)} >= pi", edges=c.edges, total=total))
    for c in c4:
        total = c.angle_sum(lp)
        if total >= TWO:
            v[5].append(Violation(5, f"prismatic 4-circuit {c.faces}: sum {_pi(total)} >= 2pi", edges=c.edges, total=total))

    tris = triangular_prism_triangles(p)
    if tris is not None:
        edges = p.face_edges(tris[0]) + p.face_edges(tris[1])
        total = angle_sum(lp.labels[e] for e in edges)
        if total >= THREE:
            v[6].append(Violation(6, f"triangular prism: triangle edges sum {_pi(total)} >= 3pi", edges=edges, total=total))

    ideal = _ideal(lp)
    v[7] = _condition_7(lp, ideal)

    too_few = p.num_vertices <= 4
    violations = {c: tuple(v[c]) for c in range(1, 8)}
    realizable = not too_few and not any(violations.values())
    return AndreevReport(
        realizable=realizable,
        violations=violations,
        ideal_vertices=ideal,
        finite_vertices=frozenset(range(p.num_vertices)) - ideal,
        too_few_vertices=too_few,
        prismatic_3=c3,
        prismatic_4=c4,
    )


def tetrahedron_is_hyperbolic(lp: LabeledAbstractPolyhedron, tol: float = 1e-12) -> bool:
    """Finite-volume hyperbolic test for a labeled tetrahedron.

    Andreev's theorem does not cover four vertices; a tetrahedron is
    hyperbolic of finite volume iff its Gram matrix has negative determinant
    and every vertex link is spherical or Euclidean (angle sum >= pi).
    """
    p = lp.base
    if p.num_vertices != 4:
        raise ValueError("not a tetrahedron")
    if any(angle_sum(lp.vertex_angles(x)) < ONE for x in range(4)):
        return False
    g = np.eye(4)
    for e, (f1, f2) in enumerate(p.edge_faces):
        g[f1, f2] = g[f2, f1] = -cos(lp.labels[e].radians)
    return bool(np.linalg.det(g) < -tol)
