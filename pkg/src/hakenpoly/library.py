"""Standard polyhedra and the labeled examples used throughout the package."""

from __future__ import annotations

import random

from .polyhedron import (
    RIGHT,
    AbstractPolyhedron,
    Angle,
    LabeledAbstractPolyhedron,
    build_from_faces,
    dual,
    from_tagged_faces,
    glue,
    label_polyhedron,
    truncate,
)

PI_3 = Angle.pi_over(3)
PI_4 = Angle.pi_over(4)
PI_5 = Angle.pi_over(5)


def tetrahedron() -> AbstractPolyhedron:
    return build_from_faces([[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]])


def prism(n: int) -> AbstractPolyhedron:
    """n-prism: bottom n-gon on 0..n-1, top n-gon on n..2n-1, lateral quads
    ``(i, i+1, n+i+1, n+i)``."""
    if n < 3:
        raise ValueError("a prism needs n >= 3")
    faces = [list(range(n - 1, -1, -1)), list(range(n, 2 * n))]
    faces += [[i, (i + 1) % n, n + (i + 1) % n, n + i] for i in range(n)]
    return build_from_faces(faces)


def cube() -> AbstractPolyhedron:
    return prism(4)


def pyramid(n: int) -> AbstractPolyhedron:
    """Pyramid over an n-gon; the apex is vertex ``n``."""
    faces = [list(range(n - 1, -1, -1))] + [[i, (i + 1) % n, n] for i in range(n)]
    return build_from_faces(faces)


def octahedron() -> AbstractPolyhedron:
    return dual(cube())


def icosahedron() -> AbstractPolyhedron:
    top, bottom = 0, 11
    up = [1 + i for i in range(5)]
    lo = [6 + i for i in range(5)]
    faces = []
    for i in range(5):
        j = (i + 1) % 5
        faces.append([top, up[i], up[j]])
        faces.append([up[i], lo[i], up[j]])
        faces.append([up[j], lo[i], lo[j]])
        faces.append([bottom, lo[j], lo[i]])
    return build_from_faces(faces)


def dodecahedron() -> AbstractPolyhedron:
    return dual(icosahedron())


def glued_pentagonal_prisms() -> AbstractPolyhedron:
    """Two pentagonal prisms glued along a quadrilateral with a quarter turn.

    12 vertices, 4 pentagons and 4 quadrilaterals.  Gluing without the
    quarter turn would give the hexagonal prism instead.
    """
    p = prism(5)
    quad = p.faces.index(next(f for f in p.faces if set(f) == {0, 1, 5, 6}))
    cyc = p.faces[quad]
    shifted = [cyc[(i + 1) % 4] for i in range(4)]
    return glue(p, quad, p, quad, shifted)


# ---------------------------------------------------------------------------
# Labeled examples
# ---------------------------------------------------------------------------


def lambert_cube() -> LabeledAbstractPolyhedron:
    """Cube with three pairwise skew pi/3 edges, one per parallel class."""
    return label_polyhedron(cube(), {(0, 1): PI_3, (5, 6): PI_3, (3, 7): PI_3})


def all_right(p: AbstractPolyhedron) -> LabeledAbstractPolyhedron:
    return label_polyhedron(p)


def tetrahedron_353() -> LabeledAbstractPolyhedron:
    """The 3-5-3 Coxeter tetrahedron (linear Coxeter diagram 3-5-3).

    Face ``i`` is opposite vertex ``i``; the angle between faces i and j sits
    on the edge joining the two remaining vertices.
    """
    return label_polyhedron(tetrahedron(), {(2, 3): PI_3, (0, 3): PI_5, (0, 1): PI_3})


def coxeter_triangular_prism(lateral: tuple[int, int, int] = (3, 4, 3)) -> LabeledAbstractPolyhedron:
    """Triangular prism with both triangles labeled (2, 3, 3).

    ``lateral`` gives the orders on the edges (0,3), (1,4), (2,5); vertices 2
    and 5 carry the two pi/3 triangle edges.
    """
    p = prism(3)
    labels = {
        (0, 1): RIGHT, (1, 2): PI_3, (0, 2): PI_3,
        (3, 4): RIGHT, (4, 5): PI_3, (3, 5): PI_3,
    }
    for (u, v), n in zip([(0, 3), (1, 4), (2, 5)], lateral):
        labels[(u, v)] = Angle.pi_over(n)
    return label_polyhedron(p, labels)


def truncated_coxeter_prism() -> LabeledAbstractPolyhedron:
    """Triangular prism whose bottom triangle is all-right: a tetrahedron
    with one truncated vertex."""
    p = prism(3)
    labels = {(3, 4): RIGHT, (4, 5): PI_3, (3, 5): PI_3, (0, 3): PI_3, (1, 4): PI_4, (2, 5): PI_3}
    return label_polyhedron(p, labels)


# ---------------------------------------------------------------------------
# Random generation
# ---------------------------------------------------------------------------


def stack(p: AbstractPolyhedron, f: int) -> AbstractPolyhedron:
    """Erect a pyramid on face ``f`` (new vertex joined to all its corners)."""
    apex = p.num_vertices
    face = p.faces[f]
    faces = [list(g) for i, g in enumerate(p.faces) if i != f]
    k = len(face)
    faces += [[face[i], face[(i + 1) % k], apex] for i in range(k)]
    return build_from_faces(faces)


def add_diagonal(p: AbstractPolyhedron, f: int, i: int, j: int) -> AbstractPolyhedron:
    """Split face ``f`` by a chord between its corners ``i`` and ``j``."""
    face = list(p.faces[f])
    i, j = sorted((i, j))
    if j - i < 2 or (i == 0 and j == len(face) - 1):
        raise ValueError("diagonal endpoints must be non-adjacent corners")
    a = face[i : j + 1]
    b = face[j:] + face[: i + 1]
    faces = [list(g) for k, g in enumerate(p.faces) if k != f] + [a, b]
    return build_from_faces(faces)


def random_polyhedron(rng: random.Random, steps: int, max_vertices: int = 14) -> AbstractPolyhedron:
    """Random polyhedron from a tetrahedron by operations that preserve
    3-connectivity: truncation, stacking, face diagonals and duality."""
    p = tetrahedron()
    for _ in range(steps):
        op = rng.randrange(4)
        if op == 0:
            v = rng.randrange(p.num_vertices)
            if p.num_vertices + p.degree(v) - 1 <= max_vertices:
                p = truncate(p, [v])
        elif op == 1 and p.num_vertices < max_vertices:
            p = stack(p, rng.randrange(p.num_faces))
        elif op == 2:
            big = [f for f in range(p.num_faces) if len(p.faces[f]) >= 4]
            if big:
                f = rng.choice(big)
                k = len(p.faces[f])
                i = rng.randrange(k)
                j = (i + rng.randrange(2, k - 1)) % k
                p = add_diagonal(p, f, i, j)
        elif op == 3 and p.num_faces <= max_vertices:
            p = dual(p)
    return p


def random_labels(rng: random.Random, p: AbstractPolyhedron, orders=(2, 3, 4, 5, 6)) -> LabeledAbstractPolyhedron:
    return LabeledAbstractPolyhedron(p, tuple(Angle.pi_over(rng.choice(orders)) for _ in p.edges))


__all__ = [
    "tetrahedron", "prism", "cube", "pyramid", "octahedron", "icosahedron", "dodecahedron",
    "glued_pentagonal_prisms", "lambert_cube", "all_right", "tetrahedron_353",
    "coxeter_triangular_prism", "truncated_coxeter_prism", "stack", "add_diagonal",
    "random_polyhedron", "random_labels", "from_tagged_faces",
]
