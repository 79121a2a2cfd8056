"""Machine-checkable replay of the case analysis locating the least-volume Haken
Coxeter polyhedron.

Each certificate is a list of steps.  A step states a claim, records the
numbers it was decided on and names the reference constants it uses.
Reference constants carry a provenance tag: ``reference`` for values quoted
from the literature (computed there with external software) and
``computed`` for values this package computes itself.
"""

from __future__ import annotations

import enum
import json
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Any

import networkx as nx

from .andreev import check_andreev, find_prismatic_circuits
from .decomposition import Verdict, classify
from .enumeration import polyhedron_from_graph, search_right_angled
from .library import PI_3, cube, dodecahedron, prism
from .polyhedron import (
    RIGHT,
    Angle,
    LabeledAbstractPolyhedron,
    automorphisms,
    canonical_code,
    degree_census,
    edges_from_degree_counts,
    is_three_connected,
    label_polyhedron,
)
from .volume import V8, atkinson_lower, graph_type_bound, miyamoto_orbifold_bound, rho3


class Provenance(enum.Enum):
    REFERENCE = "reference"
    COMPUTED = "computed"


@dataclass(frozen=True)
class Constant:
    value: float
    provenance: Provenance | None
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "value": round(self.value, 6),
            "provenance": self.provenance.value if self.provenance else None,
            "note": self.note,
        }


CONSTANTS: dict[str, Constant] = {
    "vol_C1": Constant(0.324423, Provenance.REFERENCE, "Lambert cube volume"),
    "vol_C2": Constant(0.392365, Provenance.REFERENCE, "second minimal cube"),
    "vol_C3": Constant(0.464467, Provenance.REFERENCE, "third minimal cube"),
    "vol_C4": Constant(0.634337, Provenance.REFERENCE, "fourth minimal cube"),
    "vol_right_dodecahedron": Constant(4.306207, Provenance.REFERENCE, "right-angled dodecahedron volume"),
    "min_5_prism": Constant(0.763304, Provenance.REFERENCE, "smallest Coxeter 5-prism volume"),
    "miyamoto_fallback": Constant(0.406419, Provenance.REFERENCE, "boundary bound in the two-quadrilateral case"),
    "rho3_0": Constant(0.291560, Provenance.REFERENCE, "minimum of rho3"),
    "V8": Constant(V8, Provenance.COMPUTED, "4 * Catalan's constant"),
}

CUBE_VOLUME_NAMES = ("vol_C1", "vol_C2", "vol_C3", "vol_C4")


@dataclass
class Step:
    id: str
    claim: str
    passed: bool
    evidence: dict[str, Any] = field(default_factory=dict)
    constants: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        self.passed = bool(self.passed)
        self.constants = tuple(self.constants)

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "claim": self.claim,
            "status": "pass" if self.passed else "fail",
            "evidence": _jsonable(self.evidence),
            "constants": list(self.constants),
        }


@dataclass
class Certificate:
    name: str
    steps: list[Step] = field(default_factory=list)
    referenced_constants: dict[str, Constant] = field(default_factory=dict)

    def add(self, step: Step) -> Step:
        self.steps.append(step)
        for c in step.constants:
            if c in CONSTANTS:
                self.referenced_constants.setdefault(c, CONSTANTS[c])
        return step

    def extend(self, other: "Certificate", prefix: str) -> None:
        for s in other.steps:
            self.add(Step(f"{prefix}.{s.id}", s.claim, s.passed, s.evidence, s.constants))
        for k, c in other.referenced_constants.items():
            self.referenced_constants.setdefault(k, c)

    def validation_errors(self) -> list[str]:
        """Constants cited by a step must be present and attributed."""
        errs = []
        for s in self.steps:
            for c in s.constants:
                const = self.referenced_constants.get(c)
                if const is None:
                    errs.append(f"step {s.id} cites unknown constant {c}")
                elif not isinstance(const.provenance, Provenance):
                    errs.append(f"constant {c} has no provenance")
        return errs

    @property
    def valid(self) -> bool:
        return not self.validation_errors()

    @property
    def overall(self) -> bool:
        return bool(self.steps) and self.valid and all(s.passed for s in self.steps)

    def as_dict(self) -> dict:
        return {
            "certificate": self.name,
            "overall": "pass" if self.overall else "fail",
            "steps": [s.as_dict() for s in self.steps],
            "referenced_constants": {k: c.as_dict() for k, c in sorted(self.referenced_constants.items())},
            "validation_errors": self.validation_errors(),
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.as_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        consts = {
            k: Constant(v["value"], Provenance(v["provenance"]) if v["provenance"] else None, v.get("note", ""))
            for k, v in d["referenced_constants"].items()
        }
        steps = [
            Step(s["id"], s["claim"], s["status"] == "pass", s["evidence"], tuple(s["constants"]))
            for s in d["steps"]
        ]
        return cls(d["certificate"], steps, consts)


def _jsonable(x):
    if isinstance(x, float):
        return round(x, 6)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


# ---------------------------------------------------------------------------
# Minimal cubes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CubeClass:
    name: str
    representative: LabeledAbstractPolyhedron
    orbit_size: int
    adjacent_pairs: int  # pairs of pi/3 edges sharing a vertex
    third_edges: tuple[tuple[int, int], ...]
    volume: Constant


def _cube_labelings() -> list[tuple[tuple[int, int], ...]]:
    """Choices of one edge from each prismatic 4-circuit of the cube."""
    p = cube()
    belts = [c.edge_pairs(p) for c in find_prismatic_circuits(p, 4)]
    assert len(belts) == 3
    return [tuple(sorted(choice)) for choice in product(*belts)]


def _adjacent_pairs(edges) -> int:
    return sum(1 for a, b in combinations(edges, 2) if set(a) & set(b))


def cube_classes() -> list[CubeClass]:
    """The 64 minimal labelings of the cube grouped into isometry classes,
    ordered by the number of adjacent pi/3 pairs (0 for the Lambert cube)."""
    p = cube()
    orbits: dict[tuple, list] = {}
    for choice in _cube_labelings():
        lp = label_polyhedron(p, {e: PI_3 for e in choice})
        orbits.setdefault(canonical_code(lp), []).append((choice, lp))
    classes = []
    for code, members in orbits.items():
        members.sort(key=lambda m: m[0])
        choice, lp = members[0]
        classes.append((_adjacent_pairs(choice), code, len(members), choice, lp))
    classes.sort(key=lambda c: (c[0], c[1]))
    return [
        CubeClass(f"C{i + 1}", lp, size, adj, choice, CONSTANTS[f"vol_C{i + 1}"])
        for i, (adj, _, size, choice, lp) in enumerate(classes)
    ]


def enumerate_min_cubes() -> list[LabeledAbstractPolyhedron]:
    """Representatives C1..C4 of the cubes with exactly one pi/3 edge on each
    prismatic 4-circuit and all other edges pi/2."""
    return [c.representative for c in cube_classes()]


def cube_certificate() -> Certificate:
    cert = Certificate("minimal cubes")
    labelings = _cube_labelings()
    cert.add(Step("count", "one pi/3 edge per prismatic 4-circuit gives 4^3 labelings",
                  len(labelings) == 64 and len(set(labelings)) == 64, {"labelings": len(labelings)}))
    classes = cube_classes()
    sizes = [c.orbit_size for c in classes]
    group = len(automorphisms(cube()))
    stab_ok = all(group % s == 0 and len(automorphisms(c.representative)) == group // s for c, s in zip(classes, sizes))
    cert.add(Step("orbits", "the labelings fall into 4 isometry classes whose orbit sizes sum to 64",
                  len(classes) == 4 and sum(sizes) == 64 and stab_ok,
                  {"classes": len(classes), "orbit_sizes": sizes, "symmetry_group": group,
                   "adjacent_pairs": [c.adjacent_pairs for c in classes]}))
    codes = {canonical_code(c.representative) for c in classes}
    cert.add(Step("distinct", "the class representatives are pairwise non-isomorphic",
                  len(codes) == len(classes), {"distinct_codes": len(codes)}))
    reports = [check_andreev(c.representative) for c in classes]
    cert.add(Step("andreev", "every class is realizable", all(r.realizable for r in reports),
                  {c.name: r.realizable for c, r in zip(classes, reports)}))
    c1 = classes[0]
    faces = [set(f) for f in c1.representative.base.faces]
    coplanar = any(set(a) | set(b) <= f for a, b in combinations(c1.third_edges, 2) for f in faces)
    disjoint = c1.adjacent_pairs == 0 and not coplanar
    cert.add(Step("lambert", "C1 has pairwise disjoint, pairwise non-coplanar pi/3 edges", disjoint,
                  {"edges": list(c1.third_edges)}))
    vols = [c.volume.value for c in classes]
    cert.add(Step("minimum", "among C1..C4 the least volume is that of C1",
                  min(vols) == vols[0] and all(v > vols[0] for v in vols[1:]),
                  {c.name: c.volume.value for c in classes}, CUBE_VOLUME_NAMES))
    return cert


# ---------------------------------------------------------------------------
# Right-angled polyhedra with one ideal vertex and six finite ones
# ---------------------------------------------------------------------------


def _one_ideal_six_finite_graphs() -> dict[int, list[nx.Graph]]:
    """Every simple graph on v0..v6 with v0 of degree 4 adjacent to v1..v4 and
    all other degrees 3, grouped by the number of edges inside {v1..v4}."""
    pairs = list(combinations(range(1, 7), 2))
    spokes = [(0, i) for i in range(1, 5)]
    by_inside: dict[int, list[nx.Graph]] = {}
    for rest in combinations(pairs, 7):
        deg = Counter(v for e in rest for v in e)
        if any(deg[v] != 2 for v in range(1, 5)) or deg[5] != 3 or deg[6] != 3:
            continue
        inside = sum(1 for u, v in rest if v <= 4)
        by_inside.setdefault(inside, []).append(nx.Graph(spokes + list(rest)))
    return by_inside


def _iso_classes(graphs: list[nx.Graph]) -> list[nx.Graph]:
    reps: list[nx.Graph] = []
    for g in graphs:
        if not any(nx.is_isomorphic(g, h) for h in reps):
            reps.append(g)
    return reps


def lemma_4_2_trace() -> Certificate:
    """No right-angled hyperbolic polyhedron has one ideal (4-valent) vertex
    and six finite (3-valent) ones.

    Name the ideal vertex v0, its neighbours V = {v1..v4} and the others v5,
    v6.  With ``a`` edges inside V, ``b`` from V to {v5, v6} and ``c``
    between v5 and v6, degree counting gives 2a + b = 8 and b + 2c = 6.
    """
    cert = Certificate("one ideal and six finite vertices")
    e = edges_from_degree_counts(6, 1)
    cert.add(Step("a", "the edge count is 11", e == 11 and 2 * e == 3 * 6 + 4 * 1,
                  {"2E": 2 * e, "3*N3 + 4*N4": 3 * 6 + 4}))

    # a + b + c = 7 edges avoid v0; solve the degree equations for each a
    cases = {}
    for a in range(0, 5):
        b = 8 - 2 * a
        c = (6 - b) / 2
        cases[a] = (b, c)
    feasible = [a for a, (b, c) in cases.items() if b >= 0 and c >= 0 and c == int(c)]
    cert.add(Step("b", "at least one edge joins two vertices of V (pigeonhole)",
                  0 not in feasible, {"a=0 needs c": cases[0][1]}))

    graphs = _one_ideal_six_finite_graphs()
    total = sum(len(g) for g in graphs.values())
    one = graphs.get(1, [])
    cert.add(Step("c", "exactly one edge inside V forces a non-planar graph",
                  bool(one) and not any(nx.check_planarity(g)[0] for g in one),
                  {"graphs": len(one), "classes": len(_iso_classes(one)), "planar": 0 if one else None}))

    b3, c3 = cases[3]
    b4, c4 = cases[4]
    three_bigon = c3 == 2 and not graphs.get(3)
    four_split = b4 == 0 and not graphs.get(4)
    cert.add(Step("d", "three inside edges need a double edge v5v6; four disconnect {v5, v6}",
                  three_bigon and four_split, {"a=3": {"b": b3, "c": c3}, "a=4": {"b": b4, "c": c4}}))

    two = _iso_classes(graphs.get(2, []))
    outcomes = []
    for g in two:
        if not nx.check_planarity(g)[0]:
            outcomes.append("non-planar")
        elif not is_three_connected(g):
            outcomes.append("not 3-connected")
        else:
            p = polyhedron_from_graph(list(g.edges()))
            failed = check_andreev(label_polyhedron(p)).failed_conditions()
            outcomes.append(f"violates Andreev {failed}" if failed else "realizable")
    cert.add(Step("e", "each of the 3 classes with two inside edges is eliminated",
                  len(two) == 3 and "realizable" not in outcomes,
                  {"classes": len(two), "outcomes": outcomes,
                   "edge_lists": [sorted(g.edges()) for g in two]}))

    accounted = sum(len(graphs.get(a, [])) for a in (1, 2))
    cert.add(Step("f", "the case split covers every graph with this degree census",
                  accounted == total, {"graphs": total}))

    found = search_right_angled(1, 6)
    cert.add(Step("cross", "exhaustive search finds no right-angled polyhedron with N4=1, N3=6",
                  found == [], {"survivors": len(found)}))
    return cert


# ---------------------------------------------------------------------------
# Graph-type case table
# ---------------------------------------------------------------------------


GRAPH_TYPE_CASES = (
    ("m4 >= 1", (1, 0, 0, 1)),
    ("m3 >= 1", (1, 0, 1, 0)),
    ("m2 >= 2", (0, 2, 0, 0)),
    ("m2 = 1, m1 >= 1", (1, 1, 0, 0)),
    ("m1 >= 3", (3, 0, 0, 0)),
)


def graph_type_case_table(max_leaves: int = 8) -> Certificate:
    """Quadrilateral bound for polyhedra of graph type, case by case."""
    cert = Certificate("graph type")
    vol_c = CONSTANTS["vol_C1"].value
    r0 = rho3(0.0)
    cert.add(Step("rho3", "rho3(0) = V8 / (4 pi) is the minimum of rho3",
                  abs(r0 - V8 / (4 * math.pi)) < 1e-8 and abs(r0 - CONSTANTS["rho3_0"].value) < 1e-5
                  and rho3(0.1) > r0, {"rho3(0)": r0}, ("rho3_0", "V8")))
    for label, ms in GRAPH_TYPE_CASES:
        b = graph_type_bound(*ms)
        cert.add(Step(f"case[{label}]", f"smallest instance {ms} of case {label} exceeds Vol(C)",
                      b.value > vol_c, {"m": list(ms), "bound": b.value}, ("vol_C1",)))

    sweep_bad = []
    for ms in product(range(max_leaves + 1), repeat=4):
        if not 2 <= sum(ms) <= max_leaves:
            continue
        v = graph_type_bound(*ms).value
        if (v > vol_c) != (ms != (2, 0, 0, 0)):
            sweep_bad.append(ms)
    cert.add(Step("sweep", f"every (m1..m4) with 2 <= m <= {max_leaves} exceeds Vol(C) except (2,0,0,0)",
                  not sweep_bad, {"exceptions": sweep_bad}, ("vol_C1",)))
    # the bound depends on m only through w = sum i*m_i; w >= m >= 2, w = 2 only for (2,0,0,0)
    w3 = 3 * math.pi / 6 * r0
    cert.add(Step("monotone", "the bound grows with w = sum i m_i and w >= 3 already exceeds Vol(C)",
                  w3 > vol_c, {"bound(w=3)": w3}, ("vol_C1",)))

    two = graph_type_bound(2, 0, 0, 0)
    cert.add(Step("m1=2", "two quadrilaterals with one pi/3 corner each fall short under rho3(0)",
                  two.value < vol_c, {"bound": two.value}, ("vol_C1",)))
    x = 2 * (-_quad_chi())
    fb = miyamoto_orbifold_bound(3, x)
    cert.add(Step("fallback", "the boundary bound with k=3, x=1/6 exceeds Vol(C)",
                  x == Fraction(1, 6) and abs(fb.value - CONSTANTS["miyamoto_fallback"].value) < 1e-5
                  and fb.value > vol_c,
                  {"k": 3, "x": x, "bound": fb.value}, ("miyamoto_fallback", "vol_C1")))
    return cert


def _quad_chi() -> Fraction:
    from .volume import mirrored_polygon_chi

    return mirrored_polygon_chi((2, 2, 2, 3))


# ---------------------------------------------------------------------------
# Full report
# ---------------------------------------------------------------------------


def triangular_prisms_not_haken(orders=(2, 3, 4)) -> tuple[int, int, list]:
    """Check every Coxeter labeling of the triangular prism with the given
    orders: realizable ones decompose into small pieces only.

    Returns (labelings, realizable, counterexamples)."""
    p = prism(3)
    angles = [Angle.pi_over(n) for n in orders]
    seen: set = set()
    realizable = 0
    bad = []
    for labs in product(angles, repeat=p.num_edges):
        lp = LabeledAbstractPolyhedron(p, labs)
        if not check_andreev(lp).realizable:
            continue
        code = canonical_code(lp)
        if code in seen:
            continue
        seen.add(code)
        realizable += 1
        if any(c.verdict is Verdict.HAKEN for c in classify(lp)):
            bad.append(labs)
    return len(angles) ** p.num_edges, realizable, bad


def theorem_1_1_report() -> Certificate:
    cert = Certificate("least-volume Haken Coxeter polyhedron")
    vol_c = CONSTANTS["vol_C1"].value

    # (i) no prismatic 4-circuits: the right-angled dodecahedron is the smallest
    dod = label_polyhedron(dodecahedron())
    rep = check_andreev(dod)
    census = degree_census(dod.base)
    cert.add(Step("i", "without prismatic 4-circuits the volume is at least the right-angled dodecahedron's",
                  rep.realizable and not rep.prismatic_4 and not rep.prismatic_3
                  and CONSTANTS["vol_right_dodecahedron"].value > vol_c
                  and atkinson_lower(census.n3, census.n4).value < CONSTANTS["vol_right_dodecahedron"].value,
                  {"dodecahedron_realizable": rep.realizable, "vertex_count_bound": atkinson_lower(census.n3, census.n4).value},
                  ("vol_right_dodecahedron", "vol_C1")))

    # (ii) atoroidal component: a right-angled polyhedron with an ideal vertex
    quoted = {(3, 0): 0.457, (1, 8): 0.458, (2, 3): 0.343}
    vals = {f"N4={n4},N3={n3}": atkinson_lower(n3, n4).value for (n4, n3) in quoted}
    # the logic only needs each bound above Vol(C); agreement with the quoted
    # three-decimal thresholds is recorded separately
    matches = {f"N4={n4},N3={n3}": round(atkinson_lower(n3, n4).value, 3) >= t for (n4, n3), t in quoted.items()}
    cert.add(Step("ii.vertex-count", "vertex-count bounds for N4 >= 3, (1, 8) and (2, 3) exceed Vol(C)",
                  all(v > vol_c for v in vals.values()), {"bounds": vals, "quoted_to_3dp": matches},
                  ("V8", "vol_C1")))
    parity = all(search_right_angled(1, n3) == [] for n3 in (1, 3, 5)) and all(
        (3 * n3 + 4) % 2 == 1 for n3 in (1, 3, 5))
    cert.add(Step("ii.parity", "one ideal vertex forces N3 even", parity, {}))
    pyramid = search_right_angled(1, 4)
    cert.add(Step("ii.pyramid", "N4=1, N3=4 admits no right-angled realization", pyramid == [],
                  {"survivors": len(pyramid)}))
    lemma = lemma_4_2_trace()
    cert.extend(lemma, "ii.one-ideal")

    # (iii) graph type
    cert.extend(graph_type_case_table(), "iii")

    # (iv) prisms
    total, real, bad = triangular_prisms_not_haken()
    cert.add(Step("iv.3-prism", "triangular Coxeter prisms are not Haken", not bad,
                  {"labelings": total, "realizable_classes": real, "haken": len(bad)}))
    cert.add(Step("iv.5-prism", "n-prisms with n >= 5 have volume at least the smallest 5-prism's",
                  CONSTANTS["min_5_prism"].value > vol_c, {}, ("min_5_prism", "vol_C1")))
    cert.extend(cube_certificate(), "iv.cubes")
    return cert
