"""Full analysis of a labeled polyhedron as a JSON-ready report."""

from __future__ import annotations

from fractions import Fraction

from . import fileio
from .andreev import AndreevReport, PrismaticCircuit, check_andreev, tetrahedron_is_hyperbolic
from .decomposition import Verdict, classify, count_free_quads, dunbar_cut, is_prism, prism_tree
from .errors import CrossingCircuits, NoFreeQuad
from .polyhedron import RIGHT, LabeledAbstractPolyhedron, degree_census
from .volume import atkinson_lower, graph_type_bound, miyamoto_orbifold_bound, mirrored_polygon_chi


def _frac(x: Fraction) -> str:
    return f"{x}*pi" if x != 1 else "pi"


def _circuit(lp: LabeledAbstractPolyhedron, c: PrismaticCircuit) -> dict:
    return {
        "faces": list(c.faces),
        "edges": [list(e) for e in c.edge_pairs(lp.base)],
        "angle_sum": _frac(c.angle_sum(lp)),
    }


def _andreev(rep: AndreevReport) -> dict:
    return {
        "realizable": rep.realizable,
        "too_few_vertices": rep.too_few_vertices,
        "failed_conditions": rep.failed_conditions(),
        "violations": [
            {"condition": v.condition, "detail": v.detail} for c in range(1, 8) for v in rep.violations[c]
        ],
        "ideal_vertices": sorted(rep.ideal_vertices),
    }


def _component(lp: LabeledAbstractPolyhedron) -> dict:
    p = lp.base
    return {"V": p.num_vertices, "E": p.num_edges, "F": p.num_faces}


def analyze(lp: LabeledAbstractPolyhedron) -> dict:
    """Andreev conditions, prismatic circuits, Dunbar decomposition,
    small/Haken verdicts, prism tree and applicable volume bounds."""
    p = lp.base
    census = degree_census(p)
    rep = check_andreev(lp)
    if p.num_vertices == 4:
        realizable = tetrahedron_is_hyperbolic(lp)
        realizability_test = "gram determinant"
    else:
        realizable = rep.realizable
        realizability_test = "andreev"

    out: dict = {
        "polyhedron": fileio.to_dict(lp),
        "summary": {
            "V": p.num_vertices,
            "E": p.num_edges,
            "F": p.num_faces,
            "N3": census.n3,
            "N4": census.n4,
            "prism": is_prism(p),
            "right_angled": all(a == RIGHT for a in lp.labels),
        },
        "realizable": realizable,
        "realizability_test": realizability_test,
        "andreev": _andreev(rep),
        "prismatic_3": [_circuit(lp, c) for c in rep.prismatic_3],
        "prismatic_4": [_circuit(lp, c) for c in rep.prismatic_4],
        "dunbar": None,
        "classification": None,
        "prism_tree": None,
        "bounds": [],
        "notes": [],
    }
    if not realizable:
        return out

    try:
        d = dunbar_cut(lp)
    except CrossingCircuits as exc:
        out["notes"].append(f"decomposition failed: {exc}")
        return out
    parts = classify(lp)
    out["dunbar"] = {
        "components": [_component(c) for c in d.components],
        "cut_circuits": [list(c.faces) for c in d.cut_circuits],
        "turnover_types": [list(t) if t else None for t in d.turnover_types],
    }
    out["classification"] = {
        "type": parts[0].verdict.value if len(parts) == 1 else "decomposable",
        "components": [{"verdict": c.verdict.value, "evidence": c.evidence} for c in parts],
        "haken": len(parts) == 1 and parts[0].verdict is Verdict.HAKEN,
    }

    tree = prism_tree(lp)
    if tree is not None:
        entry: dict = {
            "nodes": [node.n for node in tree.nodes],
            "edges": [list(e) for e in tree.edges],
            "leaf_count": tree.leaf_count,
            "ambiguous": tree.ambiguous,
            "free_quads": None,
        }
        try:
            fq = count_free_quads(tree, lp)
            entry["free_quads"] = {"m": list(fq.counts), "faces": list(fq.chosen_faces)}
            if fq.m >= 2:
                out["bounds"].append(graph_type_bound(*fq.counts).as_dict())
            if fq.counts == (2, 0, 0, 0):
                # two (2,2,2,3) quadrilaterals: -chi = 2/12, elliptic order 3
                out["bounds"].append(miyamoto_orbifold_bound(3, 2 * -mirrored_polygon_chi((2, 2, 2, 3))).as_dict())
                out["notes"].append("rho3(0) is too weak for m1 = 2; the boundary bound with k=3 applies")
        except (NoFreeQuad, ValueError) as exc:
            entry["free_quads_error"] = str(exc)
        out["prism_tree"] = entry

    if out["summary"]["right_angled"] and not rep.prismatic_4:
        out["bounds"].append(atkinson_lower(census.n3, census.n4).as_dict())
    return out


def summary_text(report: dict) -> str:
    s = report["summary"]
    lines = [f"polyhedron: V={s['V']} E={s['E']} F={s['F']} (N3={s['N3']}, N4={s['N4']})"]
    a = report["andreev"]
    if report["realizability_test"] == "andreev":
        verdict = "realizable" if report["realizable"] else f"not realizable (conditions {a['failed_conditions']})"
    else:
        verdict = "hyperbolic tetrahedron" if report["realizable"] else "not a hyperbolic tetrahedron"
    lines.append(f"realizability: {verdict}")
    lines.append(f"prismatic 3-circuits: {len(report['prismatic_3'])}")
    lines.append(f"prismatic 4-circuits: {len(report['prismatic_4'])}")
    for v in a["violations"]:
        lines.append(f"  ({v['condition']}) {v['detail']}")
    if report["dunbar"] is not None:
        comps = report["dunbar"]["components"]
        lines.append(f"dunbar decomposition: {len(comps)} component(s), turnovers {report['dunbar']['turnover_types']}")
        c = report["classification"]
        lines.append(f"classification: {c['type']}")
        for i, comp in enumerate(c["components"]):
            lines.append(f"  component {i}: {comp['verdict']} ({comp['evidence']})")
    t = report["prism_tree"]
    if t is not None:
        lines.append(f"prism tree: prisms {t['nodes']}, edges {t['edges']}, leaves {t['leaf_count']}")
        if t.get("free_quads"):
            lines.append(f"  free quadrilaterals m1..m4 = {t['free_quads']['m']}")
    for b in report["bounds"]:
        lines.append(f"bound {b['name']}: {b['value']:.6f}")
    for n in report["notes"]:
        lines.append(f"note: {n}")
    return "\n".join(lines)
