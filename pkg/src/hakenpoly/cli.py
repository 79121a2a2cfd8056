"""Command-line interface.

Exit codes: 0 success, 1 internal error, 2 invalid input or failed
certificate, 3 unreadable or malformed file.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import certify, fileio
from .analysis import analyze, summary_text
from .errors import FlagConflict, HakenPolyError, ParseError
from .polyhedron import degree_census
from .volume import VolumeBound, atkinson_lower, graph_type_bound, miyamoto_orbifold_bound

EXIT_OK, EXIT_INTERNAL, EXIT_INVALID, EXIT_PARSE = 0, 1, 2, 3
LAMBERT_VOLUME = certify.CONSTANTS["vol_C1"].value


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload, indent=2) if args.json else text)


def cmd_validate(args) -> int:
    try:
        lp = fileio.load(args.path)
    except ParseError:
        raise
    except (HakenPolyError, ValueError) as exc:
        _emit(args, {"valid": False, "error": type(exc).__name__, "detail": str(exc)},
              f"invalid: {type(exc).__name__}: {exc}")
        return EXIT_INVALID
    p = lp.base
    c = degree_census(p)
    payload = {"valid": True, "V": p.num_vertices, "E": p.num_edges, "F": p.num_faces, "N3": c.n3, "N4": c.n4}
    _emit(args, payload, f"valid: V={p.num_vertices} E={p.num_edges} F={p.num_faces}; "
                         "simple, planar, 3-connected")
    return EXIT_OK


def cmd_analyze(args) -> int:
    lp = fileio.load(args.path)
    report = analyze(lp)
    _emit(args, report, summary_text(report))
    return EXIT_OK


def _bound_line(b: VolumeBound) -> str:
    extra = " (clamped from a negative value)" if b.clamped else ""
    rel = ">" if b.strict else ">="
    return f"{b.name.value}: Vol {rel} {b.value:.6f}{extra}   [{b.formula}]"


def cmd_bounds(args) -> int:
    groups = {
        "file": args.path is not None,
        "vertex counts": args.n3 is not None or args.n4 is not None,
        "boundary": args.k is not None or args.x is not None,
        "quadrilaterals": any(getattr(args, f"m{i}") is not None for i in range(1, 5)),
    }
    chosen = [g for g, on in groups.items() if on]
    if len(chosen) != 1:
        raise FlagConflict(f"give exactly one of: a file, --n3/--n4, --k/--x, --m1..--m4 (got {chosen or 'none'})")
    bounds: list[VolumeBound] = []
    notes: list[str] = []
    mode = chosen[0]
    if mode == "file":
        report = analyze(fileio.load(args.path))
        payload = {"bounds": report["bounds"], "notes": report["notes"]}
        text = "\n".join(f"{b['name']}: {b['value']:.6f}   [{b['formula']}]" for b in report["bounds"])
        _emit(args, payload, text or "no bound applies to this polyhedron")
        return EXIT_OK
    if mode == "vertex counts":
        if args.n3 is None or args.n4 is None:
            raise FlagConflict("--n3 and --n4 go together")
        bounds.append(atkinson_lower(args.n3, args.n4))
    elif mode == "boundary":
        if args.k is None or args.x is None:
            raise FlagConflict("--k and --x go together")
        bounds.append(miyamoto_orbifold_bound(args.k, args.x))
    else:
        ms = [getattr(args, f"m{i}") or 0 for i in range(1, 5)]
        b = graph_type_bound(*ms, l=args.l)
        bounds.append(b)
        if b.value <= LAMBERT_VOLUME:
            fb = miyamoto_orbifold_bound(3, Fraction(1, 6))
            notes.append(
                f"below the Lambert cube volume {LAMBERT_VOLUME:.6f}; the boundary bound with k=3, x=1/6 "
                f"gives {fb.value:.6f}"
            )
    payload = {"bounds": [b.as_dict() for b in bounds], "notes": notes}
    _emit(args, payload, "\n".join([_bound_line(b) for b in bounds] + [f"note: {n}" for n in notes]))
    return EXIT_OK


def cmd_certify(args) -> int:
    wanted = []
    if args.all:
        wanted = [("all", certify.theorem_1_1_report)]
    else:
        if args.lemma_4_2:
            wanted.append(("lemma-4-2", certify.lemma_4_2_trace))
        if args.cubes:
            wanted.append(("cubes", certify.cube_certificate))
        if args.graph_type:
            wanted.append(("graph-type", certify.graph_type_case_table))
    if not wanted:
        raise FlagConflict("choose --lemma-4-2, --cubes, --graph-type or --all")
    certs = [fn() for _, fn in wanted]
    ok = all(c.overall for c in certs)
    if args.json:
        payload = certs[0].as_dict() if len(certs) == 1 else {"certificates": [c.as_dict() for c in certs]}
        print(json.dumps(payload, indent=2))
    else:
        for c in certs:
            print(f"== {c.name}: {'PASS' if c.overall else 'FAIL'}")
            for s in c.steps:
                print(f"  [{'ok' if s.passed else 'FAIL'}] {s.id}: {s.claim}")
            for err in c.validation_errors():
                print(f"  [FAIL] {err}")
    return EXIT_OK if ok else EXIT_INVALID


def cmd_enumerate_cubes(args) -> int:
    classes = certify.cube_classes()
    payload = {
        "classes": [
            {
                "name": c.name,
                "orbit_size": c.orbit_size,
                "adjacent_pi3_pairs": c.adjacent_pairs,
                "pi3_edges": [list(e) for e in c.third_edges],
                "reference_volume": round(c.volume.value, 6),
                "polyhedron": fileio.to_dict(c.representative),
            }
            for c in classes
        ],
        "total_labelings": sum(c.orbit_size for c in classes),
    }
    lines = [
        f"{c.name}: orbit {c.orbit_size:2d}, pi/3 edges {list(c.third_edges)}, "
        f"adjacent pairs {c.adjacent_pairs}, reference volume {c.volume.value:.6f}"
        for c in classes
    ]
    lines.append(f"total labelings: {payload['total_labelings']}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    ap = argparse.ArgumentParser(prog="hakenpoly", description="Hyperbolic Coxeter polyhedron tools")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", parents=[common], help="check a polyhedron file")
    v.add_argument("path")
    v.set_defaults(func=cmd_validate)

    a = sub.add_parser("analyze", parents=[common], help="Andreev conditions, decomposition, classification")
    a.add_argument("path")
    a.set_defaults(func=cmd_analyze)

    b = sub.add_parser("bounds", parents=[common], help="volume lower bounds")
    b.add_argument("path", nargs="?")
    b.add_argument("--n3", type=int)
    b.add_argument("--n4", type=int)
    b.add_argument("--k", type=int)
    b.add_argument("--x", type=Fraction)
    for i in range(1, 5):
        b.add_argument(f"--m{i}", type=int)
    b.add_argument("--l", type=float, default=0.0, help="return-path length bound (default 0)")
    b.set_defaults(func=cmd_bounds)

    c = sub.add_parser("certify", parents=[common], help="replay the case analysis")
    c.add_argument("--lemma-4-2", action="store_true")
    c.add_argument("--cubes", action="store_true")
    c.add_argument("--graph-type", action="store_true")
    c.add_argument("--all", action="store_true")
    c.set_defaults(func=cmd_certify)

    e = sub.add_parser("enumerate-cubes", parents=[common], help="the four minimal cube classes")
    e.set_defaults(func=cmd_enumerate_cubes)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (HakenPolyError, ValueError) as exc:
        print(f"invalid: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
