"""JSON polyhedron files.

Format::

    {"version": 1,
     "faces": [[0, 1, 2, 3], ...],
     "angles": [{"edge": [0, 1], "pi_over": 3},
                {"edge": [2, 6], "num": 1, "den": 4}]}

Edges not listed in ``angles`` are right angled.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import ParseError
from .polyhedron import RIGHT, Angle, LabeledAbstractPolyhedron, build_from_faces, label_polyhedron

FORMAT_VERSION = 1


def to_dict(lp: LabeledAbstractPolyhedron) -> dict:
    angles = []
    for (u, v), a in lp.label_map().items():
        if a == RIGHT:
            continue
        if a.numerator == 1:
            angles.append({"edge": [u, v], "pi_over": a.denominator})
        else:
            angles.append({"edge": [u, v], "num": a.numerator, "den": a.denominator})
    return {"version": FORMAT_VERSION, "faces": [list(f) for f in lp.base.faces], "angles": angles}


def _int(x: Any, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"{what} must be an integer, got {x!r}")
    return x


def parse_faces(data: dict) -> list[list[int]]:
    """Faces as integer lists; rejects malformed faces such as bigons."""
    faces = data.get("faces")
    if not isinstance(faces, list) or not faces:
        raise ParseError("'faces' must be a non-empty list")
    out = []
    for i, f in enumerate(faces):
        if not isinstance(f, list):
            raise ParseError(f"face {i} is not a list")
        f = [_int(v, f"vertex in face {i}") for v in f]
        if len(f) < 3:
            raise ParseError(f"face {i} has {len(f)} vertices; faces need at least 3")
        if len(set(f)) != len(f):
            raise ParseError(f"face {i} repeats a vertex")
        if min(f) < 0:
            raise ParseError(f"face {i} has a negative vertex index")
        out.append(f)
    return out


def parse_angles(data: dict) -> dict[tuple[int, int], Angle]:
    raw = data.get("angles", [])
    if not isinstance(raw, list):
        raise ParseError("'angles' must be a list")
    out: dict[tuple[int, int], Angle] = {}
    for i, a in enumerate(raw):
        if not isinstance(a, dict) or "edge" not in a:
            raise ParseError(f"angle entry {i} needs an 'edge'")
        e = a["edge"]
        if not isinstance(e, list) or len(e) != 2:
            raise ParseError(f"angle entry {i}: 'edge' must be [u, v]")
        u, v = (_int(x, f"angle entry {i} endpoint") for x in e)
        if "pi_over" in a:
            num, den = 1, _int(a["pi_over"], f"angle entry {i} pi_over")
        elif "num" in a and "den" in a:
            num, den = _int(a["num"], "num"), _int(a["den"], "den")
        else:
            raise ParseError(f"angle entry {i} needs 'pi_over' or 'num'/'den'")
        if den <= 0:
            raise ParseError(f"angle entry {i} has a non-positive denominator")
        key = (min(u, v), max(u, v))
        if key in out:
            raise ParseError(f"edge {list(key)} is labeled twice")
        out[key] = Angle(num, den)  # ObtuseLabel for angles outside (0, pi/2]
    return out


def from_dict(data: Any) -> LabeledAbstractPolyhedron:
    """Build a labeled polyhedron.  Also accepts an analysis report, which
    embeds its input under ``"polyhedron"``."""
    if not isinstance(data, dict):
        raise ParseError("top level must be a JSON object")
    if "polyhedron" in data and "faces" not in data:
        data = data["polyhedron"]
        if not isinstance(data, dict):
            raise ParseError("'polyhedron' must be an object")
    version = data.get("version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format version {version!r}")
    faces = parse_faces(data)
    angles = parse_angles(data)
    return label_polyhedron(build_from_faces(faces), angles)


def loads(text: str) -> LabeledAbstractPolyhedron:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return from_dict(data)


def load(path: str | Path) -> LabeledAbstractPolyhedron:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return loads(text)


def dumps(lp: LabeledAbstractPolyhedron) -> str:
    """Pretty JSON with one face or angle per line."""
    d = to_dict(lp)
    faces = ",\n    ".join(json.dumps(f) for f in d["faces"])
    angles = ",\n    ".join(json.dumps(a) for a in d["angles"])
    return (
        f'{{\n  "version": {d["version"]},\n'
        f'  "faces": [\n    {faces}\n  ],\n'
        f'  "angles": [' + (f"\n    {angles}\n  ]" if angles else "]") + "\n}"
    )


def dump(lp: LabeledAbstractPolyhedron, path: str | Path) -> None:
    Path(path).write_text(dumps(lp) + "\n")


def data_path(name: str) -> Path:
    """Path of a bundled example file."""
    return Path(__file__).parent / "data" / name
