"""Combinatorics and volume bounds for hyperbolic Coxeter polyhedra."""

from .andreev import AndreevReport, PrismaticCircuit, check_andreev, find_prismatic_circuits, tetrahedron_is_hyperbolic
from .certify import (
    Certificate,
    cube_classes,
    enumerate_min_cubes,
    graph_type_case_table,
    lemma_4_2_trace,
    theorem_1_1_report,
)
from .decomposition import (
    DunbarDecomposition,
    PrismTree,
    Verdict,
    classify,
    count_free_quads,
    dunbar_cut,
    is_generalized_tetrahedron,
    prism_tree,
    reglue,
)
from .enumeration import search_right_angled
from .errors import *  # noqa: F401,F403
from .fileio import load, loads
from .polyhedron import (
    RIGHT,
    AbstractPolyhedron,
    Angle,
    LabeledAbstractPolyhedron,
    build_from_faces,
    canonical_code,
    dual,
    glue,
    is_three_connected,
    label_polyhedron,
    truncate,
)
from .volume import (
    V8,
    VolumeBound,
    atkinson_lower,
    f,
    graph_type_bound,
    lobachevsky,
    miyamoto_orbifold_bound,
    mirrored_polygon_chi,
    return_path_bound,
    rho3,
    theta_of_r,
    trunc_tet_volume,
)

__version__ = "0.1.0"
