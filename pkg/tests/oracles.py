"""Independent reference implementations used only by the tests."""

from __future__ import annotations

import math
from itertools import combinations, permutations

import mpmath
import networkx as nx


def three_connected_bruteforce(g: nx.Graph) -> bool:
    """Delete every pair of vertices and check what remains is connected."""
    nodes = list(g)
    if len(nodes) < 4 or not nx.is_connected(g):
        return False
    for a, b in combinations(nodes, 2):
        rest = g.subgraph(x for x in nodes if x not in (a, b))
        if not nx.is_connected(rest):
            return False
    return True


def prismatic_circuits_bruteforce(p, k: int) -> set[frozenset]:
    """Face k-tuples, by ordered permutation, that close up into a cycle of
    adjacent faces whose crossed edges share no vertex."""
    out = set()
    faces = range(p.num_faces)
    for combo in combinations(faces, k):
        for perm in permutations(combo):
            if perm[0] != combo[0]:
                continue
            edges = []
            for i in range(k):
                shared = set(p.faces[perm[i]]) & set(p.faces[perm[(i + 1) % k]])
                e = [x for x in p.edges if set(x) <= shared]
                if len(e) != 1:
                    break
                edges.append(e[0])
            else:
                ends = [v for e in edges for v in e]
                if len(set(ends)) == len(ends):
                    out.add(frozenset(combo))
    return out


def lobachevsky_mp(theta: float) -> float:
    # Clausen function: Cl2(2x) = 2 Lambda(x)
    return float(mpmath.clsin(2, 2 * mpmath.mpf(theta)) / 2)


def f_mp(t) -> mpmath.mpf:
    with mpmath.workdps(40):
        t = mpmath.mpf(t)
        return +mpmath.acosh(mpmath.cos(t) / (2 * mpmath.cos(t) - 1))


def integral_f_mp(theta: float) -> float:
    with mpmath.workdps(30):
        return float(mpmath.quad(f_mp, [0, theta]))


def theta_bisection(r: float, width: float = 1e-13) -> float:
    """Solve cosh r = cos t / (2 cos t - 1) for t in [0, pi/3) by bisection,
    in 40-digit arithmetic so the oracle stays sharp near r = 0."""
    with mpmath.workdps(40):
        target = mpmath.cosh(mpmath.mpf(r))
        lo, hi = mpmath.mpf(0), mpmath.pi / 3
        while hi - lo > width:
            mid = (lo + hi) / 2
            c = mpmath.cos(mid)
            if c / (2 * c - 1) < target:
                lo = mid
            else:
                hi = mid
        return float((lo + hi) / 2)
