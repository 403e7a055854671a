"""Replay validators for certificates.

Deliberately independent of the search code: everything here works on
frozensets of 1-based labels with itertools brute force, so a bug in the
bitmask routines cannot vouch for itself.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Optional

from .core import Clutter, labels

Face = frozenset


class CertificateError(ValueError):
    pass


def _family(c: Clutter) -> set:
    return {Face(labels(f)) for f in c.circuits}


def _vertex_set(c: Clutter) -> Face:
    return Face(labels(c.vertices))


def _clique(circuits: set, a: Iterable[int], size: int) -> bool:
    return all(Face(s) in circuits for s in combinations(sorted(a), size))


def _sms(circuits: set, e: Face, vertices: Face, size: int) -> bool:
    """e lies in a circuit and its closed neighbourhood is a clique."""
    nbhd = set(e) | {v for v in vertices - e if e | {v} in circuits}
    if nbhd == set(e):
        return False
    return _clique(circuits, nbhd, size)


def check_elimination(c: Clutter, steps) -> Optional[str]:
    """None if the steps empty the clutter by simplicial deletions, else a reason."""
    circuits = _family(c)
    verts = _vertex_set(c)
    size = c.d + 1
    for k, step in enumerate(steps, 1):
        e = Face(step)
        if len(e) != c.d:
            return f"step {k}: {sorted(e)} has the wrong size"
        if not _sms(circuits, e, verts, size):
            return f"step {k}: {sorted(e)} is not a simplicial maximal subcircuit"
        circuits = {f for f in circuits if not e <= f}
    if circuits:
        return f"{len(circuits)} circuits left after the last step"
    return None


def _complex_faces(facets: set) -> set:
    out = set()
    for f in facets:
        for k in range(len(f) + 1):
            out.update(Face(s) for s in combinations(sorted(f), k))
    return out


def _maximal(sets: Iterable[Face]) -> set:
    sets = set(sets)
    return {s for s in sets if not any(s < t for t in sets)}


def check_shedding(facets: set, tree) -> Optional[str]:
    """Replay a shedding tree against the complex with the given facets."""
    facets = _maximal(facets)
    if not facets:
        return "the void complex is not vertex decomposable"
    if tree == "SIMPLEX":
        return None if len(facets) == 1 else f"not a simplex: {len(facets)} facets"
    if not isinstance(tree, dict) or not {"vertex", "link", "deletion"} <= tree.keys():
        return "malformed shedding node"
    v = tree["vertex"]
    faces = _complex_faces(facets)
    if Face([v]) not in faces:
        return f"{v} is not a vertex of the complex"
    link_faces = {f - {v} for f in faces if v in f}
    deletion = _maximal(f - {v} for f in facets)
    if any(f in link_faces for f in deletion):
        return f"{v} is not a shedding vertex"
    link_facets = _maximal(f - {v} for f in facets if v in f)
    return (check_shedding(link_facets, tree["link"])
            or check_shedding(deletion, tree["deletion"]))


def dual_facets(c: Clutter) -> set:
    """Facets of <C∨>: complements of the non-circuits."""
    verts = _vertex_set(c)
    circuits = _family(c)
    return {verts - Face(s) for s in combinations(sorted(verts), c.d + 1)
            if Face(s) not in circuits}


def check_admissible(gens: set, order) -> Optional[str]:
    """Every colon ideal (F_1..F_{k-1}) : F_k must be generated by variables."""
    order = [Face(f) for f in order]
    if len(set(order)) != len(order) or set(order) != set(gens):
        return "order is not a permutation of the generators"
    for k in range(1, len(order)):
        quotients = {f - order[k] for f in order[:k]}
        minimal = [q for q in quotients if not any(p < q for p in quotients)]
        bad = [sorted(q) for q in minimal if len(q) != 1]
        if bad:
            return f"position {k + 1}: colon ideal has nonlinear generator {bad[0]}"
    return None


def complement_family(c: Clutter) -> set:
    circuits = _family(c)
    return {Face(s) for s in combinations(sorted(_vertex_set(c)), c.d + 1)
            if Face(s) not in circuits}


def ascent_family(c: Clutter) -> set:
    circuits = _family(c)
    return {Face(s) for s in combinations(sorted(_vertex_set(c)), c.d + 2)
            if _clique(circuits, s, c.d + 1)}


def _acyclic(edges: set) -> bool:
    parent: dict = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            x = parent[x]
        return x

    for e in edges:
        a, b = sorted(e)
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def check_edge_order(c: Clutter, order) -> Optional[str]:
    """Simplicial edges of the current ascent first, then leaf edges of a forest."""
    if c.d != 1:
        return "edge orders need a graph"
    edges = _family(c)
    order = [Face(f) for f in order]
    if len(set(order)) != len(order) or set(order) != edges:
        return "order is not a permutation of the edges"
    verts = _vertex_set(c)
    tree_phase = False
    for k, f in enumerate(order, 1):
        triangles = {Face(s) for s in combinations(sorted(verts), 3) if _clique(edges, s, 2)}
        if not tree_phase and triangles:
            if not _sms(triangles, f, verts, 3):
                return f"position {k}: {sorted(f)} is not a simplicial edge"
        else:
            tree_phase = True
            if triangles or not _acyclic(edges):
                return f"position {k}: remaining graph is not a forest"
            deg = {v: sum(v in e for e in edges) for v in f}
            if min(deg.values()) != 1:
                return f"position {k}: {sorted(f)} is not a leaf edge"
        edges = edges - {f}
    return None


def verify(cert: dict, c: Clutter) -> Optional[str]:
    """Dispatch on ``cert["kind"]``; None means the certificate replays."""
    kind = cert.get("kind") if isinstance(cert, dict) else None
    if kind == "elimination":
        return check_elimination(c, cert.get("steps", []))
    if kind == "shedding":
        return check_shedding(dual_facets(c), cert.get("tree"))
    if kind == "admissible-order":
        target = cert.get("of", "complement")
        if target == "complement":
            gens = complement_family(c)
        elif target == "ascent-complement":
            up = ascent_family(c)
            gens = {Face(s) for s in combinations(sorted(_vertex_set(c)), c.d + 2)} - up
        elif target == "complement-minus":
            gens = complement_family(c) | {Face(cert["face"])}
        else:
            return f"unknown order target {target!r}"
        return check_admissible(gens, cert.get("order", []))
    if kind == "edge-order":
        return check_edge_order(c, cert.get("order", []))
    raise CertificateError(f"unknown certificate kind {kind!r}")
