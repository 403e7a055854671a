"""Ascents, d-cycles, d-chordedness and the checks built on them.

Cycle computations are over GF(2).  A chain is an int whose bit k stands for
the k-th d-face in a fixed list (``faces``), so symmetric difference is xor.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .chordality import (
    DEFAULT_BUDGET,
    EliminationCertificate,
    free_maximal_subcircuits,
    is_chordal,
    maximal_subcircuits,
    simplicial_maximal_subcircuits,
)
from .core import (
    BudgetExhausted,
    Clutter,
    PreconditionError,
    SimplicialComplex,
    bit_list,
    cliques_by_size,
    complement,
    delete_vertex,
    facets_of,
    fmt,
    fmt_family,
    labels,
    remove_circuit,
    sorted_faces,
    subsets_of_size,
)
from .homlin import FIELDS, Field, has_linear_resolution

MAX_CYCLE_RANK = 20


def ascent(c: Clutter) -> Clutter:
    """C⁺: the cliques on d + 2 vertices, as a (d+1)-clutter on the same vertex set."""
    return Clutter._make(c.vertices, c.d + 1, cliques_by_size(c).get(c.d + 2, frozenset()))


def iterated_ascents(c: Clutter) -> list[Clutter]:
    """[C, C⁺, C⁺⁺, ...] up to and including the first empty one."""
    out = [c]
    while out[-1].circuits:
        out.append(ascent(out[-1]))
    return out


# ---------------------------------------------------------------------------
# cycles


def _pure_facets(dx: SimplicialComplex) -> list[int]:
    if not dx.is_pure:
        raise PreconditionError("complex is not pure")
    return sorted_faces(dx.facets)


def _adjacent(f: int, g: int, d: int) -> bool:
    return (f & g).bit_count() == d


def _components(fs: Sequence[int]) -> list[list[int]]:
    """Classes of the facets under the d-path relation (|F ∩ G| = d)."""
    if not fs:
        return []
    d = fs[0].bit_count() - 1
    left = list(fs)
    comps = []
    while left:
        comp = [left.pop(0)]
        frontier = [comp[0]]
        while frontier:
            f = frontier.pop()
            keep = []
            for g in left:
                if _adjacent(f, g, d):
                    comp.append(g)
                    frontier.append(g)
                else:
                    keep.append(g)
            left = keep
        comps.append(sorted_faces(comp))
    return comps


def is_d_path_connected(dx: SimplicialComplex) -> bool:
    return len(_components(_pure_facets(dx))) <= 1


def _even_incidence(fs: Sequence[int]) -> bool:
    count: dict[int, int] = {}
    for f in fs:
        for e in facets_of(f):
            count[e] = count.get(e, 0) ^ 1
    return not any(count.values())


def is_d_cycle(dx: SimplicialComplex) -> bool:
    fs = _pure_facets(dx)
    if not fs or dx.dim < 0:
        return False
    return len(_components(fs)) == 1 and _even_incidence(fs)


@dataclass
class CycleSpace:
    """Kernel of the GF(2) boundary map on the d-faces listed in ``faces``."""

    faces: list
    basis: list

    @property
    def rank(self) -> int:
        return len(self.basis)

    def support(self, z: int) -> list[int]:
        return [self.faces[k] for k in bit_list(z)]

    def vertices(self, z: int) -> int:
        v = 0
        for k in bit_list(z):
            v |= self.faces[k]
        return v


def cycle_space(fs: Sequence[int]) -> CycleSpace:
    """Basis of the GF(2) cycles among the equal-size faces ``fs``."""
    fs = sorted_faces(fs)
    rows: dict[int, int] = {}
    # eliminate boundary columns, tracking which faces were combined
    pivots: dict[int, tuple[int, int]] = {}
    basis = []
    for k, f in enumerate(fs):
        vec = 0
        for e in facets_of(f):
            idx = rows.setdefault(e, len(rows))
            vec |= 1 << idx
        combo = 1 << k
        while vec:
            top = vec.bit_length() - 1
            hit = pivots.get(top)
            if hit is None:
                pivots[top] = (vec, combo)
                break
            vec ^= hit[0]
            combo ^= hit[1]
        if not vec:
            basis.append(combo)
    return CycleSpace(fs, basis)


def is_cf_tree(c: Clutter) -> bool:
    """<C> has no d-cycles, i.e. the GF(2) boundary map on C is injective."""
    return cycle_space(c.circuits).rank == 0


def _minimal_cycle(cs: CycleSpace) -> int:
    """A nonzero kernel vector of least support (ties: smallest integer)."""
    if cs.rank > MAX_CYCLE_RANK:
        raise BudgetExhausted(f"cycle space of rank {cs.rank} is above the enumeration cap")
    best = None
    z = 0
    for step in range(1, 1 << cs.rank):
        z ^= cs.basis[(step & -step).bit_length() - 1]
        if best is None or (z.bit_count(), z) < (best.bit_count(), best):
            best = z
    return best


def decompose_into_face_minimal_cycles(dx: SimplicialComplex) -> list[list[int]]:
    """Split the facets of a d-cycle into facet sets of face-minimal d-cycles.

    Repeatedly removes a least-support cycle; such a cycle is d-path connected
    and has no cycle on a proper subset of its faces.
    """
    if not is_d_cycle(dx):
        raise PreconditionError("not a d-cycle")
    left = set(dx.facets)
    parts = []
    while left:
        cs = cycle_space(left)
        z = _minimal_cycle(cs)
        part = cs.support(z)
        parts.append(sorted_faces(part))
        left.difference_update(part)
    return parts


# ---------------------------------------------------------------------------
# d-chordedness


@dataclass(frozen=True)
class ChordedResult:
    holds: bool
    witness: Optional[tuple] = None  # faces of a cycle outside the clique-boundary span

    def __bool__(self) -> bool:
        return self.holds


def _clique_boundary_span(cliques: Sequence[int], index: dict) -> dict:
    """Pivot table of the GF(2) span of the clique boundaries (faces indexed by ``index``)."""
    piv: dict[int, int] = {}
    for k in cliques:
        vec = 0
        for f in facets_of(k):
            vec |= 1 << index[f]
        while vec:
            top = vec.bit_length() - 1
            if top not in piv:
                piv[top] = vec
                break
            vec ^= piv[top]
    return piv


def _in_span(piv: dict, z: int) -> bool:
    while z:
        b = piv.get(z.bit_length() - 1)
        if b is None:
            return False
        z ^= b
    return True


def is_d_chorded(c: Clutter) -> ChordedResult:
    """Every GF(2) d-cycle of <C> is a sum of clique boundaries on its own vertices.

    A cycle lives on its vertex support, so it suffices to check, for every
    vertex set W, that the cycles of C[W] lie in the span of the boundaries
    of the (d+2)-cliques inside W.  W runs in (size, lex) order and the
    witness is the first basis cycle of the first failing W.
    """
    if cycle_space(c.circuits).rank == 0:
        return ChordedResult(True)
    big = cliques_by_size(c).get(c.d + 2, frozenset())
    done: set = set()
    for size in range(c.d + 2, c.n + 1):
        for w in sorted_faces(subsets_of_size(c.vertices, size)):
            inside = frozenset(f for f in c.circuits if f & w == f)
            if len(inside) < c.d + 2 or inside in done:
                continue
            done.add(inside)
            cs = cycle_space(inside)
            if cs.rank == 0:
                continue
            index = {f: k for k, f in enumerate(cs.faces)}
            piv = _clique_boundary_span([k for k in big if k & w == k], index)
            for z in cs.basis:
                if not _in_span(piv, z):
                    return ChordedResult(False, tuple(cs.support(z)))
    return ChordedResult(True)


def is_cf_chordal(c: Clutter) -> bool:
    """<C> is d-chorded and C⁺ is CF-chordal; the empty clutter is CF-chordal."""
    while c.circuits:
        if not is_d_chorded(c):
            return False
        c = ascent(c)
    return True


# ---------------------------------------------------------------------------
# reports


@dataclass
class Report:
    """Outcome of checking one statement on one clutter.

    ``holds`` is True when the conclusion was verified or the statement was
    vacuous (then ``vacuous`` is set), False when a counterexample was found.
    """

    statement: str
    holds: bool
    vacuous: bool = False
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        return {"statement": self.statement, "holds": self.holds,
                "vacuous": self.vacuous, "details": _jsonable(self.details)}


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, EliminationCertificate):
        return x.to_json()
    return x


def chordal_implies_ascent_chordal_check(c: Clutter, budget: int = DEFAULT_BUDGET) -> Report:
    cert = is_chordal(c, budget)
    if cert is None:
        raise PreconditionError("clutter is not chordal")
    up = ascent(c)
    cert_up = is_chordal(up, budget)
    return Report("chordal-ascent", cert_up is not None, vacuous=not up.circuits,
                  details={"certificate": cert, "ascent": [list(labels(f)) for f in up],
                           "ascent_certificate": cert_up})


def sms_deletion_chorded_check(c: Clutter, f: int) -> Report:
    if not is_d_chorded(c):
        raise PreconditionError("<C> is not d-chorded")
    if f not in simplicial_maximal_subcircuits(ascent(c)):
        raise PreconditionError(f"{fmt(f)} is not a simplicial maximal subcircuit of the ascent")
    res = is_d_chorded(remove_circuit(c, f))
    return Report("sms-deletion-chorded", res.holds,
                  details={"face": list(labels(f)),
                           "witness": [list(labels(g)) for g in res.witness or ()]})


def _is_forest(edges: Sequence[int]) -> bool:
    return cycle_space(edges).rank == 0


def _leaf_edges(edges) -> list[int]:
    deg: dict[int, int] = {}
    for e in edges:
        for v in bit_list(e):
            deg[v] = deg.get(v, 0) + 1
    return sorted_faces(e for e in edges if any(deg[v] == 1 for v in bit_list(e)))


def chordal_edge_order(c: Clutter, budget: int = DEFAULT_BUDGET) -> list[int]:
    """Simplicial edges while triangles remain, then leaf edges of the remaining forest."""
    if c.d != 1:
        raise PreconditionError("edge orders are defined for graphs")
    if is_chordal(c, budget) is None:
        raise PreconditionError("graph is not chordal")
    cur = c
    order = []
    while True:
        up = ascent(cur)
        if not up.circuits:
            break
        f = sorted_faces(simplicial_maximal_subcircuits(up))[0]
        order.append(f)
        cur = remove_circuit(cur, f)
    edges = set(cur.circuits)
    while edges:
        f = _leaf_edges(edges)[0]
        order.append(f)
        edges.discard(f)
    return order


def find_edge_order(c: Clutter, budget: int = DEFAULT_BUDGET) -> Optional[list[int]]:
    """Search an edge order of the two-phase shape for any graph (chordal or not)."""
    if c.d != 1:
        raise PreconditionError("edge orders are defined for graphs")
    dead: set = set()
    left = [budget]

    def go(circuits: frozenset) -> Optional[list[int]]:
        if circuits in dead:
            return None
        left[0] -= 1
        if left[0] < 0:
            raise BudgetExhausted("search budget exhausted")
        cur = c.with_circuits(circuits)
        up = ascent(cur)
        if not up.circuits:
            if not _is_forest(list(circuits)):
                dead.add(circuits)
                return None
            edges = set(circuits)
            tail = []
            while edges:
                f = _leaf_edges(edges)[0]
                tail.append(f)
                edges.discard(f)
            return tail
        for f in sorted_faces(simplicial_maximal_subcircuits(up)):
            rest = go(circuits - {f})
            if rest is not None:
                return [f] + rest
        dead.add(circuits)
        return None

    return go(c.circuits)


def _lin(c: Clutter, field: Field) -> bool:
    return has_linear_resolution(c, field).holds


def lin_res_sms_check(c: Clutter, field: Field = Field.RATIONAL) -> Report:
    """Evaluate the three statements and check (1) ⇒ (2) ⇒ (3), plus (3) ⇒ (1) when SMS(C⁺) ≠ ∅."""
    field = Field.parse(field)
    up = ascent(c)
    if not up.circuits:
        raise PreconditionError("the ascent is empty")
    ms = sorted_faces(maximal_subcircuits(up))
    sms = sorted_faces(simplicial_maximal_subcircuits(up))
    s2 = _lin(c, field)
    common = _lin(up, field) and all(_lin(delete_vertex(c, v), field)
                                     for v in bit_list(c.vertices))
    s1 = s3 = False
    if common:
        done: dict[int, bool] = {}

        def deletion_ok(f: int) -> bool:
            if f not in done:
                done[f] = _lin(remove_circuit(c, f), field)
            return done[f]

        s3 = all(deletion_ok(f) for f in sms)
        s1 = (s3 and bool(sms)) or any(deletion_ok(f) for f in ms)
    holds = (not s1 or s2) and (not s2 or s3) and (not sms or not s3 or s1)
    return Report("lin-res-sms", holds, details={
        "field": field.value, "s1": s1, "s2": s2, "s3": s3, "sms_nonempty": bool(sms),
        "open_hunt": bool(s3 and not sms)})


def n_le_d_plus_3_check(c: Clutter, budget: int = DEFAULT_BUDGET) -> Report:
    if c.n > c.d + 3:
        raise PreconditionError("needs n <= d + 3")
    empty_up = not ascent(c).circuits
    linear = all(_lin(c, f) for f in FIELDS)
    if not (empty_up and linear):
        return Report("n-le-d-plus-3", True, vacuous=True)
    cert = is_chordal(c, budget)
    tree = is_cf_tree(c)
    return Report("n-le-d-plus-3", cert is not None and tree,
                  details={"certificate": cert, "cf_tree": tree})


def free_subcircuit_check(c: Clutter, budget: int = DEFAULT_BUDGET) -> Report:
    """For n <= d + 3: empty ascent and linear quotients leave a free maximal subcircuit."""
    from .quotients import has_linear_quotients
    if c.n > c.d + 3:
        raise PreconditionError("needs n <= d + 3")
    if ascent(c).circuits or not c.circuits:
        return Report("free-subcircuit", True, vacuous=True)
    order = has_linear_quotients(complement(c).circuits, budget)
    if order is None:
        return Report("free-subcircuit", True, vacuous=True)
    free = free_maximal_subcircuits(c)
    return Report("free-subcircuit", bool(free), details={"free": fmt_family(free)})

