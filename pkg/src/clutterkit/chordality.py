"""Chordality by SMS elimination, W-chordality and vertex decomposability.

Searches return certificates that can be replayed independently
(see :mod:`clutterkit.certificates`).  Every search takes a ``budget`` on the
number of explored nodes and raises :class:`BudgetExhausted` when it runs out,
so a budget stop is never mistaken for a negative answer.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .core import (
    BudgetExhausted,
    Clutter,
    GeneralClutter,
    PreconditionError,
    SimplicialComplex,
    bit_list,
    delete_vertex,
    dual_clutter,
    facets_of,
    fmt,
    generated,
    is_clique,
    labels,
    link,
    maximal_sets,
    minimal_sets,
    sorted_faces,
)

DEFAULT_BUDGET = 10**7


# ---------------------------------------------------------------------------
# maximal subcircuits


def maximal_subcircuits(c: Clutter) -> frozenset:
    """(d-1)-faces lying in at least one circuit."""
    out = set()
    for f in c.circuits:
        out.update(facets_of(f))
    return frozenset(out)


def _check_subcircuit(c: Clutter, e: int) -> None:
    if e.bit_count() != c.d:
        raise ValueError(f"{fmt(e)} is not a {c.d - 1}-face")


def closed_neighborhood(c: Clutter, e: int) -> int:
    """N_C[e] = e together with every v such that e + v is a circuit."""
    _check_subcircuit(c, e)
    out = e
    for f in c.circuits:
        if f & e == e:
            out |= f
    return out


def is_simplicial_subcircuit(c: Clutter, e: int) -> bool:
    return is_clique(c, closed_neighborhood(c, e))


def simplicial_maximal_subcircuits(c: Clutter) -> frozenset:
    return frozenset(e for e in maximal_subcircuits(c) if is_simplicial_subcircuit(c, e))


def free_maximal_subcircuits(c: Clutter) -> frozenset:
    """Maximal subcircuits contained in exactly one circuit."""
    count: dict[int, int] = {}
    for f in c.circuits:
        for e in facets_of(f):
            count[e] = count.get(e, 0) + 1
    return frozenset(e for e, k in count.items() if k == 1)


def delete_subcircuit(c: Clutter, e: int) -> Clutter:
    """C - e: drop every circuit containing the (d-1)-face ``e``."""
    _check_subcircuit(c, e)
    return c.with_circuits(f for f in c.circuits if f & e != e)


def link_clutter(c: Clutter, v: int) -> Clutter:
    """Facets(link_<C> v) as a (d-1)-clutter on V - v (empty if v is in no circuit)."""
    bit = 1 << v
    if not c.vertices & bit:
        raise ValueError(f"unknown vertex {v + 1}")
    if c.d == 0:
        raise PreconditionError("links of a 0-clutter are not uniform clutters")
    return Clutter._make(c.vertices & ~bit, c.d - 1,
                         frozenset(f & ~bit for f in c.circuits if f & bit))


# ---------------------------------------------------------------------------
# chordality


@dataclass(frozen=True)
class EliminationCertificate:
    """A sequence e_1..e_t of (d-1)-faces emptying the clutter by SMS deletions."""

    steps: tuple

    def to_json(self) -> dict:
        return {"kind": "elimination", "steps": [list(labels(e)) for e in self.steps]}

    def __str__(self) -> str:
        return ", ".join(fmt(e) for e in self.steps) if self.steps else "(empty)"


def replay_elimination(c: Clutter, steps) -> Clutter:
    """Apply ``steps`` checking each is simplicial at its turn; return the final clutter."""
    cur = c
    for k, e in enumerate(steps):
        if e.bit_count() != c.d or e not in maximal_subcircuits(cur):
            raise PreconditionError(f"step {k + 1}: {fmt(e)} is not a maximal subcircuit")
        if not is_simplicial_subcircuit(cur, e):
            raise PreconditionError(f"step {k + 1}: {fmt(e)} is not simplicial")
        cur = delete_subcircuit(cur, e)
    return cur


class _Counter:
    def __init__(self, budget: int):
        self.left = budget

    def tick(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise BudgetExhausted("search budget exhausted")


def is_chordal(c: Clutter, budget: int = DEFAULT_BUDGET) -> Optional[EliminationCertificate]:
    """Return an elimination certificate, or None if C is not chordal.

    Depth-first over SMS choices in canonical order with a memo of clutters
    already known to be stuck; the first branch is the greedy run.
    """
    dead: set = set()
    counter = _Counter(budget)

    def sms(circuits: frozenset) -> list[int]:
        cur = c.with_circuits(circuits)
        return sorted_faces(e for e in maximal_subcircuits(cur)
                            if is_simplicial_subcircuit(cur, e))

    def search(circuits: frozenset) -> Optional[list[int]]:
        if not circuits:
            return []
        if circuits in dead:
            return None
        counter.tick()
        for e in sms(circuits):
            rest = frozenset(f for f in circuits if f & e != e)
            tail = search(rest)
            if tail is not None:
                return [e] + tail
        dead.add(circuits)
        return None

    steps = search(c.circuits)
    return None if steps is None else EliminationCertificate(tuple(steps))


def greedy_elimination(c: Clutter) -> Optional[list[int]]:
    """Always delete the first SMS in canonical order; None if that gets stuck."""
    cur = c
    steps = []
    while cur.circuits:
        sms = sorted_faces(simplicial_maximal_subcircuits(cur))
        if not sms:
            return None
        steps.append(sms[0])
        cur = delete_subcircuit(cur, sms[0])
    return steps


def chordality_failure_reason(c: Clutter) -> str:
    if not simplicial_maximal_subcircuits(c):
        return "SMS empty at root"
    return "every elimination branch gets stuck"


# ---------------------------------------------------------------------------
# W-chordality


def contraction(x: GeneralClutter, v: int) -> GeneralClutter:
    """D/v: minimal sets of {e - v}, on the vertex set without v."""
    bit = 1 << v
    if not x.vertices & bit:
        raise ValueError(f"unknown vertex {v + 1}")
    return GeneralClutter._from_edges(x.vertices & ~bit, minimal_sets(e & ~bit for e in x.edges))


def is_simplicial_vertex(x: GeneralClutter, v: int, strict: bool = False) -> bool:
    """Every pair of edges through v leaves an edge inside their union minus v.

    By default the pair ranges over distinct edges, so a vertex in at most one
    edge is simplicial.  ``strict=True`` also takes e1 = e2.
    """
    bit = 1 << v
    if not x.vertices & bit:
        raise ValueError(f"unknown vertex {v + 1}")
    through = [e for e in x.edges if e & bit]
    for a in range(len(through)):
        for b in range(a if strict else a + 1, len(through)):
            u = (through[a] | through[b]) & ~bit
            if not any(g & u == g for g in x.edges):
                return False
    return True


def is_w_chordal(x: Union[GeneralClutter, Clutter], strict: bool = False,
                 budget: int = DEFAULT_BUDGET) -> bool:
    """Every clutter reachable by deletions and contractions has a simplicial vertex.

    The clutter with no vertices left counts as fine (nothing to eliminate).
    """
    if isinstance(x, Clutter):
        x = GeneralClutter._from_edges(x.vertices, x.circuits)
    memo: dict = {}
    counter = _Counter(budget)

    def ok(g: GeneralClutter) -> bool:
        key = (g.vertices, g.edges)
        hit = memo.get(key)
        if hit is not None:
            return hit
        counter.tick()
        verts = bit_list(g.vertices)
        res = True
        if verts and g.edges:
            res = any(is_simplicial_vertex(g, v, strict) for v in verts)
            if res:
                for v in verts:
                    if not ok(delete_vertex(g, v)) or not ok(contraction(g, v)):
                        res = False
                        break
        memo[key] = res
        return res

    return ok(x)


def minimum_layer(x: GeneralClutter) -> Clutter:
    """The members of minimum cardinality, as a uniform clutter on the same vertices."""
    if not x.edges:
        raise ValueError("empty clutter has no minimum layer")
    k = min(e.bit_count() for e in x.edges)
    if k == 0:
        raise ValueError("the empty set is not a circuit of a uniform clutter")
    return Clutter._make(x.vertices, k - 1, frozenset(e for e in x.edges if e.bit_count() == k))


# ---------------------------------------------------------------------------
# shedding vertices and vertex decomposability


def _check_vertex(dx: SimplicialComplex, v: int) -> int:
    bit = 1 << v
    if not dx.vertices & bit:
        raise ValueError(f"unknown vertex {v + 1}")
    return bit


def is_shedding_vertex(dx: SimplicialComplex, v: int) -> bool:
    """No facet of Δ - v is a face of link_Δ(v).

    A vertex of the vertex set that is not a face of Δ is never shedding.
    """
    bit = _check_vertex(dx, v)
    if dx.is_void:
        raise PreconditionError("shedding vertices need a nonempty complex")
    if bit not in dx:
        return False
    for h in maximal_sets(g & ~bit for g in dx.facets):
        if (h | bit) in dx:
            return False
    return True


def shedding_pure_criterion(dx: SimplicialComplex, v: int) -> bool:
    """For pure Δ: v is shedding iff Δ - v is pure of dimension dim Δ."""
    _check_vertex(dx, v)
    if dx.is_void or not dx.is_pure:
        raise PreconditionError("criterion requires pure complex")
    rest = delete_vertex(dx, v)
    return rest.is_pure and rest.dim == dx.dim


@dataclass(frozen=True)
class SheddingCertificate:
    """Binary tree: a leaf is a simplex; a node names a shedding vertex."""

    vertex: Optional[int] = None
    link: Optional["SheddingCertificate"] = None
    deletion: Optional["SheddingCertificate"] = None

    @property
    def is_leaf(self) -> bool:
        return self.vertex is None

    def to_json(self) -> dict:
        return {"kind": "shedding", "tree": self._tree()}

    def _tree(self):
        if self.is_leaf:
            return "SIMPLEX"
        return {"vertex": self.vertex + 1, "link": self.link._tree(),
                "deletion": self.deletion._tree()}

    @classmethod
    def from_tree(cls, t) -> "SheddingCertificate":
        if t == "SIMPLEX":
            return cls()
        return cls(int(t["vertex"]) - 1, cls.from_tree(t["link"]), cls.from_tree(t["deletion"]))

    def size(self) -> int:
        return 1 if self.is_leaf else 1 + self.link.size() + self.deletion.size()


def is_vertex_decomposable(dx: SimplicialComplex,
                           budget: int = DEFAULT_BUDGET) -> Optional[SheddingCertificate]:
    """Search for a shedding decomposition; None if there is none.

    ``{∅}`` counts as a simplex; VOID is rejected.
    """
    if dx.is_void:
        raise PreconditionError("vertex decomposability needs a nonempty complex")
    memo: dict = {}
    counter = _Counter(budget)

    def go(cx: SimplicialComplex) -> Optional[SheddingCertificate]:
        key = cx.facets
        if key in memo:
            return memo[key]
        counter.tick()
        res = None
        if cx.is_simplex:
            res = SheddingCertificate()
        else:
            support = 0
            for f in cx.facets:
                support |= f
            for v in bit_list(support):
                if not is_shedding_vertex(cx, v):
                    continue
                lk = go(link(cx, 1 << v))
                if lk is None:
                    continue
                dl = go(delete_vertex(cx, v))
                if dl is None:
                    continue
                res = SheddingCertificate(v, lk, dl)
                break
        memo[key] = res
        return res

    return go(dx)


def dual_complex(c: Clutter) -> SimplicialComplex:
    """Γ = <C∨> on the vertex set of C."""
    return generated(dual_clutter(c))


def eliminate_toward_vertex_deletion(c: Clutter, v: int,
                                     budget: int = DEFAULT_BUDGET) -> list[int]:
    """SMS deletions taking C to C - v, built by lifting an elimination of the link.

    Needs v shedding in <C∨> and Facets(link_<C> v) chordal.
    """
    bit = 1 << v
    if not c.vertices & bit:
        raise ValueError(f"unknown vertex {v + 1}")
    if not any(f & bit for f in c.circuits):
        return []
    failed = []
    gamma = dual_complex(c)
    if gamma.is_void or not is_shedding_vertex(gamma, v):
        failed.append(f"{v + 1} is not a shedding vertex of the dual complex")
    cert = is_chordal(link_clutter(c, v), budget)
    if cert is None:
        failed.append(f"the link of {v + 1} is not chordal")
    if failed:
        raise PreconditionError("; ".join(failed))
    return [e | bit for e in cert.steps]
