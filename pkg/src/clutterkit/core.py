"""Faces, clutters and simplicial complexes.

Faces are vertex sets stored as int bitmasks: bit ``i`` is the vertex with
external label ``i + 1``.  Labels only show up at the edges of the API
(:func:`face`, :func:`labels`, :func:`fmt` and the file formats); everything
else works on masks.  All values are immutable.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Union

MAX_VERTICES = 64


class BudgetExhausted(RuntimeError):
    """A search hit its node cap before reaching an answer."""


class PreconditionError(ValueError):
    """An operation was called outside its stated hypotheses."""


# ---------------------------------------------------------------------------
# faces as bitmasks


def face(*items) -> int:
    """Build a face from 1-based labels.

    Accepts ``face(1, 2, 5)``, ``face([1, 2, 5])`` or the compact digit
    string ``face("125")`` (single-digit labels only).
    """
    if len(items) == 1 and not isinstance(items[0], int):
        items = items[0]
    if isinstance(items, str):
        items = [int(ch) for ch in items if not ch.isspace()]
    mask = 0
    for lab in items:
        if not 1 <= lab <= MAX_VERTICES:
            raise ValueError(f"vertex label {lab} out of range 1..{MAX_VERTICES}")
        bit = 1 << (lab - 1)
        if mask & bit:
            raise ValueError(f"duplicate vertex label {lab}")
        mask |= bit
    return mask


def faces(spec: Union[str, Iterable]) -> list[int]:
    """``faces("125 235 345")`` -> list of masks, in the given order."""
    if isinstance(spec, str):
        spec = spec.replace(",", " ").split()
    return [face(s) for s in spec]


def vx(label: int) -> int:
    """Internal index of an external 1-based vertex label."""
    return label - 1


def labels(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in iter_bits(mask))


def fmt(mask: int) -> str:
    """Compact rendering: ``125``; falls back to ``{1,2,10}`` for labels > 9."""
    labs = labels(mask)
    if not labs:
        return "{}"
    if labs[-1] <= 9:
        return "".join(map(str, labs))
    return "{" + ",".join(map(str, labs)) + "}"


def fmt_family(masks: Iterable[int]) -> str:
    return "{" + ", ".join(fmt(m) for m in sorted(masks, key=face_key)) + "}"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


def face_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Canonical order: by size, then lexicographically on labels."""
    return (mask.bit_count(), tuple(iter_bits(mask)))


def sorted_faces(masks: Iterable[int]) -> list[int]:
    return sorted(masks, key=face_key)


def subsets_of_size(mask: int, k: int) -> Iterator[int]:
    """All k-element submasks, in lexicographic label order."""
    for combo in combinations(bit_list(mask), k):
        s = 0
        for b in combo:
            s |= 1 << b
        yield s


def submasks(mask: int) -> Iterator[int]:
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def facets_of(mask: int) -> Iterator[int]:
    """Codimension-one submasks of ``mask``."""
    m = mask
    while m:
        low = m & -m
        yield mask ^ low
        m ^= low


def minimal_sets(masks: Iterable[int]) -> frozenset[int]:
    ordered = sorted(set(masks), key=int.bit_count)
    kept: list[int] = []
    for m in ordered:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return frozenset(kept)


def maximal_sets(masks: Iterable[int]) -> frozenset[int]:
    ordered = sorted(set(masks), key=int.bit_count, reverse=True)
    kept: list[int] = []
    for m in ordered:
        if not any(k & m == m for k in kept):
            kept.append(m)
    return frozenset(kept)


def _check_vertices(vertices: int) -> None:
    if vertices < 0 or vertices >> MAX_VERTICES:
        raise ValueError(f"vertex set exceeds the {MAX_VERTICES}-vertex capacity")


def full_mask(n: int) -> int:
    if not 0 <= n <= MAX_VERTICES:
        raise ValueError(f"n={n} outside 0..{MAX_VERTICES}")
    return (1 << n) - 1


# ---------------------------------------------------------------------------
# value types


@dataclass(frozen=True)
class Clutter:
    """A d-uniform clutter: every circuit has exactly d + 1 vertices.

    ``vertices`` may contain vertices lying in no circuit; use
    :func:`normalize_support` to drop them.
    """

    vertices: int
    d: int
    circuits: frozenset

    def __post_init__(self):
        _check_vertices(self.vertices)
        if self.d < 0:
            raise ValueError("clutter dimension must be >= 0")
        if not isinstance(self.circuits, frozenset):
            object.__setattr__(self, "circuits", frozenset(self.circuits))
        size = self.d + 1
        for c in self.circuits:
            if c.bit_count() != size:
                raise ValueError(f"circuit {fmt(c)} is not {self.d}-dimensional")
            if c & ~self.vertices:
                raise ValueError(f"circuit {fmt(c)} leaves the vertex set")

    @classmethod
    def _make(cls, vertices: int, d: int, circuits: frozenset) -> "Clutter":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "vertices", vertices)
        object.__setattr__(obj, "d", d)
        object.__setattr__(obj, "circuits", circuits)
        return obj

    @classmethod
    def from_labels(cls, circuits, n: int | None = None, d: int | None = None,
                    vertices: int | None = None) -> "Clutter":
        """Build from label-based circuits, e.g. ``Clutter.from_labels("125 235 345", n=5)``."""
        masks = faces(circuits) if isinstance(circuits, str) else [
            c if isinstance(c, int) else face(c) for c in circuits]
        if vertices is None:
            if n is None:
                n = max((m.bit_length() for m in masks), default=0)
            vertices = full_mask(n)
        if d is None:
            if not masks:
                raise ValueError("d is required for an empty clutter")
            d = masks[0].bit_count() - 1
        if len(set(masks)) != len(masks):
            raise ValueError("duplicate circuits")
        return cls(vertices, d, frozenset(masks))

    @classmethod
    def complete(cls, n_or_vertices: int, d: int, *, mask: bool = False) -> "Clutter":
        vertices = n_or_vertices if mask else full_mask(n_or_vertices)
        return cls._make(vertices, d, frozenset(subsets_of_size(vertices, d + 1)))

    @property
    def n(self) -> int:
        return self.vertices.bit_count()

    def __len__(self) -> int:
        return len(self.circuits)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted_faces(self.circuits))

    def __contains__(self, f: int) -> bool:
        return f in self.circuits

    @property
    def is_complete(self) -> bool:
        return len(self.circuits) == _binom(self.n, self.d + 1)

    def with_circuits(self, circuits) -> "Clutter":
        return Clutter._make(self.vertices, self.d, frozenset(circuits))

    def __str__(self) -> str:
        return fmt_family(self.circuits)


@dataclass(frozen=True)
class GeneralClutter:
    """A possibly non-uniform antichain of vertex sets."""

    vertices: int
    edges: frozenset

    def __post_init__(self):
        _check_vertices(self.vertices)
        if not isinstance(self.edges, frozenset):
            object.__setattr__(self, "edges", frozenset(self.edges))
        for e in self.edges:
            if e & ~self.vertices:
                raise ValueError(f"edge {fmt(e)} leaves the vertex set")
        if minimal_sets(self.edges) != self.edges:
            raise ValueError("edges are not pairwise incomparable")

    @classmethod
    def _from_edges(cls, vertices: int, edges: frozenset) -> "GeneralClutter":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "vertices", vertices)
        object.__setattr__(obj, "edges", edges)
        return obj

    @classmethod
    def from_clutter(cls, c: Clutter) -> "GeneralClutter":
        return cls(c.vertices, c.circuits)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted_faces(self.edges))

    def __str__(self) -> str:
        return fmt_family(self.edges)


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex stored by its facets over an explicit vertex set.

    ``facets == frozenset()`` is the VOID complex (no faces at all), which is
    different from ``{∅}`` (``facets == frozenset({0})``).
    """

    vertices: int
    facets: frozenset

    def __post_init__(self):
        _check_vertices(self.vertices)
        if not isinstance(self.facets, frozenset):
            object.__setattr__(self, "facets", frozenset(self.facets))
        for f in self.facets:
            if f & ~self.vertices:
                raise ValueError(f"facet {fmt(f)} leaves the vertex set")
        if maximal_sets(self.facets) != self.facets:
            raise ValueError("facets are not pairwise incomparable")

    @classmethod
    def _make(cls, vertices: int, facets: frozenset) -> "SimplicialComplex":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "vertices", vertices)
        object.__setattr__(obj, "facets", facets)
        return obj

    @classmethod
    def from_faces(cls, vertices: int, faces_: Iterable[int]) -> "SimplicialComplex":
        return cls._make(vertices, maximal_sets(faces_))

    @classmethod
    def simplex(cls, vertices: int) -> "SimplicialComplex":
        return cls._make(vertices, frozenset([vertices]))

    @classmethod
    def void(cls, vertices: int = 0) -> "SimplicialComplex":
        return cls._make(vertices, frozenset())

    @classmethod
    def empty(cls, vertices: int = 0) -> "SimplicialComplex":
        """The complex ``{∅}``."""
        return cls._make(vertices, frozenset([0]))

    @cached_property
    def faces(self) -> frozenset:
        out: set[int] = set()
        for f in self.facets:
            if f in out:
                continue
            out.update(submasks(f))
        return frozenset(out)

    def faces_of_dim(self, i: int) -> list[int]:
        return sorted_faces(f for f in self.faces if f.bit_count() == i + 1)

    @property
    def dim(self) -> int:
        """Largest facet dimension; -1 for ``{∅}`` and -2 for VOID."""
        if not self.facets:
            return -2
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_pure(self) -> bool:
        return len({f.bit_count() for f in self.facets}) <= 1

    @property
    def is_simplex(self) -> bool:
        return len(self.facets) == 1

    def __contains__(self, f: int) -> bool:
        return any(f & g == f for g in self.facets)

    def restrict(self, w: int) -> "SimplicialComplex":
        """The induced subcomplex on ``w``."""
        if self.is_void:
            return SimplicialComplex._make(w, frozenset())
        return SimplicialComplex._make(w, maximal_sets(f & w for f in self.facets))

    def __str__(self) -> str:
        if self.is_void:
            return "VOID"
        return "<" + ", ".join(fmt(f) for f in sorted_faces(self.facets)) + ">"


def _binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


# ---------------------------------------------------------------------------
# operations


def generated(x, vertices: int | None = None) -> SimplicialComplex:
    """The complex ⟨D⟩ whose facets are the members of ``x``."""
    if isinstance(x, Clutter):
        return SimplicialComplex._make(x.vertices, x.circuits)
    if isinstance(x, GeneralClutter):
        return SimplicialComplex._make(x.vertices, x.edges)
    masks = frozenset(x)
    if vertices is None:
        vertices = 0
        for m in masks:
            vertices |= m
    return SimplicialComplex(vertices, masks)


def complement(c: Clutter) -> Clutter:
    circuits = c.circuits
    return Clutter._make(c.vertices, c.d, frozenset(
        f for f in subsets_of_size(c.vertices, c.d + 1) if f not in circuits))


def is_clique(c: Clutter, a: int) -> bool:
    """True iff every (d+1)-subset of ``a`` is a circuit."""
    if a & ~c.vertices:
        raise ValueError(f"{fmt(a)} is not inside the vertex set")
    k = a.bit_count()
    if k <= c.d:
        return True
    inside = sum(1 for f in c.circuits if f & a == f)
    return inside == _binom(k, c.d + 1)


def induced(c: Clutter, a: int) -> Clutter:
    if a & ~c.vertices:
        raise ValueError(f"{fmt(a)} is not inside the vertex set")
    return Clutter._make(a, c.d, frozenset(f for f in c.circuits if f & a == f))


def remove_circuit(c: Clutter, f: int) -> Clutter:
    """``C − F`` for a d-face F: drop the single circuit F."""
    if f.bit_count() != c.d + 1:
        raise ValueError(f"{fmt(f)} is not a {c.d}-face")
    return Clutter._make(c.vertices, c.d, c.circuits - {f})


def cliques_by_size(c: Clutter) -> dict[int, frozenset]:
    """Cliques with at least d+1 vertices, grouped by size."""
    levels: dict[int, frozenset] = {}
    cur = c.circuits
    size = c.d + 1
    while cur:
        levels[size] = cur
        nxt = set()
        for a in cur:
            rest = c.vertices & ~a
            while rest:
                low = rest & -rest
                rest ^= low
                b = a | low
                if b in nxt:
                    continue
                if all(s in cur for s in facets_of(b)):
                    nxt.add(b)
        cur = frozenset(nxt)
        size += 1
    return levels


def clique_complex(c: Clutter) -> SimplicialComplex:
    """Δ(C): all cliques of C, stored by its maximal cliques."""
    levels = cliques_by_size(c)
    facets = set()
    covered_low = set()
    for f in c.circuits:
        covered_low.update(facets_of(f))
    for s in subsets_of_size(c.vertices, c.d):
        if s not in covered_low:
            facets.add(s)
    sizes = sorted(levels)
    for size in sizes:
        above = levels.get(size + 1, frozenset())
        covered = set()
        for b in above:
            covered.update(facets_of(b))
        facets.update(a for a in levels[size] if a not in covered)
    return SimplicialComplex._make(c.vertices, frozenset(facets))


def minimal_nonfaces(dx: SimplicialComplex) -> frozenset:
    if dx.is_void:
        return frozenset([0])
    fs = dx.faces
    out = set()
    for g in fs:
        rest = dx.vertices & ~g
        while rest:
            low = rest & -rest
            rest ^= low
            n = g | low
            if n in fs or n in out:
                continue
            if all(s in fs for s in facets_of(n)):
                out.add(n)
    return frozenset(out)


def stanley_reisner_generators(dx: SimplicialComplex) -> frozenset:
    """Minimal non-faces of ``dx`` (the supports of the generators of I_Δ)."""
    return minimal_nonfaces(dx)


def alexander_dual(dx: SimplicialComplex) -> SimplicialComplex:
    v = dx.vertices
    return SimplicialComplex._make(v, frozenset(v & ~n for n in minimal_nonfaces(dx)))


def dual_clutter(c: Clutter) -> GeneralClutter:
    """C∨ = {V \\ F : F in the complement of C}."""
    v = c.vertices
    return GeneralClutter(v, frozenset(v & ~f for f in complement(c).circuits))


def link(dx: SimplicialComplex, f: int) -> SimplicialComplex:
    if f not in dx:
        raise ValueError(f"not a face: {fmt(f)}")
    return SimplicialComplex._make(
        dx.vertices & ~f, frozenset(g & ~f for g in dx.facets if g & f == f))


def delete_vertex(x, v: int):
    """Remove vertex ``v`` (0-based index) from a clutter or complex."""
    bit = 1 << v
    if not x.vertices & bit:
        raise ValueError(f"unknown vertex {v + 1}")
    rest = x.vertices & ~bit
    if isinstance(x, Clutter):
        return Clutter._make(rest, x.d, frozenset(f for f in x.circuits if not f & bit))
    if isinstance(x, GeneralClutter):
        return GeneralClutter(rest, frozenset(e for e in x.edges if not e & bit))
    if isinstance(x, SimplicialComplex):
        if x.is_void:
            return SimplicialComplex._make(rest, frozenset())
        return SimplicialComplex._make(rest, maximal_sets(g & ~bit for g in x.facets))
    raise TypeError(f"cannot delete a vertex from {type(x).__name__}")


def pure_skeleton(dx: SimplicialComplex, i: int) -> SimplicialComplex:
    if not -1 <= i <= dx.dim:
        raise ValueError(f"skeleton dimension {i} outside -1..{dx.dim}")
    return SimplicialComplex._make(
        dx.vertices, frozenset(f for f in dx.faces if f.bit_count() == i + 1))


def normalize_support(c: Clutter) -> Clutter:
    support = 0
    for f in c.circuits:
        support |= f
    return Clutter._make(support, c.d, c.circuits)


def facets_clutter(dx: SimplicialComplex) -> Clutter:
    """Facets of a pure, nonvoid complex as a uniform clutter."""
    if dx.is_void or not dx.is_pure or dx.dim < 0:
        raise ValueError("facets of this complex are not a uniform clutter")
    return Clutter._make(dx.vertices, dx.dim, dx.facets)
