"""Exact linear algebra, reduced simplicial homology and linear resolutions.

Two coefficient fields are supported: GF(2) (rows packed into int bitmasks)
and the rationals (fraction-free integer elimination).  Nothing here touches
floating point.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import gcd
from typing import Iterable, Optional, Sequence

from .core import (
    Clutter,
    SimplicialComplex,
    bit_list,
    clique_complex,
    fmt,
    induced,
    labels,
    subsets_of_size,
)


class Field(str, Enum):
    GF2 = "gf2"
    RATIONAL = "rat"

    @classmethod
    def parse(cls, name) -> "Field":
        if isinstance(name, Field):
            return name
        aliases = {"gf2": cls.GF2, "z2": cls.GF2, "2": cls.GF2,
                   "rat": cls.RATIONAL, "q": cls.RATIONAL, "rational": cls.RATIONAL}
        try:
            return aliases[str(name).lower()]
        except KeyError:
            raise ValueError(f"unknown field {name!r}") from None


FIELDS = (Field.GF2, Field.RATIONAL)


# ---------------------------------------------------------------------------
# rank


def gf2_rank(vectors: Iterable[int]) -> int:
    """Rank of a family of GF(2) vectors packed as ints."""
    basis: dict[int, int] = {}
    for x in vectors:
        while x:
            top = x.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = x
                break
            x ^= b
    return len(basis)


def rational_rank(rows: Iterable[dict]) -> int:
    """Rank over Q of sparse integer rows ``{col: value}``.

    Integer-preserving elimination: the pivot row is combined into the others
    by cross multiplication and each result is divided by its content, so
    entries never become fractions.
    """
    work = [dict(r) for r in rows]
    work = [{c: v for c, v in r.items() if v} for r in work]
    work = [r for r in work if r]
    rank = 0
    while work:
        # prefer a unit pivot: no cross multiplication needed then
        best = None
        for idx, r in enumerate(work):
            for c, v in r.items():
                if best is None or abs(v) < best[0]:
                    best = (abs(v), idx, c)
                    if best[0] == 1:
                        break
            if best[0] == 1:
                break
        _, idx, col = best
        piv = work.pop(idx)
        p = piv[col]
        rank += 1
        nxt = []
        for r in work:
            a = r.get(col)
            if a:
                if p == 1 or p == -1:
                    f = a * p
                    out = dict(r)
                    for c, v in piv.items():
                        nv = out.get(c, 0) - f * v
                        if nv:
                            out[c] = nv
                        else:
                            out.pop(c, None)
                else:
                    out = {}
                    for c in r.keys() | piv.keys():
                        nv = p * r.get(c, 0) - a * piv.get(c, 0)
                        if nv:
                            out[c] = nv
                    g = 0
                    for v in out.values():
                        g = gcd(g, v)
                        if g == 1:
                            break
                    if g > 1:
                        out = {c: v // g for c, v in out.items()}
                r = out
            if r:
                nxt.append(r)
        work = nxt
    return rank


def rank(m, field: Field = Field.RATIONAL) -> int:
    """Exact rank of a dense matrix (sequence of rows) or a :class:`BoundaryMatrix`."""
    field = Field.parse(field)
    if isinstance(m, BoundaryMatrix):
        cols = m.columns
        if field is Field.GF2:
            return gf2_rank(_pack(col.keys()) for col in cols)
        return rational_rank(cols)
    rows = [list(r) for r in m]
    if field is Field.GF2:
        return gf2_rank(_pack(j for j, v in enumerate(r) if v % 2) for r in rows)
    return rational_rank({j: int(v) for j, v in enumerate(r) if v} for r in rows)


def _pack(indices: Iterable[int]) -> int:
    x = 0
    for i in indices:
        x |= 1 << i
    return x


# ---------------------------------------------------------------------------
# chain complexes


@dataclass(frozen=True)
class BoundaryMatrix:
    """The map ∂_i from i-faces (columns) to (i-1)-faces (rows).

    ``columns[c]`` maps row index -> entry.  Over GF(2) every entry is 1.
    """

    i: int
    rows: tuple
    cols: tuple
    columns: tuple
    field: Field

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.cols))

    def entry(self, r: int, c: int) -> int:
        return self.columns[c].get(r, 0)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * len(self.cols) for _ in self.rows]
        for c, col in enumerate(self.columns):
            for r, v in col.items():
                out[r][c] = v
        return out

    def rank(self) -> int:
        return rank(self, self.field)


def _faces_by_dim(dx: SimplicialComplex) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    for f in dx.faces:
        out.setdefault(f.bit_count() - 1, []).append(f)
    for fs in out.values():
        fs.sort()
    return out


def _boundary_columns(cols: Sequence[int], row_index: dict, signed: bool) -> list[dict]:
    columns = []
    for f in cols:
        col = {}
        sign = 1
        for b in bit_list(f):
            col[row_index[f ^ (1 << b)]] = sign if signed else 1
            sign = -sign
        columns.append(col)
    return columns


def boundary_matrix(dx: SimplicialComplex, i: int, field: Field = Field.RATIONAL) -> BoundaryMatrix:
    """∂_i of the augmented oriented chain complex of ``dx``.

    ``i = 0`` is the augmentation (one row, the empty face); ``i = -1`` is the
    zero map out of the empty-face chain group.
    """
    field = Field.parse(field)
    if dx.is_void or not -1 <= i <= dx.dim:
        raise ValueError(f"boundary degree {i} outside -1..{dx.dim}")
    by_dim = _faces_by_dim(dx)
    cols = tuple(sorted(by_dim.get(i, []), key=labels))
    if i == -1:
        return BoundaryMatrix(i, (), cols, ({},), field)
    rows = tuple(sorted(by_dim.get(i - 1, []), key=labels))
    row_index = {f: k for k, f in enumerate(rows)}
    columns = tuple(_boundary_columns(cols, row_index, field is Field.RATIONAL))
    return BoundaryMatrix(i, rows, cols, columns, field)


@dataclass
class HomologyProfile:
    """dim H̃_i(Δ; K) for -1 <= i <= dim Δ."""

    field: Field
    dims: dict = field(default_factory=dict)

    def __getitem__(self, i: int) -> int:
        return self.dims.get(i, 0)

    def nonzero(self) -> list[int]:
        return sorted(i for i, v in self.dims.items() if v)

    def is_acyclic(self) -> bool:
        return not self.nonzero()

    def to_json(self) -> dict:
        return {"field": self.field.value,
                "homology": {str(i): v for i, v in sorted(self.dims.items())}}

    def __str__(self) -> str:
        return "  ".join(f"H~{i}={v}" for i, v in sorted(self.dims.items()))


@lru_cache(maxsize=1 << 17)
def _homology_dims(dx: SimplicialComplex, field: Field) -> tuple:
    if dx.is_void:
        return ((-1, 0),)
    by_dim = _faces_by_dim(dx)
    top = dx.dim
    ranks = {-1: 0, top + 1: 0}
    for i in range(0, top + 1):
        cols = by_dim.get(i, [])
        lower = by_dim.get(i - 1, [])
        if not cols or not lower:
            ranks[i] = 0
            continue
        row_index = {f: k for k, f in enumerate(lower)}
        if field is Field.GF2:
            vecs = []
            for f in cols:
                x = 0
                for b in bit_list(f):
                    x |= 1 << row_index[f ^ (1 << b)]
                vecs.append(x)
            ranks[i] = gf2_rank(vecs)
        else:
            ranks[i] = rational_rank(_boundary_columns(cols, row_index, True))
    return tuple((i, len(by_dim.get(i, [])) - ranks[i] - ranks[i + 1])
                 for i in range(-1, top + 1))


def reduced_homology(dx: SimplicialComplex, field: Field = Field.RATIONAL) -> HomologyProfile:
    field = Field.parse(field)
    return HomologyProfile(field, dict(_homology_dims(dx, field)))


@lru_cache(maxsize=1 << 17)
def _clutter_homology(c: Clutter, field: Field) -> tuple:
    return _homology_dims(clique_complex(c), field)


def clique_homology(c: Clutter, field: Field = Field.RATIONAL) -> HomologyProfile:
    """Reduced homology of the clique complex Δ(C)."""
    field = Field.parse(field)
    return HomologyProfile(field, dict(_clutter_homology(c, field)))


def clear_caches() -> None:
    _homology_dims.cache_clear()
    _clutter_homology.cache_clear()


# ---------------------------------------------------------------------------
# linear resolutions


@dataclass(frozen=True)
class LinearResolution:
    """Outcome of the subset-homology test.

    ``trivial`` marks the complete clutter, whose complement ideal is zero.
    A failure carries the first witness ``(W, i)`` in canonical subset order.
    """

    holds: bool
    witness: Optional[tuple[int, int]] = None
    trivial: bool = False

    def __bool__(self) -> bool:
        return self.holds

    def describe(self) -> str:
        if self.trivial:
            return "trivially linear (complete clutter, zero ideal)"
        if self.holds:
            return "linear resolution"
        w, i = self.witness
        return f"not linear: H~{i}(Δ_W) != 0 for W = {fmt(w)}"


def subset_homology_witness(c: Clutter, field: Field, min_degree: int,
                            max_degree: Optional[int] = None) -> Optional[tuple[int, int]]:
    """First (W, i) with H̃_i(Δ(C)_W; K) != 0 and min_degree <= i <= max_degree."""
    field = Field.parse(field)
    v = c.vertices
    for size in range(v.bit_count() + 1):
        for w in subsets_of_size(v, size):
            for i, dim in _clutter_homology(induced(c, w), field):
                if dim and i >= min_degree and (max_degree is None or i <= max_degree):
                    return (w, i)
    return None


def has_linear_resolution(c: Clutter, field: Field = Field.RATIONAL) -> LinearResolution:
    """Does I(C̄) have a (d+1)-linear resolution over ``field``?

    Uses the subset criterion: H̃_i(Δ(C)_W; K) = 0 for every W ⊆ V and i >= d.
    """
    if c.is_complete:
        return LinearResolution(True, None, trivial=True)
    witness = subset_homology_witness(c, field, c.d)
    return LinearResolution(witness is None, witness)


# ---------------------------------------------------------------------------
# graded Betti numbers


@dataclass
class BettiTable:
    """Graded Betti numbers β_{i,j} of a squarefree monomial ideal."""

    field: Field
    entries: dict = field(default_factory=dict)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries.get(ij, 0)

    def betti(self, i: int) -> int:
        return sum(v for (a, _), v in self.entries.items() if a == i)

    @property
    def length(self) -> int:
        return max((i for i, _ in self.entries), default=-1) + 1

    def totals(self) -> list[int]:
        return [self.betti(i) for i in range(self.length)]

    def shifts(self) -> set[int]:
        return {j - i for (i, j), v in self.entries.items() if v}

    def is_linear(self, degree: Optional[int] = None) -> bool:
        """True iff β_{i,j} = 0 whenever j != i + degree (any single degree if None)."""
        s = self.shifts()
        if degree is None:
            return len(s) <= 1
        return s <= {degree}

    def to_json(self) -> dict:
        return {"field": self.field.value,
                "betti": {f"{i},{j}": v for (i, j), v in sorted(self.entries.items())}}

    def __str__(self) -> str:
        if not self.entries:
            return "(zero ideal)"
        cols = range(self.length)
        shifts = range(min(self.shifts()), max(self.shifts()) + 1)
        head = ["", "total:"] + [f"{s}:" for s in shifts]
        grid = [[str(i) for i in cols], [str(self.betti(i)) for i in cols]]
        for s in shifts:
            grid.append([str(self[i, i + s]) if self[i, i + s] else "." for i in cols])
        width = max(len(x) for row in grid for x in row)
        hw = max(len(h) for h in head)
        return "\n".join(f"{h:>{hw}} " + " ".join(f"{x:>{width}}" for x in row)
                         for h, row in zip(head, grid))


def _accumulate(table: BettiTable, size: int, dims) -> None:
    for k, dim in dims:
        i = size - k - 2
        if dim and i >= 0:
            table.entries[(i, size)] = table.entries.get((i, size), 0) + dim


def graded_betti(dx: SimplicialComplex, field: Field = Field.RATIONAL) -> BettiTable:
    """β_{i,j}(I_Δ) = Σ_{|W|=j} dim H̃_{j-i-2}(Δ_W; K)."""
    field = Field.parse(field)
    table = BettiTable(field)
    v = dx.vertices
    for size in range(v.bit_count() + 1):
        for w in subsets_of_size(v, size):
            _accumulate(table, size, _homology_dims(dx.restrict(w), field))
    return table


def clutter_betti(c: Clutter, field: Field = Field.RATIONAL) -> BettiTable:
    """Betti table of I(C̄) = I_{Δ(C)}, using Δ(C)_W = Δ(C_W)."""
    field = Field.parse(field)
    table = BettiTable(field)
    v = c.vertices
    for size in range(v.bit_count() + 1):
        for w in subsets_of_size(v, size):
            _accumulate(table, size, _clutter_homology(induced(c, w), field))
    return table
