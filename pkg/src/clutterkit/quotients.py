"""Admissible orders and linear quotients of squarefree generator sets.

An order F_1..F_t of generator supports is admissible when for every i and
every j < i some l in F_j - F_i satisfies F_k - F_i = {l} for some k < i.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

from .ascent import ascent
from .chordality import DEFAULT_BUDGET, _Counter, closed_neighborhood, simplicial_maximal_subcircuits
from .core import Clutter, PreconditionError, complement, fmt, labels, remove_circuit, sorted_faces
from .homlin import BettiTable, Field, clutter_betti, has_linear_resolution


@dataclass(frozen=True)
class AdmissibilityResult:
    holds: bool
    violation: Optional[tuple[int, int]] = None  # 0-based (i, j)

    def __bool__(self) -> bool:
        return self.holds


def _singletons(prefix: Sequence[int], g: int) -> int:
    """Union of the one-element differences F_k - g over the prefix."""
    s = 0
    for f in prefix:
        diff = f & ~g
        if diff and diff & (diff - 1) == 0:
            s |= diff
    return s


def _check_uniform(order: Sequence[int]) -> None:
    if len({f.bit_count() for f in order}) > 1:
        raise ValueError("generators of mixed dimensions")
    if len(set(order)) != len(order):
        raise ValueError("repeated generator")


def is_admissible_order(order: Sequence[int]) -> AdmissibilityResult:
    order = list(order)
    _check_uniform(order)
    for i in range(1, len(order)):
        g = order[i]
        s = _singletons(order[:i], g)
        for j in range(i):
            if not order[j] & ~g & s:
                return AdmissibilityResult(False, (i, j))
    return AdmissibilityResult(True)


def _extends(prefix: Sequence[int], g: int) -> bool:
    s = _singletons(prefix, g)
    return all(f & ~g & s for f in prefix)


def colon_sizes(order: Sequence[int]) -> list[int]:
    """q_k = number of variables generating (F_1..F_{k-1}) : F_k for an admissible order."""
    return [_singletons(order[:k], order[k]).bit_count() for k in range(len(order))]


def betti_from_order(order: Sequence[int]) -> list[int]:
    """Total Betti numbers of an ideal with linear quotients: β_i = Σ_k C(q_k, i)."""
    qs = colon_sizes(order)
    top = max(qs, default=-1)
    return [sum(comb(q, i) for q in qs) for i in range(top + 1)]


def has_linear_quotients(gens, budget: int = DEFAULT_BUDGET) -> Optional[list[int]]:
    """Search for an admissible order of ``gens``.

    Extends prefixes depth-first; whether a face can come next depends only
    on the set of earlier faces, so dead prefix sets are memoized.
    """
    gens = sorted_faces(gens)
    _check_uniform(gens)
    t = len(gens)
    if t == 0:
        return []
    full = (1 << t) - 1
    dead: set[int] = set()
    counter = _Counter(budget)
    prefix: list[int] = []

    def go(used: int) -> bool:
        if used == full:
            return True
        if used in dead:
            return False
        counter.tick()
        for idx in range(t):
            bit = 1 << idx
            if used & bit or not _extends(prefix, gens[idx]):
                continue
            prefix.append(gens[idx])
            if go(used | bit):
                return True
            prefix.pop()
        dead.add(used)
        return False

    return list(prefix) if go(0) else None


def ascent_order(c: Clutter, order: Sequence[int]) -> list[int]:
    """Admissible order for the complement of C⁺ built block by block from ``order``.

    Block i holds F_i + v for v outside F_i, minus what earlier blocks already
    produced, in canonical order.
    """
    order = list(order)
    if set(order) != set(complement(c).circuits):
        raise PreconditionError("order does not list the complement's circuits")
    res = is_admissible_order(order)
    if not res:
        raise PreconditionError(f"order is not admissible (violation at {res.violation})")
    seen: set[int] = set()
    out = []
    for f in order:
        block = []
        rest = c.vertices & ~f
        while rest:
            low = rest & -rest
            rest ^= low
            g = f | low
            if g not in seen:
                seen.add(g)
                block.append(g)
        out.extend(sorted_faces(block))
    return out


def append_sms_generator(c: Clutter, order: Sequence[int], f: int) -> list[int]:
    """Admissible order for the complement of C - F: the old order followed by F."""
    up = ascent(c)
    if f.bit_count() != c.d + 1 or f not in simplicial_maximal_subcircuits(up):
        raise PreconditionError(f"{fmt(f)} is not a simplicial maximal subcircuit of the ascent")
    order = list(order)
    if not is_admissible_order(order):
        raise PreconditionError("order is not admissible")
    return order + [f]


def restrict_order_by_vertex(order: Sequence[int], v: int) -> list[int]:
    """Drop the generators containing vertex ``v`` (0-based)."""
    bit = 1 << v
    return [f for f in order if not f & bit]


@dataclass
class BettiShift:
    before: BettiTable
    after: BettiTable
    t: int
    mismatches: list

    @property
    def holds(self) -> bool:
        return not self.mismatches


def betti_after_sms_deletion(c: Clutter, f: int, field: Field = Field.RATIONAL) -> BettiShift:
    """Compare β_i(J) with β_i(I) + C(t, i), t = n - |N_{C⁺}[F]|, J the ideal of C - F."""
    field = Field.parse(field)
    if not has_linear_resolution(c, field):
        raise PreconditionError("the complement ideal has no linear resolution")
    up = ascent(c)
    if f.bit_count() != c.d + 1 or f not in simplicial_maximal_subcircuits(up):
        raise PreconditionError(f"{fmt(f)} is not a simplicial maximal subcircuit of the ascent")
    t = c.n - closed_neighborhood(up, f).bit_count()
    before = clutter_betti(c, field)
    after = clutter_betti(remove_circuit(c, f), field)
    top = max(before.length, after.length, t + 1)
    mismatches = [(i, after.betti(i), before.betti(i) + comb(t, i))
                  for i in range(top) if after.betti(i) != before.betti(i) + comb(t, i)]
    return BettiShift(before, after, t, mismatches)


def order_to_json(order: Sequence[int]) -> dict:
    return {"kind": "admissible-order", "order": [list(labels(f)) for f in order]}
