"""Random instances and theorem sweeps.

Each registered statement is a function ``check(C) -> Outcome``.  Proven
statements must never produce ``FAIL``; open questions only produce ``HIT``
(an instance worth keeping) or ``MISS``.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from pathlib import Path
from typing import Callable, Iterator, Optional

from . import certificates
from .ascent import (
    ascent,
    chordal_edge_order,
    find_edge_order,
    free_subcircuit_check,
    is_cf_chordal,
    is_d_chorded,
    lin_res_sms_check,
    n_le_d_plus_3_check,
)
from .chordality import (
    delete_subcircuit,
    dual_complex,
    eliminate_toward_vertex_deletion,
    greedy_elimination,
    is_chordal,
    is_shedding_vertex,
    is_vertex_decomposable,
    is_w_chordal,
    link_clutter,
    maximal_subcircuits,
    minimum_layer,
    replay_elimination,
    shedding_pure_criterion,
    simplicial_maximal_subcircuits,
)
from .core import (
    BudgetExhausted,
    Clutter,
    GeneralClutter,
    alexander_dual,
    bit_list,
    clique_complex,
    complement,
    delete_vertex,
    dual_clutter,
    fmt,
    generated,
    labels,
    link,
    normalize_support,
    remove_circuit,
    stanley_reisner_generators,
    subsets_of_size,
)
from .formats import dumps
from .homlin import FIELDS, Field, has_linear_resolution, subset_homology_witness
from .quotients import (
    append_sms_generator,
    ascent_order,
    betti_after_sms_deletion,
    has_linear_quotients,
    restrict_order_by_vertex,
)

FAMILIES = ("uniform", "complete-minus-k", "graph", "near-chordal", "mixed")
SEARCH_BUDGET = 200_000


# ---------------------------------------------------------------------------
# generation


@dataclass(frozen=True)
class GenSpec:
    """Instance stream description.

    ``n`` is the largest vertex count; each instance draws its own size from
    ``n_min..n``.  ``density=None`` draws a fresh density per instance.
    """

    n: int
    d: int
    density: Optional[float] = None
    seed: int = 0
    count: int = 100
    family: str = "mixed"
    n_min: Optional[int] = None
    k: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if not 0 <= self.d < self.n <= 64:
            raise ValueError("need 0 <= d < n <= 64")
        if self.density is not None and not 0 <= self.density <= 1:
            raise ValueError("density must lie in [0, 1]")
        if self.family == "graph" and self.d != 1:
            raise ValueError("graph family needs d = 1")
        if self.count < 0:
            raise ValueError("count must be >= 0")
        lo = self.low
        if not self.d + 1 <= lo <= self.n:
            raise ValueError("n_min out of range")

    @property
    def low(self) -> int:
        return self.n_min if self.n_min is not None else min(self.n, self.d + 2)

    @classmethod
    def from_json(cls, obj: dict) -> "GenSpec":
        known = {"n", "d", "density", "seed", "count", "family", "n_min", "k"}
        extra = set(obj) - known
        if extra:
            raise ValueError(f"unknown GenSpec keys {sorted(extra)}")
        return cls(**obj)


def _uniform(rng: random.Random, n: int, d: int, p: float) -> Clutter:
    v = (1 << n) - 1
    return Clutter._make(v, d, frozenset(f for f in subsets_of_size(v, d + 1)
                                         if rng.random() < p))


def _complete_minus(rng: random.Random, n: int, d: int, k: int) -> Clutter:
    full = Clutter.complete(n, d)
    circuits = sorted(full.circuits)
    drop = rng.sample(circuits, min(k, len(circuits)))
    return full.with_circuits(set(circuits) - set(drop))


def _near_chordal(rng: random.Random, n: int, d: int) -> Clutter:
    """A random walk of SMS deletions from the complete clutter, maybe toggling one face."""
    c = Clutter.complete(n, d)
    steps = rng.randint(0, len(c.circuits))
    for _ in range(steps):
        sms = sorted(simplicial_maximal_subcircuits(c))
        if not sms:
            break
        c = delete_subcircuit(c, rng.choice(sms))
    if rng.random() < 0.5:
        f = rng.choice(sorted(subsets_of_size(c.vertices, d + 1)))
        c = c.with_circuits(c.circuits ^ {f})
    return c


def generate(spec: GenSpec) -> Iterator[Clutter]:
    rng = random.Random(spec.seed)
    for _ in range(spec.count):
        n = rng.randint(spec.low, spec.n)
        p = spec.density if spec.density is not None else rng.random()
        fam = spec.family
        if fam == "mixed":
            fam = rng.choice(("uniform", "uniform", "complete-minus-k", "near-chordal"))
        if fam in ("uniform", "graph"):
            yield _uniform(rng, n, spec.d, p)
        elif fam == "complete-minus-k":
            k = spec.k if spec.k is not None else rng.randint(1, 3)
            yield _complete_minus(rng, n, spec.d, k)
        else:
            yield _near_chordal(rng, n, spec.d)


def all_clutters(n: int, d: int) -> Iterator[Clutter]:
    """Every d-clutter on [n] (2^C(n, d+1) of them)."""
    v = (1 << n) - 1
    pool = list(subsets_of_size(v, d + 1))
    for pick in range(1 << len(pool)):
        yield Clutter._make(v, d, frozenset(pool[k] for k in bit_list(pick)))


# ---------------------------------------------------------------------------
# outcomes


class Status(str, Enum):
    PASS = "pass"
    VACUOUS = "vacuous"
    FAIL = "fail"
    SKIP = "skip"
    HIT = "hit"
    MISS = "miss"


@dataclass
class Outcome:
    status: Status
    note: str = ""

    @classmethod
    def check(cls, ok: bool, note: str = "") -> "Outcome":
        return cls(Status.PASS if ok else Status.FAIL, note)


PASS = Outcome(Status.PASS)
VACUOUS = Outcome(Status.VACUOUS)


def _lin(c: Clutter, f: Field) -> bool:
    return has_linear_resolution(c, f).holds


def _dual_ok(c: Clutter) -> bool:
    return not c.is_complete


# ---------------------------------------------------------------------------
# proven statements


def check_transition(c: Clutter) -> Outcome:
    dx = clique_complex(c)
    if stanley_reisner_generators(dx) != complement(c).circuits:
        return Outcome(Status.FAIL, "minimal non-faces differ from the complement")
    if generated(dual_clutter(c)) != alexander_dual(dx):
        return Outcome(Status.FAIL, "<C∨> differs from the Alexander dual")
    return PASS


def _face_vertices(gamma) -> list[int]:
    support = 0
    for f in gamma.facets:
        support |= f
    return bit_list(support)


def check_shedding_pure(c: Clutter) -> Outcome:
    if not _dual_ok(c):
        return VACUOUS
    gamma = dual_complex(c)
    for v in _face_vertices(gamma):
        if is_shedding_vertex(gamma, v) != shedding_pure_criterion(gamma, v):
            return Outcome(Status.FAIL, f"vertex {v + 1}")
    return PASS


def _shedding_vertices(c: Clutter) -> list[int]:
    if not _dual_ok(c) or c.d == 0:
        return []
    gamma = dual_complex(c)
    return [v for v in _face_vertices(gamma) if is_shedding_vertex(gamma, v)]


def check_dual_of_link(c: Clutter) -> Outcome:
    vs = [v for v in _shedding_vertices(c) if any(f >> v & 1 for f in c.circuits)]
    if not vs:
        return VACUOUS
    gamma = dual_complex(c)
    for v in vs:
        bit = 1 << v
        d_link = link_clutter(c, v)
        lk = link(generated(c), bit)
        rest = delete_vertex(gamma, v)
        low = frozenset(f for f in alexander_dual(rest).faces if f.bit_count() == c.d)
        if lk.facets != low:
            return Outcome(Status.FAIL, f"part 1 at vertex {v + 1}")
        if generated(dual_clutter(d_link)).facets != rest.facets:
            return Outcome(Status.FAIL, f"part 2 at vertex {v + 1}")
        sms_d = simplicial_maximal_subcircuits(d_link)
        sms_c = simplicial_maximal_subcircuits(c)
        for e in maximal_subcircuits(d_link):
            if (e in sms_d) != ((e | bit) in sms_c):
                return Outcome(Status.FAIL, f"part 3 at vertex {v + 1}, e = {fmt(e)}")
    return PASS


def check_shedding_stable(c: Clutter) -> Outcome:
    vs = _shedding_vertices(c)
    if not vs:
        return VACUOUS
    ms = maximal_subcircuits(c)
    seen = False
    for v in vs:
        bit = 1 << v
        for e in ms:
            if not e & bit:
                continue
            seen = True
            rest = delete_subcircuit(c, e)
            if not is_shedding_vertex(dual_complex(rest), v):
                return Outcome(Status.FAIL, f"v = {v + 1}, e = {fmt(e)}: not shedding")
            want = delete_subcircuit(link_clutter(c, v), e & ~bit).circuits
            if link_clutter(rest, v).circuits != want:
                return Outcome(Status.FAIL, f"v = {v + 1}, e = {fmt(e)}: link facets")
    return PASS if seen else VACUOUS


def check_vertex_deletion(c: Clutter) -> Outcome:
    seen = False
    for v in _shedding_vertices(c):
        if is_chordal(link_clutter(c, v), SEARCH_BUDGET) is None:
            continue
        seen = True
        steps = eliminate_toward_vertex_deletion(c, v, SEARCH_BUDGET)
        try:
            end = replay_elimination(c, steps)
        except ValueError as exc:
            return Outcome(Status.FAIL, f"v = {v + 1}: {exc}")
        if end.circuits != delete_vertex(c, v).circuits:
            return Outcome(Status.FAIL, f"v = {v + 1}: replay does not reach C - v")
    return PASS if seen else VACUOUS


def check_almost_complete(c: Clutter) -> Outcome:
    full = Clutter.complete(c.vertices, c.d, mask=True)
    if not full.circuits:
        return VACUOUS
    f = min(c.circuits) if c.circuits else min(full.circuits)
    return Outcome.check(is_chordal(remove_circuit(full, f), SEARCH_BUDGET) is not None,
                         f"complete minus {fmt(f)}")


def check_vdec_main(c: Clutter) -> Outcome:
    if not _dual_ok(c):
        return VACUOUS
    cert = is_vertex_decomposable(dual_complex(c), SEARCH_BUDGET)
    if cert is None:
        return VACUOUS
    return Outcome.check(is_chordal(c, SEARCH_BUDGET) is not None)


def _with_upper_layer(c: Clutter) -> GeneralClutter:
    """C together with the (d+2)-sets containing no circuit: a non-uniform antichain."""
    extra = [g for g in subsets_of_size(c.vertices, c.d + 2)
             if not any(f & g == f for f in c.circuits)]
    return GeneralClutter._from_edges(c.vertices, c.circuits | frozenset(extra))


def check_w_chordal(c: Clutter) -> Outcome:
    if not c.circuits:
        return VACUOUS
    seen = False
    for g in (GeneralClutter._from_edges(c.vertices, c.circuits), _with_upper_layer(c)):
        if not is_w_chordal(g, budget=SEARCH_BUDGET):
            continue
        seen = True
        if is_chordal(minimum_layer(g), SEARCH_BUDGET) is None:
            return Outcome(Status.FAIL, "W-chordal but the minimum layer is not chordal")
    return PASS if seen else VACUOUS


def check_lin_res_plus(c: Clutter) -> Outcome:
    up = ascent(c)
    for f in FIELDS:
        left = _lin(c, f)
        right = _lin(up, f) and subset_homology_witness(c, f, c.d, c.d) is None
        if left != right:
            return Outcome(Status.FAIL, f"over {f.value}: {left} vs {right}")
    return PASS


def check_cf1(c: Clutter) -> Outcome:
    homology = subset_homology_witness(c, Field.GF2, c.d, c.d) is None
    return Outcome.check(homology == is_d_chorded(c).holds)


def check_cf2(c: Clutter) -> Outcome:
    return Outcome.check(_lin(c, Field.GF2) == is_cf_chordal(c))


def check_chordal_plus(c: Clutter) -> Outcome:
    if is_chordal(c, SEARCH_BUDGET) is None:
        return VACUOUS
    return Outcome.check(is_chordal(ascent(c), SEARCH_BUDGET) is not None)


def check_lin_res_sms(c: Clutter) -> Outcome:
    if not ascent(c).circuits:
        return VACUOUS
    for f in FIELDS:
        rep = lin_res_sms_check(c, f)
        if not rep.holds:
            return Outcome(Status.FAIL, f"over {f.value}: {rep.details}")
    return PASS


def check_betti_corollary(c: Clutter) -> Outcome:
    sms = sorted(simplicial_maximal_subcircuits(ascent(c)))
    if not sms:
        return VACUOUS
    seen = False
    for fld in FIELDS:
        if not _lin(c, fld):
            continue
        seen = True
        for f in sms:
            res = betti_after_sms_deletion(c, f, fld)
            if not res.holds:
                return Outcome(Status.FAIL, f"F = {fmt(f)} over {fld.value}: {res.mismatches}")
    return PASS if seen else VACUOUS


def _lq(c: Clutter) -> Optional[list[int]]:
    """Admissible order for the complement, or None; linear resolution is necessary."""
    if not _lin(c, Field.GF2):
        return None
    return has_linear_quotients(complement(c).circuits, SEARCH_BUDGET)


def _label_order(order) -> list:
    return [list(labels(f)) for f in order]


def check_lin_q_plus(c: Clutter) -> Outcome:
    order = _lq(c)
    if order is None:
        return VACUOUS
    if not all(_lin(c, f) for f in FIELDS):
        return Outcome(Status.FAIL, "linear quotients without a linear resolution")
    up_order = ascent_order(c, order)
    err = certificates.verify({"kind": "admissible-order", "of": "ascent-complement",
                               "order": _label_order(up_order)}, c)
    if err:
        return Outcome(Status.FAIL, f"ascent order: {err}")
    for f in sorted(simplicial_maximal_subcircuits(ascent(c))):
        new = append_sms_generator(c, order, f)
        err = certificates.verify({"kind": "admissible-order", "of": "complement-minus",
                                   "face": list(labels(f)), "order": _label_order(new)}, c)
        if err:
            return Outcome(Status.FAIL, f"appending {fmt(f)}: {err}")
    for v in bit_list(c.vertices):
        sub = delete_vertex(c, v)
        err = certificates.check_admissible(certificates.complement_family(sub),
                                            _label_order(restrict_order_by_vertex(order, v)))
        if err:
            return Outcome(Status.FAIL, f"restricting to V - {v + 1}: {err}")
    return PASS


def check_cf_chorded(c: Clutter) -> Outcome:
    sms = sorted(simplicial_maximal_subcircuits(ascent(c)))
    if not sms or not is_d_chorded(c):
        return VACUOUS
    for f in sms:
        if not is_d_chorded(remove_circuit(c, f)):
            return Outcome(Status.FAIL, f"F = {fmt(f)}")
    return PASS


def check_edge_order(c: Clutter) -> Outcome:
    if c.d != 1 or is_chordal(c, SEARCH_BUDGET) is None:
        return VACUOUS
    order = chordal_edge_order(c)
    for f in sorted(simplicial_maximal_subcircuits(ascent(c))):
        if is_chordal(remove_circuit(c, f), SEARCH_BUDGET) is None:
            return Outcome(Status.FAIL, f"C - {fmt(f)} is not chordal")
    err = certificates.verify({"kind": "edge-order", "order": _label_order(order)}, c)
    return Outcome.check(err is None, err or "")


def check_small_n(c: Clutter) -> Outcome:
    if c.n > c.d + 3:
        return VACUOUS
    rep = n_le_d_plus_3_check(c, SEARCH_BUDGET)
    if not rep.holds:
        return Outcome(Status.FAIL, str(rep.details))
    free = free_subcircuit_check(c, SEARCH_BUDGET)
    if not free.holds:
        return Outcome(Status.FAIL, "no free maximal subcircuit")
    return VACUOUS if rep.vacuous and free.vacuous else PASS


def check_froberg_graphs(c: Clutter) -> Outcome:
    if c.d != 1:
        return VACUOUS
    chordal = is_chordal(c, SEARCH_BUDGET) is not None
    for f in FIELDS:
        if _lin(c, f) != chordal:
            return Outcome(Status.FAIL, f"over {f.value}")
    return PASS


# ---------------------------------------------------------------------------
# open questions


def hunt_statement_b(c: Clutter) -> Outcome:
    """Linear quotients for the complement but C not chordal."""
    if is_chordal(c, SEARCH_BUDGET) is not None:
        return Outcome(Status.MISS)
    order = _lq(c)
    return Outcome(Status.HIT, "admissible order found") if order else Outcome(Status.MISS)


def hunt_lin_q_converse(c: Clutter) -> Outcome:
    """Every ascent/deletion ideal has linear quotients but the complement does not."""
    up = ascent(c)
    if not up.circuits or not c.circuits or _lq(c) is not None:
        return Outcome(Status.MISS)
    if has_linear_quotients(complement(up).circuits, SEARCH_BUDGET) is None:
        return Outcome(Status.MISS)
    for f in simplicial_maximal_subcircuits(up):
        if _lq(remove_circuit(c, f)) is None:
            return Outcome(Status.MISS)
    for v in bit_list(c.vertices):
        if _lq(delete_vertex(c, v)) is None:
            return Outcome(Status.MISS)
    return Outcome(Status.HIT)


def hunt_lin_res_sms_equivalence(c: Clutter) -> Outcome:
    """Statement (3) without (1)."""
    if not ascent(c).circuits:
        return Outcome(Status.MISS)
    for f in FIELDS:
        det = lin_res_sms_check(c, f).details
        if det["s3"] and not det["s1"]:
            return Outcome(Status.HIT, f"over {f.value}")
    return Outcome(Status.MISS)


def hunt_sms_empty(c: Clutter) -> Outcome:
    """Statement (3) holding while SMS(C⁺) is empty."""
    if not ascent(c).circuits:
        return Outcome(Status.MISS)
    for f in FIELDS:
        det = lin_res_sms_check(c, f).details
        if det["s3"] and not det["sms_nonempty"]:
            return Outcome(Status.HIT, f"over {f.value}")
    return Outcome(Status.MISS)


def hunt_greedy(c: Clutter) -> Outcome:
    """Greedy elimination gets stuck although C is chordal."""
    if greedy_elimination(c) is None and is_chordal(c, SEARCH_BUDGET) is not None:
        return Outcome(Status.HIT)
    return Outcome(Status.MISS)


@dataclass(frozen=True)
class Statement:
    name: str
    check: Callable[[Clutter], Outcome]
    proven: bool = True


REGISTRY: dict[str, Statement] = {s.name: s for s in [
    Statement("transition", check_transition),
    Statement("shedding-pure", check_shedding_pure),
    Statement("dual-of-link", check_dual_of_link),
    Statement("shedding-stable", check_shedding_stable),
    Statement("ver-del", check_vertex_deletion),
    Statement("almost-complete", check_almost_complete),
    Statement("vdec-main", check_vdec_main),
    Statement("w-chordal", check_w_chordal),
    Statement("lin-res-plus", check_lin_res_plus),
    Statement("cf1-main", check_cf1),
    Statement("cf2-main", check_cf2),
    Statement("chordal-plus", check_chordal_plus),
    Statement("lin-res-sms", check_lin_res_sms),
    Statement("betti-corollary", check_betti_corollary),
    Statement("lin-q-plus", check_lin_q_plus),
    Statement("c-f-chorded", check_cf_chorded),
    Statement("chordal-edge-order", check_edge_order),
    Statement("n-le-d-plus-3", check_small_n),
    Statement("froberg-graphs", check_froberg_graphs),
    Statement("open-statement-b", hunt_statement_b, proven=False),
    Statement("open-lin-q-converse", hunt_lin_q_converse, proven=False),
    Statement("open-lin-res-sms-equivalence", hunt_lin_res_sms_equivalence, proven=False),
    Statement("open-sms-empty", hunt_sms_empty, proven=False),
    Statement("open-greedy-stuck", hunt_greedy, proven=False),
]}


# ---------------------------------------------------------------------------
# sweeps


@dataclass
class Counterexample:
    clutter: Clutter
    note: str
    shrunk: Optional[Clutter] = None

    def to_json(self) -> dict:
        out = {"n": self.clutter.n, "d": self.clutter.d,
               "circuits": [list(labels(f)) for f in self.clutter], "note": self.note}
        if self.shrunk is not None:
            out["shrunk"] = [list(labels(f)) for f in self.shrunk]
        return out


@dataclass
class SweepReport:
    statement: str
    proven: bool
    counts: dict = field(default_factory=lambda: {s.value: 0 for s in Status})
    counterexamples: list = field(default_factory=list)
    budget_log: list = field(default_factory=list)

    @property
    def failures(self) -> int:
        return self.counts[Status.FAIL.value]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def merge(self, other: "SweepReport") -> "SweepReport":
        out = SweepReport(self.statement, self.proven)
        for k in out.counts:
            out.counts[k] = self.counts[k] + other.counts[k]
        out.counterexamples = self.counterexamples + other.counterexamples
        out.budget_log = self.budget_log + other.budget_log
        return out

    def summary(self) -> str:
        parts = ", ".join(f"{k}={v}" for k, v in self.counts.items() if v)
        return f"{self.statement}: {parts or 'no instances'}"

    def to_json(self) -> dict:
        return {"statement": self.statement, "proven": self.proven, "counts": self.counts,
                "counterexamples": [c.to_json() for c in self.counterexamples],
                "budget_log": self.budget_log}


def _run(stmt: Statement, c: Clutter) -> Outcome:
    try:
        return stmt.check(c)
    except BudgetExhausted as exc:
        return Outcome(Status.SKIP, str(exc))


def shrink(stmt: Statement, c: Clutter) -> Clutter:
    """Greedily drop circuits while the check still fails."""
    cur = c
    changed = True
    while changed:
        changed = False
        for f in sorted(cur.circuits):
            cand = cur.with_circuits(cur.circuits - {f})
            if _run(stmt, cand).status is Status.FAIL:
                cur = cand
                changed = True
                break
    return cur


def sweep(name, instances, corpus: Optional[Path] = None,
          stop_on_fail: bool = True) -> SweepReport:
    """Run one statement (a registry name or a Statement) over ``instances``.

    ``instances`` is a GenSpec or any iterable of clutters.  With ``corpus``
    set, shrunk counterexamples and hunt hits are written there.
    """
    stmt = REGISTRY[name] if isinstance(name, str) else name
    if isinstance(instances, GenSpec):
        instances = generate(instances)
    report = SweepReport(stmt.name, stmt.proven)
    for k, c in enumerate(instances):
        out = _run(stmt, c)
        report.counts[out.status.value] += 1
        if out.status is Status.SKIP:
            report.budget_log.append({"index": k, "reason": out.note})
        elif out.status is Status.FAIL:
            small = shrink(stmt, c)
            report.counterexamples.append(Counterexample(c, out.note, small))
            if corpus is not None:
                save_corpus_entry(corpus, stmt.name, small, out.note)
            if stop_on_fail:
                break
        elif out.status is Status.HIT:
            report.counterexamples.append(Counterexample(c, out.note))
            if corpus is not None:
                save_corpus_entry(corpus, stmt.name, c, out.note)
    return report


def save_corpus_entry(corpus: Path, name: str, c: Clutter, note: str) -> Path:
    corpus = Path(corpus)
    corpus.mkdir(parents=True, exist_ok=True)
    c = _standard(c)
    stem = f"{name}-n{c.n}-d{c.d}-" + "-".join(fmt(f) for f in c)[:80]
    path = corpus / f"{stem}.clutter"
    path.write_text(dumps(c))
    (corpus / f"{stem}.json").write_text(json.dumps({"statement": name, "note": note}) + "\n")
    return path


def _standard(c: Clutter) -> Clutter:
    """Relabel onto [n] keeping the relative order of vertices."""
    order = bit_list(c.vertices)
    pos = {v: k for k, v in enumerate(order)}

    def move(f: int) -> int:
        return sum(1 << pos[v] for v in bit_list(f))

    return Clutter._make((1 << len(order)) - 1, c.d, frozenset(move(f) for f in c.circuits))


# ---------------------------------------------------------------------------
# the non-chordal graph with chordal ascent


def _is_cycle_graph(c: Clutter, length: int) -> bool:
    c = normalize_support(c)
    if c.n != length or len(c.circuits) != length:
        return False
    deg = {v: 0 for v in bit_list(c.vertices)}
    for f in c.circuits:
        for v in bit_list(f):
            deg[v] += 1
    return all(k == 2 for k in deg.values()) and _connected_graph(c)


def _connected_graph(c: Clutter) -> bool:
    seen = {bit_list(c.vertices)[0]}
    grow = True
    while grow:
        grow = False
        for f in c.circuits:
            a, b = bit_list(f)
            if (a in seen) != (b in seen):
                seen |= {a, b}
                grow = True
    return len(seen) == c.n


def _has_five_cycle_deletion(c: Clutter) -> bool:
    return any(any(f >> v & 1 for f in c.circuits) and _is_cycle_graph(delete_vertex(c, v), 5)
               for v in bit_list(c.vertices))


def figure_graph_properties(c: Clutter) -> dict:
    """The properties the non-chordal example graph is required to have."""
    up = ascent(c)
    sms = sorted(simplicial_maximal_subcircuits(up))
    return {
        "not_chordal": is_chordal(c) is None,
        "ascent_chordal": is_chordal(up) is not None,
        "deletions_chordal": all(is_chordal(remove_circuit(c, f)) is not None for f in sms),
        "ascent_lq": has_linear_quotients(complement(up).circuits) is not None,
        "deletions_lq": all(has_linear_quotients(complement(remove_circuit(c, f)).circuits)
                            is not None for f in sms),
        "five_cycle": _has_five_cycle_deletion(c),
        "edge_order": find_edge_order(c) is not None,
        "ascent_nonempty": bool(up.circuits),
    }


def find_figure_graph(max_n: int = 6) -> Optional[Clutter]:
    """First graph (by vertex count, then edge count, then edge list) with all the properties."""
    for n in range(5, max_n + 1):
        v = (1 << n) - 1
        pairs = list(subsets_of_size(v, 2))
        for m in range(len(pairs) + 1):
            for edges in combinations(pairs, m):
                c = Clutter._make(v, 1, frozenset(edges))
                used = 0
                for f in edges:
                    used |= f
                if used != v:
                    continue
                if not _has_five_cycle_deletion(c) or not ascent(c).circuits:
                    continue
                if all(figure_graph_properties(c).values()):
                    return c
    return None
