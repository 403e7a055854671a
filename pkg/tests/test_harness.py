import json

import pytest

from clutterkit import harness
from clutterkit.core import BudgetExhausted, Clutter, face
from clutterkit.fixtures import dunce_hat, octahedron, wheel_graph
from clutterkit.formats import load
from clutterkit.harness import GenSpec, Outcome, Statement, Status


def test_generate_is_deterministic():
    spec = GenSpec(n=6, d=2, seed=3, count=25)
    assert list(harness.generate(spec)) == list(harness.generate(spec))
    other = list(harness.generate(GenSpec(n=6, d=2, seed=4, count=25)))
    assert other != list(harness.generate(spec))


def test_generate_respects_shape():
    for fam in harness.FAMILIES:
        d = 1 if fam == "graph" else 2
        spec = GenSpec(n=7, d=d, seed=1, count=30, family=fam, n_min=5)
        got = list(harness.generate(spec))
        assert len(got) == 30
        assert all(c.d == d and 5 <= c.n <= 7 for c in got)


def test_density_extremes():
    empty = harness.generate(GenSpec(n=5, d=1, density=0.0, count=5, family="uniform"))
    assert all(not c.circuits for c in empty)
    full = harness.generate(GenSpec(n=5, d=1, density=1.0, count=5, family="uniform"))
    assert all(c.is_complete for c in full)


def test_complete_minus_k():
    for c in harness.generate(GenSpec(n=5, d=2, count=10, family="complete-minus-k", k=2, n_min=5)):
        assert len(c.circuits) == 8


@pytest.mark.parametrize("kwargs", [
    {"n": 5, "d": 5}, {"n": 70, "d": 1}, {"n": 5, "d": 1, "density": 1.5},
    {"n": 5, "d": 2, "family": "graph"}, {"n": 5, "d": 1, "family": "odd"},
    {"n": 5, "d": 1, "count": -1}, {"n": 5, "d": 2, "n_min": 2},
])
def test_genspec_validation(kwargs):
    with pytest.raises(ValueError):
        GenSpec(**kwargs)


def test_genspec_from_json():
    assert GenSpec.from_json({"n": 6, "d": 1, "seed": 9}) == GenSpec(n=6, d=1, seed=9)
    with pytest.raises(ValueError):
        GenSpec.from_json({"n": 6, "d": 1, "colour": "red"})


def test_all_clutters_counts():
    assert sum(1 for _ in harness.all_clutters(4, 1)) == 64
    assert sum(1 for _ in harness.all_clutters(4, 2)) == 16


def test_registry_names():
    proven = [s for s in harness.REGISTRY.values() if s.proven]
    assert len(proven) == 19
    assert all(not s.proven for name, s in harness.REGISTRY.items() if name.startswith("open-"))


@pytest.mark.parametrize("name", sorted(harness.REGISTRY))
def test_every_statement_small_sweep(name):
    d = 1 if name == "froberg-graphs" or name == "chordal-edge-order" else 2
    n = d + 3 if name == "n-le-d-plus-3" else 6
    spec = GenSpec(n=n, d=d, seed=11, count=15, family="graph" if d == 1 else "mixed")
    rep = harness.sweep(name, spec, stop_on_fail=False)
    assert rep.total == 15
    assert rep.failures == 0, rep.to_json()
    json.dumps(rep.to_json())


def test_fixture_outcomes():
    assert harness.check_vdec_main(octahedron()).status in (Status.PASS, Status.VACUOUS)
    assert harness.check_chordal_plus(dunce_hat()).status is Status.VACUOUS
    assert harness.check_cf_chorded(octahedron()).status is Status.PASS


def failing_if_has(f: int) -> Statement:
    return Statement("fake", lambda c: Outcome.check(f not in c.circuits, "contains it"))


def test_shrink_keeps_only_the_culprit():
    stmt = failing_if_has(face("135"))
    small = harness.shrink(stmt, octahedron())
    assert small.circuits == {face("135")}


def test_sweep_records_and_saves_counterexamples(tmp_path):
    stmt = failing_if_has(face("123"))
    instances = [Clutter.from_labels("12 23", n=4), Clutter.from_labels("123 124 134", n=4)]
    rep = harness.sweep(stmt, instances, corpus=tmp_path)
    assert rep.failures == 1 and rep.counts["pass"] == 1
    ce = rep.counterexamples[0]
    assert ce.shrunk.circuits == {face("123")}
    files = sorted(p.name for p in tmp_path.iterdir())
    assert len(files) == 2
    clutter = load(next(tmp_path.glob("*.clutter")))
    assert clutter.circuits == {face("123")}
    note = json.loads(next(tmp_path.glob("*.json")).read_text())
    assert note == {"statement": "fake", "note": "contains it"}


def test_stop_on_fail():
    stmt = failing_if_has(face("12"))
    many = [Clutter.from_labels("12 23")] * 4
    assert harness.sweep(stmt, many).total == 1
    assert harness.sweep(stmt, many, stop_on_fail=False).failures == 4


def test_budget_exhaustion_is_a_skip():
    def boom(c):
        raise BudgetExhausted("too big")
    rep = harness.sweep(Statement("boom", boom), [Clutter.from_labels("12")])
    assert rep.counts["skip"] == 1 and rep.budget_log == [{"index": 0, "reason": "too big"}]


def test_hits_go_to_corpus_with_standard_labels(tmp_path):
    stmt = Statement("hunt", lambda c: Outcome(Status.HIT, "found"), proven=False)
    c = Clutter(face("246"), 1, frozenset([face("24"), face("46")]))
    rep = harness.sweep(stmt, [c], corpus=tmp_path)
    assert rep.counts["hit"] == 1 and not rep.failures
    saved = load(next(tmp_path.glob("*.clutter")))
    assert saved == Clutter.from_labels("12 23", n=3)


def test_merge_and_summary():
    a = harness.sweep("ver-del", GenSpec(n=5, d=1, count=4, family="graph"))
    b = harness.sweep("ver-del", GenSpec(n=5, d=1, count=6, family="graph", seed=2))
    m = a.merge(b)
    assert m.total == 10 and m.summary().startswith("ver-del:")


def test_figure_graph_search_matches_fixture():
    g = harness.find_figure_graph()
    assert g == wheel_graph()
    props = harness.figure_graph_properties(g)
    assert all(props.values()), props
