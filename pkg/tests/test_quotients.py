import random
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clutterkit import certificates
from clutterkit.ascent import ascent
from clutterkit.chordality import is_chordal, simplicial_maximal_subcircuits
from clutterkit.core import BudgetExhausted, Clutter, PreconditionError, complement, face, faces, labels
from clutterkit.fixtures import dunce_hat, octahedron, octahedron_admissible_order, octahedron_ascent_order
from clutterkit.homlin import Field, clutter_betti, has_linear_resolution
from clutterkit.quotients import (
    append_sms_generator,
    ascent_order,
    betti_after_sms_deletion,
    betti_from_order,
    colon_sizes,
    has_linear_quotients,
    is_admissible_order,
    order_to_json,
    restrict_order_by_vertex,
)


def lab(order):
    return [list(labels(f)) for f in order]


def oracle_admissible(order) -> bool:
    return certificates.check_admissible(set(frozenset(labels(f)) for f in order), lab(order)) is None


@st.composite
def uniform_families(draw, max_n=6):
    n = draw(st.integers(3, max_n))
    k = draw(st.integers(1, 3))
    pool = [sum(1 << v for v in s) for s in combinations(range(n), k)]
    return draw(st.lists(st.sampled_from(pool), unique=True, min_size=1, max_size=7))


def test_admissible_examples():
    assert is_admissible_order(octahedron_admissible_order())
    assert is_admissible_order(faces("123"))
    res = is_admissible_order(faces("12 34"))
    assert not res and res.violation == (1, 0)
    with pytest.raises(ValueError):
        is_admissible_order(faces("12 345"))
    with pytest.raises(ValueError):
        is_admissible_order(faces("12 12"))


@settings(max_examples=200, deadline=None)
@given(uniform_families())
def test_admissible_matches_colon_ideal_oracle(order):
    assert bool(is_admissible_order(order)) == oracle_admissible(order)


@settings(max_examples=60, deadline=None)
@given(uniform_families())
def test_linear_quotients_search_is_complete(gens):
    found = has_linear_quotients(gens)
    brute = any(oracle_admissible(list(p)) for p in permutations(gens))
    assert (found is not None) == brute
    if found is not None:
        assert sorted(found) == sorted(gens) and oracle_admissible(found)


def test_linear_quotients_examples():
    assert has_linear_quotients(faces("12 13")) == faces("12 13")
    assert has_linear_quotients([]) == []
    order = has_linear_quotients(complement(octahedron()).circuits)
    assert order is not None and is_admissible_order(order)
    with pytest.raises(BudgetExhausted):
        has_linear_quotients(complement(dunce_hat()).circuits, budget=2)


def test_dunce_hat_complement_outcome_is_recorded():
    # open whether this ideal has linear quotients; whatever is found must validate
    c = dunce_hat()
    order = has_linear_quotients(complement(c).circuits)
    if order is not None:
        assert certificates.verify({"kind": "admissible-order", "order": lab(order)}, c) is None
        assert len(order) == len(complement(c).circuits)


def test_colon_sizes_and_betti_formula():
    order = octahedron_admissible_order()
    assert colon_sizes(order)[0] == 0
    assert betti_from_order(order) == [8, 13, 8, 2]
    for f in Field:
        assert clutter_betti(octahedron(), f).totals() == [8, 13, 8, 2]


def test_ascent_order_octahedron():
    c = octahedron()
    new = ascent_order(c, octahedron_admissible_order())
    assert new == octahedron_ascent_order()
    assert is_admissible_order(new)
    assert set(new) == set(complement(ascent(c)).circuits)


def test_ascent_order_rejects_bad_input():
    c = octahedron()
    with pytest.raises(PreconditionError):
        ascent_order(c, faces("126 136"))
    with pytest.raises(PreconditionError):
        ascent_order(c, list(reversed(octahedron_admissible_order()))[:1] + octahedron_admissible_order()[:-1])


def test_ascent_order_complete_clutter_is_empty():
    assert ascent_order(Clutter.complete(5, 2), []) == []


def test_ascent_order_random_chordal_graphs():
    rng = random.Random(4)
    tested = 0
    for _ in range(60):
        n = rng.randint(4, 7)
        pairs = [(1 << a) | (1 << b) for a, b in combinations(range(n), 2)]
        c = Clutter((1 << n) - 1, 1, frozenset(p for p in pairs if rng.random() < 0.6))
        if is_chordal(c) is None:
            continue
        order = has_linear_quotients(complement(c).circuits)
        assert order is not None
        new = ascent_order(c, order)
        err = certificates.verify({"kind": "admissible-order", "of": "ascent-complement",
                                   "order": lab(new)}, c)
        assert err is None
        tested += 1
    assert tested > 10


def test_append_sms_generator_octahedron():
    c = octahedron()
    order = octahedron_admissible_order()
    sms = simplicial_maximal_subcircuits(ascent(c))
    assert len(sms) == 8
    for f in sms:
        new = append_sms_generator(c, order, f)
        assert new[-1] == f and is_admissible_order(new)
        err = certificates.verify({"kind": "admissible-order", "of": "complement-minus",
                                   "face": list(labels(f)), "order": lab(new)}, c)
        assert err is None
    with pytest.raises(PreconditionError):
        append_sms_generator(c, order, face("135"))


def test_append_to_empty_complement():
    c = Clutter.complete(4, 1)
    f = face("12")
    assert append_sms_generator(c, [], f) == [f]


def test_restrict_order_by_vertex():
    order = octahedron_admissible_order()
    assert restrict_order_by_vertex(order, 5) == faces("124 245 234")
    assert is_admissible_order(restrict_order_by_vertex(order, 5))
    assert restrict_order_by_vertex(faces("12 13"), 5) == faces("12 13")
    assert restrict_order_by_vertex(faces("12"), 0) == []


def test_betti_after_sms_deletion_octahedron():
    c = octahedron()
    for f in simplicial_maximal_subcircuits(ascent(c)):
        for fld in Field:
            res = betti_after_sms_deletion(c, f, fld)
            assert res.holds, res.mismatches


def test_betti_after_sms_deletion_path_graph():
    # a triangle with a pendant edge; C⁺ = {123}
    c = Clutter.from_labels("12 13 23 34")
    for f in simplicial_maximal_subcircuits(ascent(c)):
        res = betti_after_sms_deletion(c, f)
        assert res.holds


def test_betti_after_sms_deletion_t_zero():
    c = Clutter.complete(4, 1)
    f = face("12")
    res = betti_after_sms_deletion(c, f)
    assert res.t == 0 and res.holds
    assert res.after.totals() == [1]


def test_betti_after_sms_deletion_needs_linear():
    square = Clutter.from_labels("12 23 34 14")
    assert not has_linear_resolution(square)
    with pytest.raises(PreconditionError):
        betti_after_sms_deletion(square, face("12"))


def test_order_json():
    js = order_to_json(faces("12 13"))
    assert js == {"kind": "admissible-order", "order": [[1, 2], [1, 3]]}
