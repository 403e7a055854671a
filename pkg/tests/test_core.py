from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clutterkit.core import (
    Clutter,
    GeneralClutter,
    SimplicialComplex,
    alexander_dual,
    clique_complex,
    complement,
    delete_vertex,
    dual_clutter,
    face,
    faces,
    fmt,
    generated,
    induced,
    is_clique,
    labels,
    link,
    minimal_nonfaces,
    normalize_support,
    pure_skeleton,
    remove_circuit,
    sorted_faces,
    stanley_reisner_generators,
)
from clutterkit.ascent import ascent
from clutterkit.chordality import delete_subcircuit, free_maximal_subcircuits
from clutterkit.fixtures import dual_example, dunce_hat, octahedron, vdec_example


def fs(spec):
    return frozenset(faces(spec))


@st.composite
def clutters(draw, max_n=6, max_d=3):
    n = draw(st.integers(2, max_n))
    d = draw(st.integers(0, min(max_d, n - 1)))
    pool = [sum(1 << v for v in s) for s in combinations(range(n), d + 1)]
    picked = draw(st.lists(st.sampled_from(pool), unique=True, max_size=len(pool)))
    return Clutter((1 << n) - 1, d, frozenset(picked))


def brute_cliques(c: Clutter) -> set:
    vs = list(labels(c.vertices))
    out = set()
    for k in range(len(vs) + 1):
        for a in combinations(vs, k):
            if k <= c.d or all(face(s) in c.circuits for s in combinations(a, c.d + 1)):
                out.add(face(list(a)) if a else 0)
    return out


# faces and labels


def test_face_forms_agree():
    assert face(1, 2, 5) == face([1, 2, 5]) == face("125") == 0b10011
    assert labels(face("135")) == (1, 3, 5)
    assert fmt(face("135")) == "135"
    assert fmt(face(3, 12)) == "{3,12}"


def test_face_rejects_bad_labels():
    with pytest.raises(ValueError):
        face(0)
    with pytest.raises(ValueError):
        face(1, 1)
    with pytest.raises(ValueError):
        face(65)


def test_sorted_faces_is_size_then_lex():
    assert [fmt(f) for f in sorted_faces(faces("23 124 13 12"))] == ["12", "13", "23", "124"]


# clutters


def test_clutter_validation():
    with pytest.raises(ValueError):
        Clutter(face("123"), 1, frozenset([face("123")]))
    with pytest.raises(ValueError):
        Clutter(face("12"), 1, frozenset([face("13")]))
    c = Clutter.from_labels("12 23", n=4)
    assert c.n == 4 and c.d == 1 and len(c) == 2


def test_general_clutter_must_be_antichain():
    with pytest.raises(ValueError):
        GeneralClutter(face("123"), frozenset([face("1"), face("12")]))
    GeneralClutter(face("1234"), frozenset(faces("12 13 234")))


def test_complement_dual_example():
    c = dual_example()
    comp = complement(c)
    assert len(comp.circuits) == 7 and face("245") in comp.circuits
    assert not complement(Clutter.complete(5, 2)).circuits


def test_complement_octahedron():
    assert complement(octahedron()).circuits == fs("126 136 146 156 124 246 245 234")


def test_is_clique():
    c = dual_example()
    assert is_clique(c, face("14"))
    assert is_clique(c, face("12"))
    assert is_clique(octahedron(), face("1235"))
    assert not is_clique(c, face("124"))


def test_induced():
    c = dual_example()
    assert induced(c, c.vertices) == c
    assert induced(c, face("125")).circuits == fs("125")


def test_induced_dunce_hat_has_free_subcircuit():
    c = dunce_hat()
    for v in range(8):
        sub = induced(c, c.vertices & ~(1 << v))
        assert free_maximal_subcircuits(sub)


def test_clique_complex_dual_example():
    dx = clique_complex(dual_example())
    assert dx.facets == fs("125 235 345 13 14 24")


def test_clique_complex_octahedron_facets():
    c = octahedron()
    dx = clique_complex(c)
    up = ascent(c).circuits
    rest = {f for f in c.circuits if not any(f & g == f for g in up)}
    # pairs are cliques (size <= d); 16 and 24 lie in no circuit
    assert dx.facets == up | rest | fs("16 24")


def test_clique_complex_complete_is_simplex():
    dx = clique_complex(Clutter.complete(5, 2))
    assert dx.is_simplex and dx.facets == {0b11111}


@settings(max_examples=80, deadline=None)
@given(clutters())
def test_clique_complex_matches_brute_force(c):
    assert clique_complex(c).faces == brute_cliques(c)


def test_alexander_dual_examples():
    gamma = generated(dual_example())
    assert alexander_dual(gamma).facets == fs("235 245 135")
    full = SimplicialComplex.simplex(face("123"))
    assert alexander_dual(full).is_void
    assert alexander_dual(alexander_dual(full)) == full


def test_alexander_dual_of_clique_complex_is_dual_clutter():
    c = dual_example()
    assert alexander_dual(clique_complex(c)).facets == fs("13 15 23 24 25 35 45")


@settings(max_examples=80, deadline=None)
@given(clutters())
def test_alexander_dual_definition(c):
    dx = generated(c)
    dual = alexander_dual(dx)
    v = c.vertices
    want = set()
    for k in range(c.n + 1):
        for a in combinations(labels(v), k):
            m = face(list(a)) if a else 0
            if (v & ~m) not in dx:
                want.add(m)
    assert dual.faces == want
    assert alexander_dual(dual) == dx


def test_dual_clutter_examples():
    assert dual_clutter(dual_example()).edges == fs("13 15 23 24 25 35 45")
    assert not dual_clutter(Clutter.complete(4, 1)).edges
    assert dual_clutter(vdec_example()).edges == fs(
        "136 146 236 246 346 135 235 145 245 123 124 134 234")


def test_link_examples():
    c = vdec_example()
    dx = generated(c)
    assert link(dx, face("6")).facets == fs("12 34")
    assert link(dx, 0) == dx
    c2 = delete_subcircuit(c, face("26"))
    assert link(generated(c2), face("6")).facets == fs("34")


def test_delete_vertex_examples():
    gamma = generated(dual_example())
    g2 = delete_vertex(gamma, 1)
    assert g2.facets == fs("15 345") and not g2.is_pure
    c = vdec_example()
    c6 = delete_vertex(c, 5)
    assert delete_vertex(c6, 0).circuits == fs("234 345")
    path = Clutter.from_labels("12 23", n=4)
    assert delete_vertex(path, 3).circuits == path.circuits


def test_pure_skeleton():
    c = octahedron()
    assert pure_skeleton(clique_complex(c), 2).facets == c.circuits
    assert pure_skeleton(clique_complex(c), 3).facets == ascent(c).circuits
    tetra = SimplicialComplex.simplex(face("1234"))
    assert len(pure_skeleton(tetra, 1).facets) == 6


def test_stanley_reisner_generators():
    c = dual_example()
    assert stanley_reisner_generators(clique_complex(c)) == complement(c).circuits
    assert not stanley_reisner_generators(SimplicialComplex.simplex(face("123")))
    assert stanley_reisner_generators(generated(faces("12 34"))) == fs("13 14 23 24")


def test_minimal_nonfaces_brute_force():
    dx = generated(faces("12 34"))
    assert minimal_nonfaces(dx) == fs("13 14 23 24")


def test_normalize_support():
    c = Clutter.from_labels("12 23", n=8)
    assert normalize_support(c).vertices == face("123")
    d = Clutter.from_labels("12 23")
    assert normalize_support(d) == d
    v = vdec_example()
    after = delete_subcircuit(delete_subcircuit(v, face("26")), face("46"))
    assert normalize_support(after) == normalize_support(delete_vertex(v, 5))


def test_void_and_empty_complexes_differ():
    void = SimplicialComplex.void(face("12"))
    empty = SimplicialComplex.empty(face("12"))
    assert void.is_void and not empty.is_void
    assert void.dim == -2 and empty.dim == -1
    assert empty.is_simplex


def test_remove_circuit():
    c = octahedron()
    assert len(remove_circuit(c, face("135")).circuits) == 11


def test_subcircuit_deletion_octahedron():
    c = octahedron()
    after = delete_subcircuit(c, face("12"))
    assert c.circuits - after.circuits == fs("123 125")
