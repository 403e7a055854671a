from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clutterkit.core import Clutter, SimplicialComplex, complement, face, faces, generated
from clutterkit.fixtures import dunce_hat, octahedron
from clutterkit.homlin import (
    Field,
    boundary_matrix,
    clique_homology,
    clutter_betti,
    gf2_rank,
    graded_betti,
    has_linear_resolution,
    rank,
    rational_rank,
    reduced_homology,
    subset_homology_witness,
)
from clutterkit.quotients import betti_from_order, has_linear_quotients


def dense_rank(rows, gf2=False) -> int:
    m = [[(x % 2) if gf2 else Fraction(x) for x in row] for row in rows]
    r = 0
    for col in range(len(m[0]) if m else 0):
        p = next((i for i in range(r, len(m)) if m[i][col]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(len(m)):
            if i != r and m[i][col]:
                if gf2:
                    m[i] = [(a + b) % 2 for a, b in zip(m[i], m[r])]
                else:
                    f = m[i][col] / m[r][col]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def tetra_boundary() -> SimplicialComplex:
    return generated(faces("123 124 134 234"))


matrices = st.integers(1, 9).flatmap(lambda r: st.integers(1, 9).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


def test_rank_examples():
    assert rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert rank([[1, 1], [1, 1]], Field.GF2) == 1
    assert rank([[1, 1], [1, -1]], Field.GF2) == 1
    assert rank([[1, 1], [1, -1]], Field.RATIONAL) == 2
    assert rank(boundary_matrix(tetra_boundary(), 2, Field.RATIONAL)) == 3


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_rank_matches_dense_oracle(m):
    assert rank(m, Field.RATIONAL) == dense_rank(m)
    assert rank(m, Field.GF2) == dense_rank(m, gf2=True)


def test_low_level_rank_helpers():
    assert gf2_rank([0b011, 0b110, 0b101]) == 2
    assert rational_rank([{0: 2, 1: 4}, {0: 1, 1: 2}]) == 1
    assert rational_rank([]) == 0


def test_field_parse():
    assert Field.parse("z2") is Field.GF2
    assert Field.parse("Q") is Field.RATIONAL
    with pytest.raises(ValueError):
        Field.parse("gf3")


def test_boundary_matrix_conventions():
    dx = generated(faces("12"))
    aug = boundary_matrix(dx, 0, Field.RATIONAL)
    assert aug.shape == (1, 2) and aug.to_dense() == [[1, 1]]
    d1 = boundary_matrix(dx, 1, Field.RATIONAL).to_dense()
    assert d1 == [[-1], [1]]
    tri = boundary_matrix(generated(faces("123")), 2, Field.RATIONAL)
    col = {tri.rows[r]: tri.to_dense()[r][0] for r in range(3)}
    assert col == {face("23"): 1, face("13"): -1, face("12"): 1}
    with pytest.raises(ValueError):
        boundary_matrix(dx, 5)


def random_complex(draw_faces, n):
    return SimplicialComplex.from_faces((1 << n) - 1, draw_faces)


@st.composite
def complexes(draw):
    n = draw(st.integers(1, 6))
    fs = draw(st.lists(st.integers(1, (1 << n) - 1), min_size=1, max_size=6))
    return random_complex(fs, n)


@settings(max_examples=100, deadline=None)
@given(complexes(), st.sampled_from(list(Field)))
def test_boundary_squares_to_zero(dx, field):
    for i in range(dx.dim):
        a = boundary_matrix(dx, i, field).to_dense()
        b = boundary_matrix(dx, i + 1, field).to_dense()
        for r in range(len(a)):
            for c in range(len(b[0]) if b else 0):
                s = sum(a[r][k] * b[k][c] for k in range(len(b)))
                assert (s % 2 if field is Field.GF2 else s) == 0


def euler_reduced(dx) -> int:
    return sum((-1) ** (f.bit_count() - 1) for f in dx.faces)


@settings(max_examples=100, deadline=None)
@given(complexes(), st.sampled_from(list(Field)))
def test_euler_characteristic(dx, field):
    prof = reduced_homology(dx, field)
    assert sum((-1) ** i * v for i, v in prof.dims.items()) == euler_reduced(dx)


def test_homology_profiles():
    for f in Field:
        assert reduced_homology(SimplicialComplex.simplex(face("1234")), f).is_acyclic()
        assert reduced_homology(tetra_boundary(), f).nonzero() == [2]
        assert reduced_homology(generated(faces("1 2")), f)[0] == 1
        assert reduced_homology(SimplicialComplex.empty(0), f)[-1] == 1
        assert reduced_homology(SimplicialComplex.void(0), f).is_acyclic()


def test_torsion_distinguishes_fields():
    # six-vertex real projective plane
    rp2 = generated(faces("124 126 135 136 145 234 235 256 346 456"))
    assert reduced_homology(rp2, Field.GF2).nonzero() == [1, 2]
    assert reduced_homology(rp2, Field.RATIONAL).is_acyclic()


def test_dunce_hat_generated_complex_is_acyclic():
    c = dunce_hat()
    for f in Field:
        assert reduced_homology(generated(c), f).is_acyclic()
        assert clique_homology(c, f).nonzero() == [1]
        assert clique_homology(c, f)[1] == 4


def test_linear_resolution_examples():
    for f in Field:
        assert has_linear_resolution(dunce_hat(), f)
        assert has_linear_resolution(octahedron(), f)
    square = Clutter.from_labels("12 23 34 14")
    res = has_linear_resolution(square)
    assert not res and res.witness == (face("1234"), 1)
    assert "not linear" in res.describe()
    full = has_linear_resolution(Clutter.complete(4, 1))
    assert full and full.trivial


def test_linear_resolution_depends_on_field():
    # the clique complex of this 2-clutter is RP^2, so I(C̄) is linear only away from char 2
    c = Clutter.from_labels("124 126 135 136 145 234 235 256 346 456")
    assert has_linear_resolution(c, Field.RATIONAL)
    assert not has_linear_resolution(c, Field.GF2)


def brute_is_chordal_graph(c: Clutter) -> bool:
    from itertools import permutations
    vs = [v for v in range(c.n)]
    adj = {v: {u for u in vs if u != v and (1 << u | 1 << v) in c.circuits} for v in vs}
    for order in permutations(vs):
        ok = True
        for k, v in enumerate(order):
            later = [u for u in order[k + 1:] if u in adj[v]]
            if any(b not in adj[a] for a, b in combinations(later, 2)):
                ok = False
                break
        if ok:
            return True
    return False


def test_froberg_small_graphs():
    pairs = list(combinations(range(5), 2))
    for pick in range(0, 1 << len(pairs), 7):
        edges = frozenset((1 << a) | (1 << b) for k, (a, b) in enumerate(pairs) if pick >> k & 1)
        c = Clutter(0b11111, 1, edges)
        want = brute_is_chordal_graph(c)
        assert has_linear_resolution(c, Field.GF2).holds == want
        assert has_linear_resolution(c, Field.RATIONAL).holds == want


def test_subset_witness_degree_window():
    c = dunce_hat()
    assert subset_homology_witness(c, Field.GF2, 1, 1) is not None
    assert subset_homology_witness(c, Field.GF2, 2) is None


def test_betti_examples():
    full = clutter_betti(Clutter.complete(4, 1))
    assert full.totals() == []
    single = Clutter.from_labels("12 13 14 23 24", n=4)  # complement is the edge 34
    table = clutter_betti(single)
    assert table.totals() == [1] and table[0, 2] == 1
    assert table.is_linear()


def test_octahedron_betti_matches_linear_quotients():
    c = octahedron()
    order = has_linear_quotients(complement(c).circuits)
    for f in Field:
        table = clutter_betti(c, f)
        assert table.is_linear()
        assert table.totals() == betti_from_order(order) == [8, 13, 8, 2]
    text = str(clutter_betti(c))
    assert "total" in text and "13" in text


def test_graded_betti_simplex_is_zero():
    assert graded_betti(SimplicialComplex.simplex(face("123"))).totals() == []


def test_betti_json():
    js = clutter_betti(octahedron()).to_json()
    assert js["field"] == "rat"
    assert js["betti"] == {"0,3": 8, "1,4": 13, "2,5": 8, "3,6": 2}
