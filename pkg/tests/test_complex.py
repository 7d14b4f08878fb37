import pytest
from hypothesis import given

import oracles
from conftest import build, facet_lists, named
from srtool.complex import (
    barycentric_subdivision,
    boundary_of_face,
    f_from_h,
    f_vector,
    from_facets,
    h_from_f,
    h_vector,
    is_chordal_graph,
    link,
    one_skeleton_is_chordal,
    one_skeleton_is_forest,
    restriction,
    simplex,
    void_complex,
)
from srtool.errors import DuplicateLabel, EmptyFace, IsolatedLabel, NotAFace, UnknownLabel, UnknownVertex


def test_f_and_h_vectors_of_c3():
    c3 = named("C3")
    assert f_vector(c3) == (1, 3, 3)
    assert h_vector(c3) == (1, 1, 1)


def test_h_vector_keeps_trailing_zeros():
    assert h_vector(named("edge")) == (1, 0, 0)
    assert h_vector(simplex("1234")) == (1, 0, 0, 0, 0)


def test_construction_errors():
    with pytest.raises(UnknownLabel):
        from_facets(["1", "2"], [["1", "3"]])
    with pytest.raises(IsolatedLabel):
        from_facets(["1", "2", "3"], [["1", "2"]])
    with pytest.raises(DuplicateLabel):
        from_facets(["1", "1"], [["1"]])
    with pytest.raises(EmptyFace):
        boundary_of_face([])


def test_void_and_empty_face_complex_differ():
    v = void_complex()
    e = boundary_of_face(["a"])
    assert v.is_void and e.is_void
    sd_empty = barycentric_subdivision(simplex([]))
    assert sd_empty.faces == frozenset({0}) and not sd_empty.is_void
    with pytest.raises(ValueError):
        v.dim


def test_boundary_of_face():
    b = boundary_of_face("abc")
    assert f_vector(b) == (1, 3, 3)
    with pytest.raises(DuplicateLabel):
        boundary_of_face("aa")


def test_mask_and_membership():
    c4 = named("C4")
    assert ("1", "2") in c4
    assert ("1", "3") not in c4
    with pytest.raises(NotAFace):
        c4.mask(("1", "3"))
    with pytest.raises(UnknownVertex):
        c4.mask(("9",))


def test_link_and_restriction():
    tri = named("triangle_pendant")
    lk = link(tri, ("1",))
    assert sorted(lk.labels) == ["2", "3", "4"]
    assert f_vector(lk) == (1, 3)
    r = restriction(tri, ("2", "3", "4"))
    assert f_vector(r) == (1, 3, 1)


def test_minimal_nonfaces():
    assert [named("C4").face_labels(m) for m in named("C4").minimal_nonfaces()] == [("1", "3"), ("2", "4")]
    assert [named("C3").face_labels(m) for m in named("C3").minimal_nonfaces()] == [("1", "2", "3")]
    assert named("C4").is_flag() and not named("C3").is_flag()


def test_sd_of_c3_is_hexagon():
    sd = barycentric_subdivision(named("C3"))
    assert f_vector(sd) == (1, 6, 6)
    assert all(len([v for v in range(6) if sd.adjacency()[u] >> v & 1]) == 2 for u in range(6))


def test_chordality_and_forest():
    assert not one_skeleton_is_chordal(named("C4"))
    assert one_skeleton_is_chordal(named("C3"))
    assert not one_skeleton_is_forest(named("C3"))
    assert one_skeleton_is_forest(named("path3"))
    # a 6-cycle with one long chord splits into two 4-cycles: not chordal
    adj = [0] * 6
    for a, b in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    assert not is_chordal_graph(adj)


@given(facet_lists())
def test_faces_match_oracle_closure(data):
    n, facets = data
    cx = build(n, facets)
    ref = oracles.closure(facets)
    assert len(cx.faces) == len(ref)
    assert h_vector(cx) == tuple(oracles.h_vector(ref))
    assert f_from_h(h_from_f(f_vector(cx))) == f_vector(cx)


@given(facet_lists())
def test_sd_matches_order_complex(data):
    n, facets = data
    sd = barycentric_subdivision(build(n, facets))
    ref = oracles.order_complex(oracles.closure(facets))
    assert sorted(f_vector(sd)) == sorted(oracles.f_vector(ref))
    assert sd.is_flag()


@given(facet_lists(max_vertices=6, max_facets=6))
def test_graph_predicates_match_networkx(data):
    nx = pytest.importorskip("networkx")
    n, facets = data
    cx = build(n, facets)
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(cx.edges())
    assert one_skeleton_is_chordal(cx) == nx.is_chordal(g)
    assert one_skeleton_is_forest(cx) == nx.is_forest(g)
