import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import RP2, build, facet_lists, named
from srtool.complex import barycentric_subdivision, boundary_of_face, simplex, void_complex
from srtool.errors import NonPrimeModulus
from srtool.homology import GF, GF2, QQ, Field, bareiss_rank, boundary_matrix, euler_characteristic, matrix_rank, parse_field, reduced_homology


def test_rp2_field_dependence():
    rp2 = named("RP2")
    assert reduced_homology(rp2, QQ).nonzero() == {}
    assert reduced_homology(rp2, GF2).nonzero() == {1: 1, 2: 1}
    assert reduced_homology(rp2, GF(3)).nonzero() == {}


def test_rp2_oracle_agrees():
    ref = oracles.closure(RP2)
    assert oracles.integral_homology(ref)[1] == (0, [2])
    assert oracles.reduced_betti(ref, 2) == {1: 1, 2: 1}


def test_small_cases():
    assert reduced_homology(simplex([]), QQ).nonzero() == {-1: 1}
    assert reduced_homology(void_complex(), QQ).ranks == ()
    assert reduced_homology(named("C4"), QQ).nonzero() == {1: 1}
    assert reduced_homology(boundary_of_face("abcd"), QQ).nonzero() == {2: 1}
    assert reduced_homology(named("two_points"), QQ).nonzero() == {0: 1}
    assert reduced_homology(simplex("abc"), QQ).is_acyclic()


def test_fields():
    assert parse_field("q") == QQ and parse_field("p") == GF2
    assert parse_field("GF(5)") == Field(5) and parse_field("7").name == "GF(7)"
    with pytest.raises(NonPrimeModulus):
        Field(4)
    with pytest.raises(NonPrimeModulus):
        parse_field("x")


def test_boundary_squares_to_zero():
    cx = barycentric_subdivision(simplex("abc"))
    d2 = boundary_matrix(cx, 2).to_dense()
    d1 = boundary_matrix(cx, 1).to_dense()
    prod = [[sum(d1[r][k] * d2[k][c] for k in range(len(d2))) for c in range(len(d2[0]))] for r in range(len(d1))]
    assert all(v == 0 for row in prod for v in row)


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5))
def test_sparse_rank_matches_bareiss(rows):
    cols = [{r: rows[r][c] for r in range(len(rows)) if rows[r][c]} for c in range(4)]
    assert matrix_rank(cols, QQ) == bareiss_rank(rows)


@given(facet_lists(max_vertices=6, max_facets=5), st.sampled_from([0, 2, 3]))
def test_homology_matches_snf_oracle(data, p):
    n, facets = data
    cx = build(n, facets)
    field = Field(p)
    ref = oracles.reduced_betti(oracles.closure(facets), p)
    assert reduced_homology(cx, field).nonzero() == ref
    ranks = reduced_homology(cx, field).ranks
    assert sum((-1) ** (k - 1) * r for k, r in enumerate(ranks)) == euler_characteristic(cx)
