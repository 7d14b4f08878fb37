from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import build, facet_lists, named
from srtool.betti import hochster_betti
from srtool.complex import barycentric_subdivision, simplex
from srtool.errors import OutOfRange
from srtool.homology import GF2, QQ, Field
from srtool.invariants import (
    depth,
    golod_flag_criterion,
    height_and_multiplicity,
    hilbert_series,
    hilbert_series_sd,
    invariant_bundle,
    is_cohen_macaulay,
    is_golod_sd,
    is_koszul_flag,
    local_cohomology_series,
    local_cohomology_series_sd,
    multiplicity_from_series,
    regularity,
)
from srtool.series import RationalSeries


def test_hilbert_series_examples():
    assert hilbert_series(named("point")) == RationalSeries((1,), "1-t", 1)
    assert hilbert_series(named("C3")) == RationalSeries((1, 1, 1), "1-t", 2)
    assert hilbert_series(simplex("123")) == RationalSeries((1,), "1-t", 3)
    assert hilbert_series_sd(named("C3")) == RationalSeries((1, 4, 1), "1-t", 2)
    assert hilbert_series_sd(named("edge")) == RationalSeries((1, 1), "1-t", 2)


def test_local_cohomology_examples():
    assert local_cohomology_series(named("point"), QQ, 1) == RationalSeries((1,), "t-1", 1)
    assert local_cohomology_series(named("C3"), QQ, 2) == RationalSeries((0, 3), "t-1", 2, 1)  # 1 + 3/(t-1) + 3/(t-1)^2
    c6 = barycentric_subdivision(named("C3"))
    want = RationalSeries((0, 6), "t-1", 2, 1)  # 1 + 6/(t-1) + 6/(t-1)^2
    assert local_cohomology_series(c6, QQ, 2) == want == local_cohomology_series_sd(named("C3"), QQ, 2)
    assert local_cohomology_series(named("two_points"), QQ, 1) == RationalSeries((2,), "t-1", 1, 1)
    with pytest.raises(OutOfRange):
        local_cohomology_series(named("C3"), QQ, 3)


def test_scalar_invariants():
    assert depth(simplex("123")) == 3 and depth(named("two_points")) == 1 and depth(named("C3")) == 2
    assert regularity(named("two_points")) == 1 and regularity(named("C3")) == 2 and regularity(simplex("12")) == 0
    assert height_and_multiplicity(named("C4")) == (2, 4)
    assert height_and_multiplicity(simplex("123")) == (0, 1)
    assert height_and_multiplicity(barycentric_subdivision(named("edge"))) == (1, 2)


def test_predicates():
    assert is_cohen_macaulay(named("C3")) and is_cohen_macaulay(simplex("1234"))
    assert not is_cohen_macaulay(named("two_edges"))
    assert is_koszul_flag(named("C4")) and not is_koszul_flag(named("C3"))
    assert is_golod_sd(named("path3")) and not is_golod_sd(named("C3")) and not is_golod_sd(simplex("123"))
    assert not golod_flag_criterion(named("C4"))
    with pytest.raises(ValueError):
        golod_flag_criterion(named("C3"))


def test_bundle():
    b = invariant_bundle(named("C4"), GF2)
    assert (b.krull_dim, b.depth, b.pdim, b.reg, b.height, b.multiplicity) == (2, 2, 2, 2, 2, 4)
    assert b.is_CM and b.is_koszul_flag and b.is_golod is False
    assert invariant_bundle(named("C3")).is_golod is None


def test_rp2_depth_depends_on_field():
    assert depth(named("RP2"), QQ) == 3 and depth(named("RP2"), GF2) == 2


@given(facet_lists(max_vertices=5, max_facets=4))
def test_hilbert_series_counts_monomials(data):
    n, facets = data
    series = hilbert_series(build(n, facets))
    ref = oracles.closure(facets)
    assert series.coefficients(4) == [oracles.hilbert_function(ref, j) for j in range(5)]


@given(facet_lists(max_vertices=5, max_facets=4), st.sampled_from([0, 2]))
def test_local_cohomology_against_oracle(data, p):
    n, facets = data
    cx = build(n, facets)
    ref = oracles.closure(facets)
    for i in range(cx.dim + 2):
        s = local_cohomology_series(cx, Field(p), i)
        for t in (Fraction(3), Fraction(-1, 2)):
            assert s(t) == oracles.local_cohomology_at(ref, i, t, p)


@given(facet_lists(max_vertices=5, max_facets=4), st.sampled_from([0, 2]))
def test_depth_and_regularity_against_brute_table(data, p):
    n, facets = data
    cx = build(n, facets)
    table = oracles.hochster(oracles.closure(facets), p)
    assert depth(cx, Field(p)) == n - max(i for i, _ in table)
    assert regularity(cx, Field(p)) == max(j - i for i, j in table)


@given(facet_lists())
def test_multiplicity_read_from_series(data):
    cx = build(*data)
    assert multiplicity_from_series(hilbert_series(cx)) == (cx.dim + 1, height_and_multiplicity(cx)[1])
