"""Ring invariants of k[Δ] computed from links and f-/h-vectors.

Depth and regularity come from Hochster's local cohomology formula, never
from a Betti table, so the two routes can check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import descent_polynomial, sd_h_transform
from .complex import (
    SimplicialComplex,
    barycentric_subdivision,
    f_vector,
    h_vector,
    link_faces,
    one_skeleton_is_chordal,
    popcount,
)
from .errors import OutOfRange
from .homology import QQ, Field, homology_ranks
from .series import Poly, RationalSeries, T_MINUS_ONE, padd, peval, pmul, ppow, pscale


def _nonvoid(cx: SimplicialComplex) -> None:
    if cx.is_void:
        raise ValueError("the void complex has no Stanley-Reisner ring")


@lru_cache(maxsize=512)
def link_homology(cx: SimplicialComplex, field: Field = QQ) -> dict[int, tuple[int, ...]]:
    """face mask -> reduced Betti numbers of its link (``r[q + 1] = dim H~_q``)."""
    return {f: homology_ranks(link_faces(cx, f), field) for f in sorted(cx.faces)}


def _link_classes(cx: SimplicialComplex, field: Field):
    """Yield (|F|, q, dim H~_q(lk F)) for every nonzero link homology group."""
    for f, ranks in link_homology(cx, field).items():
        s = popcount(f)
        for k, r in enumerate(ranks):
            if r:
                yield s, k - 1, r


# -- Hilbert series ---------------------------------------------------------
def hilbert_series(cx: SimplicialComplex) -> RationalSeries:
    _nonvoid(cx)
    return RationalSeries(h_vector(cx), "1-t", cx.dim + 1)


def hilbert_series_sd(cx: SimplicialComplex) -> RationalSeries:
    """Hilbert series of k[sd Δ] via the refined Eulerian transform of h."""
    _nonvoid(cx)
    return RationalSeries(sd_h_transform(h_vector(cx), cx.dim), "1-t", cx.dim + 1)


def multiplicity_from_series(series: RationalSeries) -> tuple[int, int]:
    """(Krull dimension, multiplicity) read off a Hilbert series."""
    num, e = series.canonical()
    return e, peval(num, 1)


# -- local cohomology ---------------------------------------------------------
def _check_degree(cx: SimplicialComplex, i: int) -> None:
    if not 0 <= i <= cx.dim + 1:
        raise OutOfRange(f"local cohomology degree {i} outside 0..{cx.dim + 1}")


def local_cohomology_series(cx: SimplicialComplex, field: Field, i: int) -> RationalSeries:
    """Hilb(H^i_m(k[Δ]), t) = sum_F dim H~_{i-|F|-1}(lk F) / (t-1)^{|F|}."""
    _nonvoid(cx)
    _check_degree(cx, i)
    top = cx.dim + 1
    num: Poly = ()
    const = 0
    for s, q, r in _link_classes(cx, field):
        if q != i - s - 1:
            continue
        if s == 0:
            const += r
        else:
            num = padd(num, pscale(ppow(T_MINUS_ONE, top - s), r))
    return RationalSeries(num, "t-1", top, const)


def local_cohomology_series_sd(cx: SimplicialComplex, field: Field, i: int) -> RationalSeries:
    """Hilb(H^i_m(k[sd Δ]), t) from the links of Δ and descent polynomials."""
    _nonvoid(cx)
    _check_degree(cx, i)
    top = cx.dim + 1
    num: Poly = ()
    const = 0
    for s, q, r in _link_classes(cx, field):
        if q != i - s - 1:
            continue
        if s == 0:
            const += r
        else:
            desc = descent_polynomial(s).coefficients
            num = padd(num, pscale(pmul(desc, ppow(T_MINUS_ONE, top - s)), r))
    return RationalSeries(num, "t-1", top, const)


# -- depth, regularity ------------------------------------------------------
def depth(cx: SimplicialComplex, field: Field = QQ) -> int:
    _nonvoid(cx)
    return min(q + s + 1 for s, q, _ in _link_classes(cx, field))


def end_of_local_cohomology(cx: SimplicialComplex, field: Field, i: int) -> int | None:
    """Largest degree with H^i_m(k[Δ])_j != 0, or None if the module vanishes."""
    sizes = [s for s, q, _ in _link_classes(cx, field) if q == i - s - 1]
    return -min(sizes) if sizes else None


def regularity(cx: SimplicialComplex, field: Field = QQ) -> int:
    """max_i (i + end H^i); each class in H~_q(lk F) contributes q + 1."""
    _nonvoid(cx)
    return max(q + 1 for _, q, _ in _link_classes(cx, field))


def height_and_multiplicity(cx: SimplicialComplex) -> tuple[int, int]:
    _nonvoid(cx)
    return cx.n - (cx.dim + 1), f_vector(cx)[-1]


def is_cohen_macaulay(cx: SimplicialComplex, field: Field = QQ) -> bool:
    return depth(cx, field) == cx.dim + 1


def is_koszul_flag(cx: SimplicialComplex) -> bool:
    _nonvoid(cx)
    return cx.is_flag()


def golod_flag_criterion(cx: SimplicialComplex) -> bool:
    """Chordality of the 1-skeleton; decides Golodness only for flag complexes."""
    if not cx.is_flag():
        raise ValueError("the chordality criterion applies to flag complexes only")
    return one_skeleton_is_chordal(cx)


def is_golod_sd(cx: SimplicialComplex) -> bool:
    """Whether k[sd Δ] is Golod, decided on the materialized subdivision."""
    _nonvoid(cx)
    return one_skeleton_is_chordal(barycentric_subdivision(cx))


@dataclass(frozen=True)
class InvariantBundle:
    krull_dim: int
    depth: int
    pdim: int
    reg: int
    height: int
    multiplicity: int
    is_CM: bool
    is_koszul_flag: bool
    is_golod: bool | None  # None when Δ is not flag
    field: Field = QQ

    def as_dict(self) -> dict:
        out = {k: getattr(self, k) for k in self.__dataclass_fields__}
        out["field"] = self.field.name
        return out


def invariant_bundle(cx: SimplicialComplex, field: Field = QQ) -> InvariantBundle:
    _nonvoid(cx)
    dp = depth(cx, field)
    h, e = height_and_multiplicity(cx)
    flag = cx.is_flag()
    return InvariantBundle(
        krull_dim=cx.dim + 1,
        depth=dp,
        pdim=cx.n - dp,
        reg=regularity(cx, field),
        height=h,
        multiplicity=e,
        is_CM=dp == cx.dim + 1,
        is_koszul_flag=flag,
        is_golod=one_skeleton_is_chordal(cx) if flag else None,
        field=field,
    )
