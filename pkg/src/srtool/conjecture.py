"""Multiplicity Conjecture verdicts for k[Δ] and k[sd Δ].

Upper bound:  e <= (1/h!) prod_{i<=h} M_i
Lower bound:  e >= (1/h!) prod_{i<=h} m_i   (Cohen-Macaulay rings only)
with equality in either exactly when the resolution is pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import factorial, prod

from .betti import BettiTable, ShiftProfile, hochster_betti, shifts
from .complex import (
    SimplicialComplex,
    barycentric_subdivision,
    bits,
    f_vector,
    one_skeleton_is_forest,
    popcount,
)
from .errors import ConsistencyViolation
from .homology import QQ, Field, homology_ranks, reduced_homology
from .invariants import height_and_multiplicity, is_cohen_macaulay


@dataclass(frozen=True)
class ConjectureReport:
    subject: str
    subdivision: bool
    field: Field
    e: int
    h: int
    shift_profile: ShiftProfile
    upper_product: Fraction
    upper_holds: bool
    equality_upper: bool
    is_pure: bool
    is_CM: bool
    lower_product: Fraction | None = None  # None: not applicable (not CM)
    lower_holds: bool | None = None
    equality_lower: bool | None = None
    witnesses: dict = dc_field(default_factory=dict)
    table: BettiTable | None = dc_field(default=None, repr=False, compare=False)

    def as_dict(self) -> dict:
        def frac(x):
            return None if x is None else str(x)

        return {
            "subject": self.subject,
            "subdivision": self.subdivision,
            "field": self.field.name,
            "e": self.e,
            "h": self.h,
            "m": list(self.shift_profile.lower),
            "M": list(self.shift_profile.upper),
            "upper_product": frac(self.upper_product),
            "upper_holds": self.upper_holds,
            "equality_upper": self.equality_upper,
            "is_CM": self.is_CM,
            "lower_product": frac(self.lower_product),
            "lower_holds": self.lower_holds,
            "equality_lower": self.equality_lower,
            "is_pure": self.is_pure,
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
        }

    def render(self) -> str:
        d = self.as_dict()
        width = max(len(k) for k in d)
        return "\n".join(f"{k:<{width}}  {v}" for k, v in d.items())


def verify(
    cx: SimplicialComplex,
    field: Field = QQ,
    *,
    subject: str | None = None,
    subdivision: bool = False,
    budget: int | None = None,
    engine: str = "auto",
    jobs: int = 1,
) -> ConjectureReport:
    table = hochster_betti(cx, field, budget=budget, engine=engine, jobs=jobs)
    h, e = height_and_multiplicity(cx)
    prof = shifts(table, h)
    cm = is_cohen_macaulay(cx, field)
    if cm != (table.pdim == h):
        raise ConsistencyViolation(
            f"Reisner test says CM={cm} but pdim={table.pdim}, height={h} for {cx!r}"
        )
    pure = table.is_pure
    upper = Fraction(prod(prof.upper_prefix), factorial(h))
    witnesses = {}
    if h:
        witnesses["M_h"] = table.witness(h, prof.M(h))
        witnesses["m_h"] = table.witness(h, prof.m(h))
    lower = lower_holds = eq_lower = None
    if cm:
        lower = Fraction(prod(prof.lower_prefix), factorial(h))
        lower_holds = e >= lower
        eq_lower = e == lower
    eq_upper = e == upper
    if cm and pure and not (eq_upper and eq_lower):
        raise ConsistencyViolation(f"pure CM resolution without equality for {cx!r}")
    return ConjectureReport(
        subject=subject or repr(cx),
        subdivision=subdivision,
        field=field,
        e=e,
        h=h,
        shift_profile=prof,
        upper_product=upper,
        upper_holds=e <= upper,
        equality_upper=eq_upper,
        is_pure=pure,
        is_CM=cm,
        lower_product=lower,
        lower_holds=lower_holds,
        equality_lower=eq_lower,
        witnesses=witnesses,
        table=table,
    )


def subdivision_closed_forms(cx: SimplicialComplex) -> tuple[int, int]:
    """(height, multiplicity) of k[sd Δ] from the f-vector of Δ."""
    f = f_vector(cx)[1:]
    return sum(x - 1 for x in f), factorial(cx.dim + 1) * f[-1]


def verify_subdivision_theorem(
    cx: SimplicialComplex,
    field: Field = QQ,
    *,
    subject: str | None = None,
    budget: int | None = None,
    engine: str = "auto",
    jobs: int = 1,
) -> ConjectureReport:
    """Report for k[sd Δ], with e and h checked against their closed forms."""
    sd = barycentric_subdivision(cx)
    rep = verify(
        sd,
        field,
        subject=f"sd({subject or repr(cx)})",
        subdivision=True,
        budget=budget,
        engine=engine,
        jobs=jobs,
    )
    if (rep.h, rep.e) != subdivision_closed_forms(cx):
        raise ConsistencyViolation(
            f"sd of {cx!r}: computed (h, e) = {(rep.h, rep.e)}, closed forms give {subdivision_closed_forms(cx)}"
        )
    return rep


# -- equality analysis ----------------------------------------------------------
@dataclass(frozen=True)
class EqualityDiagnosis:
    case: str
    expected_pure: bool | None  # None: no prediction for this case
    observed_pure: bool
    equality: bool
    witnesses: dict = dc_field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return self.expected_pure is None or self.expected_pure == self.observed_pure


def _shared_edge_pair(cx: SimplicialComplex) -> tuple[int, int, int, int] | None:
    """Vertices (a, b, c, d) with {a,b,c} and {a,b,d} both faces, if any."""
    tris = cx.faces_of_dim(2)
    for x, t in enumerate(tris):
        for u in tris[x + 1 :]:
            common = t & u
            if popcount(common) == 2:
                a, b = bits(common)
                return a, b, bits(t & ~common)[0], bits(u & ~common)[0]
    return None


def _classify(cx: SimplicialComplex, field: Field) -> tuple[str, bool | None]:
    d = cx.dim
    if d == 0:
        return "dim0", True
    if len(cx.facets) == 1 and d == 2:
        return "2-simplex", True
    if d >= 2:
        if _shared_edge_pair(cx) is not None:
            return "shared-edge", False
        return "unclassified", None
    if not is_cohen_macaulay(cx, field):
        return "not-CM", None
    if one_skeleton_is_forest(cx):
        return "tree", True
    degrees = [popcount(a) for a in cx.adjacency()]
    if all(x == 2 for x in degrees):
        return "polygon", True
    return "cyclic-graph", False


def equality_analysis(cx: SimplicialComplex, field: Field = QQ, *, budget: int | None = None) -> EqualityDiagnosis:
    """Classify Δ by the shape of the resolution of k[sd Δ] and check it."""
    case, expected = _classify(cx, field)
    rep = verify_subdivision_theorem(cx, field, budget=budget)
    witnesses: dict = {}
    if case == "shared-edge":
        a, b, c, d = _shared_edge_pair(cx)
        sd = barycentric_subdivision(cx)

        def sd_vertex(*vs):
            m = 0
            for v in vs:
                m |= 1 << v
            return sd.index("{" + ",".join(cx.labels[v] for v in bits(m)) + "}")

        square = [sd_vertex(a), sd_vertex(b), sd_vertex(a, b, c), sd_vertex(a, b, d)]
        points = [sd_vertex(a), sd_vertex(b), sd_vertex(c)]
        for key, (ws, q) in {(2, 4): (square, 1), (2, 3): (points, 0)}.items():
            w = sum(1 << v for v in ws)
            faces = [f for f in sd.faces if not f & ~w]
            ranks = homology_ranks(faces, field)
            if not (len(ranks) > q + 1 and ranks[q + 1]) or not rep.table[key]:
                raise ConsistencyViolation(f"expected witness for beta_{key} fails on {cx!r}")
            witnesses[key] = tuple(sd.labels[v] for v in ws)
    return EqualityDiagnosis(case, expected, rep.is_pure, rep.equality_upper, witnesses)


def top_homology_vanishes(cx: SimplicialComplex, field: Field = QQ) -> bool:
    return reduced_homology(cx, field)[cx.dim] == 0
