"""Named property suites run by the sweep harness.

Each suite takes an ``Instance`` (one complex over one field) and returns a
list of failure messages; an empty list means the suite passed.
"""

from __future__ import annotations

from functools import cached_property
from typing import Callable

from .betti import BettiTable, hochster_betti, shifts
from .combinatorics import codim_one_face_bound
from .complex import (
    SimplicialComplex,
    barycentric_subdivision,
    bits,
    f_vector,
    link_faces,
    one_skeleton_is_forest,
    popcount,
    sd_vertex_faces,
)
from .conjecture import ConjectureReport, subdivision_closed_forms, verify_subdivision_theorem
from .homology import Field, homology_ranks, reduced_homology
from .invariants import (
    depth,
    hilbert_series,
    hilbert_series_sd,
    is_cohen_macaulay,
    is_golod_sd,
    is_koszul_flag,
    link_homology,
    local_cohomology_series,
    local_cohomology_series_sd,
    multiplicity_from_series,
    regularity,
)


class Instance:
    """Lazily computed data for one complex and one field."""

    def __init__(self, cx: SimplicialComplex, field: Field, name: str = "", budget: int | None = None):
        self.cx = cx
        self.field = field
        self.name = name or repr(cx)
        self.budget = budget

    @cached_property
    def sd(self) -> SimplicialComplex:
        return barycentric_subdivision(self.cx)

    @cached_property
    def table(self) -> BettiTable:
        return hochster_betti(self.cx, self.field, budget=self.budget)

    @cached_property
    def report(self) -> ConjectureReport:
        return verify_subdivision_theorem(self.cx, self.field, subject=self.name, budget=self.budget)

    @property
    def sd_table(self) -> BettiTable:
        return self.report.table

    @cached_property
    def top_homology(self) -> int:
        return reduced_homology(self.cx, self.field)[self.cx.dim]


def _expect(out: list[str], cond: bool, msg: str) -> None:
    if not cond:
        out.append(msg)


def check_conjecture(x: Instance) -> list[str]:
    r, out = x.report, []
    _expect(out, r.upper_holds, f"upper bound fails: e={r.e} > {r.upper_product}")
    if r.is_CM:
        _expect(out, bool(r.lower_holds), f"lower bound fails: e={r.e} < {r.lower_product}")
        _expect(out, r.equality_upper == r.is_pure, "upper equality and purity disagree")
        _expect(out, r.equality_lower == r.is_pure, "lower equality and purity disagree")
    else:
        _expect(out, r.lower_product is None, "lower bound evaluated for a non-CM ring")
    return out


def check_closed_forms(x: Instance) -> list[str]:
    out = []
    h, e = subdivision_closed_forms(x.cx)
    krull, e_series = multiplicity_from_series(hilbert_series(x.sd))
    _expect(out, h == x.sd.n - krull, f"height {h} != {x.sd.n} - {krull}")
    _expect(out, e == e_series, f"multiplicity {e} != {e_series} from the Hilbert series")
    _expect(out, e == len(x.sd.faces_of_dim(x.sd.dim)), "multiplicity differs from the facet count of sd")
    _expect(out, (x.report.h, x.report.e) == (h, e), "report disagrees with the closed forms")
    return out


def check_hilbert_transform(x: Instance) -> list[str]:
    a, b = hilbert_series_sd(x.cx), hilbert_series(x.sd)
    return [] if a == b else [f"transformed series {a} != {b}"]


def check_local_cohomology(x: Instance) -> list[str]:
    out = []
    for i in range(x.cx.dim + 2):
        a = local_cohomology_series_sd(x.cx, x.field, i)
        b = local_cohomology_series(x.sd, x.field, i)
        _expect(out, a == b, f"H^{i}: {a} != {b}")
    return out


def check_depth_pdim(x: Instance) -> list[str]:
    out = []
    d, dsd = depth(x.cx, x.field), depth(x.sd, x.field)
    _expect(out, d == dsd, f"depth {d} != depth of sd {dsd}")
    _expect(out, x.table.pdim == x.cx.n - d, "Auslander-Buchsbaum fails for the complex")
    _expect(out, x.sd_table.pdim == x.sd.n - dsd, "Auslander-Buchsbaum fails for sd")
    gap = sum(f_vector(x.cx)[2:])
    _expect(out, x.sd_table.pdim - x.table.pdim == gap, f"pdim difference != {gap}")
    return out


def check_regularity(x: Instance) -> list[str]:
    out = []
    d = x.cx.dim
    r, rsd = regularity(x.cx, x.field), regularity(x.sd, x.field)
    _expect(out, r == x.table.reg, f"link regularity {r} != table regularity {x.table.reg}")
    _expect(out, rsd == x.sd_table.reg, f"sd: link regularity {rsd} != table {x.sd_table.reg}")
    _expect(out, r <= rsd, f"reg {r} > reg of sd {rsd}")
    if x.top_homology:
        _expect(out, rsd == d + 1, f"reg of sd {rsd} != dim + 1")
        _expect(out, r == d + 1, f"reg {r} != dim + 1")
    else:
        _expect(out, rsd == d, f"reg of sd {rsd} != dim")
    return out


def _top_band(cx: SimplicialComplex) -> range:
    d = cx.dim
    return range(2 ** (d + 1) - 2 - d, sum(x - 1 for x in f_vector(cx)[1:]) + 1)


def check_nonvanishing(x: Instance) -> list[str]:
    out, t, d = [], x.sd_table, x.cx.dim
    for m in range(2, d):
        for i in range(2 ** (m + 1) - 2 - m, 2 ** (m + 2) - 2 - (m + 1)):
            _expect(out, t[i, i + m] != 0, f"beta_({i},{i + m}) of sd vanishes")
    if d > 1:
        _expect(out, t.pdim >= 4, "pdim of sd below 4")
    for i in _top_band(x.cx):
        if x.top_homology:
            _expect(out, t[i, i + d] or t[i, i + d + 1], f"beta_({i},{i + d}) and beta_({i},{i + d + 1}) vanish")
        else:
            _expect(out, t[i, i + d] != 0, f"beta_({i},{i + d}) of sd vanishes")
    if not x.top_homology:
        _expect(out, codim_one_face_bound(x.cx, x.field), "f_(d-1) < f_d + d")
    return out


def check_golod_flag(x: Instance) -> list[str]:
    out = []
    _expect(out, x.sd.is_flag() and is_koszul_flag(x.sd), "sd is not flag")
    if x.cx.dim <= 2:
        forest = x.cx.dim <= 1 and one_skeleton_is_forest(x.cx)
        _expect(out, is_golod_sd(x.cx) == forest, "Golodness of sd differs from the forest test")
    return out


def check_k_polynomial(x: Instance) -> list[str]:
    out = []
    for cx, t in ((x.cx, x.table), (x.sd, x.sd_table)):
        lhs = t.k_polynomial()
        rhs = hilbert_series(cx).times_one_minus_t_power(cx.n)
        _expect(out, lhs == rhs, f"K-polynomial {lhs} != {rhs} on {cx!r}")
    return out


def check_cm_invariance(x: Instance) -> list[str]:
    a, b = is_cohen_macaulay(x.cx, x.field), is_cohen_macaulay(x.sd, x.field)
    return [] if a == b else [f"CM {a} but sd CM {b}"]


def check_shifts(x: Instance) -> list[str]:
    out = []
    for label, t in (("complex", x.table), ("sd", x.sd_table)):
        prof = shifts(t, 0)
        lo, hi = prof.lower, prof.upper
        _expect(out, all(a < b for a, b in zip(lo, lo[1:])), f"{label}: m_i not increasing")
        _expect(out, all(i + 1 <= m <= M <= t.n for i, (m, M) in enumerate(zip(lo, hi))), f"{label}: shift bounds")
        _expect(out, t[0, 0] == 1 and t.degrees(0) == [0], f"{label}: row 0 is not k")
    return out


def check_flag_links(x: Instance) -> list[str]:
    """Link of a flag in sd versus the link of its largest face in the complex."""
    out = []
    faces_of = sd_vertex_faces(x.cx)
    base = link_homology(x.cx, x.field)
    for phi in x.sd.faces:
        r = popcount(phi)
        top = faces_of[bits(phi)[-1]] if phi else 0
        shift = popcount(top) - r
        lk = homology_ranks(link_faces(x.sd, phi), x.field)
        ref = base[top]
        for q in range(-1, max(len(lk), len(ref) + shift)):
            a = lk[q + 1] if q + 1 < len(lk) else 0
            k = q - shift + 1
            b = ref[k] if 0 <= k < len(ref) else 0
            if a != b:
                out.append(f"flag {x.sd.face_labels(phi)}: H~_{q} {a} != {b}")
                break
    return out


SUITES: dict[str, Callable[[Instance], list[str]]] = {
    "conjecture": check_conjecture,
    "closed-forms": check_closed_forms,
    "hilbert-transform": check_hilbert_transform,
    "local-cohomology": check_local_cohomology,
    "depth-pdim": check_depth_pdim,
    "regularity": check_regularity,
    "nonvanishing": check_nonvanishing,
    "golod-flag": check_golod_flag,
    "k-polynomial": check_k_polynomial,
    "cm-invariance": check_cm_invariance,
    "shifts": check_shifts,
    "flag-links": check_flag_links,
}


def run_suites(x: Instance, names=None) -> dict[str, list[str]]:
    """suite name -> failures; exceptions raised by a suite count as failures."""
    results = {}
    for name in names or SUITES:
        try:
            results[name] = SUITES[name](x)
        except Exception as exc:  # report, do not abort the sweep
            results[name] = [f"{type(exc).__name__}: {exc}"]
    return results
