"""Stanley-Reisner ring invariants of simplicial complexes and their barycentric subdivisions."""

from .betti import BettiTable, hochster_betti, nonvanishing, shifts
from .complex import SimplicialComplex, barycentric_subdivision, from_facets, simplex
from .conjecture import verify, verify_subdivision_theorem
from .homology import GF2, QQ, Field, reduced_homology

__all__ = [
    "BettiTable",
    "Field",
    "GF2",
    "QQ",
    "SimplicialComplex",
    "barycentric_subdivision",
    "from_facets",
    "hochster_betti",
    "nonvanishing",
    "reduced_homology",
    "shifts",
    "simplex",
    "verify",
    "verify_subdivision_theorem",
]
