"""Compiled strong-collapse sweep for flag complexes.

For a flag complex the induced subcomplex on W deformation retracts onto
its core: repeatedly delete a vertex v whose closed neighbourhood (inside
the current vertex set) is contained in that of another vertex u.  The core
has the same homology as the induced subcomplex and is usually tiny, so the
exponential sweep only computes cores and defers exact homology to the few
distinct ones.
"""

import numba
import numpy as np


@numba.njit(cache=True, inline="always")
def _lowbit_index(b):
    i = 0
    while (b >> i) != 1:
        i += 1
    return i


@numba.njit(cache=True)
def collapse_cores(adj, start, stop):
    """Core vertex mask for every W in [start, stop)."""
    out = np.empty(stop - start, np.int64)
    for W in range(start, stop):
        core = W
        changed = True
        while changed:
            changed = False
            rem = core
            while rem:
                b = rem & -rem
                rem ^= b
                v = _lowbit_index(b)
                nv = (adj[v] | b) & core
                cand = nv & ~b
                while cand:
                    c = cand & -cand
                    cand ^= c
                    u = _lowbit_index(c)
                    if nv & ~(adj[u] | c) == 0:
                        core &= ~b
                        changed = True
                        break
        out[W - start] = core
    return out


@numba.njit(cache=True)
def popcounts(start, stop):
    out = np.empty(stop - start, np.int64)
    for W in range(start, stop):
        x = W
        c = 0
        while x:
            x &= x - 1
            c += 1
        out[W - start] = c
    return out
