"""Graded Betti numbers of Stanley-Reisner rings via Hochster's formula.

    beta_{i,j} = sum over W with |W| = j of dim H~_{j-i-1}(Delta_W; k)

Two sweep engines produce identical tables.  ``direct`` computes the homology
of every induced subcomplex.  ``collapse`` (flag complexes only) reduces each
induced subcomplex to its strong-collapse core in compiled code and computes
exact homology once per distinct core.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Iterator, Sequence

from .complex import SimplicialComplex, bits, popcount
from .errors import BudgetExceeded, CapTooSmall, TruncatedTable
from .homology import QQ, Field, homology_ranks, matrix_rank, _boundary_columns
from .series import Poly, padd

DEFAULT_BUDGET = 24  # largest vertex count allowed for a 2^n sweep
COLLAPSE_MIN_VERTICES = 9
_CHUNK = 1 << 20


def resolve_budget(budget: int | None = None) -> int:
    if budget is not None:
        return int(budget)
    env = os.environ.get("SRTOOL_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class BettiTable:
    """Sparse table (i, j) -> beta_{i,j}, with first witnessing subsets."""

    n: int
    entries: dict
    field: Field = QQ
    cap: int | None = None
    witnesses: dict = dc_field(default_factory=dict, compare=False)
    labels: tuple = dc_field(default=(), compare=False)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries.get(ij, 0)

    @property
    def complete(self) -> bool:
        return self.cap is None or self.cap >= self.n

    def _require_complete(self) -> None:
        if not self.complete:
            raise TruncatedTable(f"table is capped at degree {self.cap}")

    def degrees(self, i: int) -> list[int]:
        return sorted(j for (a, j), b in self.entries.items() if a == i and b)

    @property
    def pdim(self) -> int:
        self._require_complete()
        return max(i for (i, _), b in self.entries.items() if b)

    @property
    def reg(self) -> int:
        self._require_complete()
        return max(j - i for (i, j), b in self.entries.items() if b)

    @property
    def is_pure(self) -> bool:
        self._require_complete()
        return all(len(self.degrees(i)) == 1 for i in range(1, self.pdim + 1))

    def k_polynomial(self) -> Poly:
        """sum_{i,j} (-1)^i beta_{i,j} t^j."""
        self._require_complete()
        out: Poly = ()
        for (i, j), b in self.entries.items():
            out = padd(out, (0,) * j + ((-1) ** i * b,))
        return out

    def witness(self, i: int, j: int) -> tuple[str, ...] | None:
        w = self.witnesses.get((i, j))
        if w is None:
            return None
        return tuple(self.labels[k] for k in bits(w)) if self.labels else bits(w)

    def rows(self) -> list[str]:
        """Machine-readable lines ``i j beta``."""
        return [f"{i} {j} {b}" for (i, j), b in sorted(self.entries.items()) if b]

    def render(self) -> str:
        """Aligned table: columns are homological degree i, rows are j - i."""
        if not self.entries:
            return "(empty)"
        imax = max(i for i, _ in self.entries)
        rmax = max(j - i for i, j in self.entries)
        cells = [[str(self[i, i + r]) if self[i, i + r] else "." for i in range(imax + 1)] for r in range(rmax + 1)]
        totals = [str(sum(b for (a, _), b in self.entries.items() if a == i)) for i in range(imax + 1)]
        width = max(len(c) for row in cells + [totals, [str(imax)]] for c in row)
        lines = ["       " + " ".join(f"{i:>{width}}" for i in range(imax + 1))]
        lines.append("total: " + " ".join(f"{t:>{width}}" for t in totals))
        for r, row in enumerate(cells):
            lines.append(f"{r:>5}: " + " ".join(f"{c:>{width}}" for c in row))
        return "\n".join(lines)


@dataclass(frozen=True)
class ShiftProfile:
    """Minimal and maximal shifts m_i, M_i for 1 <= i <= pdim."""

    height: int
    lower: tuple[int, ...]
    upper: tuple[int, ...]

    def m(self, i: int) -> int:
        return self.lower[i - 1]

    def M(self, i: int) -> int:
        return self.upper[i - 1]

    @property
    def lower_prefix(self) -> tuple[int, ...]:
        return self.lower[: self.height]

    @property
    def upper_prefix(self) -> tuple[int, ...]:
        return self.upper[: self.height]


def shifts(table: BettiTable, height: int) -> ShiftProfile:
    table._require_complete()
    pd = table.pdim
    lo, hi = [], []
    for i in range(1, pd + 1):
        js = table.degrees(i)
        lo.append(js[0])
        hi.append(js[-1])
    return ShiftProfile(height, tuple(lo), tuple(hi))


def is_pure(table: BettiTable) -> bool:
    return table.is_pure


def pdim_from_table(table: BettiTable) -> int:
    return table.pdim


def reg_from_table(table: BettiTable) -> int:
    return table.reg


# -- subset enumeration -----------------------------------------------------
def masks_of_size(n: int, j: int) -> Iterator[int]:
    """All j-subsets of range(n) as masks, in colex (= increasing) order."""
    if j == 0:
        yield 0
        return
    if j > n:
        return
    w = (1 << j) - 1
    limit = 1 << n
    while w < limit:
        yield w
        # Gosper's hack: next integer with the same popcount
        c = w & -w
        r = w + c
        w = (((r ^ w) >> 2) // c) | r


def _restrict(faces: Sequence[int], w: int) -> list[int]:
    out_mask = ~w
    return [f for f in faces if not f & out_mask]


def homology_rank_in_degree(faces: Sequence[int], q: int, field: Field = QQ) -> int:
    """dim H~_q of the complex given by a downward-closed face list."""
    by_size: dict[int, list[int]] = {}
    for f in faces:
        by_size.setdefault(popcount(f), []).append(f)
    s = q + 1
    n_s = len(by_size.get(s, ()))
    if not n_s:
        return 0

    def rank(size: int) -> int:
        cols = by_size.get(size)
        if size == 0 or not cols:
            return 0
        rows = sorted(by_size.get(size - 1, ()))
        if size == 1:
            return 1 if rows else 0
        return matrix_rank(_boundary_columns(cols, rows), field)

    return n_s - rank(s) - rank(s + 1)


# -- engines ----------------------------------------------------------------
def _scatter(acc: Counter, wit: dict, j: int, w: int, ranks: Sequence[int], mult: int = 1) -> None:
    for k, r in enumerate(ranks):
        if r:
            i = j - k  # q = k - 1 and i = j - q - 1
            acc[i, j] += r * mult
            if (i, j) not in wit or w < wit[i, j]:
                wit[i, j] = w


def _direct_chunk(args) -> tuple[Counter, dict]:
    faces, field, j, ws = args
    acc: Counter = Counter()
    wit: dict = {}
    for w in ws:
        _scatter(acc, wit, j, w, homology_ranks(_restrict(faces, w), field))
    return acc, wit


def _direct_sweep(cx: SimplicialComplex, field: Field, cap: int, jobs: int) -> tuple[Counter, dict]:
    faces = sorted(cx.faces)
    tasks = []
    for j in range(cap + 1):
        ws = list(masks_of_size(cx.n, j))
        step = max(1, len(ws) // max(1, jobs * 4)) if jobs > 1 else len(ws) or 1
        for k in range(0, len(ws), step):
            tasks.append((faces, field, j, ws[k : k + step]))
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_direct_chunk, tasks))
    else:
        results = [_direct_chunk(t) for t in tasks]
    acc: Counter = Counter()
    wit: dict = {}
    for a, w in results:
        acc.update(a)
        for key, val in w.items():
            if key not in wit or val < wit[key]:
                wit[key] = val
    return acc, wit


def clique_faces(adj: Sequence[int], vertices: int) -> list[int]:
    """All cliques (faces of the flag complex) inside the vertex mask."""
    out = [0]

    def extend(clique: int, cand: int) -> None:
        while cand:
            low = cand & -cand
            cand ^= low
            new = clique | low
            out.append(new)
            extend(new, cand & adj[low.bit_length() - 1])

    extend(0, vertices)
    return out


def collapse_groups(cx: SimplicialComplex, cap: int | None = None) -> dict:
    """(|W|, core(W)) -> [count, smallest W] over all vertex subsets W.

    Field independent, so callers that need several fields can reuse it.
    """
    import numpy as np

    from ._kernel import collapse_cores, popcounts

    n = cx.n
    if n > 58:
        raise BudgetExceeded("the compiled sweep supports at most 58 vertices")
    adj = np.array(cx.adjacency(), dtype=np.int64)
    groups: dict = {}
    total = 1 << n
    for start in range(0, total, _CHUNK):
        stop = min(total, start + _CHUNK)
        cores = collapse_cores(adj, start, stop)
        sizes = popcounts(start, stop)
        keys = (cores << 6) | sizes
        if cap is not None:
            keys = keys[sizes <= cap]
            offsets = np.nonzero(sizes <= cap)[0]
        else:
            offsets = None
        uniq, first, counts = np.unique(keys, return_index=True, return_counts=True)
        for u, f, c in zip(uniq.tolist(), first.tolist(), counts.tolist()):
            w = start + (int(offsets[f]) if offsets is not None else f)
            key = (u & 63, u >> 6)
            g = groups.get(key)
            if g is None:
                groups[key] = [c, w]
            else:
                g[0] += c
    return groups


@lru_cache(maxsize=4)
def _full_groups(cx: SimplicialComplex) -> dict:
    return collapse_groups(cx)


def _collapse_sweep(cx: SimplicialComplex, field: Field, cap: int, groups: dict | None = None) -> tuple[Counter, dict]:
    if groups is None:
        # the uncapped grouping is field independent; keep it for the next field
        groups = _full_groups(cx) if cap >= cx.n else collapse_groups(cx, cap)
    adj = cx.adjacency()
    cache: dict[int, tuple[int, ...]] = {}
    acc: Counter = Counter()
    wit: dict = {}
    for (j, core), (count, w) in sorted(groups.items()):
        if j > cap:
            continue
        ranks = cache.get(core)
        if ranks is None:
            size = popcount(core)
            if size <= 1:
                ranks = (1,) if size == 0 else (0,)
            elif not any(adj[v] & core for v in bits(core)):
                ranks = (0, size - 1)
            else:
                ranks = homology_ranks(clique_faces(adj, core), field)
            cache[core] = ranks
        _scatter(acc, wit, j, w, ranks, count)
    return acc, wit


def hochster_betti(
    cx: SimplicialComplex,
    field: Field = QQ,
    degree_cap: int | None = None,
    *,
    budget: int | None = None,
    engine: str = "auto",
    jobs: int = 1,
    groups: dict | None = None,
) -> BettiTable:
    """Graded Betti numbers of k[cx] for all internal degrees j <= cap.

    ``budget`` bounds the vertex count of the sweep (default 24, or the
    ``SRTOOL_BUDGET`` environment variable).  ``engine`` is ``"direct"``,
    ``"collapse"`` (flag complexes) or ``"auto"``.
    """
    if cx.is_void:
        raise ValueError("the void complex has no Stanley-Reisner ring")
    n = cx.n
    limit = resolve_budget(budget)
    if n > limit:
        raise BudgetExceeded(f"{n} vertices exceed the sweep budget of {limit}")
    cap = n
    if degree_cap is not None:
        gens = cx.minimal_nonfaces()
        top = max((popcount(g) for g in gens), default=0)
        if degree_cap < top:
            raise CapTooSmall(f"cap {degree_cap} is below the generator degree {top}")
        cap = min(degree_cap, n)
    if engine == "auto":
        engine = "collapse" if n >= COLLAPSE_MIN_VERTICES and cx.is_flag() else "direct"
    if engine == "collapse":
        if groups is None and not cx.is_flag():
            raise ValueError("the collapse engine needs a flag complex")
        acc, wit = _collapse_sweep(cx, field, cap, groups)
    elif engine == "direct":
        acc, wit = _direct_sweep(cx, field, cap, jobs)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    entries = {k: v for k, v in sorted(acc.items()) if v}
    return BettiTable(
        n,
        entries,
        field,
        None if cap >= n else cap,
        {k: wit[k] for k in entries},
        cx.labels,
    )


def nonvanishing_witness(cx: SimplicialComplex, field: Field, i: int, j: int) -> int | None:
    """First W (colex order) with |W| = j and H~_{j-i-1}(cx_W) != 0, as a mask."""
    q = j - i - 1
    if i < 0 or q < -1:
        return None
    faces = sorted(cx.faces)
    for w in masks_of_size(cx.n, j):
        if homology_rank_in_degree(_restrict(faces, w), q, field):
            return w
    return None


def nonvanishing(cx: SimplicialComplex, field: Field, i: int, j: int) -> bool:
    """beta_{i,j} != 0, decided by an early-exit search for a witness."""
    return nonvanishing_witness(cx, field, i, j) is not None
