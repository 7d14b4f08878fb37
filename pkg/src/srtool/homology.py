"""Reduced simplicial homology over Q and GF(p) by exact rank computation.

The chain complex is augmented (C_{-1} = k whenever the empty face is
present), so reduced homology of ``{∅}`` is k in degree -1 and the void
complex has no homology at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .complex import SimplicialComplex, bits, popcount
from .errors import NonPrimeModulus


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """Coefficient field: characteristic 0 means Q, otherwise GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not _is_prime(p):
            raise NonPrimeModulus(f"{p} is not prime")

    @property
    def name(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    def __str__(self) -> str:
        return self.name


QQ = Field(0)
GF2 = Field(2)


def GF(p: int) -> Field:
    return Field(p)


def parse_field(text) -> Field:
    """Accept 'q', 'QQ', '0', 'p', a prime such as '3', or 'GF(3)'."""
    if isinstance(text, Field):
        return text
    s = str(text).strip().upper().replace("GF(", "").replace(")", "").replace("GF", "")
    if s in ("Q", "QQ", "0", "RATIONALS"):
        return QQ
    if s in ("P", ""):
        return GF2
    try:
        return Field(int(s))
    except ValueError:
        raise NonPrimeModulus(f"cannot read a field from {text!r}") from None


@dataclass(frozen=True)
class HomologyProfile:
    """Ranks of reduced homology; ``ranks[q + 1]`` is dim H~_q."""

    ranks: tuple[int, ...]
    field: Field = QQ

    def __getitem__(self, q: int) -> int:
        k = q + 1
        return self.ranks[k] if 0 <= k < len(self.ranks) else 0

    @property
    def dims(self) -> dict[int, int]:
        return {q - 1: r for q, r in enumerate(self.ranks)}

    def nonzero(self) -> dict[int, int]:
        return {q - 1: r for q, r in enumerate(self.ranks) if r}

    def is_acyclic(self) -> bool:
        return not any(self.ranks)


# -- boundary matrices ------------------------------------------------------
@dataclass(frozen=True)
class BoundaryMatrix:
    """Sparse integer matrix of the i-th boundary map.

    Rows are the (i-1)-faces, columns the i-faces, both in lexicographic
    vertex order; ``columns[c]`` maps row index to ±1.
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    columns: tuple[dict, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * len(self.cols) for _ in self.rows]
        for c, col in enumerate(self.columns):
            for r, v in col.items():
                out[r][c] = v
        return out


def _boundary_columns(cols: Sequence[int], rows: Sequence[int]) -> list[dict]:
    row_index = {f: i for i, f in enumerate(rows)}
    out = []
    for f in cols:
        col = {}
        for k, v in enumerate(bits(f)):
            r = row_index.get(f & ~(1 << v))
            if r is not None:
                col[r] = -1 if k % 2 else 1
        out.append(col)
    return out


def boundary_matrix(cx: SimplicialComplex, i: int) -> BoundaryMatrix:
    rows = tuple(cx.faces_of_dim(i - 1))
    cols = tuple(cx.faces_of_dim(i))
    return BoundaryMatrix(rows, cols, tuple(_boundary_columns(cols, rows)))


# -- exact ranks ------------------------------------------------------------
def rank_gf2(columns: Iterable[dict]) -> int:
    basis: dict[int, int] = {}
    for col in columns:
        v = 0
        for r, x in col.items():
            if x % 2:
                v |= 1 << r
        while v:
            top = v.bit_length() - 1
            piv = basis.get(top)
            if piv is None:
                basis[top] = v
                break
            v ^= piv
    return len(basis)


def rank_modp(columns: Iterable[dict], p: int) -> int:
    pivots: dict[int, dict] = {}
    for col in sorted(columns, key=len):
        c = {r: x % p for r, x in col.items() if x % p}
        while c:
            r = max(c)
            piv = pivots.get(r)
            if piv is None:
                inv = pow(c[r], -1, p)
                pivots[r] = {k: x * inv % p for k, x in c.items()}
                break
            factor = c[r]
            for k, x in piv.items():
                y = (c.get(k, 0) - factor * x) % p
                if y:
                    c[k] = y
                else:
                    c.pop(k, None)
    return len(pivots)


def rank_qq(columns: Iterable[dict]) -> int:
    """Rank over Q by fraction-free elimination on integer columns."""
    pivots: dict[int, dict] = {}
    for col in sorted(columns, key=len):
        c = {r: x for r, x in col.items() if x}
        while c:
            r = max(c)
            piv = pivots.get(r)
            if piv is None:
                pivots[r] = c
                break
            a, b = piv[r], c[r]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {}
            for k in c.keys() | piv.keys():
                y = a * c.get(k, 0) - b * piv.get(k, 0)
                if y:
                    new[k] = y
            content = 0
            for y in new.values():
                content = gcd(content, y)
                if content == 1:
                    break
            if content > 1:
                new = {k: y // content for k, y in new.items()}
            c = new
    return len(pivots)


def matrix_rank(columns: Sequence[dict], field: Field) -> int:
    if not columns:
        return 0
    p = field.characteristic
    if p == 0:
        return rank_qq(columns)
    if p == 2:
        return rank_gf2(columns)
    return rank_modp(columns, p)


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank of a dense integer matrix by Bareiss fraction-free elimination."""
    m = [list(row) for row in matrix]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank, prev = 0, 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, nrows):
            for c in range(col + 1, ncols):
                m[r][c] = (m[r][c] * p - m[r][col] * m[rank][c]) // prev
            m[r][col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


# -- homology ---------------------------------------------------------------
def homology_ranks(faces: Iterable[int], field: Field = QQ) -> tuple[int, ...]:
    """Reduced Betti numbers of the complex with the given face masks.

    Returns ``r`` with ``r[q + 1] = dim H~_q`` for q = -1 .. dim.  The face
    family must be closed under subsets; an empty family gives ``()``.
    """
    by_size: dict[int, list[int]] = {}
    for f in faces:
        by_size.setdefault(popcount(f), []).append(f)
    if not by_size:
        return ()
    top = max(by_size)
    counts = [len(by_size.get(s, ())) for s in range(top + 1)]
    # rank of the boundary from size s to size s-1, s >= 1
    ranks = [0] * (top + 2)
    for s in range(1, top + 1):
        cols = by_size.get(s)
        if not cols:
            continue
        rows = sorted(by_size.get(s - 1, ()))
        if s == 1:
            ranks[s] = 1 if rows else 0
            continue
        ranks[s] = matrix_rank(_boundary_columns(cols, rows), field)
    return tuple(counts[s] - ranks[s] - ranks[s + 1] for s in range(top + 1))


def reduced_homology(cx: SimplicialComplex, field: Field = QQ) -> HomologyProfile:
    return HomologyProfile(homology_ranks(cx.faces, field), field)


def euler_characteristic(cx: SimplicialComplex) -> int:
    """Reduced Euler characteristic sum_i (-1)^i f_i, i >= -1."""
    return sum((-1) ** (popcount(f) - 1) for f in cx.faces)
