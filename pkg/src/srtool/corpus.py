"""Test corpora: every complex on a few labels, plus seeded samples."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .complex import SimplicialComplex, _maximal, popcount

EXHAUSTIVE_LIMIT = 4


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    complex: SimplicialComplex


def _labels(n: int) -> list[str]:
    return [str(i + 1) for i in range(n)]


def _name(cx: SimplicialComplex) -> str:
    return "/".join("".join(cx.face_labels(f)) for f in cx.facets)


def complexes_on(n: int) -> Iterator[SimplicialComplex]:
    """Every complex whose vertex set is exactly {1..n}, no isomorphism reduction.

    A complex is fixed by its faces of size >= 2, which must be closed under
    taking subsets of size >= 2; those families are enumerated directly.
    """
    if n > EXHAUSTIVE_LIMIT:
        raise ValueError(f"exhaustive enumeration is limited to {EXHAUSTIVE_LIMIT} labels")
    big = [m for m in range(1 << n) if popcount(m) >= 2]
    big.sort(key=lambda m: (popcount(m), m))
    labels = _labels(n)
    singletons = [1 << v for v in range(n)]
    for choice in range(1 << len(big)):
        chosen = {m for k, m in enumerate(big) if choice >> k & 1}
        closed = all(
            (m & ~(1 << v)) in chosen
            for m in chosen
            if popcount(m) > 2
            for v in range(n)
            if m >> v & 1
        )
        if closed:
            yield SimplicialComplex(labels, _maximal(list(chosen) + singletons))


def exhaustive(max_vertices: int = EXHAUSTIVE_LIMIT) -> list[CorpusEntry]:
    out = []
    for n in range(1, max_vertices + 1):
        out.extend(CorpusEntry(f"n{n}:{_name(cx)}", cx) for cx in complexes_on(n))
    return out


def sample(n: int, count: int, seed: int, max_faces: int | None = None) -> list[CorpusEntry]:
    """``count`` distinct random complexes on exactly ``n`` labels.

    ``max_faces`` bounds the number of nonempty faces, which is the vertex
    count of the barycentric subdivision.  Sampling is fully determined by
    ``seed``.
    """
    rng = random.Random(seed)
    labels = _labels(n)
    seen: set[frozenset[int]] = set()
    out = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 10_000 * count:
            raise RuntimeError("sampler could not find enough distinct complexes")
        top = rng.randint(1, min(n, 4))
        facets = []
        for _ in range(rng.randint(1, 4)):
            size = rng.randint(1, top)
            facets.append(sum(1 << v for v in rng.sample(range(n), size)))
        covered = 0
        for f in facets:
            covered |= f
        facets.extend(1 << v for v in range(n) if not covered >> v & 1)
        cx = SimplicialComplex(labels, facets)
        if max_faces is not None and len(cx.faces) - 1 > max_faces:
            continue
        if cx.faces in seen:
            continue
        seen.add(cx.faces)
        out.append(CorpusEntry(f"n{n}s{seed}:{_name(cx)}", cx))
    return out


def count_complexes_brute(n: int) -> int:
    """Downward-closed families on n labels containing every singleton.

    Independent of ``complexes_on``: filters all families of subsets.
    """
    subsets = [frozenset(c) for r in range(n + 1) for c in combinations(range(n), r)]
    total = 0
    for choice in range(1 << len(subsets)):
        fam = {s for k, s in enumerate(subsets) if choice >> k & 1}
        if not all(frozenset([v]) in fam for v in range(n)):
            continue
        if all(s - {v} in fam for s in fam for v in s):
            total += 1
    return total
