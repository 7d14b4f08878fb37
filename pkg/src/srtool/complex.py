"""Immutable finite simplicial complexes.

Faces are stored as integer bitmasks over dense vertex indices; bit ``k`` set
means vertex ``k`` (in construction order) belongs to the face.  Python ints
are unbounded, so complexes with more than 64 vertices need no special case.
"""

from __future__ import annotations

from collections import defaultdict
from math import comb
from typing import Iterable, Sequence

from .errors import (
    DuplicateLabel,
    EmptyFace,
    IsolatedLabel,
    NotAFace,
    UnknownLabel,
    UnknownVertex,
)

def bits(mask: int) -> tuple[int, ...]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _face_key(mask: int) -> tuple[int, tuple[int, ...]]:
    return popcount(mask), bits(mask)


def _maximal(faces: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-maximal members of a family of masks, canonically sorted."""
    fam = sorted(set(faces), key=lambda m: -popcount(m))
    kept: list[int] = []
    for f in fam:
        if not any(f & g == f for g in kept):
            kept.append(f)
    return tuple(sorted(kept, key=_face_key))


def _closure(facets: Iterable[int]) -> frozenset[int]:
    out: set[int] = set()
    for f in facets:
        if f in out:
            continue
        sub = f
        while True:
            out.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    return frozenset(out)


class SimplicialComplex:
    """A simplicial complex whose every label is a vertex.

    The void complex (no faces at all) and the complex ``{∅}`` are both
    representable and distinct.  Instances are immutable; the face family is
    computed eagerly so that sharing across threads needs no locking.
    """

    __slots__ = ("labels", "facets", "faces", "_index", "_hash", "_by_size")

    def __init__(self, labels: Sequence[str], facet_masks: Iterable[int]):
        self.labels: tuple[str, ...] = tuple(labels)
        self.facets: tuple[int, ...] = _maximal(facet_masks)
        self.faces: frozenset[int] = _closure(self.facets)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        self._hash = hash((self.labels, self.faces))
        by_size: dict[int, list[int]] = defaultdict(list)
        for f in self.faces:
            by_size[popcount(f)].append(f)
        self._by_size = {s: sorted(fs, key=bits) for s, fs in by_size.items()}

    # -- basic accessors -------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def dim(self) -> int:
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(self._by_size) - 1

    def faces_of_dim(self, d: int) -> list[int]:
        """Faces of dimension ``d`` sorted lexicographically by vertex index."""
        return list(self._by_size.get(d + 1, ()))

    def __contains__(self, face) -> bool:
        return self.mask(face, check=False) in self.faces

    def index(self, label) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise UnknownVertex(f"no vertex labelled {label!r}") from None

    def mask(self, face, check: bool = True) -> int:
        """Convert a face given as labels (or already a mask) to a bitmask."""
        if isinstance(face, int):
            m = face
            if m >> self.n:
                raise UnknownVertex(f"mask {m:#b} exceeds {self.n} vertices")
        else:
            m = 0
            for lab in face:
                m |= 1 << self.index(lab)
        if check and m not in self.faces:
            raise NotAFace(f"{self.face_labels(m)} is not a face")
        return m

    def face_labels(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in bits(mask))

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.labels == other.labels and self.faces == other.faces

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        fs = ", ".join("{" + ",".join(self.face_labels(f)) + "}" for f in self.facets)
        return f"SimplicialComplex([{fs}])"

    # -- derived structure -----------------------------------------------
    def edges(self) -> list[tuple[int, int]]:
        return [bits(e) for e in self.faces_of_dim(1)]  # type: ignore[misc]

    def adjacency(self) -> list[int]:
        """Neighbour masks of the 1-skeleton, indexed by vertex."""
        adj = [0] * self.n
        for e in self.faces_of_dim(1):
            a, b = bits(e)
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return adj

    def minimal_nonfaces(self) -> list[int]:
        """Generators of the Stanley-Reisner ideal, as vertex masks."""
        out = set()
        full = self.vertex_mask()
        for f in self.faces:
            free = full & ~f
            while free:
                low = free & -free
                free ^= low
                s = f | low
                if s in self.faces or s in out:
                    continue
                if all((s & ~(1 << v)) in self.faces for v in bits(s)):
                    out.add(s)
        return sorted(out, key=_face_key)

    def is_flag(self) -> bool:
        return all(popcount(m) == 2 for m in self.minimal_nonfaces())

    def induced(self, faces: Iterable[int], keep: int) -> "SimplicialComplex":
        """Complex on the vertices in ``keep`` with the given faces, re-indexed."""
        order = bits(keep)
        remap = {old: new for new, old in enumerate(order)}
        new_faces = []
        for f in faces:
            m = 0
            for v in bits(f):
                m |= 1 << remap[v]
            new_faces.append(m)
        return SimplicialComplex([self.labels[i] for i in order], new_faces)


# -- construction ---------------------------------------------------------
def from_facets(labels: Iterable, facets: Iterable[Iterable]) -> SimplicialComplex:
    """Build a complex from a label list and a facet list.

    Labels are coerced to strings.  Facets need not form an antichain; they
    are reduced.  Every label must lie in some facet.
    """
    labs = [str(x) for x in labels]
    index: dict[str, int] = {}
    for i, lab in enumerate(labs):
        if lab in index:
            raise DuplicateLabel(lab)
        index[lab] = i
    masks = []
    for facet in facets:
        m = 0
        for x in facet:
            try:
                m |= 1 << index[str(x)]
            except KeyError:
                raise UnknownLabel(str(x)) from None
        masks.append(m)
    covered = 0
    for m in masks:
        covered |= m
    missing = ((1 << len(labs)) - 1) & ~covered
    if missing:
        raise IsolatedLabel(", ".join(labs[i] for i in bits(missing)))
    return SimplicialComplex(labs, masks)


def simplex(labels: Iterable) -> SimplicialComplex:
    labs = [str(x) for x in labels]
    return SimplicialComplex(labs, [(1 << len(labs)) - 1])


def void_complex() -> SimplicialComplex:
    return SimplicialComplex((), ())


def boundary_of_face(face: Iterable) -> SimplicialComplex:
    """All proper subsets of ``face``; void when the face is a single vertex."""
    labs = [str(x) for x in face]
    if not labs:
        raise EmptyFace("the empty face has no boundary")
    if len(set(labs)) != len(labs):
        raise DuplicateLabel(", ".join(labs))
    full = (1 << len(labs)) - 1
    if len(labs) == 1:
        return SimplicialComplex(labs[:0], ())
    return SimplicialComplex(labs, [full & ~(1 << i) for i in range(len(labs))])


# -- f- and h-vectors -----------------------------------------------------
def f_vector(cx: SimplicialComplex) -> tuple[int, ...]:
    """(f_{-1}, f_0, ..., f_dim)."""
    if cx.is_void:
        raise ValueError("the void complex has no f-vector")
    return tuple(len(cx.faces_of_dim(i)) for i in range(-1, cx.dim + 1))


def h_from_f(f: Sequence[int]) -> tuple[int, ...]:
    d = len(f) - 1
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1)
    )


def f_from_h(h: Sequence[int]) -> tuple[int, ...]:
    d = len(h) - 1
    return tuple(sum(comb(d - i, k - i) * h[i] for i in range(k + 1)) for k in range(d + 1))


def h_vector(cx: SimplicialComplex) -> tuple[int, ...]:
    """(h_0, ..., h_{dim+1}); trailing zeros are kept."""
    return h_from_f(f_vector(cx))


# -- links, restrictions, subdivision --------------------------------------
def link(cx: SimplicialComplex, face) -> SimplicialComplex:
    f = cx.mask(face)
    lk = [g for g in cx.faces if not g & f and (g | f) in cx.faces]
    support = 0
    for g in lk:
        support |= g
    return cx.induced(lk, support)


def link_faces(cx: SimplicialComplex, f: int) -> list[int]:
    """Faces of lk(f) as masks in the ambient indexing (no re-indexing)."""
    return [g for g in cx.faces if not g & f and (g | f) in cx.faces]


def restriction(cx: SimplicialComplex, vertices) -> SimplicialComplex:
    w = cx.mask(vertices, check=False)
    return cx.induced([g for g in cx.faces if not g & ~w], w)


def face_label(member_labels: Iterable[str]) -> str:
    return "{" + ",".join(member_labels) + "}"


def sd_vertex_faces(cx: SimplicialComplex) -> list[int]:
    """Faces of ``cx`` in the vertex order used by its barycentric subdivision."""
    return sorted((f for f in cx.faces if f), key=_face_key)


def barycentric_subdivision(cx: SimplicialComplex) -> SimplicialComplex:
    """Order complex of the nonempty faces under strict inclusion.

    Vertices are the nonempty faces ordered by (size, vertex indices); the
    label of a vertex is the rendering ``{a,b,c}`` of the face's members.
    """
    if cx.is_void:
        raise ValueError("cannot subdivide the void complex")
    nonempty = sd_vertex_faces(cx)
    pos = {f: i for i, f in enumerate(nonempty)}
    chains: dict[int, list[int]] = {}

    def full_flags(f: int) -> list[int]:
        # masks (over sd vertices) of the maximal chains ending at f
        if f in chains:
            return chains[f]
        top = 1 << pos[f]
        if popcount(f) == 1:
            res = [top]
        else:
            res = [c | top for v in bits(f) for c in full_flags(f & ~(1 << v))]
        chains[f] = res
        return res

    sd_facets = [c for F in cx.facets if F for c in full_flags(F)]
    labels = [face_label(cx.face_labels(f)) for f in nonempty]
    if not nonempty:
        return SimplicialComplex((), (0,))
    return SimplicialComplex(labels, sd_facets)


# -- 1-skeleton predicates -------------------------------------------------
def lex_bfs(adj: Sequence[int]) -> list[int]:
    """Lexicographic breadth-first ordering of a graph given by neighbour masks."""
    n = len(adj)
    labels: list[list[int]] = [[] for _ in range(n)]
    unvisited = set(range(n))
    order = []
    for step in range(n, 0, -1):
        v = max(unvisited, key=lambda u: (labels[u], -u))
        unvisited.remove(v)
        order.append(v)
        for u in bits(adj[v]):
            if u in unvisited:
                labels[u].append(step)
    return order


def is_chordal_graph(adj: Sequence[int]) -> bool:
    """Chordality via LexBFS and a perfect-elimination-ordering check."""
    order = lex_bfs(adj)[::-1]
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in bits(adj[v]) if position[u] > position[v]]
        if len(later) < 2:
            continue
        parent = min(later, key=position.__getitem__)
        rest = 0
        for u in later:
            if u != parent:
                rest |= 1 << u
        if rest & ~adj[parent]:
            return False
    return True


def is_forest_graph(adj: Sequence[int]) -> bool:
    n = len(adj)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(n):
        for b in bits(adj[a]):
            if b <= a:
                continue
            ra, rb = find(a), find(b)
            if ra == rb:
                return False
            parent[ra] = rb
    return True


def one_skeleton_is_chordal(cx: SimplicialComplex) -> bool:
    """Every cycle of length >= 4 in the 1-skeleton has a chord."""
    return is_chordal_graph(cx.adjacency())


def one_skeleton_is_forest(cx: SimplicialComplex) -> bool:
    """No cycle at all in the 1-skeleton.

    This is the strict reading of chordality in which triangles also count as
    chordless cycles: a graph has no induced cycle of length >= 3 exactly when
    it is a forest.
    """
    return is_forest_graph(cx.adjacency())
