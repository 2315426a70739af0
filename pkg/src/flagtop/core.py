"""Face-level combinatorics: complexes, links, joins, f-vectors, clique complexes.

Vertices are ints 0..n-1 and faces are bitmasks over them, so subset and
intersection tests are single integer ops. The optimized path is capped at
64 vertices; every construction target in this package is far below that.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, NamedTuple

MAX_VERTICES = 64


class ComplexError(ValueError):
    """Invalid complex construction or operation."""


# ---------------------------------------------------------------------------
# bitmask helpers

def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _lex_key(mask: int) -> tuple[int, ...]:
    # lexicographic order on the ascending vertex tuple, not on the raw int
    return vertices_of(mask)


def _sorted_unique(masks: Iterable[int]) -> tuple[int, ...]:
    """Deterministic dedup: sort by vertex tuple, drop adjacent duplicates."""
    out: list[int] = []
    for m in sorted(masks, key=_lex_key):
        if not out or out[-1] != m:
            out.append(m)
    return tuple(out)


def _maximal(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-maximal masks (antichain extraction)."""
    by_size = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in by_size:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return _sorted_unique(kept)


# ---------------------------------------------------------------------------
# graphs

class Graph:
    """Symmetric loop-free adjacency over vertex ids 0..n-1, rows as bitmasks."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if n > MAX_VERTICES:
            raise ComplexError(f"graph has {n} vertices; optimized path caps at {MAX_VERTICES}")
        if len(adj) != n:
            raise ComplexError("adjacency length does not match vertex count")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ComplexError(f"adjacency row {v} references vertices >= {n}")
            if row >> v & 1:
                raise ComplexError(f"loop at vertex {v}")
        for v in range(n):
            for w in iter_bits(adj[v]):
                if not adj[w] >> v & 1:
                    raise ComplexError(f"adjacency not symmetric at ({v},{w})")
        self.n = n
        self.adj = adj

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Graph":
        rows = [0] * n
        for e in edges:
            u, w = sorted(e)
            if u == w:
                raise ComplexError(f"loop edge ({u},{w})")
            rows[u] |= 1 << w
            rows[w] |= 1 << u
        return cls(n, rows)

    def edges(self) -> list[tuple[int, int]]:
        return [(v, w) for v in range(self.n) for w in iter_bits(self.adj[v]) if w > v]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def has_edge(self, v: int, w: int) -> bool:
        return bool(self.adj[v] >> w & 1)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple((full & ~row) & ~(1 << v) for v, row in enumerate(self.adj)))

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _components_within(adj: tuple[int, ...], support: int) -> int:
    """Number of connected components of the induced subgraph on `support`."""
    remaining = support
    count = 0
    while remaining:
        count += 1
        seed = remaining & -remaining
        seen = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            nxt &= support
            frontier = nxt & ~seen
            seen |= nxt
        remaining &= ~seen
    return count


# ---------------------------------------------------------------------------
# simplicial complexes

class Subcomplex(NamedTuple):
    """A re-indexed complex plus the map from its new ids back to original ids."""

    complex: "SimplicialComplex"
    vertices: tuple[int, ...]


class SimplicialComplex:
    """Antichain of facets over vertices 0..n-1; all faces derived lazily.

    Instances are immutable after construction; every operation returns a
    new complex. The void complex (no faces at all) is not representable;
    the complex whose only face is the empty set has ``facets == ((),)``.
    """

    __slots__ = ("n", "_facets", "_dim", "_fvec", "_skeleton")

    def __init__(self, n: int, facets: Iterable[Iterable[int]]):
        masks = [mask_of(f) for f in facets]
        self._init_from_masks(n, masks, check=True)

    def _init_from_masks(self, n: int, masks: list[int], check: bool) -> None:
        if n > MAX_VERTICES:
            raise ComplexError(f"complex has {n} vertices; optimized path caps at {MAX_VERTICES}")
        if not masks:
            raise ComplexError("void complex (no faces) is not representable; use facets=[()] for {∅}")
        if check:
            full = (1 << n) - 1
            cover = 0
            for m in masks:
                if m & ~full:
                    raise ComplexError(f"facet {vertices_of(m)} references vertices >= {n}")
                cover |= m
            if cover != full:
                missing = vertices_of(full & ~cover)
                raise ComplexError(f"phantom vertices (in no facet): {missing}")
            uniq = _sorted_unique(masks)
            if len(uniq) != len(masks):
                raise ComplexError("duplicate facets")
            for a, b in itertools.combinations(uniq, 2):
                if a & b == a or a & b == b:
                    raise ComplexError(
                        f"not an antichain: {vertices_of(a)} and {vertices_of(b)} are nested")
            masks = list(uniq)
        self.n = n
        self._facets = _sorted_unique(masks)
        self._dim = max(m.bit_count() for m in self._facets) - 1
        self._fvec = None
        self._skeleton = None

    @classmethod
    def _from_masks(cls, n: int, masks: Iterable[int]) -> "SimplicialComplex":
        """Trusted constructor: masks must already be a valid facet antichain."""
        self = cls.__new__(cls)
        self._init_from_masks(n, list(masks), check=False)
        return self

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Build from an arbitrary face collection by extracting maximal elements."""
        masks = [mask_of(f) for f in faces]
        if not masks:
            raise ComplexError("void complex (no faces) is not representable")
        return cls(n, [vertices_of(m) for m in _maximal(masks)])

    # -- basic queries ------------------------------------------------------

    @property
    def facets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(vertices_of(m) for m in self._facets)

    @property
    def facet_masks(self) -> tuple[int, ...]:
        return self._facets

    @property
    def dim(self) -> int:
        return self._dim

    def has_face(self, face: Iterable[int]) -> bool:
        m = mask_of(face)
        return any(m & f == m for f in self._facets)

    def _has_face_mask(self, m: int) -> bool:
        return any(m & f == m for f in self._facets)

    def face_masks(self, i: int) -> tuple[int, ...]:
        """All i-dimensional faces as masks, lex order; empty outside -1..dim."""
        if i == -1:
            return (0,)
        if i < -1 or i > self._dim:
            return ()
        seen = set()
        k = i + 1
        for f in self._facets:
            vs = vertices_of(f)
            if len(vs) < k:
                continue
            for comb in itertools.combinations(vs, k):
                seen.add(mask_of(comb))
        return _sorted_unique(seen)

    def faces(self, i: int) -> list[tuple[int, ...]]:
        """All distinct i-faces in lexicographic order."""
        return [vertices_of(m) for m in self.face_masks(i)]

    def all_face_masks(self) -> set[int]:
        """Every face of the complex (including the empty face) as a mask set."""
        seen = {0}
        for f in self._facets:
            vs = vertices_of(f)
            for k in range(1, len(vs) + 1):
                for comb in itertools.combinations(vs, k):
                    seen.add(mask_of(comb))
        return seen

    def f_vector(self) -> tuple[int, ...]:
        """(f_-1, f_0, ..., f_dim) with f_-1 = 1."""
        if self._fvec is None:
            counts = [1]
            for i in range(0, self._dim + 1):
                counts.append(len(self.face_masks(i)))
            self._fvec = tuple(counts)
        return self._fvec

    def reduced_euler_char(self) -> int:
        """-1 + f_0 - f_1 + f_2 - ..."""
        fv = self.f_vector()
        return -1 + sum((-1) ** i * fv[i + 1] for i in range(len(fv) - 1))

    def is_pure(self) -> bool:
        sizes = {m.bit_count() for m in self._facets}
        return len(sizes) == 1

    # -- derived complexes ---------------------------------------------------

    def one_skeleton(self) -> Graph:
        """Graph on V(K) whose edges are the 1-faces."""
        if self._skeleton is None:
            rows = [0] * self.n
            for f in self._facets:
                for v, w in itertools.combinations(vertices_of(f), 2):
                    rows[v] |= 1 << w
                    rows[w] |= 1 << v
            self._skeleton = Graph(self.n, rows)
        return self._skeleton

    def is_connected(self) -> bool:
        return self.one_skeleton().is_connected()

    def link(self, face: Iterable[int]) -> Subcomplex:
        """Link of a face, compacted to ids 0..k-1 plus the original-id map.

        The map lists original ids in ascending order; new id i corresponds
        to vertices[i]. The link of the empty face is the complex itself.
        """
        m = mask_of(face)
        return self._link_mask(m)

    def _link_mask(self, m: int) -> Subcomplex:
        if not self._has_face_mask(m):
            raise ComplexError(f"not a face: {vertices_of(m)}")
        if m == 0:
            return Subcomplex(self, tuple(range(self.n)))
        lk = [f & ~m for f in self._facets if f & m == m]
        return _compact(self.n, lk)

    def link_vertex_mask(self, face_mask: int) -> int:
        """Union of all vertices of the link, in original ids (V(lk σ))."""
        if not self._has_face_mask(face_mask):
            raise ComplexError(f"not a face: {vertices_of(face_mask)}")
        out = 0
        for f in self._facets:
            if f & face_mask == face_mask:
                out |= f & ~face_mask
        return out

    def restriction(self, vertex_set: Iterable[int]) -> Subcomplex:
        """Induced subcomplex on a vertex set, compacted with an id map."""
        w = mask_of(vertex_set)
        if w & ~((1 << self.n) - 1):
            raise ComplexError("restriction vertex set is not a subset of V")
        return _compact(self.n, [f & w for f in self._facets])

    def deletion(self, vertex_set: Iterable[int]) -> Subcomplex:
        """Faces avoiding the vertex set; equals restriction to the complement."""
        w = mask_of(vertex_set)
        full = (1 << self.n) - 1
        if w & ~full:
            raise ComplexError("deletion vertex set is not a subset of V")
        return self.restriction(vertices_of(full & ~w))

    # -- dunder --------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, SimplicialComplex)
                and self.n == other.n and self._facets == other._facets)

    def __hash__(self) -> int:
        return hash((self.n, self._facets))

    def __repr__(self) -> str:
        return f"SimplicialComplex(n={self.n}, facets={list(self.facets)})"


def _compact(n: int, face_masks: list[int]) -> Subcomplex:
    """Antichainify, then re-index onto the ascending support vertices."""
    maxi = _maximal(face_masks)
    support = 0
    for m in maxi:
        support |= m
    verts = vertices_of(support)
    newid = {v: i for i, v in enumerate(verts)}
    remapped = [mask_of(newid[v] for v in vertices_of(m)) for m in maxi]
    if not remapped:
        remapped = [0]
    return Subcomplex(SimplicialComplex._from_masks(len(verts), remapped), verts)


# ---------------------------------------------------------------------------
# combining complexes

def join(k: "SimplicialComplex", l: "SimplicialComplex") -> SimplicialComplex:
    """Join K * L; L's vertex ids are shifted up by n(K)."""
    shift = k.n
    facets = [fk | (fl << shift) for fk in k.facet_masks for fl in l.facet_masks]
    return SimplicialComplex._from_masks(k.n + l.n, facets)


def sphere0() -> SimplicialComplex:
    """S^0: two isolated vertices."""
    return SimplicialComplex._from_masks(2, [1, 2])


def suspension(k: "SimplicialComplex") -> SimplicialComplex:
    """Join with S^0; the two suspension points get ids 0 and 1."""
    return join(sphere0(), k)


def disjoint_union(k: "SimplicialComplex", l: "SimplicialComplex") -> SimplicialComplex:
    """Disjoint union; L's vertex ids are shifted up by n(K)."""
    shift = k.n
    facets = list(k.facet_masks) + [fl << shift for fl in l.facet_masks]
    return SimplicialComplex._from_masks(k.n + l.n, facets)


def clique_complex(g: Graph) -> SimplicialComplex:
    """Clique complex of a graph: facets are its maximal cliques.

    Bron-Kerbosch with pivoting on bitmask vertex sets; output facet order
    is the canonical lex order, so results are byte-for-byte reproducible.
    """
    if g.n == 0:
        return SimplicialComplex._from_masks(0, [0])
    cliques: list[int] = []
    adj = g.adj

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            cliques.append(r)
            return
        pivot_pool = p | x
        u = (pivot_pool & -pivot_pool).bit_length() - 1
        best = u
        best_cnt = (p & adj[u]).bit_count()
        for v in iter_bits(pivot_pool):
            c = (p & adj[v]).bit_count()
            if c > best_cnt:
                best, best_cnt = v, c
        for v in iter_bits(p & ~adj[best]):
            vb = 1 << v
            expand(r | vb, p & adj[v], x & adj[v])
            p &= ~vb
            x |= vb

    expand(0, (1 << g.n) - 1, 0)
    return SimplicialComplex._from_masks(g.n, cliques)
