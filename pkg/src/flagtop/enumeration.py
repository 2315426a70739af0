"""Isomorph-free exhaustive search for small flag complexes.

Canonical labeling is homegrown: equitable partition refinement plus
individualization backtracking, with three structural shortcuts that keep
the search tree small on the graphs this package actually meets (sparse
complements of complex skeletons): disjoint unions canonicalize per
component, complete/empty components are canonical as-is, and dense graphs
are canonicalized through their complements.

Candidate generation for the 3-dimensional classes enumerates complement
graphs of bounded degree, level by level on the edge count, deduplicating
each level by canonical form. The degree bound is the one load-bearing
pruning fact: in all three classes every vertex link is a flag normal
2-pseudomanifold or a flag 2-dimensional Eulerian complex, and either kind
needs at least 6 vertices (a flag normal (d-1)-pseudomanifold has at least
2d vertices; a flag 2-dimensional Eulerian complex with fewer than 6
vertices would force a vertex of degree >= n-1, whose clique complex is a
cone and never a weak pseudomanifold). Hence every vertex of a member has
degree >= 6, i.e. complement max degree <= n-7.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable

from . import validators
from .core import ComplexError, Graph, SimplicialComplex, clique_complex, iter_bits, mask_of

MAX_CANON_VERTICES = 16

CLASS_NAMES = ("flag_normal_3pm", "flag_eulerian_3", "flag_3_manifold")


@dataclass(frozen=True)
class CanonicalGraph:
    """Canonical form of a graph: identical for isomorphic inputs."""

    n: int
    rows: tuple[int, ...]
    automorphisms: int | None = None


# ---------------------------------------------------------------------------
# partition refinement + individualization

def _refine(adj: tuple[int, ...], cells: list[int]) -> list[int]:
    """Coarsest equitable refinement of an ordered partition (cells as masks).

    Cells split by neighbor counts into a splitter cell, new parts ordered by
    ascending count; the procedure depends only on cell positions and count
    values, so the resulting ordered partition is isomorphism-invariant.
    """
    work = cells
    queue = list(cells)
    qi = 0
    while qi < len(queue):
        splitter = queue[qi]
        qi += 1
        out: list[int] = []
        changed = False
        for cell in work:
            if cell & (cell - 1):  # size > 1
                buckets: dict[int, int] = {}
                m = cell
                while m:
                    low = m & -m
                    m ^= low
                    v = low.bit_length() - 1
                    key = (adj[v] & splitter).bit_count()
                    buckets[key] = buckets.get(key, 0) | low
                if len(buckets) > 1:
                    parts = [buckets[key] for key in sorted(buckets)]
                    out.extend(parts)
                    queue.extend(parts)
                    changed = True
                    continue
            out.append(cell)
        if changed:
            work = out
    return list(work)


def _relabel(n: int, adj: tuple[int, ...], perm: tuple[int, ...]) -> tuple[int, ...]:
    """Adjacency rows after renaming vertex perm[i] to i."""
    pos = [0] * n
    for i, v in enumerate(perm):
        pos[v] = i
    rows = []
    for i in range(n):
        row = 0
        for w in iter_bits(adj[perm[i]]):
            row |= 1 << pos[w]
        rows.append(row)
    return tuple(rows)


def _canon_connected(n: int, adj: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(canonical rows, permutation) for a connected graph on n <= 16 vertices.

    Canonical rows are the maximum leaf code over the refinement tree, where
    at every node only children attaining the maximal node invariant are
    explored; the retained subtree is isomorphism-invariant, so the maximum
    is too.
    """
    full = (1 << n) - 1
    identity = tuple(range(n))
    if all(row == (full & ~(1 << v)) for v, row in enumerate(adj)) or all(r == 0 for r in adj):
        return adj, identity

    best_code: tuple[int, ...] | None = None
    best_perm: tuple[int, ...] = identity

    def node_invariant(cells: list[int]) -> tuple:
        sizes = tuple(c.bit_count() for c in cells)
        quo = tuple((adj[(c & -c).bit_length() - 1] & d).bit_count()
                    for c in cells for d in cells)
        return (sizes, quo)

    def descend(cells: list[int]) -> None:
        nonlocal best_code, best_perm
        target = -1
        for idx, c in enumerate(cells):
            if c & (c - 1):
                target = idx
                break
        if target < 0:
            perm = tuple(c.bit_length() - 1 for c in cells)
            code = _relabel(n, adj, perm)
            if best_code is None or code > best_code:
                best_code, best_perm = code, perm
            return
        cell = cells[target]
        children = []
        for v in iter_bits(cell):
            vb = 1 << v
            refined = _refine(adj, cells[:target] + [vb, cell & ~vb] + cells[target + 1:])
            children.append((node_invariant(refined), refined))
        best_inv = max(ch[0] for ch in children)
        for inv, refined in children:
            if inv == best_inv:
                descend(refined)

    descend(_refine(adj, [full]))
    assert best_code is not None
    return best_code, best_perm


def _components(n: int, adj: tuple[int, ...]) -> list[int]:
    remaining = (1 << n) - 1
    comps = []
    while remaining:
        seed = remaining & -remaining
        seen = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        comps.append(seen)
        remaining &= ~seen
    return comps


def _canon_assembled(n: int, adj: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Canonicalize per connected component, then assemble blocks sorted by
    (size, code); returns (canonical rows, permutation)."""
    pieces = []
    for comp in _components(n, adj):
        verts = tuple(iter_bits(comp))
        size = len(verts)
        pos = {v: i for i, v in enumerate(verts)}
        sub = tuple(mask_of(pos[w] for w in iter_bits(adj[v] & comp)) for v in verts)
        code, perm = _canon_connected(size, sub)
        pieces.append((size, code, verts, perm))
    pieces.sort(key=lambda p: (p[0], p[1], p[2]))
    rows: list[int] = []
    global_perm: list[int] = []
    offset = 0
    for size, code, verts, perm in pieces:
        rows.extend(r << offset for r in code)
        global_perm.extend(verts[perm[i]] for i in range(size))
        offset += size
    return tuple(rows), tuple(global_perm)


def _canonical_rows(n: int, adj: tuple[int, ...]) -> tuple[int, ...]:
    if n == 0:
        return ()
    # degree sum is twice the edge count; canonicalize the sparser side
    if sum(r.bit_count() for r in adj) > n * (n - 1) // 2:
        full = (1 << n) - 1
        comp = tuple((full & ~r) & ~(1 << v) for v, r in enumerate(adj))
        _, perm = _canon_assembled(n, comp)
        return _relabel(n, adj, perm)
    code, _ = _canon_assembled(n, adj)
    return code


def canonical_form(g: Graph) -> CanonicalGraph:
    """Canonical labeling; isomorphic graphs map to identical forms."""
    if g.n > MAX_CANON_VERTICES:
        raise ComplexError(f"canonical labeling capped at {MAX_CANON_VERTICES} vertices, got {g.n}")
    return CanonicalGraph(g.n, _canonical_rows(g.n, g.adj))


def are_isomorphic(k1: SimplicialComplex, k2: SimplicialComplex) -> bool:
    """Flag complexes are determined by their graphs, so compare canonical
    1-skeletons. Raises on non-flag input."""
    for k in (k1, k2):
        if not validators.is_flag(k):
            raise ComplexError("are_isomorphic requires flag complexes")
    if k1.n != k2.n:
        return False
    return canonical_form(k1.one_skeleton()) == canonical_form(k2.one_skeleton())


# ---------------------------------------------------------------------------
# bounded-degree complement generation

_BDG_CACHE: dict[tuple[int, int], tuple[tuple[int, ...], ...]] = {}


def _children_of(n: int, max_deg: int, rows: tuple[int, ...]) -> set[tuple[int, ...]]:
    out = set()
    for i in range(n):
        if rows[i].bit_count() >= max_deg:
            continue
        for j in range(i + 1, n):
            if rows[i] >> j & 1 or rows[j].bit_count() >= max_deg:
                continue
            child = list(rows)
            child[i] |= 1 << j
            child[j] |= 1 << i
            out.add(_canonical_rows(n, tuple(child)))
    return out


def _expand_chunk(args: tuple[int, int, tuple[tuple[int, ...], ...]]) -> set[tuple[int, ...]]:
    n, max_deg, chunk = args
    out: set[tuple[int, ...]] = set()
    for rows in chunk:
        out |= _children_of(n, max_deg, rows)
    return out


def bounded_degree_graph_classes(n: int, max_deg: int,
                                 threads: int = 1) -> tuple[tuple[int, ...], ...]:
    """All isomorphism classes of graphs on n vertices with max degree
    <= max_deg, as canonical adjacency tuples, generated by orderly
    edge-addition with canonical-form rejection per level."""
    key = (n, max_deg)
    cached = _BDG_CACHE.get(key)
    if cached is not None:
        return cached
    empty = (0,) * n
    all_codes = {empty}
    frontier: list[tuple[int, ...]] = [empty]
    while frontier:
        if threads > 1 and len(frontier) >= 4 * threads:
            chunks = [frontier[i::threads] for i in range(threads)]
            with ProcessPoolExecutor(max_workers=threads) as pool:
                parts = list(pool.map(_expand_chunk,
                                      [(n, max_deg, tuple(c)) for c in chunks]))
            nxt: set[tuple[int, ...]] = set()
            for p in parts:
                nxt |= p
        else:
            nxt = _expand_chunk((n, max_deg, tuple(frontier)))
        all_codes |= nxt
        frontier = sorted(nxt)
    result = tuple(sorted(all_codes))
    _BDG_CACHE[key] = result
    return result


# ---------------------------------------------------------------------------
# class enumeration

@dataclass
class EnumerationResult:
    n: int
    class_name: str
    representatives: tuple[SimplicialComplex, ...]
    count: int
    f_vectors: tuple[tuple[int, ...], ...]
    wall_time_s: float

    def to_json_dict(self) -> dict:
        # wall time deliberately excluded: data streams stay byte-stable
        return {
            "schema": 1,
            "n": self.n,
            "class": self.class_name,
            "count": self.count,
            "f_vectors": [list(fv) for fv in self.f_vectors],
            "representatives": [[list(f) for f in k.facets] for k in self.representatives],
        }


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("FLAGTOP_THREADS", "1")))
    except ValueError:
        return 1


def _candidate_passes(n: int, class_name: str, f1: int | None,
                      h_rows: tuple[int, ...]) -> SimplicialComplex | None:
    """Validate the clique complex of the complement of one candidate graph."""
    total = n * (n - 1) // 2
    h_edges = sum(r.bit_count() for r in h_rows) // 2
    if f1 is not None and total - h_edges != f1:
        return None
    if any(r == 0 for r in h_rows):
        # a vertex adjacent to everything makes the flag complex a cone,
        # and cones are never weak pseudomanifolds
        return None
    full = (1 << n) - 1
    g = Graph(n, tuple((full & ~r) & ~(1 << v) for v, r in enumerate(h_rows)))
    k = clique_complex(g)
    if k.dim != 3 or not k.is_pure():
        return None
    if not validators.is_weak_pseudomanifold(k):
        return None
    if class_name == "flag_normal_3pm":
        ok = validators.is_normal_pseudomanifold(k)
    elif class_name == "flag_eulerian_3":
        ok = validators.is_eulerian(k)
    else:
        ok = validators.is_flag_3_manifold(k)
    return k if ok else None


def _validate_chunk(args) -> list[tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]]:
    n, class_name, f1, chunk = args
    hits = []
    for h_rows in chunk:
        k = _candidate_passes(n, class_name, f1, h_rows)
        if k is not None:
            hits.append((h_rows, k.facets))
    return hits


def enumerate_class(n: int, class_name: str, f1: int | None = None,
                    threads: int | None = None) -> EnumerationResult:
    """All isomorphism classes of n-vertex complexes in the named class.

    Searches complements of bounded-degree graphs (see module docstring for
    the derivation of the degree bound) and runs the clique complex of every
    candidate through the validators, cheapest test first.
    """
    if class_name not in CLASS_NAMES:
        raise ComplexError(f"unknown class {class_name!r}; expected one of {CLASS_NAMES}")
    if not 8 <= n <= 11:
        raise ComplexError(f"enumeration supports 8 <= n <= 11, got {n}")
    if threads is None:
        threads = _default_threads()
    start = time.perf_counter()
    candidates = bounded_degree_graph_classes(n, n - 7, threads=threads)
    if threads > 1 and len(candidates) >= 4 * threads:
        chunks = [candidates[i::threads] for i in range(threads)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_validate_chunk,
                                  [(n, class_name, f1, c) for c in chunks]))
        hits = [hit for part in parts for hit in part]
    else:
        hits = _validate_chunk((n, class_name, f1, candidates))
    hits.sort(key=lambda h: h[0])
    reps = tuple(SimplicialComplex(n, facets) for _, facets in hits)
    return EnumerationResult(
        n=n,
        class_name=class_name,
        representatives=reps,
        count=len(reps),
        f_vectors=tuple(k.f_vector() for k in reps),
        wall_time_s=time.perf_counter() - start,
    )


def maximizers(n: int, class_name: str, threads: int | None = None) -> EnumerationResult:
    """Members of the class attaining the balanced-two-circle edge count.

    Asserts the result matches, up to isomorphism, the union-of-joins family
    members that lie in the class; a mismatch would contradict the equality
    theorems this package verifies, so it raises.
    """
    from .bounds import f1_J
    from .constructions import gj, gj_enumerate_specs

    result = enumerate_class(n, class_name, f1=f1_J(2, n), threads=threads)
    expected: set[tuple[int, ...]] = set()
    for spec in gj_enumerate_specs(n):
        k = gj(spec)
        if class_name == "flag_normal_3pm":
            member = bool(validators.is_normal_pseudomanifold(k))
        elif class_name == "flag_eulerian_3":
            member = bool(validators.is_eulerian(k))
        else:
            member = bool(validators.is_flag_3_manifold(k))
        if member:
            expected.add(canonical_form(k.one_skeleton()).rows)
    found = {canonical_form(k.one_skeleton()).rows for k in result.representatives}
    if found != expected:
        raise RuntimeError(
            f"maximizer enumeration mismatch for {class_name} at n={n}: "
            f"found {len(found)} classes, expected {len(expected)}")
    return result
