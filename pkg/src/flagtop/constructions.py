"""Named complex families: cycles, balanced joins of circles, suspended
joins, cross-polytope boundaries, and the union-of-joins Eulerian maximizers.

Vertex numbering is fixed once and for all: factors are laid out
consecutively (first circle 0..k1-1, second k1..k1+k2-1, ...), and when
cycle lengths differ the longer cycles come first. Any distribution gives
isomorphic complexes; fixing one keeps golden outputs stable.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .core import ComplexError, SimplicialComplex, join, sphere0, suspension


def _circle_edges(length: int, offset: int) -> list[tuple[int, int]]:
    edges = [(offset + i, offset + i + 1) for i in range(length - 1)]
    edges.append((offset, offset + length - 1))
    return edges


def cycle(k: int) -> SimplicialComplex:
    """1-dimensional cycle 0-1-...-(k-1)-0; k >= 4 so the result is flag."""
    if k < 4:
        raise ComplexError(f"non-flag cycle: length {k} < 4 (a 3-cycle's clique "
                           "complex is a triangle, not a circle)")
    return SimplicialComplex(k, _circle_edges(k, 0))


def balanced_cycle_lengths(m: int, n: int) -> tuple[int, ...]:
    """m cycle lengths summing to n, each floor(n/m) or ceil(n/m), longer first."""
    if m < 1:
        raise ComplexError(f"need at least one circle factor, got m={m}")
    if n < 4 * m:
        raise ComplexError(f"n={n} < 4m={4 * m}: some cycle would have length < 4")
    q, r = divmod(n, m)
    return (q + 1,) * r + (q,) * (m - r)


def balanced_join(m: int, n: int) -> SimplicialComplex:
    """Join of m circles with lengths as balanced as possible, n vertices total."""
    return functools.reduce(join, [cycle(length) for length in balanced_cycle_lengths(m, n)])


def suspended_join(m: int, n: int) -> SimplicialComplex:
    """Suspension of the balanced join on n-2 vertices; n vertices total."""
    if n < 4 * m + 2:
        raise ComplexError(f"n={n} < 4m+2={4 * m + 2}")
    return suspension(balanced_join(m, n - 2))


def cross_polytope_boundary(d: int) -> SimplicialComplex:
    """Boundary of the d-dimensional cross-polytope: d-fold join of S^0.

    Vertices 2i and 2i+1 are the i-th antipodal pair; the 2^d facets pick
    one vertex from each pair.
    """
    if d < 1:
        raise ComplexError(f"cross-polytope dimension must be >= 1, got {d}")
    return functools.reduce(join, [sphere0()] * d)


# ---------------------------------------------------------------------------
# union-of-joins Eulerian maximizers

@dataclass(frozen=True)
class GJSpec:
    """Two partitions with parts >= 4; a sums to floor(n/2), b to ceil(n/2)."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(sorted(self.a, reverse=True)))
        object.__setattr__(self, "b", tuple(sorted(self.b, reverse=True)))
        for part in self.a + self.b:
            if part < 4:
                raise ComplexError(f"circle length {part} < 4 is not flag")
        if not self.a or not self.b:
            raise ComplexError("both partitions must be non-empty")

    @property
    def n(self) -> int:
        return sum(self.a) + sum(self.b)

    def is_balanced(self) -> bool:
        return sum(self.a) == self.n // 2 and sum(self.b) == (self.n + 1) // 2


def gj(spec: GJSpec, allow_unbalanced: bool = False) -> SimplicialComplex:
    """Union over all pairs (i, j) of the joins C_{a_i} * C_{b_j}.

    All circles sit on pairwise disjoint vertex sets, a-circles first. Every
    facet is a cycle edge of some a-circle together with a cycle edge of
    some b-circle. `allow_unbalanced` skips the floor/ceil sum check (for
    negative tests only).
    """
    if not allow_unbalanced and not spec.is_balanced():
        raise ComplexError(
            f"partition sums {sum(spec.a)}/{sum(spec.b)} are not floor/ceil of n/2; "
            "pass allow_unbalanced=True if this is intentional")
    a_edges: list[tuple[int, int]] = []
    offset = 0
    for length in spec.a:
        a_edges.extend(_circle_edges(length, offset))
        offset += length
    b_edges: list[tuple[int, int]] = []
    for length in spec.b:
        b_edges.extend(_circle_edges(length, offset))
        offset += length
    facets = [ea + eb for ea in a_edges for eb in b_edges]
    return SimplicialComplex(offset, facets)


def _partitions_min4(total: int) -> list[tuple[int, ...]]:
    """Partitions of `total` into parts >= 4, descending parts, sorted."""

    def rec(remaining: int, largest: int) -> list[tuple[int, ...]]:
        if remaining == 0:
            return [()]
        out = []
        for part in range(min(remaining, largest), 3, -1):
            if remaining - part != 0 and remaining - part < 4:
                continue
            out.extend((part,) + rest for rest in rec(remaining - part, part))
        return out

    return sorted(rec(total, total))


def gj_enumerate_specs(n: int) -> list[GJSpec]:
    """All specs on n vertices, deduplicated under a/b swap when n is even."""
    if n < 8:
        raise ComplexError(f"union-of-joins family needs n >= 8, got {n}")
    parts_a = _partitions_min4(n // 2)
    parts_b = _partitions_min4((n + 1) // 2)
    seen = set()
    specs = []
    for pa, pb in itertools.product(parts_a, parts_b):
        key = (pa, pb) if n % 2 else tuple(sorted((pa, pb)))
        if key in seen:
            continue
        seen.add(key)
        specs.append(GJSpec(pa, pb))
    return specs


def remark_complex(l1: int, l2: int, l3: int, l4: int) -> SimplicialComplex:
    """(L1*L3) ∪ (L2*L3) ∪ (L1*L4) on four disjoint circles: a flag weak
    3-pseudomanifold whose circle-edge links are disjoint unions of two
    circles, hence not a normal pseudomanifold."""
    lengths = (l1, l2, l3, l4)
    for length in lengths:
        if length < 4:
            raise ComplexError(f"circle length {length} < 4 is not flag")
    offsets = [sum(lengths[:i]) for i in range(4)]
    e1, e2, e3, e4 = (_circle_edges(lengths[i], offsets[i]) for i in range(4))
    facets = ([a + b for a in e1 for b in e3]
              + [a + b for a in e2 for b in e3]
              + [a + b for a in e1 for b in e4])
    return SimplicialComplex(sum(lengths), facets)
