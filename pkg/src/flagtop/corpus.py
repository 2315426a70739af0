"""Named desk-scale test complexes swept by the verification suites."""

from __future__ import annotations

import functools

from .core import SimplicialComplex, disjoint_union, join
from .constructions import (
    GJSpec,
    balanced_join,
    cross_polytope_boundary,
    cycle,
    gj,
    gj_enumerate_specs,
    remark_complex,
    suspended_join,
)


def octahedron() -> SimplicialComplex:
    return cross_polytope_boundary(3)


def empty_triangle() -> SimplicialComplex:
    """The 3-cycle: smallest non-flag complex, missing face {0,1,2}."""
    return SimplicialComplex(3, [(0, 1), (1, 2), (0, 2)])


def cone_over_square() -> SimplicialComplex:
    """Cone with apex 4 over the 4-cycle 0-1-2-3: contractible, not Eulerian."""
    return SimplicialComplex(5, [(0, 1, 4), (1, 2, 4), (2, 3, 4), (0, 3, 4)])


def solid_tetrahedron() -> SimplicialComplex:
    return SimplicialComplex(4, [(0, 1, 2, 3)])


def barycentric_triangle() -> SimplicialComplex:
    """Order complex of the face poset of a triangle: flag by construction.

    Ids: 0,1,2 original vertices; 3,4,5 edge midpoints (01,02,12); 6 center.
    """
    return SimplicialComplex(7, [(0, 3, 6), (1, 3, 6), (0, 4, 6), (2, 4, 6),
                                 (1, 5, 6), (2, 5, 6)])


def torus_9() -> SimplicialComplex:
    """9-vertex triangulated torus (quotient of the plane triangulation by a
    3x3 lattice): a closed surface with reduced Euler characteristic -1."""
    def vid(i: int, j: int) -> int:
        return 3 * (i % 3) + (j % 3)

    facets = []
    for i in range(3):
        for j in range(3):
            facets.append(tuple(sorted((vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)))))
            facets.append(tuple(sorted((vid(i, j), vid(i, j + 1), vid(i + 1, j + 1)))))
    return SimplicialComplex(9, facets)


def two_octahedra() -> SimplicialComplex:
    return disjoint_union(octahedron(), octahedron())


@functools.lru_cache(maxsize=1)
def corpus() -> dict[str, SimplicialComplex]:
    """The sweep corpus, insertion-ordered by name for stable iteration."""
    out: dict[str, SimplicialComplex] = {}
    out["cycle4"] = cycle(4)
    out["cycle5"] = cycle(5)
    out["cycle6"] = cycle(6)
    out["octahedron"] = octahedron()
    out["cross4"] = cross_polytope_boundary(4)
    out["cross5"] = cross_polytope_boundary(5)
    for n in range(8, 13):
        out[f"j2_{n}"] = balanced_join(2, n)
    for n in range(10, 13):
        out[f"jstar2_{n}"] = suspended_join(2, n)
    for n in range(12, 15):
        out[f"j3_{n}"] = balanced_join(3, n)
    out["j4_16"] = balanced_join(4, 16)
    for n in (12, 14, 16):
        for spec in gj_enumerate_specs(n):
            tag = "a" + "_".join(map(str, spec.a)) + "__b" + "_".join(map(str, spec.b))
            out[f"gj{n}_{tag}"] = gj(spec)
    out["gj17_a4_4__b9"] = gj(GJSpec((4, 4), (9,)))
    out["remark_4444"] = remark_complex(4, 4, 4, 4)
    out["remark_4454"] = remark_complex(4, 4, 5, 4)
    out["join_c4c4c6"] = functools.reduce(join, [cycle(4), cycle(4), cycle(6)])
    out["join_c4c6c6"] = functools.reduce(join, [cycle(4), cycle(6), cycle(6)])
    out["join_c4c4c4c6"] = functools.reduce(join, [cycle(4)] * 3 + [cycle(6)])
    out["torus9"] = torus_9()
    out["cone_square"] = cone_over_square()
    out["two_octahedra"] = two_octahedra()
    out["solid_tetrahedron"] = solid_tetrahedron()
    out["empty_triangle"] = empty_triangle()
    out["barycentric_triangle"] = barycentric_triangle()
    return out
