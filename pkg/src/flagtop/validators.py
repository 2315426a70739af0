"""Membership tests for the complex classes the bounds quantify over.

Every check returns a Verdict carrying a witness for failures; witnesses are
chosen lexicographically minimal so golden outputs stay stable. Connectivity
is computed on the 1-skeleton, which matches topological connectivity for
pure complexes of dimension >= 1. Surface recognition uses the
vertex-link-is-a-single-cycle criterion, valid in dimension 2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any

from .core import (
    ComplexError,
    SimplicialComplex,
    clique_complex,
    iter_bits,
    mask_of,
    vertices_of,
    _components_within,
    _lex_key,
)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok


def _impure_witness(k: SimplicialComplex) -> dict:
    sizes = sorted({m.bit_count() for m in k.facet_masks})
    small = next(vertices_of(m) for m in k.facet_masks if m.bit_count() == sizes[0])
    large = next(vertices_of(m) for m in k.facet_masks if m.bit_count() == sizes[-1])
    return {"impure_facets": [list(small), list(large)]}


# ---------------------------------------------------------------------------
# flagness

def minimal_nonfaces(k: SimplicialComplex) -> list[tuple[int, ...]]:
    """All inclusion-minimal non-faces, ascending cardinality then lex.

    A minimal non-face of cardinality c has all its (c-1)-subsets in K, so
    candidates are generated as face-plus-one-vertex extensions; cardinality
    is capped at dim+2, above which no subset condition can hold.
    """
    out: list[int] = []
    faces_prev = {0}
    for c in range(1, k.dim + 3):
        faces_cur = set(k.face_masks(c - 1))
        candidates: set[int] = set()
        for f in faces_prev:
            rest = ((1 << k.n) - 1) & ~f
            for v in iter_bits(rest):
                candidates.add(f | (1 << v))
        for s in candidates:
            if s in faces_cur:
                continue
            if all((s & ~(1 << v)) in faces_prev for v in iter_bits(s)):
                out.append(s)
        faces_prev = faces_cur
    out.sort(key=lambda m: (m.bit_count(), _lex_key(m)))
    return [vertices_of(m) for m in out]


def is_flag(k: SimplicialComplex) -> Verdict:
    """True iff K is the clique complex of its own 1-skeleton."""
    if clique_complex(k.one_skeleton()) == k:
        return Verdict(True)
    for nf in minimal_nonfaces(k):
        if len(nf) >= 3:
            return Verdict(False, {"missing_face": list(nf)})
    raise AssertionError("non-flag complex must have a missing face of cardinality >= 3")


# ---------------------------------------------------------------------------
# pseudomanifolds

def _ridge_counts(k: SimplicialComplex) -> dict[int, int]:
    counts: dict[int, int] = {}
    for f in k.facet_masks:
        if f == 0:
            counts[0] = counts.get(0, 0) + 1
            continue
        for v in iter_bits(f):
            r = f & ~(1 << v)
            counts[r] = counts.get(r, 0) + 1
    return counts


def is_weak_pseudomanifold(k: SimplicialComplex) -> Verdict:
    """Pure, and every ridge lies in exactly two facets."""
    if k.dim < 0:
        return Verdict(False, {"reason": "dimension -1"})
    if not k.is_pure():
        return Verdict(False, _impure_witness(k))
    if k.dim == 0:
        # the only ridge is the empty face, contained in every facet
        cnt = len(k.facet_masks)
        if cnt == 2:
            return Verdict(True)
        return Verdict(False, {"ridge": [], "facet_count": cnt})
    bad = [(r, c) for r, c in _ridge_counts(k).items() if c != 2]
    if not bad:
        return Verdict(True)
    r, c = min(bad, key=lambda rc: _lex_key(rc[0]))
    return Verdict(False, {"ridge": list(vertices_of(r)), "facet_count": c})


def _link_connected(k: SimplicialComplex, face_mask: int) -> bool:
    """Connectivity of lk(σ) over its own support, without re-indexing."""
    lk_facets = [f & ~face_mask for f in k.facet_masks if f & face_mask == face_mask]
    support = 0
    rows = [0] * k.n
    for lf in lk_facets:
        support |= lf
        for v, w in itertools.combinations(vertices_of(lf), 2):
            rows[v] |= 1 << w
            rows[w] |= 1 << v
    if support == 0:
        return False
    return _components_within(tuple(rows), support) == 1


def is_normal_pseudomanifold(k: SimplicialComplex) -> Verdict:
    """Weak pseudomanifold, connected, with connected links in codim >= 3."""
    weak = is_weak_pseudomanifold(k)
    if not weak:
        return Verdict(False, {"not_weak": weak.witness})
    if not k.is_connected():
        return Verdict(False, {"disconnected": True})
    d = k.dim
    for card in range(1, d):  # faces of dim <= d-2, i.e. cardinality <= d-1
        for m in k.face_masks(card - 1):
            if not _link_connected(k, m):
                return Verdict(False, {"face": list(vertices_of(m)), "disconnected_link": True})
    return Verdict(True)


# ---------------------------------------------------------------------------
# Eulerian complexes

def _link_euler_profile(k: SimplicialComplex) -> dict[int, list[int]]:
    """For every face σ, counts[j] = number of faces ρ ⊇ σ with |ρ\\σ| = j."""
    profile: dict[int, list[int]] = {}
    width = k.dim + 2
    for rho in k.all_face_masks():
        sub = rho
        while True:
            row = profile.get(sub)
            if row is None:
                row = [0] * width
                profile[sub] = row
            row[(rho & ~sub).bit_count()] += 1
            if sub == 0:
                break
            sub = (sub - 1) & rho
    return profile


def is_eulerian(k: SimplicialComplex) -> Verdict:
    """Pure, and every face's link (including ∅) has χ̃ = (-1)^dim(link)."""
    if not k.is_pure():
        return Verdict(False, _impure_witness(k))
    offenders = []
    for face, counts in _link_euler_profile(k).items():
        dim_lk = max(j for j, c in enumerate(counts) if c) - 1
        chi = sum((-1) ** (j - 1) * c for j, c in enumerate(counts))
        want = (-1) ** (dim_lk & 1) if dim_lk >= 0 else -1
        if chi != want:
            offenders.append((face, chi, want))
    if not offenders:
        return Verdict(True)
    face, chi, want = min(offenders, key=lambda o: (o[0].bit_count(), _lex_key(o[0])))
    return Verdict(False, {"face": list(vertices_of(face)),
                           "reduced_euler": chi, "expected": want})


# ---------------------------------------------------------------------------
# dimension-specific recognition

def _is_single_cycle(lk: SimplicialComplex) -> bool:
    if lk.dim != 1 or not lk.is_pure():
        return False
    g = lk.one_skeleton()
    return all(d == 2 for d in g.degrees()) and g.is_connected()


def is_closed_surface(k: SimplicialComplex) -> Verdict:
    """Connected, every edge in exactly two triangles, vertex links single cycles."""
    if k.dim != 2:
        raise ComplexError(f"surface check requires dimension 2, got {k.dim}")
    if not k.is_connected():
        return Verdict(False, {"disconnected": True})
    weak = is_weak_pseudomanifold(k)
    if not weak:
        return Verdict(False, weak.witness)
    for v in range(k.n):
        lk = k._link_mask(1 << v).complex
        if not _is_single_cycle(lk):
            return Verdict(False, {"vertex": v, "link_not_single_cycle": True})
    return Verdict(True)


def is_two_sphere(k: SimplicialComplex) -> Verdict:
    surf = is_closed_surface(k)
    if not surf:
        return surf
    chi = k.reduced_euler_char()
    if chi != 1:
        return Verdict(False, {"reduced_euler": chi})
    return Verdict(True)


def is_flag_3_manifold(k: SimplicialComplex) -> Verdict:
    """Flag, weak pseudomanifold, connected, all vertex links 2-spheres."""
    if k.dim != 3:
        raise ComplexError(f"3-manifold check requires dimension 3, got {k.dim}")
    flag = is_flag(k)
    if not flag:
        return Verdict(False, {"not_flag": flag.witness})
    weak = is_weak_pseudomanifold(k)
    if not weak:
        return Verdict(False, {"not_weak": weak.witness})
    if not k.is_connected():
        return Verdict(False, {"disconnected": True})
    for v in range(k.n):
        sphere = is_two_sphere(k._link_mask(1 << v).complex)
        if not sphere:
            return Verdict(False, {"vertex": v, "link_not_2_sphere": sphere.witness})
    return Verdict(True)


def is_octahedral_sphere(k: SimplicialComplex) -> Verdict:
    """Flag, and the 1-skeleton is complete multipartite K_{2,...,2}."""
    if k.n < 2 or k.n % 2:
        return Verdict(False, {"vertex_count": k.n})
    g = k.one_skeleton()
    full = (1 << k.n) - 1
    for v in range(k.n):
        non = full & ~g.adj[v] & ~(1 << v)
        if non.bit_count() != 1:
            return Verdict(False, {"vertex": v, "non_neighbors": list(vertices_of(non))})
    flag = is_flag(k)
    if not flag:
        return Verdict(False, {"not_flag": flag.witness})
    return Verdict(True)


# ---------------------------------------------------------------------------
# aggregate report

_REPORT_ORDER = (
    "flag", "pure", "connected", "weak_pseudomanifold", "normal_pseudomanifold",
    "eulerian", "closed_surface", "two_sphere", "flag_3_manifold", "octahedral_sphere",
)


@dataclass
class ClassificationReport:
    n: int
    dim: int
    f_vector: tuple[int, ...]
    reduced_euler: int
    verdicts: dict[str, bool | None] = field(default_factory=dict)
    witnesses: dict[str, Any] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "n": self.n,
            "dim": self.dim,
            "f_vector": list(self.f_vector),
            "reduced_euler": self.reduced_euler,
            "verdicts": {name: self.verdicts[name] for name in _REPORT_ORDER},
            "witnesses": {name: self.witnesses[name]
                          for name in _REPORT_ORDER if name in self.witnesses},
        }


def classify(k: SimplicialComplex) -> ClassificationReport:
    """Run every applicable class test; dimension-gated tests report None."""
    report = ClassificationReport(
        n=k.n, dim=k.dim, f_vector=k.f_vector(), reduced_euler=k.reduced_euler_char())

    def put(name: str, verdict: Verdict | None) -> None:
        if verdict is None:
            report.verdicts[name] = None
            return
        report.verdicts[name] = verdict.ok
        if not verdict.ok and verdict.witness is not None:
            report.witnesses[name] = verdict.witness

    put("flag", is_flag(k))
    put("pure", Verdict(k.is_pure(), None if k.is_pure() else _impure_witness(k)))
    put("connected", Verdict(k.is_connected()))
    put("weak_pseudomanifold", is_weak_pseudomanifold(k))
    put("normal_pseudomanifold", is_normal_pseudomanifold(k))
    put("eulerian", is_eulerian(k))
    put("closed_surface", is_closed_surface(k) if k.dim == 2 else None)
    put("two_sphere", is_two_sphere(k) if k.dim == 2 else None)
    put("flag_3_manifold", is_flag_3_manifold(k) if k.dim == 3 else None)
    put("octahedral_sphere", is_octahedral_sphere(k))
    return report
