"""Closed-form face counts and inequality checkers.

All formulas evaluate in exact integer arithmetic; the single division is
performed last and asserted exact. Checkers validate their class
preconditions first and refuse to report on invalid input.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any

from . import validators
from .core import ComplexError, SimplicialComplex, mask_of, vertices_of, iter_bits


class PreconditionError(ComplexError):
    """Input failed a class validator required by a bound checker."""

    def __init__(self, checker: str, validator: str, witness: Any = None):
        self.checker = checker
        self.validator = validator
        self.witness = witness
        super().__init__(f"{checker}: input failed validator '{validator}'")


@dataclass(frozen=True)
class BoundReport:
    bound_name: str
    n: int
    m: int | None
    lhs: int
    rhs: int
    tight: bool
    witness: Any = None

    def __post_init__(self):
        if self.tight and self.lhs != self.rhs:
            raise AssertionError("tight report with lhs != rhs")

    def holds(self) -> bool:
        return self.lhs <= self.rhs

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "bound": self.bound_name,
            "n": self.n,
            "m": self.m,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "tight": self.tight,
            "holds": self.holds(),
            "witness": self.witness,
        }


# ---------------------------------------------------------------------------
# closed forms

def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise AssertionError(f"non-integer intermediate: {num}/{den}")
    return q


def f1_J(m: int, n: int) -> int:
    """Edge count of the balanced join of m circles on n vertices."""
    if m < 1 or n < 4 * m:
        raise ComplexError(f"balanced join needs n >= 4m, got m={m}, n={n}")
    q = n % m
    return _exact_div((m - 1) * n * n + q * (q - m), 2 * m) + n


def f1_Jstar(m: int, n: int) -> int:
    """Edge count of the suspended balanced join on n vertices."""
    if m < 1 or n < 4 * m + 2:
        raise ComplexError(f"suspended join needs n >= 4m+2, got m={m}, n={n}")
    k = n - 2
    q = k % m
    return _exact_div((m - 1) * k * k + q * (q - m), 2 * m) + 3 * k


def eulerian3_fvector(f0: int, f1: int) -> tuple[int, ...]:
    """The full f-vector a 3-dimensional Eulerian complex must have."""
    if not f1 >= f0 >= 5:
        raise ComplexError(f"need f1 >= f0 >= 5, got f0={f0}, f1={f1}")
    return (1, f0, f1, 2 * f1 - 2 * f0, f1 - f0)


# ---------------------------------------------------------------------------
# preconditions

def _require(checker: str, name: str, verdict: validators.Verdict) -> None:
    if not verdict:
        raise PreconditionError(checker, name, verdict.witness)


def _require_dim(checker: str, k: SimplicialComplex, dim: int) -> None:
    if k.dim != dim:
        raise PreconditionError(checker, f"dimension=={dim}", {"dim": k.dim})


def _require_facet(checker: str, k: SimplicialComplex, face) -> int:
    m = mask_of(face)
    if m not in k.facet_masks:
        raise PreconditionError(checker, "is_facet", {"face": list(vertices_of(m))})
    return m


def _max_degree_vertex(k: SimplicialComplex) -> tuple[int, int]:
    degs = k.one_skeleton().degrees()
    best = max(degs)
    return degs.index(best), best


# ---------------------------------------------------------------------------
# global edge bounds

def check_upper_bound_3dim(k: SimplicialComplex) -> BoundReport:
    """f1 against the balanced-two-circle count, for flag 3-dim Eulerian input."""
    name = "edge_bound_flag_eulerian_3dim"
    _require_dim(name, k, 3)
    _require(name, "is_flag", validators.is_flag(k))
    _require(name, "is_eulerian", validators.is_eulerian(k))
    lhs = k.f_vector()[2]
    rhs = f1_J(2, k.n)
    v, deg = _max_degree_vertex(k)
    return BoundReport(name, k.n, 2, lhs, rhs, lhs == rhs,
                       witness={"max_degree_vertex": v, "degree": deg})


def check_lemma_c_bound(k: SimplicialComplex) -> BoundReport:
    """f1 against the balanced count plus the defect term
    c = 3 - 3 * min over vertices of chi~(link), for flag normal 3-pseudomanifolds."""
    name = "edge_bound_flag_normal_3pm_with_defect"
    _require_dim(name, k, 3)
    _require(name, "is_flag", validators.is_flag(k))
    _require(name, "is_normal_pseudomanifold", validators.is_normal_pseudomanifold(k))
    chis = [(k._link_mask(1 << v).complex.reduced_euler_char(), v) for v in range(k.n)]
    min_chi, argmin = min(chis)
    c = 3 - 3 * min_chi
    lhs = k.f_vector()[2]
    rhs = f1_J(2, k.n) + c
    return BoundReport(name, k.n, 2, lhs, rhs, lhs == rhs,
                       witness={"min_link_euler_vertex": argmin, "min_link_euler": min_chi,
                                "defect": c})


# ---------------------------------------------------------------------------
# per-facet sums

def _ridge_cover_check(k: SimplicialComplex, facet_mask: int) -> None:
    """Tight facets must satisfy: the link vertex sets of any ridge's three
    vertices cover V; guaranteed by the lemma, so a failure is a bug."""
    for v in iter_bits(facet_mask):
        ridge = facet_mask & ~(1 << v)
        cover = ridge
        for w in iter_bits(ridge):
            cover |= k.link_vertex_mask(1 << w)
        if cover != (1 << k.n) - 1:
            raise RuntimeError("tight facet but ridge link-vertex cover misses V; "
                               "this contradicts the facet-sum lemma")


def _flag_weak_3pm_facet(name: str, k: SimplicialComplex, face) -> int:
    _require_dim(name, k, 3)
    _require(name, "is_flag", validators.is_flag(k))
    _require(name, "is_weak_pseudomanifold", validators.is_weak_pseudomanifold(k))
    return _require_facet(name, k, face)


def check_facet_edge_sum(k: SimplicialComplex, face) -> BoundReport:
    """Sum of link sizes over the six edges of a facet, bounded by n+16."""
    name = "facet_edge_link_sum"
    fm = _flag_weak_3pm_facet(name, k, face)
    sizes = []
    for pair in itertools.combinations(vertices_of(fm), 2):
        sizes.append(k.link_vertex_mask(mask_of(pair)).bit_count())
    lhs = sum(sizes)
    rhs = k.n + 16
    tight = lhs == rhs
    if tight:
        _ridge_cover_check(k, fm)
    return BoundReport(name, k.n, None, lhs, rhs, tight,
                       witness={"facet": list(vertices_of(fm)), "edge_link_sizes": sizes})


def check_facet_vertex_sum(k: SimplicialComplex, face) -> BoundReport:
    """Sum of link sizes over the four vertices of a facet, bounded by 2n+8."""
    name = "facet_vertex_link_sum"
    fm = _flag_weak_3pm_facet(name, k, face)
    sizes = [k.link_vertex_mask(1 << v).bit_count() for v in iter_bits(fm)]
    lhs = sum(sizes)
    rhs = 2 * k.n + 8
    tight = lhs == rhs
    if tight:
        _ridge_cover_check(k, fm)
    return BoundReport(name, k.n, None, lhs, rhs, tight,
                       witness={"facet": list(vertices_of(fm)), "vertex_link_sizes": sizes})


# ---------------------------------------------------------------------------
# structural checks on a facet

def check_dual_edge(k: SimplicialComplex, face) -> validators.Verdict:
    """For a facet of a flag complex: ridges inside it have disjoint links,
    and every bipartition has complementary links meeting only in the facet's
    own (empty) link, with sizes summing to at most n."""
    name = "dual_edge"
    _require(name, "is_flag", validators.is_flag(k))
    fm = _require_facet(name, k, face)
    verts = vertices_of(fm)
    for r1, r2 in itertools.combinations(range(len(verts)), 2):
        m1 = fm & ~(1 << verts[r1])
        m2 = fm & ~(1 << verts[r2])
        if k.link_vertex_mask(m1) & k.link_vertex_mask(m2):
            return validators.Verdict(False, {
                "ridges": [list(vertices_of(m1)), list(vertices_of(m2))],
                "shared_link_vertices": True})
    for size in range(1, len(verts)):
        for part in itertools.combinations(verts, size):
            t1 = mask_of(part)
            t2 = fm & ~t1
            if t1 > t2:
                continue  # each unordered bipartition once
            v1 = k.link_vertex_mask(t1)
            v2 = k.link_vertex_mask(t2)
            if v1 & v2:
                return validators.Verdict(False, {
                    "parts": [list(vertices_of(t1)), list(vertices_of(t2))],
                    "intersection": list(vertices_of(v1 & v2))})
            if v1.bit_count() + v2.bit_count() > k.n:
                return validators.Verdict(False, {
                    "parts": [list(vertices_of(t1)), list(vertices_of(t2))],
                    "link_sizes": [v1.bit_count(), v2.bit_count()]})
    return validators.Verdict(True)


@dataclass(frozen=True)
class JoinCriterionReport:
    union_covers: bool
    contained: bool
    equals: bool

    @property
    def strict(self) -> bool:
        return self.contained and not self.equals


def check_join_criterion(k: SimplicialComplex, tau1, tau2) -> JoinCriterionReport:
    """Test whether K sits inside (or equals) the join of the links of two
    complementary faces of one facet.

    If the two link vertex sets cover V, flagness forces containment of K in
    the join of the links, so a covering input that fails containment raises.
    Equality detection just compares face counts once containment holds.
    """
    name = "join_criterion"
    _require(name, "is_flag", validators.is_flag(k))
    t1 = mask_of(tau1)
    t2 = mask_of(tau2)
    if t1 & t2:
        raise PreconditionError(name, "disjoint_faces",
                                {"intersection": list(vertices_of(t1 & t2))})
    _require_facet(name, k, vertices_of(t1 | t2))
    v1 = k.link_vertex_mask(t1)
    v2 = k.link_vertex_mask(t2)
    union_covers = (v1 | v2) == (1 << k.n) - 1
    if not union_covers:
        return JoinCriterionReport(False, False, False)
    if v1 & v2:
        raise RuntimeError("facet bipartition with intersecting link vertex sets "
                           "in a flag complex; contradicts the disjointness lemma")
    faces = k.all_face_masks()
    lk1 = {rho & ~t1 for rho in faces if rho & t1 == t1}
    lk2 = {rho & ~t2 for rho in faces if rho & t2 == t2}
    contained = all((rho & v1) in lk1 and (rho & v2) in lk2 for rho in faces)
    if not contained:
        raise RuntimeError("link vertex sets cover V but K is not contained in "
                           "the join of the links; contradicts the join lemma")
    equals = len(faces) == len(lk1) * len(lk2)
    return JoinCriterionReport(True, contained, equals)


# ---------------------------------------------------------------------------
# conjectural generic bound (empirical check only)

def check_generic_bound(k: SimplicialComplex, m: int) -> list[BoundReport]:
    """Per-dimension comparison of the f-vector against the balanced join of
    m circles; input must be a flag Eulerian complex of dimension 2m-1."""
    from .constructions import balanced_join

    name = "generic_face_bound"
    if k.dim != 2 * m - 1:
        raise PreconditionError(name, f"dimension==2m-1={2 * m - 1}", {"dim": k.dim})
    _require(name, "is_flag", validators.is_flag(k))
    _require(name, "is_eulerian", validators.is_eulerian(k))
    fv = k.f_vector()
    fv_j = balanced_join(m, k.n).f_vector()
    reports = []
    for i in range(1, 2 * m):
        lhs, rhs = fv[i + 1], fv_j[i + 1]
        reports.append(BoundReport(f"{name}:f{i}", k.n, m, lhs, rhs, lhs == rhs))
    return reports
