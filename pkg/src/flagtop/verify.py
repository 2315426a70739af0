"""Executable verification suites.

Each check realizes one falsifiable statement at desk scale: closed-form
counts against constructed complexes, per-facet inequalities with tightness
classification, exhaustive uniqueness at 8..10 vertices, and randomized
structural identities. The paper-core suite is declared in data/suites.json
so the statement-to-check traceability table is itself executable.
"""

from __future__ import annotations

import importlib.resources
import itertools
import json
import random
import time
from dataclasses import dataclass
from typing import Callable

from . import bounds, corpus, validators
from .constructions import balanced_join, gj, gj_enumerate_specs, remark_complex, suspended_join
from .core import Graph, SimplicialComplex, clique_complex, join, mask_of
from .enumeration import are_isomorphic, canonical_form, enumerate_class, maximizers


@dataclass
class CheckResult:
    check_id: str
    ok: bool
    detail: str
    wall_time_s: float


_CHECKS: dict[str, Callable[[int], tuple[bool, str]]] = {}


def _check(check_id: str):
    def register(fn):
        _CHECKS[check_id] = fn
        return fn
    return register


def check_ids() -> tuple[str, ...]:
    return tuple(_CHECKS)


def run_check(check_id: str, threads: int = 1) -> CheckResult:
    fn = _CHECKS[check_id]
    start = time.perf_counter()
    ok, detail = fn(threads)
    return CheckResult(check_id, ok, detail, time.perf_counter() - start)


def suite_manifest() -> dict:
    data = importlib.resources.files("flagtop").joinpath("data/suites.json").read_text()
    return json.loads(data)


def run_suite(suite_id: str, threads: int = 1) -> list[CheckResult]:
    manifest = suite_manifest()
    try:
        ids = manifest["suites"][suite_id]
    except KeyError:
        raise KeyError(f"unknown suite {suite_id!r}; available: {sorted(manifest['suites'])}")
    return [run_check(cid, threads) for cid in ids]


# ---------------------------------------------------------------------------
# 1. closed forms agree with constructed counts

@_check("join-edge-formula-agreement")
def _join_edge_formula(threads: int) -> tuple[bool, str]:
    cases = 0
    for m in range(1, 5):
        for n in range(4 * m, 41):
            if bounds.f1_J(m, n) != len(balanced_join(m, n).face_masks(1)):
                return False, f"balanced join edge count mismatch at m={m}, n={n}"
            cases += 1
        for n in range(4 * m + 2, 41):
            if bounds.f1_Jstar(m, n) != len(suspended_join(m, n).face_masks(1)):
                return False, f"suspended join edge count mismatch at m={m}, n={n}"
            cases += 1
    for n in range(8, 1001):
        if bounds.f1_J(2, n) != n * n // 4 + n:
            return False, f"two-circle closed form mismatch at n={n}"
    return True, f"{cases} (m, n) construction counts match the closed forms exactly"


# ---------------------------------------------------------------------------
# 2. the 3-dimensional Eulerian f-vector law

@_check("eulerian3-fvector-law")
def _eulerian3_law(threads: int) -> tuple[bool, str]:
    targets: list[tuple[str, SimplicialComplex]] = []
    for name, k in corpus.corpus().items():
        if k.dim == 3 and validators.is_eulerian(k):
            targets.append((name, k))
    for n in range(8, 17):
        for spec in gj_enumerate_specs(n):
            targets.append((f"gj({spec.a},{spec.b})", gj(spec)))
    for n in (8, 9):
        res = enumerate_class(n, "flag_eulerian_3", threads=threads)
        targets.extend((f"enumerated_{n}_{i}", k)
                       for i, k in enumerate(res.representatives))
    for name, k in targets:
        fv = k.f_vector()
        if fv != bounds.eulerian3_fvector(fv[1], fv[2]):
            return False, f"f-vector law fails on {name}: {fv}"
    return True, f"{len(targets)} Eulerian complexes satisfy (f2, f3) = (2f1-2f0, f1-f0)"


# ---------------------------------------------------------------------------
# 3. the union-of-joins family maximizes every face number

@_check("gj-family-fvector-maximizers")
def _gj_family(threads: int) -> tuple[bool, str]:
    members = 0
    for n in range(8, 21):
        want = balanced_join(2, n).f_vector()
        for spec in gj_enumerate_specs(n):
            k = gj(spec)
            if not validators.is_flag(k):
                return False, f"gj({spec.a},{spec.b}) is not flag"
            if not validators.is_eulerian(k):
                return False, f"gj({spec.a},{spec.b}) is not Eulerian"
            if k.f_vector() != want:
                return False, f"gj({spec.a},{spec.b}) f-vector {k.f_vector()} != {want}"
            members += 1
    return True, f"{members} family members on 8..20 vertices: flag, Eulerian, f-vector equal"


# ---------------------------------------------------------------------------
# 4. per-facet link-sum bounds, tight exactly on the maximizers

@_check("facet-sum-bounds-with-tightness")
def _facet_sums(threads: int) -> tuple[bool, str]:
    swept = 0
    complexes = 0
    for name, k in corpus.corpus().items():
        if k.dim != 3 or not validators.is_flag(k) or not validators.is_weak_pseudomanifold(k):
            continue
        complexes += 1
        edge_tight = vertex_tight = True
        for facet in k.facets:
            er = bounds.check_facet_edge_sum(k, facet)
            vr = bounds.check_facet_vertex_sum(k, facet)
            if not er.holds() or not vr.holds():
                return False, f"facet sum bound violated on {name} at facet {facet}"
            edge_tight &= er.tight
            vertex_tight &= vr.tight
            swept += 1
        is_maximizer = k.f_vector()[2] == bounds.f1_J(2, k.n)
        if (edge_tight and vertex_tight) != is_maximizer:
            return False, (f"tightness profile of {name} (edges {edge_tight}, "
                           f"vertices {vertex_tight}) does not match maximizer status "
                           f"{is_maximizer}")
    return True, (f"{swept} facets over {complexes} flag weak 3-pseudomanifolds: "
                  "bounds hold, all-facets-tight iff maximizer")


# ---------------------------------------------------------------------------
# 5. uniqueness on 2d and 2d+1 vertices (d = 4)

@_check("unique-normal-3pm-on-8-and-9")
def _unique_small(threads: int) -> tuple[bool, str]:
    from .constructions import cross_polytope_boundary

    res8 = enumerate_class(8, "flag_normal_3pm", threads=threads)
    if res8.count != 1:
        return False, f"expected 1 class on 8 vertices, found {res8.count}"
    if not are_isomorphic(res8.representatives[0], cross_polytope_boundary(4)):
        return False, "the 8-vertex class is not the 4-dimensional cross-polytope boundary"
    res9 = enumerate_class(9, "flag_normal_3pm", threads=threads)
    if res9.count != 1:
        return False, f"expected 1 class on 9 vertices, found {res9.count}"
    if not are_isomorphic(res9.representatives[0], balanced_join(2, 9)):
        return False, "the 9-vertex class is not the balanced join of two circles"
    return True, "exactly one class each on 8 and 9 vertices, as constructed"


# ---------------------------------------------------------------------------
# 6. edge maximum over flag 3-manifolds on 10 vertices

@_check("manifold-edge-max-at-10")
def _manifold_max_10(threads: int) -> tuple[bool, str]:
    res = enumerate_class(10, "flag_3_manifold", threads=threads)
    if res.count == 0:
        return False, "no flag 3-manifolds found on 10 vertices"
    f1s = [fv[2] for fv in res.f_vectors]
    top = max(f1s)
    if top != 35 or bounds.f1_J(2, 10) != 35:
        return False, f"max f1 is {top}, expected 35"
    winners = [k for k, fv in zip(res.representatives, res.f_vectors) if fv[2] == top]
    if len(winners) != 1:
        return False, f"{len(winners)} classes attain the maximum, expected 1"
    if not are_isomorphic(winners[0], balanced_join(2, 10)):
        return False, "the maximizing class is not the balanced join of two circles"
    return True, (f"{res.count} manifold classes on 10 vertices; unique edge maximum 35 "
                  "attained by the balanced join")


# ---------------------------------------------------------------------------
# 7. Eulerian maximizer classes coincide with the union-of-joins family

@_check("eulerian-maximizer-classes-8-9-10")
def _eulerian_maximizers(threads: int) -> tuple[bool, str]:
    counts = []
    for n in (8, 9, 10):
        res = maximizers(n, "flag_eulerian_3", threads=threads)  # raises on mismatch
        want = len(gj_enumerate_specs(n))
        if res.count != want:
            return False, f"n={n}: {res.count} maximizer classes, family has {want}"
        counts.append(res.count)
    return True, ("maximizer classes equal the union-of-joins family at n=8,9,10 "
                  f"(counts {counts})")


# ---------------------------------------------------------------------------
# 8. the weak-but-not-normal counterexample behaves as constructed

@_check("weak-not-normal-counterexample")
def _weak_not_normal(threads: int) -> tuple[bool, str]:
    k = remark_complex(4, 4, 4, 4)
    if not validators.is_flag(k):
        return False, "counterexample is not flag"
    if not validators.is_weak_pseudomanifold(k):
        return False, "counterexample is not a weak pseudomanifold"
    if validators.is_normal_pseudomanifold(k):
        return False, "counterexample is unexpectedly a normal pseudomanifold"
    # an edge of the first circle has a disconnected link: two 4-circles
    lk = k.link((0, 1)).complex
    if lk.is_connected() or lk.n != 8 or lk.dim != 1:
        return False, "link of a first-circle edge is not a disjoint pair of circles"
    report = bounds.check_join_criterion(k, (0, 1), (8, 9))
    if not (report.union_covers and report.contained and report.strict):
        return False, f"join criterion expected strict containment, got {report}"
    return True, ("flag, weak, not normal; join criterion reports strict containment "
                  "for complementary circle edges")


# ---------------------------------------------------------------------------
# 9. randomized structural identities

def _random_complex(rng: random.Random, max_n: int) -> SimplicialComplex:
    n = rng.randint(1, max_n)
    faces = [tuple(sorted(rng.sample(range(n), rng.randint(1, min(n, 4)))))
             for _ in range(rng.randint(1, 6))]
    faces.extend((v,) for v in range(n))
    return SimplicialComplex.from_faces(n, faces)


def _random_flag_complex(rng: random.Random, max_n: int) -> SimplicialComplex:
    n = rng.randint(1, max_n)
    p = rng.choice((0.2, 0.4, 0.6, 0.8))
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return clique_complex(Graph.from_edges(n, edges))


def _convolve(fa: tuple[int, ...], fb: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(fa) + len(fb) - 1)
    for i, x in enumerate(fa):
        for j, y in enumerate(fb):
            out[i + j] += x * y
    return tuple(out)


@_check("randomized-property-suites")
def _property_suites(threads: int) -> tuple[bool, str]:
    rng = random.Random(20260811)
    rounds = 200

    for t in range(rounds):  # join convolution + Euler multiplicativity
        a = _random_complex(rng, 8)
        b = _random_complex(rng, 8)
        ab = join(a, b)
        if ab.f_vector() != _convolve(a.f_vector(), b.f_vector()):
            return False, f"join convolution fails (round {t})"
        if ab.reduced_euler_char() != -a.reduced_euler_char() * b.reduced_euler_char():
            return False, f"Euler multiplicativity fails (round {t})"

    for t in range(rounds):  # handshake: sum of link sizes = 2 * edges
        k = _random_complex(rng, 10)
        total = sum(k.link_vertex_mask(1 << v).bit_count() for v in range(k.n))
        edges = len(k.face_masks(1))
        if total != 2 * edges:
            return False, f"degree double counting fails (round {t})"

    for t in range(rounds):  # link == restriction to link vertices, flag case
        k = _random_flag_complex(rng, 9)
        for i in range(-1, k.dim + 1):
            for face in k.faces(i):
                lk = k.link(face)
                rs = k.restriction(lk.vertices)
                if lk.complex != rs.complex or lk.vertices != rs.vertices:
                    return False, f"link-restriction identity fails (round {t})"

    for t in range(rounds):  # face enumeration against the powerset oracle
        k = _random_complex(rng, 12)
        naive: dict[int, set[tuple[int, ...]]] = {}
        for f in k.facets:
            for c in range(len(f) + 1):
                for sub in itertools.combinations(f, c):
                    naive.setdefault(c - 1, set()).add(sub)
        for i in range(-1, k.dim + 2):
            if k.faces(i) != sorted(naive.get(i, set())):
                return False, f"face enumeration differs from oracle (round {t}, dim {i})"

    for t in range(rounds):  # produced facet lists are antichains
        k = _random_complex(rng, 10)
        masks = [mask_of(f) for f in k.facets]
        for x, y in itertools.combinations(masks, 2):
            if x & y in (x, y):
                return False, f"antichain invariant fails (round {t})"

    return True, (f"{rounds} randomized instances per suite, zero failures (join "
                  "convolution, Euler multiplicativity, degree double counting, "
                  "link-restriction, face oracle, antichain)")


# ---------------------------------------------------------------------------
# 10. consistency of the three-circle formula (not a proof)

@_check("five-manifold-formula-consistency")
def _five_manifold(threads: int) -> tuple[bool, str]:
    for n in range(12, 41):
        if bounds.f1_J(3, n) != len(balanced_join(3, n).face_masks(1)):
            return False, f"three-circle edge formula mismatch at n={n}"
    checked = 0
    for name, k in corpus.corpus().items():
        if k.dim != 5 or not validators.is_flag(k):
            continue
        if len(k.face_masks(1)) > bounds.f1_J(3, k.n):
            return False, f"corpus 5-complex {name} exceeds the three-circle bound"
        checked += 1
    return True, (f"formula matches constructions for n=12..40; {checked} corpus "
                  "5-complexes within bound (consistency check, not a proof)")
