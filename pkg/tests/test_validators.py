import json

import pytest

from flagtop import validators
from flagtop.core import ComplexError, SimplicialComplex, join
from flagtop.constructions import balanced_join, cross_polytope_boundary, cycle, GJSpec, gj
from flagtop.corpus import (
    barycentric_triangle,
    cone_over_square,
    corpus,
    empty_triangle,
    octahedron,
    solid_tetrahedron,
    torus_9,
    two_octahedra,
)


# ---------------------------------------------------------------------------
# minimal non-faces and flagness

def test_minimal_nonfaces_of_empty_triangle():
    assert validators.minimal_nonfaces(empty_triangle()) == [(0, 1, 2)]


def test_minimal_nonfaces_of_octahedron_are_antipodal_pairs():
    assert validators.minimal_nonfaces(octahedron()) == [(0, 1), (2, 3), (4, 5)]


def test_minimal_nonfaces_of_simplex_is_empty():
    assert validators.minimal_nonfaces(solid_tetrahedron()) == []


def test_is_flag_on_empty_triangle_with_witness():
    verdict = validators.is_flag(empty_triangle())
    assert not verdict
    assert verdict.witness == {"missing_face": [0, 1, 2]}


@pytest.mark.parametrize("n", range(8, 13))
def test_balanced_joins_are_flag(n):
    assert validators.is_flag(balanced_join(2, n))


def test_barycentric_subdivision_is_flag():
    assert validators.is_flag(barycentric_triangle())


# ---------------------------------------------------------------------------
# pseudomanifolds

def test_octahedron_is_weak_pseudomanifold():
    assert validators.is_weak_pseudomanifold(octahedron())


def test_single_tetrahedron_is_not_weak():
    verdict = validators.is_weak_pseudomanifold(solid_tetrahedron())
    assert not verdict
    assert verdict.witness["facet_count"] == 1


def test_two_point_sphere_is_weak_0_pseudomanifold():
    assert validators.is_weak_pseudomanifold(SimplicialComplex(2, [(0,), (1,)]))
    assert not validators.is_weak_pseudomanifold(SimplicialComplex(3, [(0,), (1,), (2,)]))


def test_impure_complex_is_not_weak():
    k = SimplicialComplex(4, [(0, 1, 2), (2, 3)])
    verdict = validators.is_weak_pseudomanifold(k)
    assert not verdict and "impure_facets" in verdict.witness


def test_balanced_join_9_is_normal():
    assert validators.is_normal_pseudomanifold(balanced_join(2, 9))


def test_remark_complex_witness_is_first_circle_edge():
    from flagtop.constructions import remark_complex
    verdict = validators.is_normal_pseudomanifold(remark_complex(4, 4, 4, 4))
    assert not verdict
    assert verdict.witness == {"face": [0, 1], "disconnected_link": True}


def test_disjoint_octahedra_are_not_normal():
    verdict = validators.is_normal_pseudomanifold(two_octahedra())
    assert not verdict
    assert verdict.witness == {"disconnected": True}


def test_links_in_weak_pms_are_weak_and_in_normal_pms_normal():
    for name in ("j2_9", "j2_10", "remark_4444", "cross4"):
        k = corpus()[name]
        weak = bool(validators.is_weak_pseudomanifold(k))
        normal = bool(validators.is_normal_pseudomanifold(k))
        assert weak
        for card in range(1, k.dim + 1):  # faces of dim <= d-2: link dim >= 0
            for face in k.faces(card - 1):
                lk = k.link(face).complex
                assert validators.is_weak_pseudomanifold(lk), (name, face)
                if normal and card <= k.dim - 1:
                    assert validators.is_normal_pseudomanifold(lk), (name, face)


def test_deletion_after_normal_restriction_has_at_most_two_components():
    # normal pseudomanifold lemma at desk scale
    from flagtop.enumeration import _components

    for name in ("octahedron", "j2_8", "j2_9"):
        k = corpus()[name]
        assert validators.is_normal_pseudomanifold(k)
        for w_bits in range(1, 1 << k.n):
            w = [v for v in range(k.n) if w_bits >> v & 1]
            sub = k.restriction(w).complex
            if sub.dim != k.dim - 1 or not validators.is_normal_pseudomanifold(sub):
                continue
            deleted = k.deletion(w).complex
            g = deleted.one_skeleton()
            assert len(_components(g.n, g.adj)) <= 2, (name, w)


# ---------------------------------------------------------------------------
# Eulerian complexes

def test_octahedron_is_eulerian():
    assert validators.is_eulerian(octahedron())


def test_gj_16_members_are_eulerian():
    assert validators.is_eulerian(gj(GJSpec((4, 4), (8,))))
    assert validators.is_eulerian(gj(GJSpec((4, 4), (4, 4))))


def test_cone_is_not_eulerian_with_empty_face_witness():
    verdict = validators.is_eulerian(cone_over_square())
    assert not verdict
    assert verdict.witness == {"face": [], "reduced_euler": 0, "expected": 1}


def test_disjoint_union_of_eulerian_is_eulerian():
    # chi~(A ⊔ B) = chi~(A) + chi~(B) + 1 keeps the Eulerian condition in odd dim
    k = two_octahedra()
    assert not validators.is_eulerian(k)  # even-dimensional: -1+1+1+... fails
    from flagtop.core import disjoint_union
    j = disjoint_union(balanced_join(2, 8), balanced_join(2, 8))
    assert validators.is_eulerian(j)


# ---------------------------------------------------------------------------
# surfaces and manifolds

def test_octahedron_is_two_sphere():
    assert validators.is_two_sphere(octahedron())


def test_vertex_links_of_j2_10_are_two_spheres():
    k = balanced_join(2, 10)
    for v in range(10):
        assert validators.is_two_sphere(k.link((v,)).complex)


def test_torus_is_closed_surface_but_not_sphere():
    t = torus_9()
    assert validators.is_closed_surface(t)
    verdict = validators.is_two_sphere(t)
    assert not verdict
    assert verdict.witness == {"reduced_euler": -1}
    assert t.reduced_euler_char() == -1


def test_surface_check_requires_dimension_two():
    with pytest.raises(ComplexError, match="dimension 2"):
        validators.is_closed_surface(balanced_join(2, 8))


@pytest.mark.parametrize("n", range(8, 13))
def test_balanced_joins_are_flag_3_manifolds(n):
    assert validators.is_flag_3_manifold(balanced_join(2, n))


def test_gj_with_split_partition_is_not_a_manifold():
    verdict = validators.is_flag_3_manifold(gj(GJSpec((4, 4), (8,))))
    assert not verdict
    assert "link_not_2_sphere" in verdict.witness


def test_manifold_check_requires_dimension_three():
    with pytest.raises(ComplexError, match="dimension 3"):
        validators.is_flag_3_manifold(octahedron())


# ---------------------------------------------------------------------------
# octahedral spheres

def test_octahedral_sphere_examples():
    assert validators.is_octahedral_sphere(octahedron())
    assert validators.is_octahedral_sphere(balanced_join(2, 8))
    assert not validators.is_octahedral_sphere(balanced_join(2, 9))
    assert validators.is_octahedral_sphere(SimplicialComplex(2, [(0,), (1,)]))


def test_octahedral_sphere_lemma_on_corpus():
    # if every vertex link is an octahedral sphere, so is the complex
    for name, k in corpus().items():
        if k.dim < 1 or not validators.is_flag(k):
            continue
        if not validators.is_normal_pseudomanifold(k):
            continue
        links_octahedral = all(
            validators.is_octahedral_sphere(k.link((v,)).complex) for v in range(k.n))
        if links_octahedral:
            assert validators.is_octahedral_sphere(k), name


def test_few_vertices_bound_on_corpus():
    # flag normal (d-1)-pseudomanifolds have at least 2d vertices,
    # with equality only for the cross-polytope boundary
    for name, k in corpus().items():
        if k.dim < 1 or not validators.is_flag(k):
            continue
        if not validators.is_normal_pseudomanifold(k):
            continue
        d = k.dim + 1
        assert k.n >= 2 * d, name
        if k.n == 2 * d:
            assert validators.is_octahedral_sphere(k), name


# ---------------------------------------------------------------------------
# classification report

def test_classify_octahedron():
    report = validators.classify(octahedron())
    v = report.verdicts
    assert v["flag"] and v["pure"] and v["connected"]
    assert v["weak_pseudomanifold"] and v["normal_pseudomanifold"] and v["eulerian"]
    assert v["closed_surface"] and v["two_sphere"] and v["octahedral_sphere"]
    assert v["flag_3_manifold"] is None  # dimension-gated


def test_classify_report_invariants_on_corpus():
    for name, k in corpus().items():
        v = validators.classify(k).verdicts
        if v["two_sphere"]:
            assert v["closed_surface"], name
        if v["flag_3_manifold"]:
            assert v["flag"] and v["weak_pseudomanifold"], name
            assert v["eulerian"] and v["normal_pseudomanifold"], name
        if v["octahedral_sphere"]:
            assert v["flag"], name
        if v["normal_pseudomanifold"]:
            assert v["weak_pseudomanifold"] and v["connected"], name


def test_classify_json_is_reproducible():
    k = corpus()["remark_4444"]
    a = json.dumps(validators.classify(k).to_json_dict())
    b = json.dumps(validators.classify(k).to_json_dict())
    assert a == b
    assert json.loads(a)["verdicts"]["weak_pseudomanifold"] is True
