import itertools

import pytest

from flagtop.core import (
    ComplexError,
    Graph,
    SimplicialComplex,
    clique_complex,
    disjoint_union,
    join,
    sphere0,
    suspension,
)


def four_cycle():
    return SimplicialComplex(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


def octahedron():
    return join(sphere0(), join(sphere0(), sphere0()))


# ---------------------------------------------------------------------------
# construction and validation

def test_constructor_rejects_nested_facets():
    with pytest.raises(ComplexError, match="antichain"):
        SimplicialComplex(3, [(0, 1, 2), (0, 1)])


def test_constructor_rejects_phantom_vertices():
    with pytest.raises(ComplexError, match="phantom"):
        SimplicialComplex(4, [(0, 1, 2)])


def test_constructor_rejects_out_of_range_ids():
    with pytest.raises(ComplexError):
        SimplicialComplex(2, [(0, 5)])


def test_constructor_rejects_more_than_64_vertices():
    with pytest.raises(ComplexError, match="64"):
        SimplicialComplex(65, [tuple(range(65))])


def test_void_complex_is_not_representable():
    with pytest.raises(ComplexError):
        SimplicialComplex(0, [])


def test_empty_face_complex():
    k = SimplicialComplex(0, [()])
    assert k.dim == -1
    assert k.f_vector() == (1,)
    assert k.reduced_euler_char() == -1


def test_from_faces_extracts_maximal():
    k = SimplicialComplex.from_faces(3, [(0,), (0, 1), (1, 2), (2,), (0, 1)])
    assert k.facets == ((0, 1), (1, 2))


def test_isolated_vertices_are_singleton_facets():
    k = SimplicialComplex(3, [(0, 1), (2,)])
    assert k.facets == ((0, 1), (2,))
    assert k.f_vector() == (1, 3, 1)


# ---------------------------------------------------------------------------
# face enumeration and f-vectors

def test_faces_of_four_cycle():
    k = four_cycle()
    assert k.faces(0) == [(0,), (1,), (2,), (3,)]
    assert k.faces(1) == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert k.faces(-1) == [()]
    assert k.faces(2) == []
    assert k.faces(-2) == []


def test_octahedron_has_eight_triangles():
    assert len(octahedron().faces(2)) == 8


def test_f_vector_examples():
    assert four_cycle().f_vector() == (1, 4, 4)
    assert octahedron().f_vector() == (1, 6, 12, 8)


def test_reduced_euler_examples():
    assert four_cycle().reduced_euler_char() == -1
    assert octahedron().reduced_euler_char() == 1


def test_faces_agree_with_powerset_oracle():
    k = SimplicialComplex(5, [(0, 1, 2), (1, 2, 3), (3, 4)])
    naive = set()
    for f in k.facets:
        for c in range(len(f) + 1):
            naive.update(itertools.combinations(f, c))
    for i in range(-1, k.dim + 1):
        assert k.faces(i) == sorted(s for s in naive if len(s) == i + 1)


# ---------------------------------------------------------------------------
# links, restrictions, deletions

def test_vertex_link_in_octahedron_is_four_cycle():
    lk = octahedron().link((0,))
    assert lk.complex.f_vector() == (1, 4, 4)
    assert 1 not in lk.vertices  # the antipode is not in the link


def test_link_of_empty_face_is_the_complex():
    k = four_cycle()
    lk = k.link(())
    assert lk.complex == k
    assert lk.vertices == (0, 1, 2, 3)


def test_link_of_non_face_raises():
    with pytest.raises(ComplexError, match="not a face"):
        four_cycle().link((0, 2))


def test_link_reindexes_and_maps_back():
    k = SimplicialComplex(5, [(0, 1, 4), (1, 2, 4), (2, 3, 4), (0, 3, 4)])
    lk = k.link((4,))
    assert lk.vertices == (0, 1, 2, 3)
    assert lk.complex == four_cycle()


def test_restriction_examples():
    k = four_cycle()
    sub = k.restriction((0, 1, 2))
    assert sub.complex.facets == ((0, 1), (1, 2))
    assert sub.vertices == (0, 1, 2)
    full = k.restriction(range(4))
    assert full.complex == k


def test_restriction_drops_uncovered_vertices():
    sub = four_cycle().restriction((0, 2))
    assert sub.complex.facets == ((0,), (1,))
    assert sub.vertices == (0, 2)


@pytest.mark.parametrize("w", [(0,), (0, 2), (1, 2, 3)])
def test_deletion_equals_restriction_to_complement(w):
    k = four_cycle()
    rest = set(range(4)) - set(w)
    assert k.deletion(w) == k.restriction(sorted(rest))


# ---------------------------------------------------------------------------
# joins and suspensions

def test_join_of_two_spheres_is_four_cycle():
    k = join(sphere0(), sphere0())
    assert k.f_vector() == (1, 4, 4)


def test_join_offsets_second_factor():
    k = join(four_cycle(), sphere0())
    assert k.n == 6
    assert all(5 in f or 4 in f for f in k.facets)


def test_join_edge_count_of_two_four_cycles():
    k = join(four_cycle(), four_cycle())
    assert len(k.faces(1)) == 4 + 4 + 16


def test_join_with_empty_face_complex_is_identity():
    k = four_cycle()
    assert join(k, SimplicialComplex(0, [()])) == k


def test_suspension_of_four_cycle_is_octahedron():
    k = suspension(four_cycle())
    assert k.f_vector() == (1, 6, 12, 8)
    g = k.one_skeleton()
    # each vertex misses exactly one other: the octahedral pairing
    assert all(d == 4 for d in g.degrees())


def test_disjoint_union():
    k = disjoint_union(four_cycle(), four_cycle())
    assert k.n == 8
    assert k.f_vector() == (1, 8, 8)
    assert not k.is_connected()


# ---------------------------------------------------------------------------
# graphs and clique complexes

def test_clique_complex_of_complete_graph():
    g = Graph.from_edges(4, itertools.combinations(range(4), 2))
    assert clique_complex(g).facets == ((0, 1, 2, 3),)


def test_clique_complex_of_five_cycle():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    k = clique_complex(g)
    assert k.dim == 1
    assert k.f_vector() == (1, 5, 5)


def test_clique_complex_of_complete_tripartite():
    edges = [(a, b) for a in range(6) for b in range(a + 1, 6) if a // 2 != b // 2]
    k = clique_complex(Graph.from_edges(6, edges))
    assert len(k.facets) == 8
    assert k.f_vector() == (1, 6, 12, 8)


def test_one_skeleton_round_trip_for_flag_complex():
    k = join(four_cycle(), four_cycle())
    assert clique_complex(k.one_skeleton()) == k


def test_one_skeleton_round_trip_fails_for_empty_triangle():
    k = SimplicialComplex(3, [(0, 1), (1, 2), (0, 2)])
    assert clique_complex(k.one_skeleton()) != k


def test_graph_rejects_loops_and_asymmetry():
    with pytest.raises(ComplexError, match="loop"):
        Graph(2, (1, 2))
    with pytest.raises(ComplexError, match="symmetric"):
        Graph(2, (2, 0))


def test_graph_complement():
    g = Graph.from_edges(4, [(0, 1)])
    h = g.complement()
    assert h.num_edges() == 5
    assert not h.has_edge(0, 1)


def test_complex_equality_and_hash():
    assert four_cycle() == four_cycle()
    assert hash(four_cycle()) == hash(four_cycle())
    assert four_cycle() != SimplicialComplex(4, [(0, 1), (1, 2), (2, 3), (0, 3), ][:3] + [(0, 2)])
