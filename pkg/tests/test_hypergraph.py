"""Unit tests for vertex sets, hypergraph validation and canonical forms."""

import itertools

import networkx as nx
import pytest

from src.errors import EmptyEdge, GroundSetTooLarge, HypergraphFormatError, NotAClutter, VertexOutOfRange
from src.hypergraph import (
    adjacent, all_subsets, canonical_form, from_networkx, is_isomorphic, is_subset,
    members, neighbours, open_neighbourhood, sort_sets, submasks, superedges,
    validate, vertex_set
)


def S(*vertices):
    return vertex_set(vertices)


# Vertex sets


def test_vertex_set_round_trip():
    assert members(S(1, 3, 4)) == (1, 3, 4)
    assert members(0) == ()


def test_sort_sets_orders_by_size_then_members():
    ordered = sort_sets([S(2, 3, 4), S(1, 4), S(1, 2), S(1, 3), S(1, 2)])
    assert [members(m) for m in ordered] == [(1, 2), (1, 3), (1, 4), (2, 3, 4)]


def test_submasks_enumerates_every_subset():
    assert sorted(submasks(S(1, 3))) == sorted([0, S(1), S(3), S(1, 3)])


# Validation


def test_validate_accepts_worked_example(worked_example):
    assert worked_example.n == 4
    assert worked_example.num_edges == 3
    assert worked_example.edge_lists() == [[1, 2, 3], [1, 2, 4], [1, 3, 4]]


def test_validate_rejects_containment():
    with pytest.raises(NotAClutter):
        validate(3, [[1, 2], [1, 2, 3]])


def test_validate_rejects_empty_edge():
    with pytest.raises(EmptyEdge):
        validate(3, [[1], []])


def test_validate_rejects_out_of_range_vertex():
    with pytest.raises(VertexOutOfRange):
        validate(3, [[1, 4]])


def test_validate_rejects_non_integer_ground_set():
    for n in (True, -1, "3", 2.0):
        with pytest.raises(HypergraphFormatError):
            validate(n, [])


def test_validate_accepts_edgeless_graph():
    h = validate(2, [])
    assert h.num_edges == 0
    assert h.is_graph
    assert not h.is_covering


def test_validate_deduplicates_and_sorts():
    h = validate(4, [[3, 4], [2, 1], [1, 2]])
    assert h.edge_lists() == [[1, 2], [3, 4]]


def test_validate_is_idempotent(worked_example):
    again = validate(worked_example.n, worked_example.edges)
    assert again == worked_example


def test_from_networkx_relabels_nodes():
    h = from_networkx(nx.path_graph(3))
    assert h.n == 3
    assert h.edge_lists() == [[1, 2], [2, 3]]


# Adjacency and neighbourhoods


def test_adjacent_examples(worked_example):
    assert adjacent(worked_example, S(1, 2), S(4))
    assert not adjacent(validate(4, [[1, 2], [3, 4]]), S(1), S(3))
    assert adjacent(validate(3, [[1, 2, 3]]), S(1, 2, 3), 0)


def test_superedges_examples(worked_example):
    assert superedges(worked_example, S(1)) == list(worked_example.edges)
    assert superedges(worked_example, S(3, 4)) == [S(1, 3, 4)]
    assert superedges(validate(4, [[1, 2], [3, 4]]), S(1, 3)) == []


def test_superedges_matches_brute_force(triangle_with_tail):
    for b in all_subsets(triangle_with_tail.n):
        expected = [e for e in triangle_with_tail.edges if b & e == b]
        assert superedges(triangle_with_tail, b) == expected


def test_open_neighbourhood_of_graph_vertex(eight_vertex_graph):
    expected = [S(w) for w in members(neighbours(eight_vertex_graph, 2))]
    assert open_neighbourhood(eight_vertex_graph, S(2)) == expected


def test_open_neighbourhood_examples(worked_example):
    assert open_neighbourhood(worked_example, S(1, 2)) == [S(3), S(4)]
    assert open_neighbourhood(validate(3, [[1, 2, 3]]), S(1, 2, 3)) == [0]


def test_open_neighbourhood_members_complete_an_edge(triangle_with_tail):
    for b in all_subsets(triangle_with_tail.n):
        for other in open_neighbourhood(triangle_with_tail, b):
            assert other & b == 0
            assert (other | b) in triangle_with_tail.edges


def test_neighbours_excludes_vertex(worked_example):
    assert neighbours(worked_example, 2) == S(1, 3, 4)


# Canonical forms


def test_canonical_form_identifies_relabelings():
    a = validate(3, [[2, 3], [1]])
    b = validate(3, [[1, 2], [3]])
    assert canonical_form(a) == canonical_form(b)


def test_canonical_form_is_idempotent(triangle_with_tail):
    once = canonical_form(triangle_with_tail)
    assert canonical_form(once) == once


def test_five_covering_clutters_on_three_vertices_are_distinct():
    clutters = [
        [[1, 2, 3]],
        [[1, 2], [1, 3], [2, 3]],
        [[1, 2], [1, 3]],
        [[1, 2], [3]],
        [[1], [2], [3]],
    ]
    forms = {canonical_form(validate(3, edges)) for edges in clutters}
    assert len(forms) == 5


def test_is_isomorphic_examples():
    assert is_isomorphic(validate(3, [[1, 2], [1, 3]]), validate(3, [[1, 2], [2, 3]]))
    assert not is_isomorphic(validate(3, [[1, 2], [3]]), validate(3, [[1, 2], [1, 3]]))
    # K4 minus an edge against the 4-cycle
    assert not is_isomorphic(
        validate(4, [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4]]),
        validate(4, [[1, 2], [1, 3], [2, 4], [3, 4]]),
    )


def test_is_isomorphic_is_an_equivalence(rng):
    from src.constructions import random_hypergraph

    sample = [random_hypergraph(4, rng) for _ in range(12)]
    for a in sample:
        assert is_isomorphic(a, a)
    for a, b in itertools.product(sample, repeat=2):
        assert is_isomorphic(a, b) == is_isomorphic(b, a)
    for a, b, c in itertools.product(sample[:6], repeat=3):
        if is_isomorphic(a, b) and is_isomorphic(b, c):
            assert is_isomorphic(a, c)


def test_canonical_form_is_bounded():
    with pytest.raises(GroundSetTooLarge):
        canonical_form(validate(11, [[1, 2]]))
    with pytest.raises(GroundSetTooLarge):
        is_isomorphic(validate(11, []), validate(11, []))


def test_is_subset():
    assert is_subset(S(1), S(1, 2))
    assert not is_subset(S(3), S(1, 2))
