"""Unit tests for complete hypergraphs, uniform realizations and random instances."""

import pytest

from src.catalog import graph_immune_census
from src.clutters import as_uniform, equals, uniform
from src.constructions import (
    complete_graph, complete_hypergraph, edgeless_graph, graph_forcing_realization,
    graph_immune_realization, r1_forcing_realization, r1_immune_realization,
    r2_forcing_realization, r2_immune_realization, random_graph, random_hypergraph,
    realize_uniform
)
from src.errors import NotRealizable, OutOfRange
from src.families import minimal_forcing_family, minimal_immune_family
from src.forcing import Rule


def test_complete_hypergraph_examples():
    assert complete_hypergraph(4, 3).edge_lists() == [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]
    assert complete_hypergraph(5, 5).edge_lists() == [[1, 2, 3, 4, 5]]
    assert complete_hypergraph(4, 2) == complete_graph(4)


def test_complete_hypergraph_rejects_bad_k():
    with pytest.raises(OutOfRange):
        complete_hypergraph(3, 0)


def test_complete_hypergraph_families_exact():
    h = complete_hypergraph(3, 3)
    assert minimal_forcing_family(h, Rule.R1).member_lists() == [[1], [2], [3]]
    assert equals(minimal_immune_family(complete_hypergraph(4, 3), Rule.R1), uniform(4, 3))


@pytest.mark.parametrize("n", range(1, 7))
def test_complete_hypergraph_r1_families(n):
    for k in range(1, n + 1):
        h = complete_hypergraph(n, k)
        assert equals(minimal_forcing_family(h, Rule.R1), uniform(n, n - k + 1))
        assert equals(minimal_immune_family(h, Rule.R1), uniform(n, k))


@pytest.mark.parametrize("n", range(1, 7))
def test_complete_hypergraph_r2_families(n):
    for k in range(1, n + 1):
        h = complete_hypergraph(n, k)
        if k == 1:
            forcing_k, immune_k = n, 1
        elif k == n:
            forcing_k, immune_k = 1, n
        else:
            forcing_k, immune_k = n - 1, 2
        assert equals(minimal_forcing_family(h, Rule.R2), uniform(n, forcing_k))
        assert equals(minimal_immune_family(h, Rule.R2), uniform(n, immune_k))


def test_r2_forcing_realization_examples():
    assert r2_forcing_realization(4, 2).edge_lists() == [[1, 2], [1, 3], [1, 4], [2, 3, 4]]
    assert r2_forcing_realization(3, 1).edge_lists() == [[1, 2, 3]]
    assert r2_forcing_realization(3, 3).edge_lists() == [[1], [2], [3]]


@pytest.mark.parametrize("n", range(1, 8))
def test_hypergraph_realizations(n):
    for k in range(1, n + 1):
        assert as_uniform(minimal_forcing_family(r1_forcing_realization(n, k), Rule.R1)) == k
        assert as_uniform(minimal_immune_family(r1_immune_realization(n, k), Rule.R1)) == k
        assert as_uniform(minimal_forcing_family(r2_forcing_realization(n, k), Rule.R2)) == k
        assert as_uniform(minimal_immune_family(r2_immune_realization(n, k), Rule.R2)) == k


def test_graph_realizations():
    assert graph_immune_realization(5, 2) == complete_graph(5)
    assert equals(minimal_immune_family(graph_immune_realization(5, 2), Rule.R0), uniform(5, 2))
    assert graph_immune_realization(4, 1) == edgeless_graph(4)
    assert equals(minimal_forcing_family(graph_forcing_realization(5, 4), Rule.R0), uniform(5, 4))
    assert graph_forcing_realization(5, 5) == edgeless_graph(5)


def test_graph_realizations_outside_range():
    with pytest.raises(NotRealizable) as info:
        graph_immune_realization(5, 3)
    assert (info.value.k, info.value.n, info.value.kind) == (3, 5, "immune")
    with pytest.raises(NotRealizable):
        graph_forcing_realization(5, 2)


def test_realize_uniform_dispatch():
    assert realize_uniform(4, 2, "r2", "forcing") == r2_forcing_realization(4, 2)
    assert realize_uniform(4, 3, Rule.R1, "immune") == complete_hypergraph(4, 3)
    assert realize_uniform(4, 2, "r0", "immune") == complete_graph(4)
    with pytest.raises(ValueError):
        realize_uniform(4, 2, "r1", "both")
    with pytest.raises(OutOfRange):
        realize_uniform(4, 5, "r2", "immune")


def test_random_hypergraph_is_a_clutter(rng):
    for _ in range(30):
        h = random_hypergraph(5, rng)
        assert h.n == 5
        assert 1 <= h.num_edges <= 10
        for a in h.edges:
            assert all(a == b or a & ~b for b in h.edges)


def test_random_graph(rng):
    g = random_graph(6, 0.5, rng)
    assert g.n == 6
    assert g.is_graph


@pytest.mark.slow
def test_graph_census_only_small_uniform_immune_clutters():
    census = graph_immune_census(6)
    for n, realized in census.items():
        assert all(k in (1, 2) or k == n for k in realized)
        assert 1 in realized
        if n >= 2:
            assert 2 in realized
