"""Shared fixtures: worked examples, a seeded generator and the regenerated tables."""

import numpy as np
import pytest

from src.catalog import build_catalog, build_table1, build_table2, catalog_index
from src.clutters import from_hypergraph
from src.config import PAPER_MAX_N, RANDOM_SEED
from src.hypergraph import validate


@pytest.fixture
def worked_example():
    """{123, 124, 134}: R1 and R2 disagree on {1,2}."""
    return validate(4, [[1, 2, 3], [1, 2, 4], [1, 3, 4]])


@pytest.fixture
def triangle_with_tail():
    """{12, 13, 23, 34}: {1,2} is R2-immune, {1,2,3} is not."""
    return validate(4, [[1, 2], [1, 3], [2, 3], [3, 4]])


@pytest.fixture
def eight_vertex_graph():
    edges = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8),
             (6, 8), (2, 6), (2, 4), (5, 7), (1, 3), (3, 7)]
    return validate(8, edges)


@pytest.fixture
def rng():
    return np.random.default_rng(RANDOM_SEED)


@pytest.fixture(scope="session")
def paper_catalog():
    return build_catalog(PAPER_MAX_N)


@pytest.fixture(scope="session")
def table1(paper_catalog):
    return build_table1(catalog=paper_catalog)


@pytest.fixture(scope="session")
def table2(table1):
    return build_table2(table1=table1)


@pytest.fixture(scope="session")
def class_of(paper_catalog):
    """Catalog index of the class of a hypergraph given by its edge lists."""
    def lookup(n, *edges):
        return catalog_index(paper_catalog, from_hypergraph(validate(n, edges)))
    return lookup
