"""
Catalog Module
Enumerates covering clutters up to isomorphism and regenerates the
tables of minimal forcing / immune families and their realizations:
- Table 1: F1, F2, I1, I2 of every catalog hypergraph, each resolved to the
  catalog class it is isomorphic to
- Table 2: for every catalog class Δ, the hypergraphs realizing Δ
- Exhaustive census of graphs whose immune clutter is uniform
"""

import logging
import multiprocessing
from dataclasses import dataclass, field

import networkx as nx

from .clutters import as_uniform, canonical_clutter
from .config import (
    CATALOG_MAX_N, DEFAULT_JOBS, FAMILY_KEYS, GRAPH_CENSUS_MAX_N, INDEX_TEMPLATE, PAPER_MAX_N
)
from .errors import GroundSetTooLarge
from .families import all_families, minimal_immune_family
from .forcing import Rule
from .hypergraph import Hypergraph, canonical_edges, from_networkx, full_set, sort_sets
from .utils import Timer

logger = logging.getLogger(__name__)


def format_index(index):
    """Label of a catalog index, e.g. (4, 13) -> 'H4.13'."""
    if index is None:
        return "-"
    n, j = index
    return INDEX_TEMPLATE.format(n=n, j=j)


@dataclass(frozen=True)
class Catalog:
    """Canonical covering clutters for 1 <= n <= n_max, indexed (n, j)."""

    n_max: int
    hypergraphs: dict = field(default_factory=dict, repr=False)
    by_key: dict = field(default_factory=dict, repr=False)

    def __len__(self):
        return len(self.hypergraphs)

    def indices(self):
        return list(self.hypergraphs)


@dataclass(frozen=True)
class CatalogEntry:
    """One row of Table 1."""

    index: tuple
    hypergraph: Hypergraph
    families: dict
    family_indices: dict

    @property
    def label(self):
        return format_index(self.index)


# ============================================================================
# ENUMERATION
# ============================================================================

def _antichains(candidates, ground):
    """Yield every nonempty antichain of candidates whose union is ground."""
    chosen = []

    def extend(start, covered):
        if chosen and covered == ground:
            yield tuple(chosen)
        for i in range(start, len(candidates)):
            s = candidates[i]
            if any(s & ~c == 0 or c & ~s == 0 for c in chosen):
                continue
            chosen.append(s)
            yield from extend(i + 1, covered | s)
            chosen.pop()

    yield from extend(0, 0)


def enumerate_covering_clutters(n):
    """
    All clutters on {1..n} covering the ground set, up to isomorphism

    Antichains of nonempty subsets are generated by backtracking and
    bucketed by canonical form.

    Args:
        n: Ground-set size

    Returns:
        list: canonical Hypergraphs ordered by canonical encoding
    """
    if n > CATALOG_MAX_N:
        raise GroundSetTooLarge(f"catalog enumeration is bounded by n <= {CATALOG_MAX_N}")
    if n < 1:
        return []

    ground = full_set(n)
    candidates = list(sort_sets(range(1, ground + 1)))

    classes = {}
    visited = 0
    for antichain in _antichains(candidates, ground):
        visited += 1
        key, edges = canonical_edges(n, antichain)
        classes.setdefault(key, edges)

    logger.debug(f"n={n}: {visited} covering antichains, {len(classes)} classes")
    return [Hypergraph(n=n, edges=classes[key]) for key in sorted(classes)]


def build_catalog(n_max=PAPER_MAX_N):
    """Index every covering clutter on 1..n_max vertices as (n, j)."""
    hypergraphs = {}
    by_key = {}
    for n in range(1, n_max + 1):
        for j, hypergraph in enumerate(enumerate_covering_clutters(n), start=1):
            hypergraphs[(n, j)] = hypergraph
            by_key[(n, canonical_edges(n, hypergraph.edges)[0])] = (n, j)

    logger.info(f"Catalog for n <= {n_max}: {len(hypergraphs)} classes")
    return Catalog(n_max=n_max, hypergraphs=hypergraphs, by_key=by_key)


def catalog_index(catalog, clutter):
    """
    Catalog class of a clutter, compared on its support

    Returns:
        tuple or None: (n, j), None when the clutter is empty or lies
        outside the catalog
    """
    if not clutter.members:
        return None
    key, canonical = canonical_clutter(clutter)
    return catalog.by_key.get((canonical.n, key))


# ============================================================================
# TABLES
# ============================================================================

def build_table1(n_max=PAPER_MAX_N, jobs=DEFAULT_JOBS, catalog=None):
    """
    F1, F2, I1, I2 of every catalog hypergraph with their catalog classes

    Entries are independent; with jobs > 1 they are computed in a process
    pool and kept in catalog order.

    Returns:
        list: CatalogEntry per catalog class
    """
    catalog = catalog or build_catalog(n_max)
    indices = catalog.indices()
    hypergraphs = [catalog.hypergraphs[i] for i in indices]

    with Timer(f"Table 1 for n <= {catalog.n_max}"):
        if jobs > 1:
            with multiprocessing.Pool(processes=jobs) as pool:
                computed = pool.map(all_families, hypergraphs)
        else:
            computed = [all_families(h) for h in hypergraphs]

    entries = []
    for index, hypergraph, families in zip(indices, hypergraphs, computed):
        family_indices = {key: catalog_index(catalog, families[key]) for key in FAMILY_KEYS}
        entries.append(CatalogEntry(
            index=index,
            hypergraph=hypergraph,
            families=families,
            family_indices=family_indices,
        ))

    return entries


def build_table2(n_max=PAPER_MAX_N, table1=None, jobs=DEFAULT_JOBS):
    """
    Invert Table 1: realizations of every catalog class Δ

    Returns:
        dict: index of Δ -> {family key: indices of hypergraphs realizing Δ}
    """
    table1 = table1 if table1 is not None else build_table1(n_max, jobs=jobs)

    table2 = {entry.index: {key: [] for key in FAMILY_KEYS} for entry in table1}
    for entry in table1:
        for key in FAMILY_KEYS:
            target = entry.family_indices[key]
            if target in table2:
                table2[target][key].append(entry.index)

    return table2


def rule_disagreements(table1):
    """Classes where F1 and F2, or I1 and I2, are not isomorphic."""
    return [
        entry.index for entry in table1
        if entry.family_indices['F1'] != entry.family_indices['F2']
        or entry.family_indices['I1'] != entry.family_indices['I2']
    ]


def unrealizable_classes(table2):
    """Classes that are neither a forcing nor an immune clutter under R1 or R2."""
    return [index for index, row in table2.items()
            if not any(row[key] for key in FAMILY_KEYS)]


# ============================================================================
# GRAPH CENSUS
# ============================================================================

def graph_immune_census(n_max=GRAPH_CENSUS_MAX_N):
    """
    Every graph on 1..n_max vertices, up to isomorphism, whose immune clutter is uniform

    Walks networkx's graph atlas, which lists all graphs with at most seven
    nodes.

    Returns:
        dict: n -> {k: [graphs G with I(G) = U_{k,Ω}]}
    """
    if n_max > GRAPH_CENSUS_MAX_N:
        raise GroundSetTooLarge(f"the graph atlas covers n <= {GRAPH_CENSUS_MAX_N}")

    census = {n: {} for n in range(1, n_max + 1)}
    checked = 0
    with Timer(f"graph census for n <= {n_max}"):
        for graph in nx.graph_atlas_g():
            order = graph.number_of_nodes()
            if order == 0:
                continue
            if order > n_max:
                break

            hypergraph = from_networkx(graph)
            k = as_uniform(minimal_immune_family(hypergraph, Rule.R0))
            checked += 1
            if k is not None:
                census[order].setdefault(k, []).append(hypergraph)

    logger.info(f"Graph census: {checked} graphs checked")
    return census
