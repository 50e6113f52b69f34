"""
Hypergraph Core Module
Ground-set and hyperedge data model:
- VertexSet bitmasks over Ω = {1..n}
- Hypergraph validation (clutter property, canonical edge order)
- Adjacency, open neighbourhoods and superedges
- Brute-force canonical forms and isomorphism for small ground sets
"""

import itertools
import logging
from dataclasses import dataclass

from .config import CANONICAL_MAX_N
from .errors import (
    EmptyEdge, GroundSetTooLarge, HypergraphFormatError,
    NotAClutter, VertexOutOfRange
)

logger = logging.getLogger(__name__)

# A VertexSet is an int whose bit v-1 is set iff vertex v is a member.
VertexSet = int


# ============================================================================
# VERTEX SET ARITHMETIC
# ============================================================================

def vertex_set(vertices):
    """Bitmask of an iterable of 1-based vertex labels."""
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def members(mask):
    """Sorted tuple of the 1-based vertices of a bitmask."""
    out = []
    index = 1
    while mask:
        if mask & 1:
            out.append(index)
        mask >>= 1
        index += 1
    return tuple(out)


def size(mask):
    return mask.bit_count()


def full_set(n):
    """Ω = {1..n} as a bitmask."""
    return (1 << n) - 1


def is_subset(a, b):
    return a & ~b == 0


def sort_key(mask):
    """Canonical order: size-ascending, then lexicographic by sorted members."""
    return (mask.bit_count(), members(mask))


def sort_sets(masks):
    """Deduplicate and sort bitmasks in canonical order."""
    return tuple(sorted(set(masks), key=sort_key))


def subsets_of_size(n, k):
    """All k-subsets of {1..n} as bitmasks, in lexicographic order."""
    for combo in itertools.combinations(range(n), k):
        mask = 0
        for i in combo:
            mask |= 1 << i
        yield mask


def all_subsets(n):
    """Every subset of {1..n}, size-ascending."""
    for k in range(n + 1):
        yield from subsets_of_size(n, k)


def submasks(mask):
    """Every subset of the given bitmask (including 0 and mask itself)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


# ============================================================================
# DATA MODEL
# ============================================================================

@dataclass(frozen=True)
class Hypergraph:
    """
    Ground-set size plus an antichain of nonempty hyperedges.

    Build instances with validate(); edges are kept deduplicated and in
    canonical order. A graph is the special case of all edges of size 2.
    """

    n: int
    edges: tuple

    @property
    def ground(self):
        return full_set(self.n)

    @property
    def num_edges(self):
        return len(self.edges)

    @property
    def is_graph(self):
        return all(edge.bit_count() == 2 for edge in self.edges)

    @property
    def is_covering(self):
        covered = 0
        for edge in self.edges:
            covered |= edge
        return covered == self.ground

    def edge_lists(self):
        return [list(members(edge)) for edge in self.edges]

    def __str__(self):
        body = ", ".join("{" + ",".join(map(str, members(e))) + "}" for e in self.edges)
        return f"Hypergraph(n={self.n}, edges=[{body}])"


def _as_mask(raw, n):
    if isinstance(raw, int):
        if raw < 0 or raw >> n:
            raise VertexOutOfRange(f"edge bitmask {raw:#b} exceeds ground set of size {n}")
        return raw

    vertices = list(raw)
    for v in vertices:
        if not isinstance(v, int) or isinstance(v, bool):
            raise HypergraphFormatError(f"vertex labels must be integers, got {v!r}")
        if v < 1 or v > n:
            raise VertexOutOfRange(f"vertex {v} outside 1..{n}")
    return vertex_set(vertices)


def validate(n, raw_edges):
    """
    Build a Hypergraph after deduplication and canonical sorting.

    Args:
        n: Ground-set size |Ω|
        raw_edges: Iterable of edges, each a bitmask or an iterable of 1-based labels

    Returns:
        Hypergraph

    Raises:
        EmptyEdge, VertexOutOfRange, NotAClutter
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise HypergraphFormatError(f"ground-set size must be a non-negative integer, got {n!r}")

    masks = set()
    for raw in raw_edges:
        mask = _as_mask(raw, n)
        if mask == 0:
            raise EmptyEdge("hyperedges must be nonempty")
        masks.add(mask)

    edges = sort_sets(masks)
    for a, b in itertools.combinations(edges, 2):
        # canonical order puts the smaller edge first
        if is_subset(a, b):
            raise NotAClutter(
                f"edge {set(members(a))} is contained in edge {set(members(b))}"
            )

    return Hypergraph(n=n, edges=edges)


def from_networkx(graph):
    """
    Convert a networkx graph into a Hypergraph with 2-element edges.

    Nodes are relabelled 1..n following their sorted order.
    """
    import networkx as nx

    if nx.number_of_selfloops(graph):
        raise HypergraphFormatError("self-loops cannot be represented as hyperedges")

    nodes = sorted(graph.nodes())
    label = {node: i + 1 for i, node in enumerate(nodes)}
    edges = [(label[u], label[v]) for u, v in graph.edges()]
    return validate(len(nodes), edges)


# ============================================================================
# ADJACENCY AND NEIGHBOURHOODS
# ============================================================================

def adjacent(hypergraph, x, y):
    """True iff some hyperedge contains both X and Y."""
    both = x | y
    return any(is_subset(both, edge) for edge in hypergraph.edges)


def superedges(hypergraph, b):
    """N(B): the hyperedges containing B, in canonical order."""
    return [edge for edge in hypergraph.edges if is_subset(b, edge)]


def open_neighbourhood(hypergraph, b):
    """𝒩(B) = {B' : B ∩ B' = ∅ and B ∪ B' is a hyperedge}."""
    return list(sort_sets(edge & ~b for edge in superedges(hypergraph, b)))


def neighbours(hypergraph, v):
    """Vertices sharing a hyperedge with vertex v (v excluded), as a bitmask."""
    bit = 1 << (v - 1)
    out = 0
    for edge in hypergraph.edges:
        if edge & bit:
            out |= edge
    return out & ~bit


# ============================================================================
# CANONICAL FORMS
# ============================================================================

def _relabel(mask, perm):
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << perm[low.bit_length() - 1]
        mask ^= low
    return out


def canonical_edges(n, edges):
    """
    Lexicographically minimal relabelling of an edge family over all n! permutations.

    Args:
        n: Ground-set size
        edges: Iterable of bitmasks

    Returns:
        tuple: (encoding, relabelled edges in canonical order)
    """
    if n > CANONICAL_MAX_N:
        raise GroundSetTooLarge(
            f"canonical labelling tries n! permutations; n={n} exceeds {CANONICAL_MAX_N}"
        )

    edges = tuple(edges)
    best_key = None
    best_edges = ()
    for perm in itertools.permutations(range(n)):
        relabelled = sorted((_relabel(e, perm) for e in edges), key=sort_key)
        key = tuple(sort_key(e) for e in relabelled)
        if best_key is None or key < best_key:
            best_key = key
            best_edges = tuple(relabelled)

    return best_key, best_edges


def canonical_key(hypergraph):
    return canonical_edges(hypergraph.n, hypergraph.edges)[0]


def canonical_form(hypergraph):
    """Canonical representative of the isomorphism class of a hypergraph."""
    _, edges = canonical_edges(hypergraph.n, hypergraph.edges)
    return Hypergraph(n=hypergraph.n, edges=edges)


def is_isomorphic(h1, h2):
    """True iff both hypergraphs have the same canonical form."""
    if max(h1.n, h2.n) > CANONICAL_MAX_N:
        raise GroundSetTooLarge(f"isomorphism testing is bounded by n <= {CANONICAL_MAX_N}")
    if h1.n != h2.n or h1.num_edges != h2.num_edges:
        return False
    if sorted(e.bit_count() for e in h1.edges) != sorted(e.bit_count() for e in h2.edges):
        return False
    return canonical_key(h1) == canonical_key(h2)
