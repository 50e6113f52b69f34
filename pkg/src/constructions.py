"""
Constructions Module
Explicit hypergraph and graph families:
- complete hypergraphs ℋ_{k,Ω}, complete and edgeless graphs
- realizations of the uniform clutter U_{k,Ω} as a forcing or immune clutter
  under R1, R2 and the graph rule
- random instances for the randomized checks
"""

import logging

import networkx as nx

from .clutters import uniform
from .errors import NotRealizable, OutOfRange
from .forcing import Rule
from .hypergraph import from_networkx, full_set, subsets_of_size, validate

logger = logging.getLogger(__name__)

REALIZATION_KINDS = ("forcing", "immune")


def _check_range(n, k):
    if not 1 <= k <= n:
        raise OutOfRange(f"k={k} outside 1..{n}")


# ============================================================================
# COMPLETE FAMILIES
# ============================================================================

def complete_hypergraph(n, k):
    """ℋ_{k,Ω}: the hypergraph whose edges are U_{k,Ω}; ℋ_{2,Ω} is K_n."""
    return validate(n, uniform(n, k).members)


def complete_graph(n):
    return from_networkx(nx.complete_graph(n))


def edgeless_graph(n):
    return from_networkx(nx.empty_graph(n))


# ============================================================================
# UNIFORM REALIZATIONS
# ============================================================================

def r1_forcing_realization(n, k):
    """ℋ_{n-k+1,Ω}, whose minimal R1-forcing sets are U_{k,Ω}."""
    _check_range(n, k)
    return complete_hypergraph(n, n - k + 1)


def r1_immune_realization(n, k):
    """ℋ_{k,Ω}, whose minimal R1-immune sets are U_{k,Ω}."""
    _check_range(n, k)
    return complete_hypergraph(n, k)


def r2_forcing_realization(n, k):
    """
    Hypergraph whose minimal R2-forcing sets are U_{k,Ω}

    For 1 < k < n the edges are Ω∖{1} together with {1}∪A' for every
    (k-1)-subset A' of Ω∖{1}. Vertex 1 is the distinguished vertex.

    Args:
        n: Ground-set size
        k: Size of the uniform clutter to realize

    Returns:
        Hypergraph
    """
    _check_range(n, k)
    if k == 1:
        return validate(n, [full_set(n)])
    if k == n:
        return validate(n, [1 << i for i in range(n)])

    rest = full_set(n) & ~1
    edges = [rest]
    for subset in subsets_of_size(n - 1, k - 1):
        # shift the (k-1)-subset onto vertices 2..n
        edges.append(1 | (subset << 1))
    return validate(n, edges)


def r2_immune_realization(n, k):
    """The R2-forcing construction for n-k+1, whose minimal R2-immune sets are U_{k,Ω}."""
    _check_range(n, k)
    return r2_forcing_realization(n, n - k + 1)


def graph_immune_realization(n, k):
    """Edgeless graph for k=1, K_n for k=2; no other k is realizable."""
    _check_range(n, k)
    if k == 1:
        return edgeless_graph(n)
    if k == 2:
        return complete_graph(n)
    raise NotRealizable(k, n, "immune")


def graph_forcing_realization(n, k):
    """K_n for k=n-1, edgeless graph for k=n; no other k is realizable."""
    _check_range(n, k)
    if k == n:
        return edgeless_graph(n)
    if k == n - 1:
        return complete_graph(n)
    raise NotRealizable(k, n, "forcing")


_REALIZERS = {
    (Rule.R0, "forcing"): graph_forcing_realization,
    (Rule.R0, "immune"): graph_immune_realization,
    (Rule.R1, "forcing"): r1_forcing_realization,
    (Rule.R1, "immune"): r1_immune_realization,
    (Rule.R2, "forcing"): r2_forcing_realization,
    (Rule.R2, "immune"): r2_immune_realization,
}


def realize_uniform(n, k, rule, kind):
    """Realization of U_{k,Ω} as the forcing or immune clutter of the given rule."""
    rule = Rule.parse(rule)
    if kind not in REALIZATION_KINDS:
        raise ValueError(f"unknown realization kind {kind!r}; expected one of {REALIZATION_KINDS}")
    hypergraph = _REALIZERS[(rule, kind)](n, k)
    logger.debug(f"U_{k} on n={n}: {rule}-{kind} realization with {hypergraph.num_edges} edges")
    return hypergraph


# ============================================================================
# RANDOM INSTANCES
# ============================================================================

def random_hypergraph(n, rng, max_edges=None):
    """
    Random clutter on {1..n}: sample nonempty subsets and keep the maximal ones

    Args:
        n: Ground-set size (>= 1)
        rng: numpy.random.Generator
        max_edges: Upper bound on the number of sampled subsets (default 2n)

    Returns:
        Hypergraph
    """
    max_edges = max_edges or 2 * n
    count = int(rng.integers(1, max_edges + 1))
    sampled = {int(s) for s in rng.integers(1, 1 << n, size=count)}

    maximal = [s for s in sampled
               if not any(s != t and s & ~t == 0 for t in sampled)]
    return validate(n, maximal)


def random_graph(n, p, rng):
    """G(n, p) graph drawn with networkx, seeded from the generator."""
    seed = int(rng.integers(0, 2**32 - 1))
    return from_networkx(nx.gnp_random_graph(n, p, seed=seed))
