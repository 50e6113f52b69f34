"""
Forcing Engine Module
Implements the three color-change rules on hypergraphs:
- R0: a black vertex with exactly one white neighbour forces it (graphs only)
- R1: a black subset X of an edge E forces E when no white vertex outside E is adjacent to X
- R2: a black subset X of an edge E forces E when no other edge with white vertices contains X

Provides the closure R_i*(B) with a trace of fired steps, forcing and immune
predicates (operational and neighbourhood-based), Σ₁/Σ₂ and the forcing number.
"""

import logging
from dataclasses import dataclass
from enum import Enum

from .errors import EmptySet, NotAnEdge, RuleNotApplicable, VertexOutOfRange
from .hypergraph import (
    is_subset, members, neighbours, open_neighbourhood,
    subsets_of_size, submasks, superedges
)

logger = logging.getLogger(__name__)


class Rule(str, Enum):
    """Forcing semantics."""

    R0 = "r0"
    R1 = "r1"
    R2 = "r2"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ValueError(f"unknown rule {value!r}; expected one of r0, r1, r2") from None

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ForcingStep:
    """One firing: the black trigger inside edge blackens newly_black."""

    edge: int
    trigger: int
    newly_black: int

    def as_record(self):
        return {
            'edge': list(members(self.edge)),
            'trigger': list(members(self.trigger)),
            'newly_black': list(members(self.newly_black)),
        }


@dataclass(frozen=True)
class ForcingTrace:
    """Ordered record of the steps fired while computing a closure."""

    steps: tuple = ()

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    @property
    def blackened(self):
        out = 0
        for step in self.steps:
            out |= step.newly_black
        return out

    def records(self):
        return [step.as_record() for step in self.steps]


# ============================================================================
# RULE APPLICATION
# ============================================================================

def check_rule(hypergraph, rule):
    """
    Parse a rule and check it applies to the hypergraph

    Raises:
        RuleNotApplicable: R0 requested on a hypergraph that is not a graph
    """
    rule = Rule.parse(rule)
    if rule is Rule.R0 and not hypergraph.is_graph:
        raise RuleNotApplicable("rule r0 requires a graph (every edge of size 2)")
    return rule


def _check_within(hypergraph, mask):
    if mask < 0 or mask >> hypergraph.n:
        raise VertexOutOfRange(f"vertex set {members(mask)} exceeds 1..{hypergraph.n}")


def _edge_fires(hypergraph, rule, edge, trigger, black):
    white = ~black

    if rule is Rule.R1:
        reach = 0
        for other in hypergraph.edges:
            if is_subset(trigger, other):
                reach |= other & white
        return is_subset(reach, edge)

    if rule is Rule.R2:
        for other in hypergraph.edges:
            if other != edge and is_subset(trigger, other) and other & white:
                return False
        return True

    # R0: edge = {b, w} with b black and w white
    b = trigger.bit_length()
    return (neighbours(hypergraph, b) & white).bit_count() == 1


def _fireable(hypergraph, rule, black):
    out = []
    for edge in hypergraph.edges:
        trigger = edge & black
        if trigger == 0 or is_subset(edge, black):
            continue
        if _edge_fires(hypergraph, rule, edge, trigger, black):
            out.append((edge, trigger))
    return out


def fireable(hypergraph, rule, black):
    """
    Edges that can fire from the black set, each with its trigger E∩B

    Only the maximal trigger E∩B is tested per edge: enlarging X shrinks the
    set of edges containing it, so both hypergraph rules are monotone in X.

    Args:
        hypergraph: Hypergraph
        rule: Rule or its name
        black: Bitmask of black vertices

    Returns:
        list: (edge, trigger) pairs in canonical edge order
    """
    rule = check_rule(hypergraph, rule)
    _check_within(hypergraph, black)
    return _fireable(hypergraph, rule, black)


def closure(hypergraph, rule, black, rng=None):
    """
    Fixed point R_i*(B) reached by repeatedly firing edges

    The default firing order is canonical edge order; pass a
    numpy.random.Generator to pick uniformly among fireable edges instead.
    The final set does not depend on the order.

    Args:
        hypergraph: Hypergraph
        rule: Rule or its name
        black: Bitmask of initially black vertices
        rng: Optional numpy Generator choosing the next firing

    Returns:
        tuple: (closure bitmask, ForcingTrace)
    """
    rule = check_rule(hypergraph, rule)
    _check_within(hypergraph, black)

    steps = []
    while True:
        candidates = _fireable(hypergraph, rule, black)
        if not candidates:
            break

        pick = 0 if rng is None else int(rng.integers(len(candidates)))
        edge, trigger = candidates[pick]
        newly_black = edge & ~black
        black |= newly_black
        steps.append(ForcingStep(edge=edge, trigger=trigger, newly_black=newly_black))
        logger.debug(f"{rule}: {members(trigger)} in {members(edge)} forces {members(newly_black)}")

    return black, ForcingTrace(steps=tuple(steps))


def is_forcing(hypergraph, rule, forcing_set):
    """True iff R_i*(F) = Ω."""
    if forcing_set == 0:
        raise EmptySet("forcing sets are nonempty")
    final, _ = closure(hypergraph, rule, forcing_set)
    return final == hypergraph.ground


def is_immune(hypergraph, rule, immune_set):
    """True iff R_i*(Ω∖I) = Ω∖I."""
    if immune_set == 0:
        raise EmptySet("immune sets are nonempty")
    _check_within(hypergraph, immune_set)
    rest = hypergraph.ground & ~immune_set
    final, _ = closure(hypergraph, rule, rest)
    return final == rest


# ============================================================================
# NEIGHBOURHOOD CHARACTERIZATIONS
# ============================================================================

def _check_edge(hypergraph, edge):
    if edge not in hypergraph.edges:
        raise NotAnEdge(f"{set(members(edge))} is not a hyperedge")


def sigma1(hypergraph, x, edge):
    """Σ₁(X,A) = {A' ⊇ A∖X : (A'∩X)∖A ≠ ∅}."""
    _check_edge(hypergraph, edge)
    return [other for other in superedges(hypergraph, edge & ~x)
            if (other & x) & ~edge]


def sigma2(hypergraph, x, edge):
    """Σ₂(X,A) = {A' ⊇ A∖X : A'∩X ≠ ∅}."""
    _check_edge(hypergraph, edge)
    return [other for other in superedges(hypergraph, edge & ~x) if other & x]


def _graph_immune(hypergraph, x):
    for v in range(1, hypergraph.n + 1):
        if x >> (v - 1) & 1:
            continue
        if (neighbours(hypergraph, v) & x).bit_count() == 1:
            return False
    return True


def is_immune_nbhd(hypergraph, rule, x):
    """
    Immunity without running the process

    R1: |Σ₁(X,A)| >= 1 and R2: |Σ₂(X,A)| >= 2 for every edge A meeting both X
    and Ω∖X; R0: no vertex outside X has exactly one neighbour in X.
    """
    if x == 0:
        raise EmptySet("immune sets are nonempty")
    rule = check_rule(hypergraph, rule)
    _check_within(hypergraph, x)

    if rule is Rule.R0:
        return _graph_immune(hypergraph, x)

    for edge in hypergraph.edges:
        if not (edge & ~x and edge & x):
            continue
        if rule is Rule.R1 and not sigma1(hypergraph, x, edge):
            return False
        if rule is Rule.R2 and len(sigma2(hypergraph, x, edge)) < 2:
            return False

    return True


def is_immune_open_nbhd(hypergraph, x):
    """
    R2 immunity through open neighbourhoods

    X is immune iff |{B' ∈ 𝒩(B) : B'∩X ≠ ∅}| ≠ 1 for every nonempty B ⊆ Ω∖X.
    On graphs this is the R0 condition.
    """
    if x == 0:
        raise EmptySet("immune sets are nonempty")
    _check_within(hypergraph, x)

    outside = hypergraph.ground & ~x
    for b in submasks(outside):
        if b == 0:
            continue
        hits = sum(1 for other in open_neighbourhood(hypergraph, b) if other & x)
        if hits == 1:
            return False
    return True


def is_fort(graph, x):
    """Fort: nonempty X such that no vertex outside X is adjacent to exactly one vertex of X."""
    return is_immune_nbhd(graph, Rule.R0, x)


# ============================================================================
# FORCING NUMBER
# ============================================================================

def forcing_sets_by_size(hypergraph, rule, size):
    """Yield the forcing sets of the given size in lexicographic order."""
    rule = check_rule(hypergraph, rule)
    if size < 1:
        return
    for candidate in subsets_of_size(hypergraph.n, size):
        if is_forcing(hypergraph, rule, candidate):
            yield candidate


def minimum_forcing_set(hypergraph, rule):
    """First forcing set of least size in size-then-lexicographic order."""
    rule = check_rule(hypergraph, rule)
    if hypergraph.n == 0:
        raise EmptySet("the forcing number needs a nonempty ground set")

    for k in range(1, hypergraph.n + 1):
        for candidate in forcing_sets_by_size(hypergraph, rule, k):
            logger.debug(f"smallest {rule}-forcing set has size {k}")
            return candidate

    return hypergraph.ground  # unreachable: Ω forces itself


def forcing_number(hypergraph, rule):
    """Cardinality of a smallest forcing set."""
    return minimum_forcing_set(hypergraph, rule).bit_count()
