"""
Clutter Algebra Module
Antichains of vertex sets over Ω = {1..n}:
- inclusion-minimization of arbitrary families
- transversals (minimal hitting sets)
- uniform clutters U_{k,Ω}
- equality and isomorphism up to relabelling of the support
"""

import logging
import math
from dataclasses import dataclass

from .errors import EmptyMember, OutOfRange
from .hypergraph import (
    Hypergraph, canonical_edges, is_isomorphic, is_subset,
    members, sort_sets, subsets_of_size
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Clutter:
    """
    Ground-set size plus an antichain of vertex sets in canonical order.

    Build instances with minimize(), uniform() or from_hypergraph(). The
    ground set is stored explicitly since Tr(U_{k,Ω}) depends on |Ω|.
    """

    n: int
    members: tuple = ()

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, mask):
        return mask in self.members

    @property
    def support(self):
        out = 0
        for m in self.members:
            out |= m
        return out

    def member_lists(self):
        return [list(members(m)) for m in self.members]


def from_hypergraph(hypergraph):
    """The edge set ℰ(ℋ) as a clutter."""
    return Clutter(n=hypergraph.n, members=hypergraph.edges)


def as_hypergraph(clutter):
    """View a clutter as the edge set of a hypergraph on the same ground set."""
    return Hypergraph(n=clutter.n, edges=clutter.members)


# ============================================================================
# CORE OPERATIONS
# ============================================================================

def minimize(family, n):
    """
    Inclusion-minimal members of a family, deduplicated and canonically ordered

    Args:
        family: Iterable of bitmasks
        n: Ground-set size of the resulting clutter

    Returns:
        Clutter
    """
    kept = []
    # size-ascending order visits every subset before its supersets
    for mask in sort_sets(family):
        if not any(is_subset(small, mask) for small in kept):
            kept.append(mask)
    return Clutter(n=n, members=tuple(kept))


def blocks(clutter, s):
    """True iff S meets every member of the clutter."""
    return all(m & s for m in clutter.members)


def transversal(clutter):
    """
    Tr(C): the clutter of minimal hitting sets

    Members are incorporated one at a time. Blockers that already meet the
    new member are kept, the others are extended by each of its vertices,
    and the result is minimized before the next member.

    Tr of the empty clutter is the empty clutter.

    Raises:
        EmptyMember: some member is the empty set
    """
    if any(m == 0 for m in clutter.members):
        raise EmptyMember("the empty set cannot be blocked")
    if not clutter.members:
        return Clutter(n=clutter.n)

    blockers = (0,)
    for member in clutter.members:
        extended = []
        for blocker in blockers:
            if blocker & member:
                extended.append(blocker)
                continue
            bits = member
            while bits:
                low = bits & -bits
                extended.append(blocker | low)
                bits ^= low
        blockers = minimize(extended, clutter.n).members

    logger.debug(f"transversal of {len(clutter)} members has {len(blockers)} members")
    return Clutter(n=clutter.n, members=blockers)


def uniform(n, k):
    """U_{k,Ω}: every k-subset of {1..n}."""
    if not 1 <= k <= n:
        raise OutOfRange(f"k={k} outside 1..{n}")
    return Clutter(n=n, members=tuple(subsets_of_size(n, k)))


def as_uniform(clutter):
    """k when the clutter equals U_{k,Ω} exactly, otherwise None."""
    if not clutter.members:
        return None

    k = clutter.members[0].bit_count()
    if k == 0 or any(m.bit_count() != k for m in clutter.members):
        return None
    if len(clutter.members) != math.comb(clutter.n, k):
        return None
    return k


# ============================================================================
# COMPARISON
# ============================================================================

def equals(c1, c2):
    return c1.n == c2.n and c1.members == c2.members


def isomorphic(c1, c2):
    """Isomorphism of the two clutters viewed as edge sets on the same ground set."""
    return is_isomorphic(as_hypergraph(c1), as_hypergraph(c2))


def restrict_to_support(clutter):
    """
    Relabel the vertices covered by some member to 1..m, keeping their order

    Families are compared across ground-set sizes this way: a clutter
    {{3},{4}} on four vertices becomes {{1},{2}} on two.
    """
    labels = members(clutter.support)
    position = {v - 1: i for i, v in enumerate(labels)}

    relabelled = []
    for mask in clutter.members:
        out = 0
        for v in members(mask):
            out |= 1 << position[v - 1]
        relabelled.append(out)

    return Clutter(n=len(labels), members=sort_sets(relabelled))


def canonical_clutter(clutter):
    """Canonical representative of a clutter restricted to its support."""
    restricted = restrict_to_support(clutter)
    key, edges = canonical_edges(restricted.n, restricted.members)
    return key, Clutter(n=restricted.n, members=edges)
