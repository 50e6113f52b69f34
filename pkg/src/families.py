"""
Family Enumeration Module
Computes the clutters of minimal forcing sets F_i(ℋ) and minimal immune
sets I_i(ℋ), and checks their transversal duality.
"""

import logging
import multiprocessing

from .clutters import equals, minimize, transversal
from .config import DEFAULT_JOBS, FAMILY_KEYS, search_bound
from .errors import SearchBoundExceeded
from .forcing import Rule, check_rule, is_forcing, is_immune
from .hypergraph import is_subset, subsets_of_size

logger = logging.getLogger(__name__)

IMMUNE_METHODS = ("transversal", "direct")


def _check_bound(hypergraph):
    bound = search_bound()
    if hypergraph.n > bound:
        raise SearchBoundExceeded(
            f"exhaustive search over 2^{hypergraph.n} subsets exceeds the bound n <= {bound}; "
            f"raise it with ZF_SEARCH_BOUND"
        )


def _forcing_chunk(args):
    """Worker: the forcing sets among a chunk of candidates."""
    hypergraph, rule, candidates = args
    return [c for c in candidates if is_forcing(hypergraph, rule, c)]


def _chunks(items, count):
    size = max(1, -(-len(items) // count))
    return [items[i:i + size] for i in range(0, len(items), size)]


def minimal_forcing_family(hypergraph, rule, jobs=DEFAULT_JOBS):
    """
    F_i(ℋ): the inclusion-minimal forcing sets

    Subsets are scanned by increasing size and any candidate containing an
    already-found minimal forcing set is skipped, since forcing sets are
    closed upwards. With jobs > 1 every size level is split across a
    process pool; sets of equal size never contain one another, so the
    merged result equals the sequential one.

    Args:
        hypergraph: Hypergraph
        rule: Rule or its name
        jobs: Worker processes for the subset scan

    Returns:
        Clutter
    """
    rule = check_rule(hypergraph, rule)
    _check_bound(hypergraph)
    n = hypergraph.n

    found = []
    pool = multiprocessing.Pool(processes=jobs) if jobs > 1 else None
    try:
        for k in range(1, n + 1):
            candidates = [c for c in subsets_of_size(n, k)
                          if not any(is_subset(f, c) for f in found)]
            if not candidates:
                break

            if pool is None:
                level = [c for c in candidates if is_forcing(hypergraph, rule, c)]
            else:
                tasks = [(hypergraph, rule, chunk) for chunk in _chunks(candidates, jobs)]
                level = [c for part in pool.map(_forcing_chunk, tasks) for c in part]

            logger.debug(f"size {k}: {len(candidates)} candidates, {len(level)} minimal forcing sets")
            found.extend(level)
    finally:
        if pool is not None:
            pool.close()
            pool.join()

    return minimize(found, n)


def minimal_immune_family(hypergraph, rule, method="transversal", jobs=DEFAULT_JOBS):
    """
    I_i(ℋ): the inclusion-minimal immune sets

    method="transversal" returns Tr(F_i(ℋ)). method="direct" tests every
    nonempty subset with is_immune and minimizes; immune sets are not closed
    upwards, so that scan cannot prune.
    """
    rule = check_rule(hypergraph, rule)
    _check_bound(hypergraph)

    if method == "transversal":
        return transversal(minimal_forcing_family(hypergraph, rule, jobs=jobs))
    if method != "direct":
        raise ValueError(f"unknown method {method!r}; expected one of {IMMUNE_METHODS}")

    n = hypergraph.n
    immune = []
    for k in range(1, n + 1):
        for candidate in subsets_of_size(n, k):
            if is_immune(hypergraph, rule, candidate):
                immune.append(candidate)

    logger.debug(f"direct scan found {len(immune)} immune sets")
    return minimize(immune, n)


def verify_duality(hypergraph, rule):
    """Tr(F) equals the directly scanned I, and Tr(I) equals F."""
    forcing = minimal_forcing_family(hypergraph, rule)
    immune = minimal_immune_family(hypergraph, rule, method="direct")

    ok = equals(transversal(forcing), immune) and equals(transversal(immune), forcing)
    if not ok:
        logger.warning(f"duality fails under {rule} for {hypergraph}")
    return ok


def compare_rules(hypergraph):
    """
    Check the R1/R2 comparison on one hypergraph

    Every minimal R2-forcing set contains a minimal R1-forcing set, and every
    minimal R1-immune set contains a minimal R2-immune set.

    Returns:
        dict: 'forcing' and 'immune' booleans
    """
    families = all_families(hypergraph)

    def _covered(large, small):
        return all(any(is_subset(s, m) for s in small.members) for m in large.members)

    return {
        'forcing': _covered(families['F2'], families['F1']),
        'immune': _covered(families['I1'], families['I2']),
    }


def all_families(hypergraph, jobs=DEFAULT_JOBS):
    """F1, F2, I1, I2 of a hypergraph, keyed as in the tables."""
    f1 = minimal_forcing_family(hypergraph, Rule.R1, jobs=jobs)
    f2 = minimal_forcing_family(hypergraph, Rule.R2, jobs=jobs)
    values = (f1, f2, transversal(f1), transversal(f2))
    return dict(zip(FAMILY_KEYS, values))
