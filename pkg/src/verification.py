"""
Verification Module
Exhaustive and randomized checks of the structural results:
- transversal duality of forcing and immune families
- closed forms for complete hypergraphs
- uniform realizations under R1, R2 and the graph rule
- nonexistence of graph-immune realizations for 3 <= k <= n-1
- neighbourhood characterizations of immunity
- confluence, monotonicity and rule comparison of the closure
"""

import logging
from dataclasses import dataclass

import networkx as nx
import numpy as np

from .catalog import build_catalog, graph_immune_census
from .clutters import as_uniform, equals, uniform
from .config import (
    GRAPH_EDGE_PROBABILITY, PAPER_MAX_N, RANDOM_DUALITY_MAX_N, RANDOM_DUALITY_SAMPLES,
    RANDOM_DYNAMICS_MAX_N, RANDOM_DYNAMICS_SAMPLES, RANDOM_SEED
)
from .constructions import (
    complete_hypergraph, graph_forcing_realization, graph_immune_realization,
    r1_forcing_realization, r1_immune_realization, r2_forcing_realization,
    r2_immune_realization, random_graph, random_hypergraph
)
from .families import minimal_forcing_family, minimal_immune_family, verify_duality
from .forcing import Rule, closure, is_immune, is_immune_nbhd, is_immune_open_nbhd
from .hypergraph import all_subsets, from_networkx, is_subset
from .utils import Timer

logger = logging.getLogger(__name__)

CHECKS = ("duality", "complete", "realizations", "graphs", "characterization", "dynamics")
HYPERGRAPH_RULES = (Rule.R1, Rule.R2)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    @property
    def status(self):
        return "PASS" if self.passed else "FAIL"


def check_duality(samples=RANDOM_DUALITY_SAMPLES, max_n=RANDOM_DUALITY_MAX_N, seed=RANDOM_SEED):
    """Tr(F) = I and Tr(I) = F on the catalog and on random hypergraphs."""
    catalog = build_catalog(PAPER_MAX_N)
    failures = []

    for index, hypergraph in catalog.hypergraphs.items():
        for rule in HYPERGRAPH_RULES:
            if not verify_duality(hypergraph, rule):
                failures.append(f"{index} {rule}")

    rng = np.random.default_rng(seed)
    for _ in range(samples):
        hypergraph = random_hypergraph(int(rng.integers(1, max_n + 1)), rng)
        for rule in HYPERGRAPH_RULES:
            if not verify_duality(hypergraph, rule):
                failures.append(f"{hypergraph} {rule}")

    checked = len(catalog) + samples
    return CheckResult("duality", not failures,
                       f"{checked} hypergraphs x 2 rules" + _failures(failures))


def _expected_r2_families(n, k):
    if k == 1:
        return n, 1
    if k == n:
        return 1, n
    return n - 1, 2


def check_complete(max_n=7):
    """F and I of ℋ_{k,Ω} under both rules for 1 <= k <= n <= max_n."""
    failures = []
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            hypergraph = complete_hypergraph(n, k)
            f1 = minimal_forcing_family(hypergraph, Rule.R1)
            i1 = minimal_immune_family(hypergraph, Rule.R1)
            f2 = minimal_forcing_family(hypergraph, Rule.R2)
            i2 = minimal_immune_family(hypergraph, Rule.R2)
            f2_k, i2_k = _expected_r2_families(n, k)

            if not equals(f1, uniform(n, n - k + 1)) or not equals(i1, uniform(n, k)):
                failures.append(f"R1 n={n} k={k}")
            if not equals(f2, uniform(n, f2_k)) or not equals(i2, uniform(n, i2_k)):
                failures.append(f"R2 n={n} k={k}")

    return CheckResult("complete", not failures, f"1 <= k <= n <= {max_n}" + _failures(failures))


def check_realizations(max_n=7):
    """Every uniform realization yields U_{k,Ω} exactly."""
    failures = []
    cases = (
        ("r1-forcing", r1_forcing_realization, Rule.R1, minimal_forcing_family),
        ("r1-immune", r1_immune_realization, Rule.R1, minimal_immune_family),
        ("r2-forcing", r2_forcing_realization, Rule.R2, minimal_forcing_family),
        ("r2-immune", r2_immune_realization, Rule.R2, minimal_immune_family),
    )

    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            for name, build, rule, family in cases:
                if as_uniform(family(build(n, k), rule)) != k:
                    failures.append(f"{name} n={n} k={k}")

        graph_cases = (
            ("graph-immune", graph_immune_realization, minimal_immune_family, (1, 2)),
            ("graph-forcing", graph_forcing_realization, minimal_forcing_family, (n - 1, n)),
        )
        for name, build, family, ks in graph_cases:
            for k in sorted({k for k in ks if 1 <= k <= n}):
                if as_uniform(family(build(n, k), Rule.R0)) != k:
                    failures.append(f"{name} n={n} k={k}")

    return CheckResult("realizations", not failures, f"1 <= k <= n <= {max_n}" + _failures(failures))


def check_graphs(max_n=6):
    """No graph has I(G) = U_{k,Ω} for 3 <= k <= n-1, while k = 1 and k = 2 occur."""
    census = graph_immune_census(max_n)
    failures = []
    for n, realized in census.items():
        bad = sorted(k for k in realized if 3 <= k <= n - 1)
        if bad:
            failures.append(f"n={n} realizes k={bad}")
        for k in (1, 2):
            if k <= n and k not in realized:
                failures.append(f"n={n} misses k={k}")

    found = {n: sorted(realized) for n, realized in census.items()}
    return CheckResult("graphs", not failures, f"realized k per n: {found}" + _failures(failures))


def check_characterization(graph_max_n=5):
    """Neighbourhood-based immunity agrees with the closure on every subset."""
    catalog = build_catalog(PAPER_MAX_N)
    failures = []
    tested = 0

    for index, hypergraph in catalog.hypergraphs.items():
        for x in all_subsets(hypergraph.n):
            if x == 0:
                continue
            for rule in HYPERGRAPH_RULES:
                tested += 1
                if is_immune_nbhd(hypergraph, rule, x) != is_immune(hypergraph, rule, x):
                    failures.append(f"{index} {rule} X={x:#b}")
            if is_immune_open_nbhd(hypergraph, x) != is_immune(hypergraph, Rule.R2, x):
                failures.append(f"{index} open-nbhd X={x:#b}")

    for graph in nx.graph_atlas_g()[1:]:
        if graph.number_of_nodes() > graph_max_n:
            break
        hypergraph = from_networkx(graph)
        for x in all_subsets(hypergraph.n):
            if x == 0:
                continue
            tested += 1
            if is_immune_nbhd(hypergraph, Rule.R0, x) != is_immune(hypergraph, Rule.R0, x):
                failures.append(f"graph {hypergraph} X={x:#b}")

    return CheckResult("characterization", not failures, f"{tested} (set, rule) pairs" + _failures(failures))


def check_dynamics(samples=RANDOM_DYNAMICS_SAMPLES, max_n=RANDOM_DYNAMICS_MAX_N, seed=RANDOM_SEED):
    """Confluence, monotonicity, R2 within R1, and rule coincidence on graphs."""
    rng = np.random.default_rng(seed)
    failures = []

    for _ in range(samples):
        n = int(rng.integers(1, max_n + 1))
        hypergraph = random_hypergraph(n, rng)
        black = int(rng.integers(0, 1 << n))
        larger = black | int(rng.integers(0, 1 << n))

        for rule in HYPERGRAPH_RULES:
            fixed, _ = closure(hypergraph, rule, black)
            shuffled, _ = closure(hypergraph, rule, black, rng=rng)
            if fixed != shuffled:
                failures.append(f"confluence {rule} {hypergraph}")
            if not is_subset(fixed, closure(hypergraph, rule, larger)[0]):
                failures.append(f"monotonicity {rule} {hypergraph}")

        if not is_subset(closure(hypergraph, Rule.R2, black)[0], closure(hypergraph, Rule.R1, black)[0]):
            failures.append(f"R2 exceeds R1 on {hypergraph}")

        graph = random_graph(n, GRAPH_EDGE_PROBABILITY, rng)
        results = {closure(graph, rule, black)[0] for rule in Rule}
        if len(results) != 1:
            failures.append(f"rules differ on graph {graph}")

    return CheckResult("dynamics", not failures, f"{samples} random instances" + _failures(failures))


def _failures(failures):
    if not failures:
        return ""
    shown = ", ".join(failures[:5])
    more = f" (+{len(failures) - 5} more)" if len(failures) > 5 else ""
    return f"; failures: {shown}{more}"


_RUNNERS = {
    "duality": check_duality,
    "complete": check_complete,
    "realizations": check_realizations,
    "graphs": check_graphs,
    "characterization": check_characterization,
    "dynamics": check_dynamics,
}


def run_checks(names):
    """Run the named checks in order; 'all' expands to every check."""
    if "all" in names:
        names = CHECKS

    results = []
    for name in names:
        with Timer(f"verify {name}"):
            result = _RUNNERS[name]()
        logger.info(f"{name}: {result.status}")
        results.append(result)
    return results
