"""
Configuration file for the zero forcing toolkit
Contains all constants, search bounds, paths and logging settings
"""

import logging
import os

logger = logging.getLogger(__name__)

# ============================================================================
# SEARCH BOUNDS
# ============================================================================

# Canonical labelling tries all n! relabelings of the ground set
CANONICAL_MAX_N = 10

# Exhaustive family search visits up to 2^n subsets
SEARCH_BOUND = 12  # unguarded
MAX_SEARCH_BOUND = 20  # reachable only through the environment override
SEARCH_BOUND_ENV = "ZF_SEARCH_BOUND"

# Catalog of covering clutters (Dedekind-scale growth beyond 6)
CATALOG_MAX_N = 6
PAPER_MAX_N = 4  # the shipped Table 1/2 fixture covers |Ω| <= 4

# networkx.graph_atlas_g() lists every graph on at most 7 vertices
GRAPH_CENSUS_MAX_N = 7

# ============================================================================
# EXECUTION SETTINGS
# ============================================================================

DEFAULT_JOBS = 1
RANDOM_SEED = 20210301

# Randomized verification sizes
RANDOM_DUALITY_SAMPLES = 200
RANDOM_DUALITY_MAX_N = 7
RANDOM_DYNAMICS_SAMPLES = 100
RANDOM_DYNAMICS_MAX_N = 8
GRAPH_EDGE_PROBABILITY = 0.4

# ============================================================================
# TABLE SETTINGS
# ============================================================================

# Column order of Table 1 / Table 2
FAMILY_KEYS = ("F1", "F2", "I1", "I2")

# Catalog index label, e.g. H4.13
INDEX_TEMPLATE = "H{n}.{j}"

# ============================================================================
# PATHS
# ============================================================================

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

DATA_DIR = os.path.join(PROJECT_ROOT, 'data')
EXAMPLES_DIR = os.path.join(DATA_DIR, 'examples')
PAPER_TABLES_PATH = os.path.join(DATA_DIR, 'paper_tables.json')

OUTPUT_DIR = os.path.join(PROJECT_ROOT, 'outputs')

# ============================================================================
# LOGGING SETTINGS
# ============================================================================

LOG_LEVEL = os.environ.get('ZF_LOG_LEVEL', 'WARNING')  # DEBUG, INFO, WARNING, ERROR
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
LOG_FILE = None  # stderr only unless a path is given


def search_bound():
    """
    Effective exhaustive-search bound, honouring the ZF_SEARCH_BOUND override

    Returns:
        int: Largest ground-set size accepted by the family enumerators
    """
    raw = os.environ.get(SEARCH_BOUND_ENV)
    if raw is None or raw.strip() == "":
        return SEARCH_BOUND

    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {SEARCH_BOUND_ENV}={raw!r}")
        return SEARCH_BOUND

    if value < 1:
        logger.warning(f"Ignoring {SEARCH_BOUND_ENV}={value}; must be positive")
        return SEARCH_BOUND

    if value > MAX_SEARCH_BOUND:
        logger.warning(f"{SEARCH_BOUND_ENV}={value} clamped to {MAX_SEARCH_BOUND}")
        return MAX_SEARCH_BOUND

    return value
