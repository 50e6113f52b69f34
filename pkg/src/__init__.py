"""
Zero forcing on graphs and hypergraphs
Forcing rules, minimal forcing / immune clutters and their realizations

Modules:
    - config: Configuration and constants
    - errors: Domain exceptions
    - hypergraph: Vertex sets, hypergraphs, neighbourhoods and canonical forms
    - forcing: Forcing rules, closures and immune-set characterizations
    - clutters: Minimization, transversals and uniform clutters
    - families: Minimal forcing and immune families
    - constructions: Complete hypergraphs and uniform realizations
    - catalog: Covering clutters up to isomorphism, Tables 1 and 2
    - verification: Exhaustive and randomized checks
    - data_loader: Text / JSON formats and table fixtures
    - reporting: Table rendering and comparison with the published tables
    - utils: Helper functions and utilities
"""

__version__ = "1.0.0"

from . import config
from . import errors
from . import hypergraph
from . import forcing
from . import clutters
from . import families
from . import constructions
from . import catalog
from . import verification
from . import data_loader
from . import reporting
from . import utils

__all__ = [
    'config',
    'errors',
    'hypergraph',
    'forcing',
    'clutters',
    'families',
    'constructions',
    'catalog',
    'verification',
    'data_loader',
    'reporting',
    'utils'
]
