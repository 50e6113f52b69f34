"""
Data Loader Module
Reads and writes hypergraphs and clutters in the text and JSON formats,
and loads the fixture encoding of the published tables.

Text format:
    n <size>
    e <v1> <v2> ... <vk>     (one line per edge, 1-based labels)
    # comment lines are ignored
"""

import json
import logging
import sys
from pathlib import Path

from .config import FAMILY_KEYS, PAPER_TABLES_PATH
from .errors import HypergraphFormatError
from .hypergraph import members, validate
from .utils import load_json

logger = logging.getLogger(__name__)


# ============================================================================
# TEXT FORMAT
# ============================================================================

def parse_hypergraph(text):
    """
    Parse the text format into a validated Hypergraph

    Args:
        text: File contents

    Returns:
        Hypergraph

    Raises:
        HypergraphFormatError: malformed lines or a missing `n` header
    """
    n = None
    edges = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue

        tag, *fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise HypergraphFormatError(f"line {lineno}: non-integer field in {raw.strip()!r}") from None

        if tag == 'n':
            if n is not None:
                raise HypergraphFormatError(f"line {lineno}: duplicate 'n' header")
            if len(values) != 1 or values[0] < 0:
                raise HypergraphFormatError(f"line {lineno}: expected 'n <size>'")
            n = values[0]
        elif tag == 'e':
            if n is None:
                raise HypergraphFormatError(f"line {lineno}: edge before the 'n' header")
            edges.append(values)
        else:
            raise HypergraphFormatError(f"line {lineno}: unknown record {tag!r}")

    if n is None:
        raise HypergraphFormatError("missing 'n <size>' header")

    return validate(n, edges)


def format_edges(n, masks):
    lines = [f"n {n}"]
    for mask in masks:
        lines.append("e " + " ".join(str(v) for v in members(mask)))
    return "\n".join(lines) + "\n"


def format_hypergraph(hypergraph):
    """Text format of a Hypergraph, edges in canonical order."""
    return format_edges(hypergraph.n, hypergraph.edges)


def format_clutter(clutter):
    """A clutter is written exactly like an edge set."""
    return format_edges(clutter.n, clutter.members)


# ============================================================================
# JSON FORMAT
# ============================================================================

def hypergraph_to_dict(hypergraph):
    return {'vertices': hypergraph.n, 'edges': hypergraph.edge_lists()}


def hypergraph_from_dict(data):
    """Build a Hypergraph from {"vertices": n, "edges": [[...], ...]}."""
    if not isinstance(data, dict) or 'vertices' not in data or 'edges' not in data:
        raise HypergraphFormatError("expected an object with 'vertices' and 'edges'")
    edges = data['edges']
    if not isinstance(edges, list) or not all(isinstance(edge, list) for edge in edges):
        raise HypergraphFormatError("'edges' must be an array of arrays")
    return validate(data['vertices'], edges)


def parse_hypergraph_json(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise HypergraphFormatError(f"invalid JSON: {e}") from None
    return hypergraph_from_dict(data)


def clutter_to_dict(clutter):
    return {'vertices': clutter.n, 'edges': clutter.member_lists()}


# ============================================================================
# FILES
# ============================================================================

def read_hypergraph(source):
    """
    Read a hypergraph from a path, or from stdin when source is "-"

    JSON is detected from a .json suffix or a leading '{'.
    """
    try:
        if str(source) == '-':
            text = sys.stdin.read()
            is_json = text.lstrip().startswith('{')
        else:
            path = Path(source)
            if not path.exists():
                raise HypergraphFormatError(f"no such file: {path}")
            text = path.read_text(encoding='utf-8')
            is_json = path.suffix.lower() == '.json' or text.lstrip().startswith('{')
    except (OSError, UnicodeDecodeError) as e:
        raise HypergraphFormatError(f"cannot read {source}: {e}") from None

    hypergraph = parse_hypergraph_json(text) if is_json else parse_hypergraph(text)
    logger.debug(f"Read {hypergraph} from {source}")
    return hypergraph


def write_hypergraph(hypergraph, filepath):
    """Write a hypergraph in the text format, or JSON for a .json path."""
    filepath = Path(filepath)
    filepath.parent.mkdir(parents=True, exist_ok=True)

    if filepath.suffix.lower() == '.json':
        content = json.dumps(hypergraph_to_dict(hypergraph), indent=2) + "\n"
    else:
        content = format_hypergraph(hypergraph)

    filepath.write_text(content, encoding='utf-8')
    logger.info(f"Hypergraph written to: {filepath}")
    return filepath


def load_paper_tables(filepath=PAPER_TABLES_PATH):
    """
    Load the fixture encoding of Tables 1 and 2

    Indices are converted to (i, j) tuples and every Table 1 row gets its
    printed hypergraph validated on n = i.

    Returns:
        dict: 'table1' -> list of rows, 'table2' -> {index: {key: [indices]}}
    """
    data = load_json(filepath)
    if data is None:
        raise HypergraphFormatError(f"missing table fixture: {filepath}")

    table1 = []
    for row in data['table1']:
        index = tuple(row['index'])
        table1.append({
            'index': index,
            'hypergraph': validate(index[0], row['edges']),
            **{key: tuple(row[key]) for key in FAMILY_KEYS},
        })

    table2 = {}
    for row in data['table2']:
        table2[tuple(row['index'])] = {
            key: [tuple(i) for i in row[key]] for key in FAMILY_KEYS
        }

    logger.debug(f"Loaded {len(table1)} Table 1 rows and {len(table2)} Table 2 rows")
    return {'table1': table1, 'table2': table2}
