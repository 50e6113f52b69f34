"""
Reporting Module
Renders Table 1 / Table 2 as pandas DataFrames (TSV or JSON) and checks the
regenerated tables against the fixture encoding of the published ones
"""

import logging
from pathlib import Path

import pandas as pd

from .catalog import format_index, rule_disagreements, unrealizable_classes
from .config import FAMILY_KEYS
from .hypergraph import canonical_key, members

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("tsv", "json")


def format_sets(masks):
    """Inline edge list, e.g. '{1,2} {3}'; '-' for no sets."""
    if not masks:
        return "-"
    return " ".join("{" + ",".join(str(v) for v in members(m)) + "}" for m in masks)


def table1_frame(table1, inline=False):
    """
    One row per catalog entry: index, edges, F1, F2, I1, I2

    Args:
        table1: CatalogEntry list from build_table1
        inline: Print families as edge lists instead of catalog indices

    Returns:
        DataFrame
    """
    rows = []
    for entry in table1:
        row = {'index': entry.label, 'edges': format_sets(entry.hypergraph.edges)}
        for key in FAMILY_KEYS:
            if inline:
                row[key] = format_sets(entry.families[key].members)
            else:
                row[key] = format_index(entry.family_indices[key])
        rows.append(row)

    return pd.DataFrame(rows, columns=['index', 'edges', *FAMILY_KEYS])


def table2_frame(table2):
    """One row per class Δ listing the hypergraphs realizing it."""
    rows = []
    for index, realizations in table2.items():
        row = {'index': format_index(index)}
        for key in FAMILY_KEYS:
            labels = [format_index(i) for i in realizations[key]]
            row[key] = ",".join(labels) if labels else "-"
        rows.append(row)

    return pd.DataFrame(rows, columns=['index', *FAMILY_KEYS])


def render(frame, fmt="tsv"):
    """Serialize a frame as tab-separated text or a JSON array of records."""
    if fmt == "tsv":
        return frame.to_csv(sep="\t", index=False)
    if fmt == "json":
        return frame.to_json(orient="records", indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}; expected one of {OUTPUT_FORMATS}")


def export_tables(frames, output_dir, fmt="tsv"):
    """
    Write each named frame to output_dir

    Args:
        frames: dict name -> DataFrame
        output_dir: Output directory
        fmt: "tsv" or "json"

    Returns:
        list: Written paths
    """
    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)

    paths = []
    for name, frame in frames.items():
        path = output_dir / f"{name}.{fmt}"
        path.write_text(render(frame, fmt), encoding='utf-8')
        logger.info(f"{name} exported to: {path}")
        paths.append(path)
    return paths


# ============================================================================
# COMPARISON WITH THE PUBLISHED TABLES
# ============================================================================

def paper_index_map(table1, paper):
    """
    Map every published index to the generated index of the same class

    The published hypergraph of row (i, j) is canonicalized on n = i and
    looked up among the generated entries.

    Returns:
        dict: published index -> generated index (None when unmatched)
    """
    generated = {(e.hypergraph.n, canonical_key(e.hypergraph)): e.index for e in table1}
    return {
        row['index']: generated.get((row['hypergraph'].n, canonical_key(row['hypergraph'])))
        for row in paper['table1']
    }


def paper_check(table1, table2, paper):
    """
    Compare regenerated tables with the published ones, up to the index bijection

    Returns:
        DataFrame: columns table, index, generated, status, detail
    """
    mapping = paper_index_map(table1, paper)
    by_index = {entry.index: entry for entry in table1}
    results = []

    matched = [g for g in mapping.values() if g is not None]
    bijective = (len(matched) == len(mapping) == len(table1)
                 and len(set(matched)) == len(matched))
    results.append({
        'table': 'classes',
        'index': '-',
        'generated': '-',
        'status': 'PASS' if bijective else 'FAIL',
        'detail': f"{len(set(matched))} of {len(mapping)} published classes matched, {len(table1)} generated",
    })

    def translate(index):
        return mapping.get(index)

    for row in paper['table1']:
        generated = translate(row['index'])
        entry = by_index.get(generated)
        mismatches = []
        if entry is None:
            mismatches.append("class not generated")
        else:
            for key in FAMILY_KEYS:
                expected = translate(row[key])
                if expected != entry.family_indices[key]:
                    mismatches.append(
                        f"{key}: published {format_index(expected)}, "
                        f"computed {format_index(entry.family_indices[key])}"
                    )
        results.append({
            'table': 'table1',
            'index': format_index(row['index']),
            'generated': format_index(generated),
            'status': 'FAIL' if mismatches else 'PASS',
            'detail': "; ".join(mismatches),
        })

    for index, published in paper['table2'].items():
        generated = translate(index)
        computed = table2.get(generated)
        mismatches = []
        if computed is None:
            mismatches.append("class not generated")
        else:
            for key in FAMILY_KEYS:
                expected = [translate(i) for i in published[key]]
                if None in expected or sorted(expected) != sorted(computed[key]):
                    mismatches.append(f"{key} realizations differ")
        results.append({
            'table': 'table2',
            'index': format_index(index),
            'generated': format_index(generated),
            'status': 'FAIL' if mismatches else 'PASS',
            'detail': "; ".join(mismatches),
        })

    frame = pd.DataFrame(results, columns=['table', 'index', 'generated', 'status', 'detail'])
    failed = int((frame['status'] == 'FAIL').sum())
    logger.info(f"Paper check: {len(frame) - failed} PASS, {failed} FAIL")
    return frame


def catalog_summary(table1, table2):
    """Headline counts of the regenerated tables."""
    per_n = {}
    for entry in table1:
        per_n[entry.index[0]] = per_n.get(entry.index[0], 0) + 1

    return {
        'classes': len(table1),
        'classes_per_n': per_n,
        'rule_disagreements': [format_index(i) for i in rule_disagreements(table1)],
        'unrealizable': [format_index(i) for i in unrealizable_classes(table2)],
    }
