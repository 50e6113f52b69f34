#!/usr/bin/env python3
"""
Batch Processing Tool for Many Hypergraphs
Computes F1, F2, I1, I2 for every hypergraph file in a directory and writes
a CSV summary
"""

import sys
import argparse
import logging
from pathlib import Path

import pandas as pd

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src import config
from src import constructions
from src import data_loader
from src import families
from src import reporting
from src import utils
from src.errors import ZeroForcingError

logger = logging.getLogger(__name__)

PATTERNS = ('*.txt', '*.json')


def process_directory(input_dir, output_file=None, jobs=config.DEFAULT_JOBS):
    """
    Compute the four families of every hypergraph file in a directory

    Files that fail to parse or exceed the search bound are reported with
    status ERROR and do not stop the batch.

    Args:
        input_dir: Directory holding .txt / .json hypergraph files
        output_file: CSV summary path (default: <OUTPUT_DIR>/batch_summary.csv)
        jobs: Worker processes per family search

    Returns:
        DataFrame: one row per file
    """
    input_dir = Path(input_dir)
    if not input_dir.is_dir():
        raise FileNotFoundError(f"not a directory: {input_dir}")

    files = sorted(p for pattern in PATTERNS for p in input_dir.glob(pattern))
    if not files:
        logger.warning(f"No hypergraph files found in {input_dir}")

    rows = []
    for idx, path in enumerate(files, 1):
        logger.info(f"Processing {idx}/{len(files)}: {path.name}")
        try:
            hypergraph = data_loader.read_hypergraph(path)
            computed = families.all_families(hypergraph, jobs=jobs)
            row = {'file': path.name, 'n': hypergraph.n, 'edges': reporting.format_sets(hypergraph.edges)}
            for key, family in computed.items():
                row[key] = reporting.format_sets(family.members)
            row['status'] = 'SUCCESS'
        except ZeroForcingError as e:
            logger.error(f"{path.name}: {type(e).__name__}: {e}")
            row = {'file': path.name, 'status': 'ERROR', 'error': f"{type(e).__name__}: {e}"}
        rows.append(row)

    summary = pd.DataFrame(rows)

    output_file = Path(output_file) if output_file else Path(config.OUTPUT_DIR) / 'batch_summary.csv'
    output_file.parent.mkdir(parents=True, exist_ok=True)
    summary.to_csv(output_file, index=False)
    logger.info(f"Summary saved to: {output_file}")

    return summary


def create_sample_directory(output_dir, max_n=5):
    """Write complete hypergraphs and R2 realizations for n <= max_n as sample inputs."""
    output_dir = Path(output_dir)
    written = []
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            written.append(data_loader.write_hypergraph(
                constructions.complete_hypergraph(n, k), output_dir / f"complete_n{n}_k{k}.txt"))
            written.append(data_loader.write_hypergraph(
                constructions.r2_forcing_realization(n, k), output_dir / f"r2_forcing_n{n}_k{k}.txt"))

    print(f"Sample directory created: {output_dir} ({len(written)} files)")
    return written


def main():
    """Main function"""
    parser = argparse.ArgumentParser(
        description='Batch computation of minimal forcing and immune families',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Create sample inputs
  python tools/batch_process.py --create-sample samples/

  # Process a directory
  python tools/batch_process.py --input-dir samples/ --output summary.csv
        """
    )
    parser.add_argument('--input-dir', type=str, help='Directory of hypergraph files')
    parser.add_argument('--output', type=str, default=None, help='CSV summary path')
    parser.add_argument('--create-sample', type=str, metavar='DIR',
                        help='Write sample hypergraph files into DIR')
    parser.add_argument('--jobs', type=int, default=config.DEFAULT_JOBS, help='Worker processes')
    parser.add_argument('--verbose', action='store_true', help='Log progress')
    args = parser.parse_args()

    utils.setup_logging(log_level='INFO' if args.verbose else config.LOG_LEVEL)

    if args.create_sample:
        create_sample_directory(args.create_sample)
        return 0

    if not args.input_dir:
        parser.print_help()
        return 2

    summary = process_directory(args.input_dir, args.output, jobs=args.jobs)
    failed = int((summary['status'] == 'ERROR').sum()) if 'status' in summary else 0

    print(f"Processed: {len(summary)}  Failed: {failed}")
    return 0 if failed == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
