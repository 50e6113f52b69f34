#!/usr/bin/env python3
"""
Zero forcing on graphs and hypergraphs
Command-line entry point

Commands:
1. closure / check-forcing / check-immune / sigma / forcing-number: single-hypergraph queries
2. families / transversal: minimal forcing and immune clutters
3. construct: complete hypergraphs and uniform realizations
4. catalog / tables: covering clutters up to isomorphism and Tables 1-2
5. verify: exhaustive and randomized checks of the structural results
"""

import argparse
import json
import logging
import sys
from pathlib import Path

import numpy as np
import pandas as pd

# Add src to Python path
sys.path.insert(0, str(Path(__file__).parent))

from src import catalog
from src import clutters
from src import config
from src import constructions
from src import data_loader
from src import families
from src import forcing
from src import reporting
from src import utils
from src import verification
from src.errors import EmptySet, RuleNotApplicable, VertexOutOfRange, ZeroForcingError
from src.hypergraph import members, vertex_set

logger = logging.getLogger(__name__)

RULES = [rule.value for rule in forcing.Rule]

CONSTRUCTIONS = {
    'complete': constructions.complete_hypergraph,
    'r1-forcing': constructions.r1_forcing_realization,
    'r1-immune': constructions.r1_immune_realization,
    'r2-forcing': constructions.r2_forcing_realization,
    'r2-immune': constructions.r2_immune_realization,
    'graph-forcing': constructions.graph_forcing_realization,
    'graph-immune': constructions.graph_immune_realization,
}


def _vertex_arg(text, hypergraph):
    """Comma-separated vertex list checked against the ground set."""
    vertices = utils.parse_vertex_list(text)
    for v in vertices:
        if v < 1 or v > hypergraph.n:
            raise VertexOutOfRange(f"vertex {v} outside 1..{hypergraph.n}")
    return vertex_set(vertices)


def _yes_no(flag):
    return "yes" if flag else "no"


def _step_line(number, step):
    return (f"step {number}: {{{','.join(map(str, members(step.trigger)))}}} in "
            f"{{{','.join(map(str, members(step.edge)))}}} -> "
            f"{utils.format_vertices(members(step.newly_black))}")


# ============================================================================
# COMMANDS
# ============================================================================

def cmd_closure(args, out):
    hypergraph = data_loader.read_hypergraph(args.input)
    black = _vertex_arg(args.black, hypergraph)

    rng = None
    if args.random_order:
        rng = np.random.default_rng(args.seed)

    final, trace = forcing.closure(hypergraph, args.rule, black, rng=rng)
    out.write(f"closure: {utils.format_vertices(members(final))}\n")
    out.write(f"trace: {len(trace)} steps\n")
    for number, step in enumerate(trace, start=1):
        out.write(_step_line(number, step) + "\n")
    return 0


def cmd_check_forcing(args, out):
    hypergraph = data_loader.read_hypergraph(args.input)
    candidate = _vertex_arg(args.set, hypergraph)
    if candidate == 0:
        raise EmptySet("forcing sets are nonempty")
    final, _ = forcing.closure(hypergraph, args.rule, candidate)
    out.write(f"forcing: {_yes_no(final == hypergraph.ground)}\n")
    out.write(f"closure: {utils.format_vertices(members(final))}\n")
    return 0


def cmd_check_immune(args, out):
    hypergraph = data_loader.read_hypergraph(args.input)
    candidate = _vertex_arg(args.set, hypergraph)

    if args.method == 'closure':
        result = forcing.is_immune(hypergraph, args.rule, candidate)
    elif args.method == 'nbhd':
        result = forcing.is_immune_nbhd(hypergraph, args.rule, candidate)
    else:
        rule = forcing.check_rule(hypergraph, args.rule)
        if rule is forcing.Rule.R1:
            raise RuleNotApplicable("the open-neighbourhood test covers rules r0 and r2")
        result = forcing.is_immune_open_nbhd(hypergraph, candidate)

    out.write(f"immune: {_yes_no(result)}\n")
    return 0


def cmd_sigma(args, out):
    hypergraph = data_loader.read_hypergraph(args.input)
    x = _vertex_arg(args.set, hypergraph)
    edge = _vertex_arg(args.edge, hypergraph)

    for name, values in (('sigma1', forcing.sigma1(hypergraph, x, edge)),
                         ('sigma2', forcing.sigma2(hypergraph, x, edge))):
        out.write(f"{name}: {len(values)}\n")
        for value in values:
            out.write(f"  {utils.format_vertices(members(value))}\n")
    return 0


def cmd_forcing_number(args, out):
    hypergraph = data_loader.read_hypergraph(args.input)
    witness = forcing.minimum_forcing_set(hypergraph, args.rule)
    out.write(f"forcing number: {witness.bit_count()}\n")
    out.write(f"witness: {utils.format_vertices(members(witness))}\n")
    return 0


def cmd_families(args, out):
    hypergraph = data_loader.read_hypergraph(args.input)

    blocks = []
    if args.kind in ('forcing', 'both'):
        family = families.minimal_forcing_family(hypergraph, args.rule, jobs=args.jobs)
        blocks.append(("minimal forcing sets", family))
    if args.kind in ('immune', 'both'):
        family = families.minimal_immune_family(hypergraph, args.rule, method=args.method, jobs=args.jobs)
        blocks.append(("minimal immune sets", family))

    for title, family in blocks:
        if args.kind == 'both':
            out.write(f"# {title} ({args.rule})\n")
        out.write(data_loader.format_clutter(family))
    return 0


def cmd_transversal(args, out):
    hypergraph = data_loader.read_hypergraph(args.input)
    out.write(data_loader.format_clutter(clutters.transversal(clutters.from_hypergraph(hypergraph))))
    return 0


def cmd_construct(args, out):
    hypergraph = CONSTRUCTIONS[args.family](args.n, args.k)
    if args.format == 'json':
        out.write(json.dumps(data_loader.hypergraph_to_dict(hypergraph)) + "\n")
    else:
        out.write(data_loader.format_hypergraph(hypergraph))
    return 0


def cmd_catalog(args, out):
    built = catalog.build_catalog(args.n_max)
    rows = [{'index': catalog.format_index(index), 'edges': reporting.format_sets(h.edges)}
            for index, h in built.hypergraphs.items()]
    out.write(reporting.render(pd.DataFrame(rows, columns=['index', 'edges']), args.format))
    return 0


def cmd_tables(args, out):
    n_max = args.n_max
    if args.paper_check and n_max != config.PAPER_MAX_N:
        logger.warning(f"--paper-check compares n <= {config.PAPER_MAX_N}; ignoring --n-max {n_max}")
        n_max = config.PAPER_MAX_N

    table1 = catalog.build_table1(n_max, jobs=args.jobs)
    table2 = catalog.build_table2(n_max, table1=table1)

    if args.paper_check:
        paper = data_loader.load_paper_tables()
        frame = reporting.paper_check(table1, table2, paper)
        out.write(reporting.render(frame, args.format))
        return 0 if (frame['status'] == 'PASS').all() else 1

    frames = {}
    if args.table in ('1', 'both'):
        frames['table1'] = reporting.table1_frame(table1, inline=args.inline)
    if args.table in ('2', 'both'):
        frames['table2'] = reporting.table2_frame(table2)

    if args.output_dir:
        reporting.export_tables(frames, args.output_dir, fmt=args.format)

    for name, frame in frames.items():
        if len(frames) > 1:
            out.write(f"# {name}\n")
        out.write(reporting.render(frame, args.format))
    return 0


def cmd_verify(args, out):
    results = verification.run_checks([args.check])
    for result in results:
        out.write(f"{result.name}: {result.status} ({result.detail})\n")
    return 0 if all(r.passed for r in results) else 1


# ============================================================================
# ARGUMENTS
# ============================================================================

def _add_input(sub):
    sub.add_argument('--input', required=True,
                     help='Hypergraph file in the text or JSON format ("-" for stdin)')


def _add_rule(sub):
    sub.add_argument('--rule', required=True, choices=RULES,
                     help='Forcing rule (r0 requires a graph)')


def build_parser():
    """Argument parser with one subcommand per operation"""
    parser = argparse.ArgumentParser(
        prog='main.py',
        description='Zero forcing, forcing / immune clutters and their realizations on hypergraphs',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Closure of {1,2} under R1
  python main.py closure --rule r1 --black 1,2 --input data/examples/worked_example.txt

  # Minimal forcing sets under R2
  python main.py families --rule r2 --input data/examples/worked_example.txt

  # Hypergraph whose minimal R2-forcing sets are all 2-subsets of {1..4}
  python main.py construct r2-forcing --n 4 --k 2

  # Regenerate Table 1 and compare with the published tables
  python main.py tables --paper-check
        """
    )

    parser.add_argument('--verbose', action='store_true', help='Log progress (INFO)')
    parser.add_argument('--debug', action='store_true', help='Log every forcing step (DEBUG)')
    parser.add_argument('--check-deps', action='store_true', help='Check dependencies and exit')

    commands = parser.add_subparsers(dest='command', metavar='command')

    sub = commands.add_parser('closure', help='Final black set R_i*(B) with its trace')
    _add_input(sub)
    _add_rule(sub)
    sub.add_argument('--black', required=True, help='Initially black vertices, e.g. 1,2')
    sub.add_argument('--random-order', action='store_true',
                     help='Fire a random fireable edge at each step')
    sub.add_argument('--seed', type=int, default=config.RANDOM_SEED,
                     help=f'Seed for --random-order (default: {config.RANDOM_SEED})')
    sub.set_defaults(handler=cmd_closure)

    sub = commands.add_parser('check-forcing', help='Is the set forcing?')
    _add_input(sub)
    _add_rule(sub)
    sub.add_argument('--set', required=True, help='Vertex set, e.g. 2,3')
    sub.set_defaults(handler=cmd_check_forcing)

    sub = commands.add_parser('check-immune', help='Is the set immune?')
    _add_input(sub)
    _add_rule(sub)
    sub.add_argument('--set', required=True, help='Vertex set, e.g. 1,2')
    sub.add_argument('--method', choices=['closure', 'nbhd', 'open-nbhd'], default='closure',
                     help='Run the closure, or use a neighbourhood characterization')
    sub.set_defaults(handler=cmd_check_immune)

    sub = commands.add_parser('sigma', help='Sigma_1(X, A) and Sigma_2(X, A)')
    _add_input(sub)
    sub.add_argument('--set', required=True, help='The set X')
    sub.add_argument('--edge', required=True, help='The hyperedge A')
    sub.set_defaults(handler=cmd_sigma)

    sub = commands.add_parser('forcing-number', help='Size of a smallest forcing set')
    _add_input(sub)
    _add_rule(sub)
    sub.set_defaults(handler=cmd_forcing_number)

    sub = commands.add_parser('families', help='Minimal forcing / immune sets')
    _add_input(sub)
    _add_rule(sub)
    sub.add_argument('--kind', choices=['forcing', 'immune', 'both'], default='forcing')
    sub.add_argument('--method', choices=list(families.IMMUNE_METHODS), default='transversal',
                     help='How immune sets are computed')
    sub.add_argument('--jobs', type=int, default=config.DEFAULT_JOBS, help='Worker processes')
    sub.set_defaults(handler=cmd_families)

    sub = commands.add_parser('transversal', help='Minimal hitting sets of the edges')
    _add_input(sub)
    sub.set_defaults(handler=cmd_transversal)

    sub = commands.add_parser('construct', help='Complete hypergraphs and uniform realizations')
    sub.add_argument('family', choices=list(CONSTRUCTIONS))
    sub.add_argument('--n', type=int, required=True, help='Ground-set size')
    sub.add_argument('--k', type=int, required=True, help='Uniform clutter size')
    sub.add_argument('--format', choices=['text', 'json'], default='text')
    sub.set_defaults(handler=cmd_construct)

    sub = commands.add_parser('catalog', help='Covering clutters up to isomorphism')
    sub.add_argument('--n-max', type=int, default=config.PAPER_MAX_N)
    sub.add_argument('--format', choices=list(reporting.OUTPUT_FORMATS), default='tsv')
    sub.set_defaults(handler=cmd_catalog)

    sub = commands.add_parser('tables', help='Regenerate Tables 1 and 2')
    sub.add_argument('--table', choices=['1', '2', 'both'], default='1')
    sub.add_argument('--inline', action='store_true', help='Print families as edge lists')
    sub.add_argument('--format', choices=list(reporting.OUTPUT_FORMATS), default='tsv')
    sub.add_argument('--paper-check', action='store_true',
                     help='Compare with the published tables, PASS/FAIL per row')
    sub.add_argument('--n-max', type=int, default=config.PAPER_MAX_N)
    sub.add_argument('--jobs', type=int, default=config.DEFAULT_JOBS, help='Worker processes')
    sub.add_argument('--output-dir', default=None, help='Also write the tables to this directory')
    sub.set_defaults(handler=cmd_tables)

    sub = commands.add_parser('verify', help='Exhaustive and randomized checks')
    sub.add_argument('check', choices=[*verification.CHECKS, 'all'])
    sub.set_defaults(handler=cmd_verify)

    return parser


def run(argv=None, out=None, err=None):
    """
    Parse arguments and run one command

    Returns:
        int: 0 on success, 1 on domain errors or failed checks, 2 on usage errors
    """
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()

    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2

    level = 'DEBUG' if args.debug else 'INFO' if args.verbose else config.LOG_LEVEL
    utils.setup_logging(log_level=level)

    if args.check_deps:
        for package, status in utils.check_dependencies().items():
            out.write(f"{package:15s}: {status}\n")
        return 0

    if args.command is None:
        parser.print_usage(err)
        return 2

    try:
        return args.handler(args, out)
    except ZeroForcingError as e:
        err.write(f"error: {type(e).__name__}: {e}\n")
        return 1
    except ValueError as e:
        err.write(f"error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(run())
