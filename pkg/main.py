# File: main.py

#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Main entry point for l1kit.
Display sets, rSPR graphs and level-1 network reconstruction from the command line.

Exit codes: 0 success, 1 usage error, 2 input error, 3 no level-1 network exists.
"""

import argparse
import json
import sys
from typing import Any, List, Optional

from src.benchmark import fit_exponent, growth_factors
from src.oracle import GeneratorConfig, TARGETS
from src.phylo import network_to_dot, parse_enewick, serialize_enewick, serialize_newick
from src.phylo.exceptions import PhyloError
from src.pipeline import L1Pipeline
from src.utils.config_loader import LOG_LEVELS, TIE_BREAKS, load_config
from src.utils.logging_utils import get_module_logger, setup_logger

# Module logger
logger = get_module_logger("main")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_NO_NETWORK = 3

FORMATS = {
    'display-set': ('json', 'newick'),
    'rspr-graph': ('json', 'dot'),
    'check': ('json',),
    'reconstruct': ('json', 'enewick', 'dot'),
    'enumerate': ('json', 'enewick'),
    'classify': ('json',),
    'oracle': ('text', 'json'),
}


class UsageError(Exception):
    """Raised instead of argparse's own exit so usage problems map to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def setup_argparse(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Set up and parse command line arguments."""
    parser = _Parser(prog='l1kit', description='Level-1 phylogenetic network toolkit.')

    common = _Parser(add_help=False)
    common.add_argument('--pretty', action='store_true', help='Indent JSON output')
    common.add_argument('--cap', type=int, default=None, help='Largest reticulation count to enumerate')
    common.add_argument(
        '--log-level',
        type=str.upper,
        default=None,
        choices=LOG_LEVELS,
        help='Set the logging level'
    )
    common.add_argument('--log-file', type=str, help='Optional log file path')
    common.add_argument('--all', action='store_true', help='Also rebuild every valid labelling')
    common.add_argument('--seed', type=int, default=0, help='Seed for randomised oracle runs')

    # Cache parameters
    common.add_argument('--clear-cache', action='store_true', help='Clear the result cache before running')
    common.add_argument(
        '--cache-days',
        type=int,
        default=None,
        help='With --clear-cache, only clear entries older than this many days'
    )

    subparsers = parser.add_subparsers(dest='command', parser_class=_Parser)
    subparsers.required = True
    help_text = {
        'display-set': 'Trees displayed by an eNewick network',
        'rspr-graph': 'rSPR graph of a tree file with moving-subtree pairs',
        'check': 'Hypercube and nested subtree property report',
        'reconstruct': 'Reconstruct a level-1 network from its display set',
        'enumerate': 'All level-1 networks with the given display set',
        'classify': 'Tree-child, normal and level-1 membership of a network',
        'oracle': 'Brute-force trees, random networks and runtime scaling',
    }
    for name, formats in FORMATS.items():
        sub = subparsers.add_parser(name, parents=[common], help=help_text[name])
        sub.add_argument('--format', choices=formats, default=formats[0], help='Output format')
        if name != 'oracle':
            sub.add_argument('input', nargs='?', default='-', help="Input file, '-' or absent for stdin")
        if name in ('check', 'reconstruct', 'enumerate'):
            sub.add_argument(
                '--tie-break',
                choices=TIE_BREAKS,
                default=None,
                help=(
                    "Labelling tie-break; defaults to L1KIT_TIE_BREAK, else 'largest' "
                    "(largest moving cluster first)"
                )
            )
        if name == 'oracle':
            sub.add_argument('--action', choices=('trees', 'random-network', 'scaling'), default='trees')
            sub.add_argument('--leaves', type=int, default=4)
            sub.add_argument('--reticulations', type=int, default=0)
            sub.add_argument('--target', choices=TARGETS, default='level1')
            sub.add_argument('--no-trivial', action='store_true', help='Reject trivial reticulations')
            sub.add_argument('--repeats', type=int, default=3)

    return parser.parse_args(argv)


def validate_args(args: argparse.Namespace) -> bool:
    """
    Validate command line arguments.

    Args:
        args: Command line arguments.

    Returns:
        bool: True if arguments are valid, False otherwise.
    """
    if args.cap is not None and args.cap < 0:
        logger.error("--cap must be non-negative")
        return False
    if args.seed < 0:
        logger.error("--seed must be non-negative")
        return False
    if args.cache_days is not None and args.cache_days < 0:
        logger.error("--cache-days must be non-negative")
        return False
    if args.command == 'oracle':
        if args.leaves < 1:
            logger.error("--leaves must be at least 1")
            return False
        if args.reticulations < 0 or args.repeats < 1:
            logger.error("--reticulations must be non-negative and --repeats positive")
            return False
    return True


def read_input(path: str) -> str:
    """Read an input file, or stdin for '-'."""
    if path == '-':
        return sys.stdin.read()
    with open(path, 'r') as f:
        return f.read()


def emit(text: str) -> None:
    """Write command output to stdout with a trailing newline."""
    sys.stdout.write(text if text.endswith('\n') else text + '\n')


def dump_json(data: Any, pretty: bool) -> str:
    if pretty:
        return json.dumps(data, indent=2)
    return json.dumps(data, separators=(',', ':'))


def handle_cache(pipeline: L1Pipeline, args: argparse.Namespace) -> None:
    """
    Handle cache operations based on arguments.

    Args:
        pipeline: Pipeline instance.
        args: Command line arguments.
    """
    if args.clear_cache:
        count = pipeline.clear_cache(days_old=args.cache_days)
        if args.cache_days is not None:
            logger.info(f"Cleared {count} cache entries older than {args.cache_days} days")
        else:
            logger.info(f"Cleared {count} cache entries")
    elif args.cache_days is not None:
        logger.warning("--cache-days has no effect without --clear-cache")


def run_command(pipeline: L1Pipeline, args: argparse.Namespace) -> int:
    """Execute one subcommand and return its exit code."""
    command = args.command

    if command in ('display-set', 'classify'):
        network = pipeline.load_network(read_input(args.input))
        if command == 'classify':
            emit(dump_json(pipeline.classify(network), args.pretty))
            return EXIT_OK
        ds = pipeline.display_set(network, cap=args.cap)
        if args.format == 'newick':
            emit('\n'.join(serialize_newick(t) for t in ds.trees))
        else:
            emit(dump_json(ds.to_dict(), args.pretty))
        return EXIT_OK

    if command == 'oracle':
        return run_oracle(pipeline, args)

    trees = pipeline.load_trees(read_input(args.input))

    if command == 'rspr-graph':
        g, hmap = pipeline.rspr_graph(trees)
        subsets = hmap.bit_edge_subsets if hmap else None
        if args.format == 'dot':
            emit(g.to_dot(subsets))
        else:
            data = g.to_dict(subsets)
            data['hypercube_dimension'] = hmap.k if hmap else None
            emit(dump_json(data, args.pretty))
        return EXIT_OK

    if command == 'check':
        report = pipeline.check(trees, tie_break=args.tie_break)
        emit(dump_json(report, args.pretty))
        return EXIT_OK if report['decision'] == 'yes' else EXIT_NO_NETWORK

    data = pipeline.reconstruct(trees, all_networks=command == 'enumerate' or args.all, tie_break=args.tie_break)
    if data['decision'] != 'yes':
        if args.format == 'json':
            emit(dump_json(data, args.pretty))
        print(f"No level-1 network displays exactly these trees ({data['reason']})", file=sys.stderr)
        return EXIT_NO_NETWORK

    if args.format == 'json':
        emit(dump_json(data, args.pretty))
    elif args.format == 'dot':
        emit(network_to_dot(parse_enewick(data['network'])))
    elif command == 'enumerate':
        emit('\n'.join(data['all_networks']))
    else:
        emit(data['network'])
    return EXIT_OK


def run_oracle(pipeline: L1Pipeline, args: argparse.Namespace) -> int:
    """The oracle subcommand: tree enumeration, random networks and scaling runs."""
    if args.action == 'trees':
        newicks = [serialize_newick(t) for t in pipeline.oracle_trees(args.leaves)]
        emit(dump_json(newicks, args.pretty) if args.format == 'json' else '\n'.join(newicks))
        return EXIT_OK

    if args.action == 'random-network':
        cfg = GeneratorConfig(
            leaves=args.leaves,
            reticulations=args.reticulations,
            target=args.target,
            seed=args.seed,
            no_trivial=args.no_trivial,
        )
        network = pipeline.oracle_random_network(cfg)
        if args.format == 'json':
            emit(dump_json({'network': serialize_enewick(network), **pipeline.classify(network)}, args.pretty))
        else:
            emit(serialize_enewick(network))
        return EXIT_OK

    df = pipeline.oracle_scaling(args.leaves, seed=args.seed, repeats=args.repeats)
    if args.format == 'json':
        emit(dump_json({
            'runs': df.to_dict(orient='records'),
            'growth_factors': growth_factors(df).tolist(),
            'exponent': fit_exponent(df),
        }, args.pretty))
    else:
        emit(df.to_string(index=False) + f"\nfitted exponent: {fit_exponent(df):.2f}")
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """Main function: parse arguments, configure and run one subcommand."""
    try:
        args = setup_argparse(argv)
    except UsageError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE

    try:
        config = load_config()
    except ValueError as e:
        print(f"Invalid configuration: {e}", file=sys.stderr)
        return EXIT_USAGE

    setup_logger(config=config, log_level=args.log_level, log_file=args.log_file)
    if not validate_args(args):
        return EXIT_USAGE
    if args.cap is not None:
        config['limits']['display_cap'] = args.cap

    try:
        pipeline = L1Pipeline(config)
        handle_cache(pipeline, args)
        return run_command(pipeline, args)
    except PhyloError as e:
        print(f"Input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as e:
        print(f"Cannot read input: {e}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as e:
        logger.exception(f'l1kit failed with error: {e}')
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
