#!/usr/bin/env python
"""
Run Script for the descent bijections

This script provides the command-line interface: map single permutations,
print the phi table, run verification suites, count permutations by descent
set and transfer permutations between descent classes.
"""
import sys
import argparse

from pydantic import ValidationError
from dotenv import load_dotenv

from app import init_app
from app.models import CliConfig
from app.cli.commands import (
    EXIT_USAGE,
    cmd_count,
    cmd_map,
    cmd_table,
    cmd_transfer,
    cmd_verify,
)
from app.descents.tasks import SUITES
from config import config_by_name

# Load environment variables from .env file
load_dotenv()


def _common_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text",
                        help="Output format (default: text)")
    common.add_argument("--trace", action="store_true",
                        help="Print the switch log of phi/psi runs")
    common.add_argument("--jobs", type=int, default=None,
                        help="Worker processes for verification (default: profile setting)")
    common.add_argument("--profile", choices=["standard", "extended", "testing"],
                        default="standard",
                        help="Size bounds and logging profile (default: standard)")
    common.add_argument("--log-level", default=None,
                        help="Override the profile log level (DEBUG, INFO, ...)")
    return common


def build_parser():
    """Build the argument parser with one subparser per command."""
    common = _common_parser()
    parser = argparse.ArgumentParser(description="Descent-preserving bijections on cycles")
    subparsers = parser.add_subparsers(dest="command", required=True)

    map_parser = subparsers.add_parser("map", parents=[common], help="Apply one bijection")
    map_parser.add_argument("kind", choices=["phi", "psi", "u", "t0", "cyclesu"])
    source = map_parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--cycle", help='Cycle notation, e.g. "(3,1,4,2,5)"')
    source.add_argument("--perm", help='One-line or cycle notation, e.g. "3 4 1 2"')
    source.add_argument("--word", help='Marked word, e.g. "0 1 2"')
    map_parser.add_argument("--m", type=int, default=None, help="Position for cyclesu")
    map_parser.add_argument("--inverse", action="store_true", help="Apply the inverse map")
    map_parser.set_defaults(handler=cmd_map)

    table_parser = subparsers.add_parser("table", parents=[common], help="phi on every (n+1)-cycle")
    table_parser.add_argument("--n", type=int, required=True)
    table_parser.set_defaults(handler=cmd_table)

    verify_parser = subparsers.add_parser("verify", parents=[common], help="Run a verification suite")
    verify_parser.add_argument("--suite", choices=sorted(SUITES) + ["all"], required=True)
    verify_parser.add_argument("--n", type=int, default=None)
    verify_parser.set_defaults(handler=cmd_verify)

    count_parser = subparsers.add_parser("count", parents=[common], help="Count permutations by descent set")
    count_parser.add_argument("--n", type=int, required=True)
    count_parser.add_argument("--subset", default="", help='Descent set, e.g. "2" or "{1,3}"')
    count_parser.add_argument("--mode", choices=["exact", "contained", "enumerate", "distribution"],
                              default="exact")
    count_parser.add_argument("--family", choices=["S", "C", "T0", "U", "derangements"], default=None,
                              help="Enumerate this family for --mode distribution")
    count_parser.set_defaults(handler=cmd_count)

    transfer_parser = subparsers.add_parser("transfer", parents=[common],
                                            help="Cycle-type preserving transfer between descent classes")
    transfer_parser.add_argument("--perm", required=True)
    transfer_parser.add_argument("--from", dest="source", required=True)
    transfer_parser.add_argument("--to", dest="target", required=True)
    transfer_parser.add_argument("--show-necklaces", action="store_true")
    transfer_parser.set_defaults(handler=cmd_transfer)

    return parser


def parse_args(argv=None):
    """Parse command line arguments."""
    return build_parser().parse_args(argv)


def main(argv=None, out=None, err=None):
    """Main function."""
    args = parse_args(argv)
    err = err or sys.stderr

    try:
        CliConfig(
            command=args.command,
            output_format=args.format,
            trace=args.trace,
            jobs=args.jobs if args.jobs is not None else 1,
            profile=args.profile,
            n=getattr(args, 'n', None),
            subset=getattr(args, 'subset', None),
            kind=getattr(args, 'kind', None),
            suite=getattr(args, 'suite', None),
        )
    except ValidationError as e:
        print(f"error: {e.errors()[0]['msg']}", file=err)
        return EXIT_USAGE

    config = init_app(config_by_name[args.profile], log_level=args.log_level)
    return args.handler(args, config, out=out, err=err)


if __name__ == "__main__":
    sys.exit(main())
