"""Main command router aggregating all subcommand modules."""

import argparse

from eqloc import __version__
from eqloc.commands import brion, check, decompose, lrr, sbar, support
from eqloc.commands.base import format_parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eqloc",
        description="Equivariant localization over diagonalizable groups: LRR, Brion and cyclotomic splitting.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    parents = [format_parent()]

    # Toric
    lrr.register(subparsers, parents)
    brion.register(subparsers, parents)

    # Characters and cyclotomic splitting
    support.register(subparsers, parents)
    sbar.register(subparsers, parents)
    decompose.register(subparsers, parents)

    # Invariant suites
    check.register(subparsers, parents)
    return parser
