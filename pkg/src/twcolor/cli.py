"""``twcolor`` command line: color, adversary, verify, suite, gen."""

from __future__ import annotations

import argparse
import sys

from . import harness
from .online import VICTIMS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twcolor", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", help="color a .gr graph along a .td decomposition")
    p.add_argument("graph")
    p.add_argument("td")
    p.add_argument("--t", type=int, default=None, help="width parameter (default: td width)")
    p.add_argument("--victim", default="paper", choices=sorted(VICTIMS), help="algorithm")

    p = sub.add_parser("adversary", help="force an online algorithm to use g(t,k) colors")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--victim", default="first-fit")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="prefix for .gr, .td and .json outputs")

    p = sub.add_parser("verify", help="run the exact oracles on a graph (and decomposition)")
    p.add_argument("graph")
    p.add_argument("td", nargs="?")

    p = sub.add_parser("suite", help="run an experiment matrix from a JSON config")
    p.add_argument("config", nargs="?", help="JSON config (default: built-in acceptance matrix)")
    p.add_argument("--out", default=None, help="prefix for .json and .csv reports")
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("gen", help="generate a random triangle-free instance")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "color":
        return harness.cmd_color(args.graph, args.td, args.t, args.victim)
    if args.command == "adversary":
        return harness.cmd_adversary(args.t, args.k, args.victim, args.seed, args.out)
    if args.command == "verify":
        return harness.cmd_verify(args.graph, args.td)
    if args.command == "suite":
        return harness.cmd_suite(args.config, args.out, args.format)
    return harness.cmd_gen(args.t, args.n, args.density, args.seed, args.out)


if __name__ == "__main__":
    sys.exit(main())
