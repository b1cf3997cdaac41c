"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 desk-scale cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify
from .caps import CapExceededError
from .compare import compare_on_unit_interval
from .export import (
    comparison_report,
    curve_csv,
    hasse_dot,
    parse_grid,
    poset_json,
    rel_report,
    to_json,
)
from .networks import MMN, mmn_from_word
from .oracle import KERNEL, brute_force_rel
from .polynomials import compose_rel, nform_to_standard, standard_to_nform
from .posets import build_poset
from .words import Word, all_words


def _parse_word(s: str) -> Word:
    return Word.from_string(s)


def _load_network(path: str) -> MMN:
    with open(path) as fh:
        return MMN.from_dict(json.load(fh))


def cmd_rel(args) -> int:
    if args.word is not None:
        word = _parse_word(args.word)
        network = mmn_from_word(word)
    else:
        word = None
        network = _load_network(args.network)
    if args.brute_force or word is None:
        nform = brute_force_rel(network)
        poly = nform_to_standard(nform)
    else:
        poly = compose_rel(word)
        nform = standard_to_nform(poly)
    sys.stdout.write(to_json(rel_report(network, word, poly, nform)))
    return 0


def cmd_compare(args) -> int:
    u, v = _parse_word(args.left), _parse_word(args.right)
    result = compare_on_unit_interval(
        compose_rel(u), compose_rel(v), fast=not args.no_fast
    )
    sys.stdout.write(to_json(comparison_report(str(u), str(v), result)))
    return 0


def cmd_poset(args) -> int:
    poset = build_poset(args.m, order=args.order)
    if args.format == "dot":
        sys.stdout.write(hasse_dot(poset))
    else:
        sys.stdout.write(poset_json(poset))
    return 0


def cmd_verify(args) -> int:
    names = args.suite or sorted(verify.SUITES)
    reports, ok = verify.run_suites(names)
    sys.stdout.write(to_json({"kernel": KERNEL, "reports": reports, "passed": ok}))
    return 0 if ok else 1


def cmd_curve(args) -> int:
    grid = parse_grid(args.grid)
    polys = {}
    if args.all is not None:
        for u in all_words(args.all):
            polys[str(u)] = compose_rel(u)
    for s in args.word or []:
        u = _parse_word(s)
        polys[str(u)] = compose_rel(u)
    if not polys:
        raise ValueError("curve needs --word or --all")
    sys.stdout.write(curve_csv(polys, grid, digits=args.digits))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchnet",
        description="Exact reliability analysis of matchstick minimal networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rel", help="exact reliability polynomial and N-form")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--word", help="composition word, e.g. 0110")
    src.add_argument("--network", help="path to a network JSON file")
    p.add_argument(
        "--brute-force", action="store_true",
        help="use the 2^n state enumeration instead of composition",
    )
    p.set_defaults(fn=cmd_rel)

    p = sub.add_parser("compare", help="exact pointwise order of two compositions")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--no-fast", action="store_true",
                   help="skip the coefficient certificate, always isolate roots")
    p.set_defaults(fn=cmd_compare)

    p = sub.add_parser("poset", help="poset of length-m compositions")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--order", choices=("sh", "pointwise"), default="sh")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(fn=cmd_poset)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", nargs="*",
                   help=f"suites to run (default all): {', '.join(sorted(verify.SUITES))}")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("curve", help="reliability curves as CSV")
    p.add_argument("--word", action="append", help="composition word (repeatable)")
    p.add_argument("--all", type=int, metavar="M",
                   help="include every composition of length M")
    p.add_argument("--grid", default="0:1:1/100", help="start:stop:step, rationals")
    p.add_argument("--digits", type=int, default=12)
    p.set_defaults(fn=cmd_curve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
