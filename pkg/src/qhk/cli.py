"""Command line front end.

Exit status: 0 for success (and for a verifier that passes), 1 for a
verifier that found failures, 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cache import load_or_compute
from .exprs import ExprError, element_to_json, format_element, parse_element
from .sieve import (
    annihilated_subspace,
    monomial_basis,
    primitive_subspace,
    run_verifier,
    spherical_candidates,
)
from .spaces import parse_space, space_name
from .steenrod import sq_down


def _space_arg(token: str):
    try:
        return parse_space(token)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err))


def _nonneg(token: str) -> int:
    n = int(token)
    if n < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return n


def _positive(token: str) -> int:
    n = int(token)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qhk",
        description="Exact mod-2 homology operations for infinite loop spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_output(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = with_output(sub.add_parser("normalize", help="parse an expression into basis form"))
    p.add_argument("expr")
    p.add_argument("--space", type=_space_arg)

    p = with_output(sub.add_parser("act", help="apply a dual Steenrod operation"))
    p.add_argument("expr")
    p.add_argument("--sq", type=_nonneg, required=True, metavar="R")
    p.add_argument("--space", type=_space_arg)

    for name, help_text in (
        ("basis", "monomial basis of a fixed degree"),
        ("annihilated", "basis of the classes killed by all Sq^{2^k}"),
        ("primitives", "basis of the primitive classes"),
        ("sieve", "annihilated primitives: the spherical upper bound"),
    ):
        p = with_output(sub.add_parser(name, help=help_text))
        p.add_argument("--space", type=_space_arg, required=True)
        p.add_argument("--degree", type=_positive, required=True)
        p.add_argument("--max-length", type=_positive, default=2)
        if name == "basis":
            p.add_argument("--cache", metavar="DIR")

    p = with_output(sub.add_parser("verify", help="run a structure-theorem verifier"))
    p.add_argument("--theorem", choices=("1", "2", "3", "root"), required=True)
    p.add_argument("--space", type=_space_arg, required=True)
    p.add_argument("--max-degree", type=_positive)
    p.add_argument("--max-length", type=_positive, default=2)
    p.add_argument("--max-vectors", type=_positive, default=64)

    return parser


def _print_element(el, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(element_to_json(el), indent=2))
    else:
        print(format_element(el))


def _print_subspace(args, label: str, basis) -> None:
    if args.format == "json":
        payload = {
            "space": space_name(args.space),
            "degree": args.degree,
            "max_length": args.max_length,
            "dimension": len(basis),
            label: [element_to_json(el) for el in basis],
        }
        print(json.dumps(payload, indent=2))
    else:
        for el in basis:
            print(format_element(el))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "normalize":
        try:
            el = parse_element(args.expr, args.space)
        except ExprError as err:
            print(f"error: {err}", file=sys.stderr)
            return 2
        _print_element(el, args.format)
        return 0

    if args.command == "act":
        try:
            el = parse_element(args.expr, args.space)
        except ExprError as err:
            print(f"error: {err}", file=sys.stderr)
            return 2
        _print_element(sq_down(args.sq, el), args.format)
        return 0

    if args.command == "basis":
        if args.cache:
            basis = load_or_compute(args.cache, args.space, args.degree, args.max_length)
        else:
            basis = monomial_basis(args.space, args.degree, args.max_length)
        elements = [frozenset({m}) for m in basis]
        _print_subspace(args, "basis", elements)
        return 0

    if args.command in ("annihilated", "primitives", "sieve"):
        fn = {
            "annihilated": annihilated_subspace,
            "primitives": primitive_subspace,
            "sieve": spherical_candidates,
        }[args.command]
        _print_subspace(args, "basis", fn(args.space, args.degree, args.max_length))
        return 0

    if args.command == "verify":
        if args.theorem != "root" and args.max_degree is None:
            parser.error(f"--theorem {args.theorem} requires --max-degree")
        report = run_verifier(
            args.theorem, args.space, args.max_degree, args.max_length, args.max_vectors
        )
        if args.format == "json":
            print(json.dumps(report.to_json(), indent=2))
        else:
            verdict = "PASS" if report.ok else "FAIL"
            print(
                f"theorem {report.theorem} over {report.space}: {verdict} "
                f"(checked {report.checked}, excluded {len(report.excluded)}, "
                f"{report.millis} ms)"
            )
            for line in report.failures:
                print(f"  failure: {line}")
        return 0 if report.ok else 1

    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
