"""Command-line surface.

Exit codes: 0 when the queried property holds or a run finds no
counterexample, 1 when the property fails (a witness is printed), 2 on usage
or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .classify import (
    NotUnmixed,
    classify_unmixed_polymatroidal,
    height_bounds_report,
    is_cohen_macaulay,
    is_connected_in_codim_one,
)
from .config import ENV_BUDGET
from .decomposition import (
    associated_primes,
    brute_force_ass,
    irreducible_decomposition,
    is_unmixed,
    prime_power_decomposition,
)
from .errors import PolymatError
from .harness import (
    EnumerationSpec,
    cross_check_ass,
    enumerate_matroidal,
    verify_classification_cases,
    verify_closure_properties,
    verify_unmixed_profile_equivalence,
)
from .monomials import MonomialIdeal, VariablePrime, colon
from .polymatroid import (
    BlockPartition,
    VeroneseTypeSpec,
    construct_multipartite_edge_ideal,
    construct_prime_power_product,
    construct_veronese_type,
    is_matroidal,
    is_polymatroidal,
)
from .textio import emit_report, parse_ideal, parse_monomial

_EPILOG = (
    f"The environment variable {ENV_BUDGET} overrides the default enumeration "
    "and oracle budget (a candidate-space size, default 2^20)."
)


def _read_ideal(path: str, ambient: Optional[int]) -> MonomialIdeal:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    return parse_ideal(text, ambient)


def _cmd_check(args) -> int:
    ideal = _read_ideal(args.file, args.vars)
    checks = {
        "polymatroidal": is_polymatroidal,
        "matroidal": is_matroidal,
        "unmixed": is_unmixed,
        "cm": is_cohen_macaulay,
        "codim1": is_connected_in_codim_one,
    }
    holds = checks[args.property](ideal)
    print(f"{args.property}: {'yes' if holds else 'no'}")
    if not holds and args.property == "unmixed":
        primes = sorted(associated_primes(ideal), key=lambda p: (p.height, p.sorted_variables))
        print(f"witness: {primes[0]} height {primes[0].height}, "
              f"{primes[-1]} height {primes[-1].height}")
    return 0 if holds else 1


def _cmd_classify(args) -> int:
    ideal = _read_ideal(args.file, args.vars)
    outcome = classify_unmixed_polymatroidal(ideal)
    print(emit_report(outcome, args.format, ideal=ideal))
    return 1 if isinstance(outcome, NotUnmixed) else 0


def _cmd_decompose(args) -> int:
    ideal = _read_ideal(args.file, args.vars)
    if args.prime_power:
        result = prime_power_decomposition(ideal)
    else:
        result = irreducible_decomposition(ideal)
    print(emit_report(result, args.format))
    return 0


def _cmd_colon(args) -> int:
    ideal = _read_ideal(args.file, args.vars)
    by = parse_monomial(args.by, ideal.ambient)
    print(colon(ideal, by))
    return 0


def _parse_blocks(text: str) -> BlockPartition:
    blocks = []
    for piece in text.split("|"):
        blocks.append(frozenset(int(v) for v in piece.split(",") if v.strip()))
    return BlockPartition(tuple(blocks))


def _parse_factors(text: str) -> list[tuple[VariablePrime, int]]:
    factors = []
    for piece in text.split("|"):
        if "^" in piece:
            body, raw_exp = piece.rsplit("^", 1)
            exponent = int(raw_exp)
        else:
            body, exponent = piece, 1
        variables = frozenset(int(v) for v in body.split(",") if v.strip())
        factors.append((VariablePrime(variables), exponent))
    return factors


def _cmd_construct(args) -> int:
    if args.family == "veronese":
        caps = tuple(int(a) for a in args.caps.split(","))
        ambient = args.vars if args.vars else len(caps)
        ideal = construct_veronese_type(VeroneseTypeSpec(args.degree, caps), ambient)
    elif args.family == "multipartite":
        ideal = construct_multipartite_edge_ideal(
            _parse_blocks(args.blocks), args.degree
        )
    else:
        factors = _parse_factors(args.factors)
        highest = max(max(p.variables) for p, _ in factors)
        tail = None
        if args.tail:
            ambient = args.vars or 0
            tail_ideal = parse_ideal(args.tail, args.vars)
            highest = max(highest, max(tail_ideal.support()))
        ambient = args.vars if args.vars else highest
        if args.tail:
            tail = parse_ideal(args.tail, ambient)
        ideal = construct_prime_power_product(factors, tail, ambient)
    print(ideal)
    return 0


def _cmd_enumerate(args) -> int:
    spec = EnumerationSpec(
        ambient=args.n, degree=args.d, fully_supported=args.fully_supported
    )
    for ideal in enumerate_matroidal(spec):
        print(ideal)
    return 0


def _cmd_verify(args) -> int:
    if args.target == "t1":
        report = verify_unmixed_profile_equivalence(
            EnumerationSpec(ambient=args.n, degree=args.d, fully_supported=True)
        )
    elif args.target == "t3":
        report = verify_classification_cases(
            args.n, args.d, samples=args.samples, seed=args.seed
        )
    elif args.target == "closure":
        report = verify_closure_properties(samples=args.samples, seed=args.seed)
    else:
        universe = EnumerationSpec(ambient=args.n, degree=args.d, fully_supported=True)
        report = cross_check_ass(universe)
    print(emit_report(report, args.format))
    return 0 if report.ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polymat", epilog=_EPILOG)
    parser.add_argument(
        "--format", choices=("human", "structured"), default="human",
        help="report rendering (default: human)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="test a property of an ideal file")
    check.add_argument("file", help="ideal file, or - for stdin")
    check.add_argument(
        "--property", required=True,
        choices=("polymatroidal", "matroidal", "unmixed", "cm", "codim1"),
    )
    check.add_argument("--vars", type=int, help="ambient variable count")
    check.set_defaults(run=_cmd_check)

    classify = sub.add_parser("classify", help="classify the unmixed structure")
    classify.add_argument("file")
    classify.add_argument("--vars", type=int)
    classify.set_defaults(run=_cmd_classify)

    decompose = sub.add_parser("decompose", help="decompose into components")
    decompose.add_argument("file")
    decompose.add_argument("--vars", type=int)
    group = decompose.add_mutually_exclusive_group()
    group.add_argument("--irreducible", action="store_true", default=True)
    group.add_argument("--prime-power", action="store_true")
    decompose.set_defaults(run=_cmd_decompose)

    colon_cmd = sub.add_parser("colon", help="colon ideal by a monomial")
    colon_cmd.add_argument("file")
    colon_cmd.add_argument("--by", required=True, help="monomial, e.g. x1^2*x3 or 1")
    colon_cmd.add_argument("--vars", type=int)
    colon_cmd.set_defaults(run=_cmd_colon)

    construct = sub.add_parser("construct", help="build a structured ideal")
    families = construct.add_subparsers(dest="family", required=True)
    veronese = families.add_parser("veronese", help="capped-degree family")
    veronese.add_argument("--degree", type=int, required=True)
    veronese.add_argument("--caps", required=True, help="comma-separated caps, one per variable")
    veronese.add_argument("--vars", type=int)
    veronese.set_defaults(run=_cmd_construct)
    multipartite = families.add_parser("multipartite", help="complete multipartite edge ideal")
    multipartite.add_argument("--blocks", required=True, help="e.g. '1,2|3,4|5,6'")
    multipartite.add_argument("--degree", type=int, required=True)
    multipartite.set_defaults(run=_cmd_construct)
    product = families.add_parser("product", help="product of prime powers, optional tail")
    product.add_argument("--factors", required=True, help="e.g. '1,2^2|3,4'")
    product.add_argument("--tail", help="ideal text multiplied in")
    product.add_argument("--vars", type=int)
    product.set_defaults(run=_cmd_construct)

    enumerate_cmd = sub.add_parser("enumerate", help="list exchange-closed squarefree ideals")
    enumerate_cmd.add_argument("--n", type=int, required=True)
    enumerate_cmd.add_argument("--d", type=int, required=True)
    enumerate_cmd.add_argument("--fully-supported", action="store_true")
    enumerate_cmd.set_defaults(run=_cmd_enumerate)

    verify = sub.add_parser("verify", help="run a verification sweep")
    verify.add_argument("target", choices=("t1", "t3", "closure", "ass"))
    verify.add_argument("--n", type=int, default=5)
    verify.add_argument("--d", type=int, default=2)
    verify.add_argument("--samples", type=int, default=200)
    verify.add_argument("--seed", type=int, default=0)
    verify.set_defaults(run=_cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return 2 if exc.code not in (0,) else 0
    try:
        return args.run(args)
    except PolymatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
