"""Command-line interface.

Subcommands mirror the library: zeta / sym / power / opposite for series and
sym powers, hd / hd-zeta / effective for the Hodge-Deligne side, eval for
exact rational specialization, verify for the named verification scenarios.

Exit codes: 0 success (and verification pass), 1 verification fail, 2 parse
or elaboration error, 3 domain error, 4 resource-cap error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import (
    DomainError,
    ElaborationError,
    InternalConsistencyError,
    ParseError,
    ResourceLimitError,
)
from .expr import mentioned_names, parse_class, parse_poly, parse_series
from .hodge import check_class_effectiveness, check_polynomial_effectiveness, hd_zeta
from .power import power
from .verify import (
    SCENARIOS,
    verify_axioms,
    verify_distinct_sum,
    verify_grassmannian,
    verify_zeta_closed_form,
)
from .zeta import motivic_provider, opposite_zeta, sym_power, zeta_series


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stackzeta",
        description="Exact Kapranov zeta functions and power structures on motivic classes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")

    def add_cap(p):
        p.add_argument(
            "--cap-k",
            type=int,
            default=8,
            metavar="K",
            help="largest symmetric-power index expanded via the closed form (default 8)",
        )

    p = sub.add_parser("zeta", help="zeta series of a class expression")
    p.add_argument("expr")
    p.add_argument("--order", type=int, required=True, metavar="N")
    add_json(p)
    add_cap(p)

    p = sub.add_parser("sym", help="k-th symmetric power of a class expression")
    p.add_argument("k", type=int)
    p.add_argument("expr")
    add_json(p)
    add_cap(p)

    p = sub.add_parser("power", help="raise a series to a class exponent")
    p.add_argument("series")
    p.add_argument("expr")
    p.add_argument("--order", type=int, required=True, metavar="N")
    add_json(p)
    add_cap(p)

    p = sub.add_parser("opposite", help="opposite-structure series of a class expression")
    p.add_argument("expr")
    p.add_argument("--order", type=int, required=True, metavar="N")
    add_json(p)
    add_cap(p)

    p = sub.add_parser("hd", help="Hodge-Deligne realization of a class expression")
    p.add_argument("expr")
    add_json(p)

    p = sub.add_parser("hd-zeta", help="zeta series of an E-polynomial in u, v")
    p.add_argument("poly")
    p.add_argument("--order", type=int, required=True, metavar="N")
    add_json(p)

    p = sub.add_parser("effective", help="effectiveness heuristic on a class or E-polynomial")
    p.add_argument("expr")
    add_json(p)

    p = sub.add_parser("eval", help="evaluate a class expression at a rational L")
    p.add_argument("expr")
    p.add_argument("--at", required=True, metavar="P/Q", help="rational value for L")
    add_json(p)

    p = sub.add_parser("verify", help="run a named verification scenario")
    p.add_argument("scenario", choices=SCENARIOS)
    p.add_argument("--k", type=int, default=2, help="distinct-sum: number of arguments")
    p.add_argument("--cap-degree", type=int, default=6, help="distinct-sum: expansion degree")
    p.add_argument("--m", type=int, default=0, help="zeta-closed-form: numerator twist q^m")
    p.add_argument("--n", type=int, default=1, help="zeta-closed-form: denominator twist 1-q^n")
    p.add_argument("--order", type=int, default=4, help="series truncation order")
    p.add_argument("--n-max", type=int, default=4, help="grassmannian: largest L-power in the product")
    p.add_argument("--ring", choices=("motivic", "hd"), default="motivic", help="axioms: coefficient ring")
    p.add_argument("--samples", type=int, default=20, help="axioms: number of random samples")
    p.add_argument("--seed", type=int, default=0, help="axioms: RNG seed")
    p.add_argument(
        "--perturb",
        action="store_true",
        help="negative control: deliberately break one side (must fail)",
    )
    add_json(p)

    return parser


def _emit(args, text_value, json_value) -> int:
    if args.json:
        print(json.dumps(json_value))
    else:
        print(text_value)
    return 0


def _run(args) -> int:
    if args.command == "zeta":
        series = zeta_series(parse_class(args.expr), args.order, cap=args.cap_k)
        return _emit(args, series, series.to_json())

    if args.command == "sym":
        if args.k < 0:
            raise DomainError("sym needs k >= 0")
        value = sym_power(parse_class(args.expr), args.k, cap=args.cap_k)
        return _emit(args, value, value.to_json())

    if args.command == "power":
        base = parse_series(args.series, args.order)
        if not base.coefficient(0) == base.ring.one:
            raise ElaborationError("the base series must have constant term 1")
        exponent = parse_class(args.expr)
        result = power(base, exponent, motivic_provider(cap=args.cap_k))
        return _emit(args, result, result.to_json())

    if args.command == "opposite":
        series = opposite_zeta(parse_class(args.expr), args.order, cap=args.cap_k)
        return _emit(args, series, series.to_json())

    if args.command == "hd":
        realization = parse_class(args.expr).hd_realization()
        return _emit(args, realization, realization.to_json())

    if args.command == "hd-zeta":
        series = hd_zeta(parse_poly(args.poly), args.order)
        return _emit(args, series, series.to_json())

    if args.command == "effective":
        if mentioned_names(args.expr) & {"u", "v"}:
            result = check_polynomial_effectiveness(parse_poly(args.expr))
        else:
            result = check_class_effectiveness(parse_class(args.expr))
        payload = {
            "verdict": result.verdict,
            "witness": str(result.witness) if result.witness is not None else None,
            "detail": result.detail,
        }
        return _emit(args, result, payload)

    if args.command == "eval":
        try:
            at = Fraction(args.at)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"--at expects a rational like 3 or 5/2, got {args.at!r}") from exc
        value = parse_class(args.expr).eval_rational(at)
        return _emit(args, value, {"value": str(value)})

    if args.command == "verify":
        if args.scenario == "distinct-sum":
            report = verify_distinct_sum(args.k, args.cap_degree, perturb=args.perturb)
        elif args.scenario == "zeta-closed-form":
            report = verify_zeta_closed_form(args.m, args.n, args.order)
        elif args.scenario == "grassmannian":
            report = verify_grassmannian(args.n_max, args.order)
        else:
            report = verify_axioms(
                args.ring, args.order, args.samples, args.seed, perturbed=args.perturb
            )
        if args.json:
            print(json.dumps(report.to_json()))
        else:
            print(report)
        return 0 if report.passed else 1

    raise InternalConsistencyError(f"unhandled command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except InternalConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
