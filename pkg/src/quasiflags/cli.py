"""Command-line verification driver.

Subcommands:

* ``verify-main``  -- localization series against the eigenfunction product;
* ``verify-toda``  -- equivariant volumes against the Toda series, plus
  strong-coupling limit diagnostics;
* ``properties``   -- every cross-module invariant suite;
* ``inspect``      -- dump fixed points, tangent weights, pair characters or
  series prefixes, with no verdict.

One machine-readable JSON document per run goes to standard output;
diagnostics go to standard error.  Exit codes: 0 pass, 1 identity or property
failure, 2 genericity exhausted, 3 usage error.
"""

import argparse
import json
import sys
from fractions import Fraction

from .eigenfunctions import cs_coefficients, cs_product_series, toda_coefficients
from .errors import NonGenericParameter, ResonantParameter
from .localization import ParameterPoint, evaluate_weight
from .characters import pair_character, tangent_weights
from .scalars import format_rational, parse_rational
from .series import denominator_power_series
from .tableaux import Tableau, enumerate_fixed_points
from .verify import (GenericityExhausted, format_gamma, run_properties,
                     verify_main, verify_toda)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_NONGENERIC = 2
EXIT_USAGE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _parse_rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from exc


def _add_common(sub, trials=True):
    sub.add_argument("--n", type=int, default=3, help="rank parameter (default 3)")
    sub.add_argument("--max-degree", type=int, default=4,
                     help="total-degree truncation D (default 4)")
    if trials:
        sub.add_argument("--trials", type=int, default=5,
                         help="number of sampled parameter points (default 5)")
    sub.add_argument("--seed", type=int, default=1,
                     help="64-bit seed for the splitmix64 sampling stream")
    sub.add_argument("--jobs", type=int, default=1,
                     help="worker threads for per-degree evaluation (results "
                          "are independent of this)")
    sub.add_argument("--a", type=str, default=None,
                     help="explicit zero-sum torus point, comma-separated rationals")
    sub.add_argument("--m", type=_parse_rational_arg, default=None,
                     help="explicit coupling (rational p/q)")
    sub.add_argument("--x", type=_parse_rational_arg, default=Fraction(1),
                     help="loop-weight gauge (rational, default 1)")


def _explicit_point(args, parser, need_m: bool) -> ParameterPoint | None:
    if args.a is None:
        if args.m is not None:
            parser.error("--m requires --a (otherwise points are sampled)")
        return None
    try:
        a = tuple(parse_rational(part) for part in args.a.split(","))
    except ValueError as exc:
        parser.error(str(exc))
    if len(a) != args.n:
        parser.error(f"--a must have {args.n} entries")
    if sum(a) != 0:
        parser.error("--a entries must sum to zero")
    m = args.m if args.m is not None else Fraction(0)
    if need_m and args.m is None:
        parser.error("verify-main with an explicit point also needs --m")
    try:
        return ParameterPoint(a, args.x, m)
    except ValueError as exc:
        parser.error(str(exc))


def build_parser() -> _Parser:
    parser = _Parser(prog="quasiflags",
                     description="Exact verification of localization and "
                                 "eigenfunction identities on quasiflag spaces.")
    commands = parser.add_subparsers(dest="command", required=True)

    main_cmd = commands.add_parser("verify-main", parents=[], help="Chern series identity")
    _add_common(main_cmd)

    toda_cmd = commands.add_parser("verify-toda", help="volume / Toda identity")
    _add_common(toda_cmd)

    prop_cmd = commands.add_parser("properties", help="cross-module invariants")
    _add_common(prop_cmd, trials=False)

    ins = commands.add_parser("inspect", help="dump exact data, no verdict")
    ins.add_argument("subject", choices=["fixed-points", "tangent-weights",
                                         "character", "series"])
    ins.add_argument("--n", type=int, default=3)
    ins.add_argument("--max-degree", type=int, default=4)
    ins.add_argument("--gamma", type=_parse_int_list, default=None,
                     help="degree vector, comma-separated")
    ins.add_argument("--tableau", type=_parse_int_list, default=None,
                     help="row-major tableau entries, comma-separated")
    ins.add_argument("--tableau2", type=_parse_int_list, default=None,
                     help="second tableau for pair characters")
    ins.add_argument("--kind", choices=["cs", "toda", "product", "denominator"],
                     default="cs", help="series kind for subject=series")
    ins.add_argument("--a", type=str, default=None)
    ins.add_argument("--m", type=_parse_rational_arg, default=Fraction(0))
    ins.add_argument("--x", type=_parse_rational_arg, default=Fraction(1))
    return parser


def _emit(document: dict) -> None:
    sys.stdout.write(json.dumps(document, indent=2, sort_keys=True) + "\n")


def _inspect(args, parser) -> int:
    n = args.n
    if args.subject == "fixed-points":
        if args.gamma is None:
            parser.error("inspect fixed-points needs --gamma")
        points = enumerate_fixed_points(n, args.gamma)
        _emit({"subject": "fixed-points", "n": n, "gamma": format_gamma(args.gamma),
               "count": len(points),
               "tableaux": [p.as_flat_list() for p in points]})
        return EXIT_PASS

    if args.subject == "tangent-weights":
        if args.tableau is None:
            parser.error("inspect tangent-weights needs --tableau")
        d = Tableau.from_flat_list(args.tableau, n)
        weights = tangent_weights(d, n)
        record = {"subject": "tangent-weights", "n": n, "tableau": d.as_flat_list(),
                  "weights": [{"a_coeffs": list(w.a_coeffs), "x_coeff": w.x_coeff}
                              for w in weights]}
        if args.a is not None:
            pt = ParameterPoint(tuple(parse_rational(s) for s in args.a.split(",")),
                                args.x, args.m)
            record["values"] = [format_rational(evaluate_weight(w, pt)) for w in weights]
        _emit(record)
        return EXIT_PASS

    if args.subject == "character":
        if args.tableau is None or args.tableau2 is None:
            parser.error("inspect character needs --tableau and --tableau2")
        d = Tableau.from_flat_list(args.tableau, n)
        dp = Tableau.from_flat_list(args.tableau2, n)
        char = pair_character(d, dp, n)
        _emit({"subject": "character", "n": n,
               "tableau": d.as_flat_list(), "tableau2": dp.as_flat_list(),
               "total_multiplicity": char.total_multiplicity(),
               "terms": [{"a_coeffs": list(a), "x_coeff": x, "multiplicity": m}
                         for a, x, m in char.as_sorted_triples()]})
        return EXIT_PASS

    # subject == "series"
    if args.kind == "denominator":
        series = denominator_power_series(n, args.m + 1, args.max_degree)
    else:
        if args.a is None:
            parser.error("inspect series needs --a")
        a = tuple(parse_rational(s) for s in args.a.split(","))
        if sum(a) != 0:
            parser.error("--a entries must sum to zero")
        a_over_x = tuple(ai / args.x for ai in a)
        if args.kind == "cs":
            series = cs_coefficients(n, a_over_x, args.m, args.max_degree).tail
        elif args.kind == "toda":
            series = toda_coefficients(n, a_over_x, args.max_degree, x=args.x).tail
        else:
            series = cs_product_series(n, a_over_x, args.m, args.max_degree)
    _emit({"subject": "series", "kind": args.kind, "n": n,
           "max_degree": args.max_degree,
           "coefficients": [{"gamma": format_gamma(g), "value": format_rational(c)}
                            for g, c in series.terms()]})
    return EXIT_PASS


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        if args.command == "inspect":
            return _inspect(args, parser)

        if args.command == "verify-main":
            pt = _explicit_point(args, parser, need_m=True)
            report = verify_main(args.n, args.max_degree, args.trials, args.seed,
                                 explicit_point=pt, jobs=args.jobs)
        elif args.command == "verify-toda":
            pt = _explicit_point(args, parser, need_m=False)
            report = verify_toda(args.n, args.max_degree, args.trials, args.seed,
                                 explicit_point=pt, jobs=args.jobs)
        else:
            report = run_properties(args.n, args.max_degree, args.seed, jobs=args.jobs)
    except GenericityExhausted as exc:
        print(f"genericity exhausted: {exc}", file=sys.stderr)
        return EXIT_NONGENERIC
    except (NonGenericParameter, ResonantParameter) as exc:
        print(f"non-generic parameters: {exc}", file=sys.stderr)
        return EXIT_NONGENERIC

    _emit(report)
    if report["verdict"] != "pass":
        print("verdict: fail", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_PASS


if __name__ == "__main__":
    sys.exit(main())
