"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 infeasible optimization,
3 local-condition failure, 4 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import bound_optimizer as bo
from .arith import primes_upto
from .empirical import empirical_report
from .errors import (
    ConditionFailed,
    Infeasible,
    PolynomialParseError,
    RangeTooLarge,
    Unfactored,
)
from .polynomial import (
    local_condition_failure,
    mertens_diagnostics,
    nu1,
    nu2,
    parse_polynomial,
    rational_root_screen,
)
from .sieve_functions import DEFAULT_CONSTANTS

EXIT_OK, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_LOCAL, EXIT_RESOURCE = 0, 1, 2, 3, 4
C_FORMULA = "c = e^(-2*gamma) * A2 / (4*log 3)"


class CliError(Exception):
    def __init__(self, msg, code):
        super().__init__(msg)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.6f}"
    return str(v)


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue()


def _poly(text):
    try:
        f = parse_polynomial(text)
    except PolynomialParseError as exc:
        raise CliError(f"cannot parse polynomial: {exc}", EXIT_USAGE)
    if rational_root_screen(f):
        print(f"warning: {f} is visibly reducible; results assume an irreducible polynomial",
              file=sys.stderr)
    return f


def cmd_table(args) -> str:
    if not 2 <= args.kmin <= args.kmax <= 100:
        raise CliError("need 2 <= kmin <= kmax <= 100", EXIT_USAGE)
    try:
        rows = bo.bound_table(args.kmin, args.kmax, DEFAULT_CONSTANTS)
    except Infeasible as exc:
        raise CliError(str(exc), EXIT_INFEASIBLE)
    if args.format == "json":
        data = [r.as_dict() for r in rows]
        return json.dumps(data[0] if len(data) == 1 else data, indent=2) + "\n"
    header = ["k", "beta0", "r_real", "r_int", "constraint_ok"]
    body = [[r.k, _fmt(r.beta0_opt), _fmt(r.r_real), r.r_int, str(r.constraint_ok).lower()]
            for r in rows]
    if args.format == "csv":
        return _csv([header] + body)
    widths = [max(len(str(x)) for x in col) for col in zip(header, *body)]
    lines = ["  ".join(str(x).rjust(w) for x, w in zip(row, widths)) for row in [header] + body]
    return "\n".join(lines) + "\n"


def cmd_constant(args) -> str:
    c = bo.asymptotic_constant(DEFAULT_CONSTANTS)
    d0 = bo.solve_delta0(DEFAULT_CONSTANTS)
    if args.format == "json":
        return json.dumps({"c": c, "delta0": d0}, indent=2) + "\n"
    if args.format == "csv":
        return _csv([["c", "delta0"], [_fmt(c), _fmt(d0)]])
    return f"c = {_fmt(c)}\nformula: {C_FORMULA}\ndelta0 = {_fmt(d0)}\n"


def cmd_densities(args) -> str:
    f = _poly(args.poly)
    if args.x < 2:
        raise CliError("--x must be >= 2", EXIT_USAGE)
    bad = local_condition_failure(f)
    if bad is not None:
        if args.format == "json":
            print(json.dumps({"poly": str(f), "local_condition": False, "offending_prime": bad}))
        raise CliError(f"local condition fails for {f}: nu1({bad}) = {bad - 1}, "
                       f"so {bad} is a fixed prime divisor", EXIT_LOCAL)
    table = [(p, nu1(f, p), nu2(f, p)) for p in primes_upto(50).tolist()]
    try:
        diag = mertens_diagnostics(f, args.x)
    except ConditionFailed as exc:
        raise CliError(str(exc), EXIT_LOCAL)
    stats = diag.as_dict()
    if args.format == "json":
        return json.dumps({
            "poly": str(f),
            "local_condition": True,
            "densities": [{"p": p, "nu1": a, "nu2": b} for p, a, b in table],
            "diagnostics": stats,
        }, indent=2) + "\n"
    if args.format == "csv":
        rows = [["quantity", "value"], ["local_condition", "true"]]
        rows += [[k, _fmt(v)] for k, v in stats.items()]
        rows += [[], ["p", "nu1", "nu2"]] + [list(t) for t in table]
        return _csv(rows)
    out = [f"polynomial: {f}", "local condition: true", "", "   p  nu1  nu2"]
    out += [f"{p:4d} {a:4d} {b:4d}" for p, a, b in table]
    out.append("")
    out += [f"{k} = {_fmt(v)}" for k, v in stats.items()]
    return "\n".join(out) + "\n"


def _sieve_parameters(f, args):
    k = f.degree
    if args.alpha is not None and args.beta is not None:
        r = args.r
        if r is None:
            if k < 2:
                raise CliError("degree-1 input with explicit --alpha/--beta also needs --r",
                               EXIT_USAGE)
            r = bo.minimize_r(k).r_int
        return args.alpha, args.beta, r
    if k < 2:
        raise CliError("degree-1 polynomials need explicit --alpha, --beta and --r", EXIT_USAGE)
    try:
        res = bo.minimize_r(k)
    except Infeasible as exc:
        raise CliError(str(exc), EXIT_INFEASIBLE)
    alpha = bo.ALPHA0 / k if args.alpha is None else args.alpha
    beta = res.beta0_opt / k if args.beta is None else args.beta
    return alpha, beta, res.r_int if args.r is None else args.r


def cmd_empirical(args) -> str:
    f = _poly(args.poly)
    if args.x < 100:
        raise CliError("--x must be >= 100", EXIT_USAGE)
    bad = local_condition_failure(f)
    if bad is not None:
        raise CliError(f"local condition fails at p = {bad}", EXIT_LOCAL)
    if f(2 * args.x).bit_length() > 128:
        raise CliError("f(2x) exceeds 2^128; reduce --x", EXIT_RESOURCE)
    alpha, beta, r = _sieve_parameters(f, args)
    try:
        rep = empirical_report(f, args.x, args.rmax, args.dmax, alpha, beta, r,
                               workers=args.workers)
    except (RangeTooLarge, Unfactored) as exc:
        raise CliError(str(exc), EXIT_RESOURCE)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE)
    if args.format == "json":
        return rep.to_json() + "\n"
    if args.format == "csv":
        return rep.counts_csv()
    lines = [
        f"polynomial: {f}",
        f"range: ({rep.x}, {2 * rep.x}]",
        f"X = {rep.X}",
        f"N = {rep.N}",
        f"alpha = {_fmt(alpha)}  beta = {_fmt(beta)}  r = {r}",
        f"S = {_fmt(rep.S)}",
        f"remainder: sum = {_fmt(rep.remainder_sum)}  mean = {_fmt(rep.remainder_mean)}"
        f"  max = {_fmt(rep.remainder_max)}",
        "",
        " r  count",
    ]
    lines += [f"{r_:2d}  {c}" for r_, c in rep.counts.items()]
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--output", default="-", help="output path (default: stdout)")

    parser = _Parser(prog="polysieve", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("table", parents=[common], help="optimal beta0 and r per degree")
    p.add_argument("--kmin", type=int, default=2)
    p.add_argument("--kmax", type=int, default=10)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("constant", parents=[common], help="the constant c of the large-degree bound")
    p.set_defaults(func=cmd_constant)

    p = sub.add_parser("densities", parents=[common], help="local densities and Mertens diagnostics")
    p.add_argument("--poly", required=True)
    p.add_argument("--x", type=int, default=10**5)
    p.set_defaults(func=cmd_densities)

    p = sub.add_parser("empirical", parents=[common], help="almost-prime counts on (x, 2x]")
    p.add_argument("--poly", required=True)
    p.add_argument("--x", type=int, default=10**4)
    p.add_argument("--rmax", type=int, default=10)
    p.add_argument("--dmax", type=int, default=100)
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--r", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_empirical)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
