"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (printed as
``error[<code>]: <message>`` on stderr) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from jacsys.algebra.multipoly import MultiPoly
from jacsys.errors import InvalidParameterError, JacsysError, ParseError
from jacsys.serialize import (
    dumps,
    equationset_to_json,
    format_multipoly,
    format_rational,
    format_scalar,
    format_unipoly,
    parse_poly,
    parse_rational,
    scalar_to_json,
    series_to_json,
    unipoly_to_json,
)
from jacsys.systems import SystemSpec, max_degree


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _rational_list(text: str):
    items = [t for t in text.split(",")]
    if not text.strip() or any(not t.strip() for t in items):
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of rationals, got {text!r}")
    return [_rational(t) for t in items]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jacsys",
        description="Build, extend, solve and verify coefficient systems of Laurent-series powers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, degrees=True, defaults=(None, None)):
        if degrees:
            p.add_argument("-n", type=int, default=defaults[0], required=defaults[0] is None, help="degree n")
            p.add_argument("-m", type=int, default=defaults[1], required=defaults[1] is None, help="degree m")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.add_argument("--order", type=int, help="truncation order (default m+n+10)")
        p.add_argument("--seed", type=int, default=0, help="seed for numeric routines")

    p = sub.add_parser("gen", help="standard system")
    common(p)
    p.add_argument("--lambdas", type=_rational_list, help="lambda_0,...,lambda_(m+n-2)")
    p.add_argument("--datum", help="value of the datum: a rational or a polynomial in Y (default formal F)")

    p = sub.add_parser("gen-homogeneous", help="homogeneous system with datum Y^(m+n-1)")
    common(p)

    p = sub.add_parser("gen-modified", help="system with lead exponent r and tail lam Z^-1")
    common(p, defaults=(2, 3))
    p.add_argument("--lead-exp", type=int, required=True, help="lead exponent r")

    p = sub.add_parser("gen-sparse", help="sparse system with support step d")
    common(p)
    p.add_argument("--step", type=int, required=True, help="support step d")
    p.add_argument("--datum", help="value of the datum (default formal)")

    p = sub.add_parser("extend", help="extend a solution prefix")
    common(p)
    p.add_argument("--prefix", type=_rational_list, required=True, help="C_-1,...,C_-(m+n-2)")
    p.add_argument("--lambdas", type=_rational_list)

    p = sub.add_parser("solve", help="solve the reduced homogeneous system")
    common(p)
    p.add_argument("--lambda-tail", type=_rational, required=True)
    p.add_argument("--mode", choices=("exact", "complex"), default="exact")

    p = sub.add_parser("jac-det", help="Jacobian matrix and its determinant")
    common(p)
    p.add_argument("--lambdas", type=_rational_list)
    p.add_argument("--point", type=_rational_list, help="C_-1,...; omit for the symbolic determinant")

    p = sub.add_parser("verify-pair", help="bracket and normal-form checks for a pair P, Q in x, Y")
    common(p, degrees=False)
    p.add_argument("--P", dest="P", required=True)
    p.add_argument("--Q", dest="Q", required=True)

    p = sub.add_parser("orbit", help="act on a rational solution by a root of unity")
    common(p)
    p.add_argument("--prefix", type=_rational_list, required=True)
    p.add_argument("--i", dest="index", type=int, default=1)

    p = sub.add_parser("fixtures", help="the modified systems with lead exponent 2 or 3")
    common(p, degrees=False)
    p.add_argument("--case", choices=("r2", "r3"), required=True)

    p = sub.add_parser("conditions", help="pair conditions for p, q (or for a solution prefix)")
    common(p, degrees=False)
    p.add_argument("-n", type=int)
    p.add_argument("-m", type=int)
    p.add_argument("--p", dest="p")
    p.add_argument("--q", dest="q")
    p.add_argument("--lambda-tail", type=_rational)
    p.add_argument("--prefix", type=_rational_list)
    return parser


# -- helpers ---------------------------------------------------------------
def _print_system(eqs, as_json, names=None):
    if as_json:
        print(dumps(equationset_to_json(eqs)))
        return
    for i, e in enumerate(eqs.equations, start=1):
        print(f"E_{i} = {format_multipoly(e, names)}")


def _datum(text):
    if text is None:
        return None
    try:
        return parse_rational(text)
    except ParseError:
        return parse_poly(text)


def _order(args, n, m, minimum):
    order = args.order if args.order is not None else m + n + 10
    if order < minimum:
        raise InvalidParameterError(f"order must be at least {minimum}")
    if order > 4 * max_degree():
        raise InvalidParameterError(f"order {order} exceeds 4 * JS_MAX_DEGREE = {4 * max_degree()}")
    return order


def _check_degrees(n, m):
    if n is None or m is None:
        raise InvalidParameterError("both -n and -m are required")
    if n < 1 or m < 1:
        raise InvalidParameterError("degrees must be positive")
    cap = max_degree()
    if max(n, m) > cap:
        from jacsys.errors import DegreeCapError

        raise DegreeCapError(f"degree {max(n, m)} exceeds the cap {cap} (JS_MAX_DEGREE)")


def _poly_to_unipoly(p: MultiPoly, var: str):
    from jacsys.algebra.unipoly import UniPoly

    extra = [v for v in p.variables() if v != var]
    if extra:
        raise InvalidParameterError(f"unexpected variables {', '.join(extra)}")
    parts = p.as_univariate(var)
    top = max(parts, default=-1)
    return UniPoly([parts[k].constant_value() if k in parts else 0 for k in range(top + 1)], var)


def _poly_to_bipoly(p: MultiPoly):
    from jacsys.verify import BiPoly

    terms = {}
    for mono, c in p.terms.items():
        i = j = 0
        for v, e in mono:
            if v == "x":
                i = e
            elif v == "Y":
                j = e
            else:
                raise InvalidParameterError(f"unexpected variable {v}; use x and Y")
        terms[(i, j)] = c
    return BiPoly(terms)


# -- commands --------------------------------------------------------------
def cmd_gen(args):
    from jacsys.systems import build_standard

    _check_degrees(args.n, args.m)
    spec = SystemSpec(args.n, args.m, tuple(args.lambdas or ()), _datum(args.datum))
    _print_system(build_standard(spec), args.json, {"lam": "F"})


def cmd_gen_homogeneous(args):
    from jacsys.systems import build_homogeneous

    _check_degrees(args.n, args.m)
    _print_system(build_homogeneous(args.n, args.m), args.json)


def cmd_gen_modified(args):
    from jacsys.systems import build_modified

    _check_degrees(args.n, args.m)
    if args.lead_exp < 1 or args.lead_exp * max(args.n, args.m) > max_degree():
        raise InvalidParameterError("lead exponent out of range")
    _print_system(build_modified(args.lead_exp, args.n, args.m), args.json)


def cmd_gen_sparse(args):
    from jacsys.systems import build_sparse

    _check_degrees(args.n, args.m)
    if args.step < 1:
        raise InvalidParameterError("support step must be positive")
    _print_system(build_sparse(args.n, args.m, args.step, _datum(args.datum)), args.json)


def cmd_extend(args):
    from jacsys.systems import extend_solution

    _check_degrees(args.n, args.m)
    spec = SystemSpec(args.n, args.m, tuple(args.lambdas or ()))
    order = _order(args, args.n, args.m, spec.size)
    values = extend_solution(spec, args.prefix, order)
    if args.json:
        print(dumps({"n": args.n, "m": args.m, "order": order, "coeffs": [format_rational(v) for v in values]}))
    else:
        for k, v in enumerate(values, start=1):
            print(f"C_{{{-k}}} = {format_rational(v)}")


def _solution_json(result):
    return {
        "n": result.n,
        "m": result.m,
        "lambda_tail": format_rational(result.lambda_tail),
        "scalar_kind": result.scalar_kind,
        "degenerate": result.degenerate,
        "eliminant": format_unipoly(result.eliminant),
        "count_over_closure": result.count_over_closure,
        "tuples": [[scalar_to_json(v) for v in s.values] for s in result.solutions],
        "conjugates": [s.conjugates for s in result.solutions],
    }


def cmd_solve(args):
    from jacsys.homogeneous import solve_reduced

    _check_degrees(args.n, args.m)
    result = solve_reduced(args.n, args.m, args.lambda_tail, mode=args.mode, seed=args.seed)
    if args.json:
        print(dumps(_solution_json(result)))
        return
    print(f"eliminant: {format_unipoly(result.eliminant)}")
    if result.degenerate:
        print("degenerate (lambda = 0)")
    print(f"solutions over the algebraic closure: {result.count_over_closure}")
    for s in result.solutions:
        pv = ", ".join(format_scalar(v) for v in s.p)
        cv = ", ".join(format_scalar(v) for v in s.values)
        note = f" [{s.conjugates} conjugates]" if s.conjugates > 1 else ""
        print(f"p = ({pv}){note}: C = ({cv})")


def cmd_jac_det(args):
    from jacsys.jacobian import build_jacobian, eval_det

    _check_degrees(args.n, args.m)
    spec = SystemSpec(args.n, args.m, tuple(args.lambdas or ()))
    J = build_jacobian(spec)
    if args.point is None:
        syms = [MultiPoly.var(v) for v in (f"Z{-k}" for k in range(1, spec.size + 1))]
        det = eval_det(J, syms)
    else:
        det = eval_det(J, args.point)
    if args.json:
        print(dumps({
            "matrix": [[scalar_to_json(e) for e in row] for row in J.rows],
            "det": scalar_to_json(det),
        }))
    else:
        print(J)
        print(f"det = {format_multipoly(det) if isinstance(det, MultiPoly) else format_scalar(det)}")


def cmd_verify_pair(args):
    from jacsys.verify import verify_pair

    P = _poly_to_bipoly(parse_poly(args.P))
    Q = _poly_to_bipoly(parse_poly(args.Q))
    report = verify_pair(P, Q)
    if args.json:
        print(dumps(report.to_json()))
        return
    print(f"degrees: ({report.n}, {report.m})")
    print(f"[P, Q] = {report.jacobian}")
    print(f"counterexample shape: {report.counterexample}")
    for r in report.reasons:
        print(f"reason: {r}")


def cmd_orbit(args):
    from jacsys.homogeneous import orbit_act
    from jacsys.systems import SolutionTuple

    _check_degrees(args.n, args.m)
    e = args.n + args.m - 1
    sol = SolutionTuple(args.n, args.m, args.prefix)
    image = orbit_act(args.index, sol, e)
    if args.json:
        print(dumps({"e": e, "i": args.index, "tuple": [scalar_to_json(v) for v in image.values]}))
    else:
        print(f"u: primitive {e}-th root of unity")
        for k, v in enumerate(image.values, start=1):
            print(f"c_{{{-k}}} = {format_unipoly(v.representative().with_var('u'))}")


def cmd_fixtures(args):
    from jacsys.systems import build_modified

    r = 2 if args.case == "r2" else 3
    _print_system(build_modified(r), args.json)


def cmd_conditions(args):
    from jacsys.homogeneous import PolynomialPair, check_conditions, pair_from_solution
    from jacsys.systems import SolutionTuple

    if args.prefix is not None:
        _check_degrees(args.n, args.m)
        pair = pair_from_solution(SolutionTuple(args.n, args.m, args.prefix))
    else:
        if args.p is None or args.q is None or args.lambda_tail is None:
            raise InvalidParameterError("give --p, --q and --lambda-tail, or -n, -m and --prefix")
        p = _poly_to_unipoly(parse_poly(args.p), "x")
        q = _poly_to_unipoly(parse_poly(args.q), "x")
        pair = PolynomialPair(p, q, args.lambda_tail)
    report = check_conditions(pair)
    if args.json:
        print(dumps({
            "p": unipoly_to_json(pair.p),
            "q": unipoly_to_json(pair.q),
            "lambda_tail": scalar_to_json(pair.lambda_tail),
            "lambda_tilde": scalar_to_json(pair.lambda_tilde),
            "conditions": {str(k): c.holds for k, c in sorted(report.conditions.items())},
        }))
        return
    print(f"p = {format_unipoly(pair.p)}")
    print(f"q = {format_unipoly(pair.q)}")
    print(f"lambda~ = {format_scalar(pair.lambda_tilde)}")
    for k, c in sorted(report.conditions.items()):
        print(f"({k}) {c.detail}: {'holds' if c.holds else 'fails'}")


COMMANDS = {
    "gen": cmd_gen,
    "gen-homogeneous": cmd_gen_homogeneous,
    "gen-modified": cmd_gen_modified,
    "gen-sparse": cmd_gen_sparse,
    "extend": cmd_extend,
    "solve": cmd_solve,
    "jac-det": cmd_jac_det,
    "verify-pair": cmd_verify_pair,
    "orbit": cmd_orbit,
    "fixtures": cmd_fixtures,
    "conditions": cmd_conditions,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        COMMANDS[args.command](args)
    except JacsysError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ArithmeticError, RecursionError) as exc:
        print(f"error[domain-error]: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
