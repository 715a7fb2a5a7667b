#!/usr/bin/env python3
"""
vvgamma - exact matrix Gamma integrals and their verification suites

Command line front end over the library modules. Tables go to stdout in
plain, JSON or CSV form; logging goes to stderr.

Usage:
    python vvgamma.py triangle --n-max 8
    python vvgamma.py gamma alt --m 3 --q 2
    python vvgamma.py gamma rank2 --l1 2 --l2 0
    python vvgamma.py gamma table --r-max 4 --csv
    python vvgamma.py rep --r 2 --g 1,2,3,4
    python vvgamma.py sturm phantom --k-max 5 --json
    python vvgamma.py verify all --strict

Exit codes:
    0  all checks passed
    1  verification failure
    2  usage error
    3  convergence warning under --strict
"""

import argparse
import logging
import sys
from typing import List, Optional, Sequence

from combinatorics import binomial_identity_check, triangle_rows, verify_triangle_closed_forms
from config_loader import ConfigLoader
from exact import DomainError, GammaExpr, PoleError, StepSizeError, as_rational
from gamma_engine import (
    check_alternating,
    check_det_derivative_closed_forms,
    check_monomial_routes,
    check_palindrome_and_divisibility,
    check_r0_forms,
    check_trace_route,
    gamma_alternating,
    gamma_operator,
    gamma_rk_independence_check,
    invertibility_report,
    symmetric_matrix_form_check,
)
from gl2_rep import HighestWeight, rho_matrix, to_weight_basis
from numeric_oracle import QuadratureSpec, compare_all, det_derivative_sweep, maass_fd_check
from render import OutputFormat, render_reports, render_rows, write_json
from reporting import CheckReport, OracleReport
from sturm_phantom import c_rho_check, combine_b_check, phantom_limit, sturm_two_route_check, theorem_verdict

logger = logging.getLogger("vvgamma")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_WARNINGS = 3

# failures outrank strict-mode warnings
_SEVERITY = {EXIT_OK: 0, EXIT_WARNINGS: 1, EXIT_FAILED: 2, EXIT_USAGE: 3}

TRIANGLE_N_MAX = 200
BINOMIAL_R_MAX = 60
INDEPENDENCE_R_MAX = 5
PALINDROME_R_MAX = 12
R0_FORMS_R_MAX = 40
STURM_K_MAX = 10
PHANTOM_K_MAX = 20


def worst(codes: Sequence[int]) -> int:
    return max(codes, key=_SEVERITY.__getitem__, default=EXIT_OK)


def identity_suite(r_max: int) -> List[CheckReport]:
    """All exact identity checks, in a fixed order; r_max only bounds the nu-independence sweep."""
    reports = [
        verify_triangle_closed_forms(TRIANGLE_N_MAX),
        binomial_identity_check(BINOMIAL_R_MAX),
        check_palindrome_and_divisibility(PALINDROME_R_MAX),
        check_r0_forms(R0_FORMS_R_MAX),
        check_trace_route(PALINDROME_R_MAX),
    ]
    independence = CheckReport("nu-independence of Gamma(r,k,s)")
    for r in range(min(r_max, INDEPENDENCE_R_MAX) + 1):
        for k in range(r + 1):
            independence.extend(gamma_rk_independence_check(r, k))
    reports.append(independence)
    reports.extend([
        symmetric_matrix_form_check(),
        check_monomial_routes(4),
        check_det_derivative_closed_forms(5),
        check_alternating(),
        sturm_two_route_check(STURM_K_MAX),
        combine_b_check(PHANTOM_K_MAX),
        c_rho_check(STURM_K_MAX),
        theorem_verdict(PHANTOM_K_MAX)[0],
    ])
    return reports


def _output_format(args) -> OutputFormat:
    if args.json:
        return OutputFormat.JSON
    if args.csv:
        return OutputFormat.CSV
    return OutputFormat.PLAIN


def _quadrature_spec(args) -> QuadratureSpec:
    spec = ConfigLoader(args.config_dir).quadrature_spec()
    return spec.with_overrides(
        laguerre_order=getattr(args, "laguerre", None),
        theta_points=getattr(args, "theta", None),
        tol=getattr(args, "tol", None),
    )


def _verdict(reports, args, command: str) -> int:
    passed = render_reports(command, reports, _output_format(args), sys.stdout)
    if not passed:
        return EXIT_FAILED
    warned = any(getattr(r, "warnings", None) for r in reports)
    if warned:
        logger.warning("convergence warnings were reported")
        if args.strict:
            return EXIT_WARNINGS
    return EXIT_OK


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_triangle(args) -> int:
    rows = triangle_rows(args.n_max)
    render_rows(f"Triangle numbers a(n, m), n <= {args.n_max}", rows, _output_format(args), sys.stdout)
    return EXIT_OK if all(r["recursion_ok"] for r in rows) else EXIT_FAILED


def _gamma_rows(rows: List[dict], args) -> List[dict]:
    if args.at is None:
        return rows
    s0 = as_rational(args.at, "--at")
    for row in rows:
        expr = GammaExpr.from_json({"m": row.get("m", 2), "shift": row["shift"],
                                    "num": row["num"], "den": row["den"]})
        row["value"] = expr.eval_numeric(float(s0) if args.float else s0)
    return rows


def cmd_gamma_alt(args) -> int:
    expr = gamma_alternating(args.m, args.q)
    row = {"m": args.m, "q": args.q, "expr": expr.to_str(), **expr.to_json()}
    row.pop("four_pi", None)
    render_rows(f"Gamma(st^[{args.q}] (x) det^s), m = {args.m}", _gamma_rows([row], args),
                _output_format(args), sys.stdout)
    return EXIT_OK


def cmd_gamma_rank2(args) -> int:
    weight = HighestWeight(args.l1, args.l2)
    rows = _gamma_rows(gamma_operator(weight).rows(), args)
    fmt = _output_format(args)
    if args.invertible_at is None:
        render_rows(f"Gamma(rho_{weight} (x) det^s) in the weight basis", rows, fmt, sys.stdout)
        return EXIT_OK
    verdict = invertibility_report(weight, args.invertible_at, with_values=args.with_values)
    if fmt is OutputFormat.JSON:
        # one document on stdout
        write_json({"eigenvalues": rows, "invertibility": verdict.to_dict()}, sys.stdout)
        return EXIT_OK
    render_rows(f"Gamma(rho_{weight} (x) det^s) in the weight basis", rows, fmt, sys.stdout)
    render_rows("Invertibility", [verdict.to_dict()], fmt, sys.stdout)
    return EXIT_OK


def cmd_gamma_table(args) -> int:
    rows = []
    for r in range(args.r_max + 1):
        rows.extend(gamma_operator(HighestWeight(r, 0)).rows())
    render_rows(f"Gamma(r, k, s), r <= {args.r_max}", _gamma_rows(rows, args), _output_format(args), sys.stdout)
    return EXIT_OK


def _parse_g(text: str):
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError(f"--g must be four comma-separated entries a,b,c,d; got: {text!r}")
    a, b, c, d = (as_rational(p.strip(), "--g entry") for p in parts)
    return [[a, b], [c, d]]


def cmd_rep(args) -> int:
    g = _parse_g(args.g)
    matrix = rho_matrix(args.r, g)
    if args.weight_basis:
        matrix = to_weight_basis(matrix)
    rows = [{"row": i, "entries": entries} for i, entries in enumerate(matrix.to_strings())]
    render_rows(f"rho_{args.r}(g), {'weight' if args.weight_basis else 'monomial'} basis",
                rows, _output_format(args), sys.stdout)
    return EXIT_OK


def cmd_sturm_phantom(args) -> int:
    report, rows = theorem_verdict(args.k_max)
    if args.float:
        for row in rows:
            result = phantom_limit(row["k"])
            row["limit"] = result.limit.to_float()
            row["limit_c_rho"] = result.limit_c_rho.to_float()
    render_rows("Phantom term limits", rows, _output_format(args), sys.stdout)
    if not report.passed:
        for case in report.failures:
            logger.error("phantom check failed: %s %s", case.name, case.detail)
        return EXIT_FAILED
    return EXIT_OK


def _oracle_reports(args) -> List[OracleReport]:
    spec = _quadrature_spec(args)
    logger.info("numeric oracle: r_max=%d laguerre=%d theta=%d", args.r_max, spec.laguerre_order,
                spec.theta_points)
    return [compare_all(spec, args.r_max), det_derivative_sweep(seed=args.seed)]


def _maass_reports(args) -> List[OracleReport]:
    loader = ConfigLoader(args.config_dir)
    spec = loader.quadrature_spec()
    step = args.step if args.step is not None else spec.maass_step
    report = OracleReport("Maass shift finite differences")
    for k in range(1, args.k_max + 1):
        for t, z0 in loader.maass_samples():
            report.extend(maass_fd_check(k, t, z0, h=step, tol=spec.maass_tol))
    return [report]


def cmd_verify(args) -> int:
    if args.suite == "identities":
        reports = identity_suite(args.r_max)
    elif args.suite == "oracle":
        reports = _oracle_reports(args)
    elif args.suite == "maass":
        reports = _maass_reports(args)
    else:
        codes = []
        for suite in ("identities", "oracle", "maass"):
            logger.info("running %s suite", suite)
            args.suite = suite
            codes.append(cmd_verify(args))
        args.suite = "all"
        return worst(codes)
    return _verdict(reports, args, f"verify {args.suite}")


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="Write JSON to stdout")
    fmt.add_argument("--csv", action="store_true", help="Write CSV to stdout")
    common.add_argument("--float", action="store_true",
                        help="Show floating point values instead of exact strings where available")
    common.add_argument("--strict", action="store_true", help="Treat convergence warnings as errors (exit 3)")
    common.add_argument("--verbose", "-v", action="store_true", help="Enable verbose logging")
    common.add_argument("--seed", type=int, default=0,
                        help="Seed for randomized finite-difference points (default: 0)")
    common.add_argument("--config-dir", type=str, default=None,
                        help="Configuration directory (default: $VVGAMMA_CONFIG_DIR or config/)")

    parser = argparse.ArgumentParser(
        prog="vvgamma",
        description="Exact vector-valued matrix Gamma integrals and verification suites",
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    p = commands.add_parser("triangle", parents=[common], help="Triangle numbers a(n, m)")
    p.add_argument("--n-max", type=int, default=10, help="Largest row index (default: 10)")
    p.set_defaults(func=cmd_triangle)

    gamma = commands.add_parser("gamma", help="Closed-form Gamma integrals")
    gamma_commands = gamma.add_subparsers(dest="gamma_command", metavar="KIND")
    gamma_commands.required = True

    p = gamma_commands.add_parser("alt", parents=[common], help="Alternating power st^[q] (x) det^s")
    p.add_argument("--m", type=int, required=True, help="Matrix size m")
    p.add_argument("--q", type=int, required=True, help="Alternating degree q (1 <= q <= m)")
    p.add_argument("--at", type=str, default=None, help="Also evaluate at s = AT")
    p.set_defaults(func=cmd_gamma_alt)

    p = gamma_commands.add_parser("rank2", parents=[common], help="Gamma(rho_l (x) det^s) for m = 2")
    p.add_argument("--l1", type=int, required=True, help="First highest-weight entry")
    p.add_argument("--l2", type=int, required=True, help="Second highest-weight entry (l1 >= l2)")
    p.add_argument("--at", type=str, default=None, help="Also evaluate at s = AT")
    p.add_argument("--invertible-at", type=str, default=None, metavar="S0",
                   help="Report whether the operator is invertible at s = S0")
    p.add_argument("--with-values", action="store_true",
                   help="With --invertible-at, also print the exact eigenvalues")
    p.set_defaults(func=cmd_gamma_rank2)

    p = gamma_commands.add_parser("table", parents=[common], help="Gamma(r, k, s) for all r <= r-max")
    p.add_argument("--r-max", type=int, default=4, help="Largest symmetric power (default: 4)")
    p.add_argument("--at", type=str, default=None, help="Also evaluate at s = AT")
    p.set_defaults(func=cmd_gamma_table)

    p = commands.add_parser("rep", parents=[common], help="Matrix of the symmetric power rho_r(g)")
    p.add_argument("--r", type=int, required=True, help="Symmetric power r")
    p.add_argument("--g", type=str, required=True, help="Entries a,b,c,d of g = [[a, b], [c, d]]")
    p.add_argument("--weight-basis", action="store_true", help="Express in the V_k weight basis")
    p.set_defaults(func=cmd_rep)

    sturm = commands.add_parser("sturm", help="Sturm operator computations")
    sturm_commands = sturm.add_subparsers(dest="sturm_command", metavar="KIND")
    sturm_commands.required = True
    p = sturm_commands.add_parser("phantom", parents=[common], help="Phantom term limits per k")
    p.add_argument("--k-max", type=int, default=5, help="Largest k (default: 5)")
    p.set_defaults(func=cmd_sturm_phantom)

    verify = commands.add_parser("verify", help="Verification suites")
    verify_commands = verify.add_subparsers(dest="suite", metavar="SUITE")
    verify_commands.required = True
    for suite, help_text in (("identities", "Exact identity checks"),
                             ("oracle", "Numeric quadrature and finite-difference oracle"),
                             ("maass", "Maass shift finite-difference check"),
                             ("all", "identities, oracle and maass in that order")):
        p = verify_commands.add_parser(suite, parents=[common], help=help_text)
        p.add_argument("--r-max", type=int, default=4, help="Largest symmetric power (default: 4)")
        p.add_argument("--laguerre", type=int, default=None, help="Quadrature order (default: config)")
        p.add_argument("--theta", type=int, default=None, help="Trapezoid nodes in theta (default: config)")
        p.add_argument("--tol", type=float, default=None, help="Generic-regime tolerance (default: config)")
        p.add_argument("--k-max", type=int, default=3, help="Largest k for the Maass check (default: 3)")
        p.add_argument("--step", type=float, default=None, help="Finite-difference step (default: config)")
        p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """CLI entry point."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    logging.basicConfig(
        level=logging.INFO,
        format="%(asctime)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)

    try:
        return args.func(args)
    except (DomainError, PoleError) as exc:
        logger.error("%s", exc)
        return EXIT_USAGE
    except StepSizeError as exc:
        logger.error("finite-difference step rejected: %s", exc)
        return EXIT_FAILED
    except ValueError as exc:
        logger.error("invalid input: %s", exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
