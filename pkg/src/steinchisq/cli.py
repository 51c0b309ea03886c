"""Command line front end: ``steinchisq <command> ...``.

Exit codes: 0 success, 2 usage or validation error, 3 a mathematical
identity failed (which always points at a bug or a corrupted input table).
"""
from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import os
import sys
from fractions import Fraction

from . import gof, moments, simulation
from .coefficients import build_table
from .errors import (InternalInconsistency, LemmaViolation, SteinError,
                     TheoremViolation)
from .polynomial import Polynomial
from .spec import WeightSpec, format_scalar
from .testfuncs import TestFunction

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 2, 3


class UsageError(Exception):
    pass


def load_spec(text, mode=None) -> WeightSpec:
    """Inline JSON, or a path to a JSON file."""
    if text is None:
        raise UsageError("--spec is required")
    raw = text
    if not text.lstrip().startswith("{"):
        try:
            with open(text) as fh:
                raw = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read spec {text!r}: {exc}") from None
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed spec JSON: {exc}") from None
    return WeightSpec.from_dict(data, mode=mode)


def parse_function(text, mode="exact") -> TestFunction:
    if text.lstrip().startswith("{"):
        return TestFunction.from_dict(json.loads(text), mode)
    return TestFunction.parse(text, mode)


def _emit(obj, out):
    out.write(json.dumps(obj, indent=2) + "\n")


def _write_rows(rows, out):
    writer = csv.writer(out, lineterminator="\n")
    writer.writerows(rows)


# -- commands ---------------------------------------------------------------

def cmd_coeffs(args, out):
    spec = load_spec(args.spec, args.mode)
    table = build_table(spec)
    if args.format == "csv":
        rows = [("k", "lambda_k", "mu_k")]
        rows += [(k, format_scalar(lk), format_scalar(mk))
                 for k, (lk, mk) in enumerate(zip(table.lambda_full, table.mu_seq))]
        _write_rows(rows, out)
    else:
        _emit(table.to_dict(), out)
    return EXIT_OK


def _corrupt(table):
    # test hook: knock Lambda_1 off by one so the identity suite must fail
    lam = list(table.lambda_full)
    lam[1] = lam[1] + 1
    return dataclasses.replace(table, lambda_full=tuple(lam))


def _ibp_checks(p, max_degree):
    checks = []
    for d in range(max_degree + 1):
        value = moments.ibp_defect(p, Polynomial.monomial(d, Fraction(1)))
        checks.append({"name": f"integration by parts, chi2({p}), f = x^{d}",
                       "ok": value == 0, "value": str(value)})
    return checks


def identity_suite(spec: WeightSpec, max_degree=8, corrupt=False):
    """Every exact identity for ``spec`` as a list of check records."""
    spec = spec.to_exact()
    table = build_table(spec, check=False)
    if corrupt:
        table = _corrupt(table)
    checks = [{"name": name, "ok": ok} for name, ok in table.check()]
    for centered in (True, False):
        kind = "centered" if centered else "non-centered"
        for d in range(max_degree + 1):
            f = Polynomial.monomial(d, Fraction(1))
            value = moments.operator_expectation(spec, f, centered, table)
            checks.append({"name": f"{kind} E[T x^{d}] = 0", "ok": value == 0,
                           "value": str(value)})
    for p in sorted(set(spec.dofs)):
        checks.extend(_ibp_checks(p, max_degree))
    return checks


def cmd_verify(args, out):
    if args.max_degree < 0:
        raise UsageError("--max-degree must be nonnegative")
    if args.single_chisq is not None:
        p = Fraction(args.single_chisq)
        if not p > 0:
            raise UsageError("--single-chisq needs positive degrees of freedom")
        checks = _ibp_checks(p, args.max_degree)
    else:
        checks = identity_suite(load_spec(args.spec, args.mode),
                                args.max_degree, args.corrupt_table)
    failures = [c for c in checks if not c["ok"]]
    if args.format == "csv":
        _write_rows([("identity", "ok")] + [(c["name"], c["ok"]) for c in checks], out)
    else:
        _emit({"passed": not failures, "n_checks": len(checks),
               "failures": failures, "checks": checks}, out)
    return EXIT_OK if not failures else EXIT_FAILED


def cmd_expect(args, out):
    spec = load_spec(args.spec, args.mode).to_exact()
    f = parse_function(args.f).as_polynomial()
    centered = not args.noncentered
    if args.operator:
        value = moments.expect_operator(spec, f, centered)
    else:
        value = moments.expect_polynomial(spec, f, centered)
    _emit({"value": format_scalar(value), "operator": args.operator,
           "centered": centered, "function": f.to_json(),
           "spec": spec.to_dict()}, out)
    return EXIT_OK


def cmd_mc(args, out):
    spec = load_spec(args.spec, args.mode)
    f = parse_function(args.f)
    est = simulation.mc_expect_operator(spec, f, not args.noncentered, args.n,
                                        args.seed, args.shards, args.workers)
    result = est.to_dict()
    result["centered"] = not args.noncentered
    result["function"] = f.to_dict()
    result["spec"] = spec.to_dict()
    _emit(result, out)
    return EXIT_OK


def cmd_sample(args, out):
    spec = load_spec(args.spec, args.mode)
    x = simulation.sample(spec, args.n, args.seed, args.shards, args.workers)
    if args.format == "json":
        _emit({"seed": args.seed, "shards": args.shards,
               "samples": [float(v) for v in x]}, out)
    else:
        out.write(f"# seed={args.seed} shards={args.shards}\n")
        simulation.write_csv(x, out)
    return EXIT_OK


def cmd_gof(args, out):
    spec = load_spec(args.spec, args.mode)
    try:
        with open(args.data) as fh:
            data = simulation.read_csv(fh)
    except OSError as exc:
        raise UsageError(f"cannot read data {args.data!r}: {exc}") from None
    battery = [parse_function(t) for t in args.f] if args.f else None
    result = gof.bootstrap_pvalue(data, spec, battery, not args.noncentered,
                                  args.B, args.seed, args.shards, args.workers)
    _emit(result.to_dict(), out)
    return EXIT_OK


# -- parser -----------------------------------------------------------------

def _env_shards():
    value = os.environ.get("STEINCHISQ_SHARDS")
    return int(value) if value else simulation.DEFAULT_SHARDS


def build_parser():
    parser = argparse.ArgumentParser(
        prog="steinchisq",
        description="Stein operator tools for weighted sums of chi-square laws.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("json",)):
        p.add_argument("--spec", help="spec JSON, inline or a file path")
        p.add_argument("--mode", choices=("exact", "float"),
                       help="override the spec's scalar mode")
        p.add_argument("--format", choices=formats, default=formats[0])

    def stochastic(p):
        p.add_argument("--seed", type=int, required=True)
        p.add_argument("--shards", type=int, default=_env_shards(),
                       help="logical random substreams (env STEINCHISQ_SHARDS, default 16)")
        p.add_argument("--workers", type=int, default=1,
                       help="threads; never changes the output")

    p = sub.add_parser("coeffs", help="print the operator coefficients")
    common(p, ("json", "csv"))
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("verify", help="run the exact identity suite")
    common(p, ("json", "csv"))
    p.add_argument("--max-degree", type=int, default=8)
    p.add_argument("--single-chisq", metavar="P",
                   help="only check integration by parts for chi2(P)")
    p.add_argument("--corrupt-table", action="store_true",
                   help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("expect", help="exact expectation of a polynomial")
    common(p)
    p.add_argument("--f", required=True, help="e.g. poly:0,0,1 for x^2")
    p.add_argument("--operator", action="store_true",
                   help="expectation of the operator image instead of f")
    p.add_argument("--noncentered", action="store_true")
    p.set_defaults(func=cmd_expect)

    p = sub.add_parser("mc", help="Monte Carlo estimate of E[T f]")
    common(p)
    stochastic(p)
    p.add_argument("--f", required=True,
                   help="poly:c0,c1,..., exp:s, sin:t or cos:t")
    p.add_argument("--n", type=int, default=simulation.DEFAULT_N)
    p.add_argument("--noncentered", action="store_true")
    p.set_defaults(func=cmd_mc)

    p = sub.add_parser("sample", help="draw samples of U")
    common(p, ("csv", "json"))
    stochastic(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("gof", help="bootstrap goodness-of-fit test")
    common(p)
    stochastic(p)
    p.add_argument("--data", required=True, help="CSV, one value per line")
    p.add_argument("--B", type=int, default=999)
    p.add_argument("--f", action="append",
                   help="battery function (repeatable); default battery otherwise")
    p.add_argument("--noncentered", action="store_true")
    p.set_defaults(func=cmd_gof)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (InternalInconsistency, TheoremViolation, LemmaViolation) as exc:
        _emit({"passed": False, "error": type(exc).__name__,
               "message": str(exc)}, out)
        return EXIT_FAILED
    except (UsageError, SteinError, ValueError, KeyError, TypeError) as exc:
        print(f"steinchisq {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run(argv):
    """Run the CLI and capture ``(exit_code, stdout_text)``."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
