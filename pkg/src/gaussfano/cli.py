"""Command-line front end.

All results are JSON on stdout; diagnostics go to stderr.  Exit codes:
0 success, 1 corpus failure, 2 invalid input, 3 line not on the variety,
4 no non-reducedness certificate, 5 computation budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .errors import (
    ComputationBudgetExceeded,
    GaussFanoError,
    LineInSingularLocus,
    LineNotOnVariety,
)
from .fano import (
    Failure,
    candidate_witnesses,
    fano_chart_ideal,
    line_on_variety,
    nonreduced_certificate,
    verify_certificate,
)
from .gauss import gauss_constant_on_line, singular_scheme_ideal
from .grassmann import charts, parse_chart
from .groebner import ideal_dimension, step_budget
from .nbundle import normal_bundle_splitting
from .variety import InvalidInput, VarietyFile, parse_line

EXIT_OK = 0
EXIT_CORPUS_FAILED = 1
EXIT_INVALID = 2
EXIT_NOT_ON_VARIETY = 3
EXIT_NO_CERTIFICATE = 4
EXIT_BUDGET = 5


def _emit(doc):
    json.dump(doc, sys.stdout, indent=2, ensure_ascii=False)
    sys.stdout.write("\n")


def _chart(args, vf):
    names = args.chart_vars.split(",") if args.chart_vars else None
    return parse_chart(args.chart, vf.N, names)


def _chart_report(I_X, C):
    Fi = fano_chart_ideal(I_X, C)
    return {
        "chart": C.label,
        "chart_vars": list(C.chart_vars),
        "generators": [str(g) for g in Fi.ideal.gens],
        "groebner_basis": [str(g) for g in Fi.groebner_basis()],
        "dimension": ideal_dimension(Fi.ideal),
    }


def cmd_fano(args) -> int:
    vf = VarietyFile.load(args.input)
    I_X = vf.ideal()
    if args.chart:
        _emit(_chart_report(I_X, _chart(args, vf)))
    else:
        _emit({"charts": [_chart_report(I_X, C) for C in charts(vf.N)]})
    return EXIT_OK


def cmd_line_report(args) -> int:
    vf = VarietyFile.load(args.input)
    I_X = vf.ideal()
    L = parse_line(args.line, vf.N)
    dim = vf.projective_dim(I_X)
    report = {"line": L.to_json(), "on_variety": line_on_variety(I_X, L)}
    if not report["on_variety"]:
        _emit(report)
        print("error: the line is not contained in the variety", file=sys.stderr)
        return EXIT_NOT_ON_VARIETY
    codim = vf.N - dim
    try:
        gauss = gauss_constant_on_line(I_X, L, codim)
    except LineInSingularLocus:
        report.update(in_singular_locus=True, constant=None, splitting=None, consistent=None)
        _emit(report)
        return EXIT_OK
    split = normal_bundle_splitting(I_X, L, dim)
    all_ones = split.degrees == (1,) * (dim - 1)
    report.update(
        in_singular_locus=False,
        constant=gauss.constant,
        common_tangent_hyperplanes=None
        if gauss.common_conormal is None
        else [str(f) for f in gauss.common_conormal],
        generic_rank=gauss.generic_rank,
        coefficient_span_dim=gauss.coefficient_span_dim,
        splitting=split.to_json(),
        consistent=gauss.constant == all_ones,
    )
    _emit(report)
    return EXIT_OK


def cmd_certify_nonreduced(args) -> int:
    vf = VarietyFile.load(args.input)
    I_X = vf.ideal()
    Fi = fano_chart_ideal(I_X, _chart(args, vf))
    if args.witness:
        candidates = [Fi.ring(args.witness)]
    else:
        candidates = candidate_witnesses(Fi)
    attempts = []
    for g in candidates:
        result = nonreduced_certificate(Fi, g, args.kmax)
        if result and verify_certificate(result):
            doc = result.to_json()
            doc.update(chart=Fi.chart.label, chart_vars=list(Fi.chart.chart_vars), verified=True)
            _emit(doc)
            return EXIT_OK
        attempts.append(result.to_json() if isinstance(result, Failure) else {"witness": str(g), "reason": "CheckerRejected"})
    _emit(
        {
            "status": "failure",
            "reason": "NoCertificate",
            "chart": Fi.chart.label,
            "chart_vars": list(Fi.chart.chart_vars),
            "attempts": attempts,
        }
    )
    return EXIT_NO_CERTIFICATE


def cmd_singular(args) -> int:
    vf = VarietyFile.load(args.input)
    I_X = vf.ideal()
    codim = args.codim if args.codim is not None else vf.N - vf.projective_dim(I_X)
    J = singular_scheme_ideal(I_X, codim)
    _emit(
        {
            "codim": codim,
            "generators": [str(g) for g in J.gens],
            "groebner_basis": [str(g) for g in J.groebner_basis()],
            "projective_dimension": ideal_dimension(J) - 1,
        }
    )
    return EXIT_OK


def cmd_corpus(args) -> int:
    from .corpus import run_corpus

    start = time.perf_counter()
    results = run_corpus()
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.seconds:.3f}s)", file=sys.stderr)
    ok = all(r.passed for r in results)
    _emit(
        {
            "passed": ok,
            "seconds": round(time.perf_counter() - start, 4),
            "checks": [r.to_json() for r in results],
        }
    )
    return EXIT_OK if ok else EXIT_CORPUS_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, help="reduction-step budget per Gröbner computation")
    common.add_argument("--json", action="store_true", default=True, help="JSON output (the default)")

    variety = argparse.ArgumentParser(add_help=False)
    variety.add_argument("--input", required=True, metavar="PATH", help="variety JSON document")

    chart = argparse.ArgumentParser(add_help=False)
    chart.add_argument("--chart-vars", metavar="NAMES", help="comma-separated chart coordinate names")

    parser = argparse.ArgumentParser(prog="gaussfano", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fano", parents=[common, variety, chart], help="Fano-scheme chart ideals")
    p.add_argument("--chart", metavar="I,J", help="identity columns of the chart (default: all)")
    p.set_defaults(func=cmd_fano)

    p = sub.add_parser("line-report", parents=[common, variety], help="Gauss map and normal bundle of a line")
    p.add_argument("--line", required=True, metavar="JSON", help='{"points": [...]} or {"matrix": [...]}')
    p.set_defaults(func=cmd_line_report)

    p = sub.add_parser(
        "certify-nonreduced", parents=[common, variety, chart], help="certify a non-reduced chart"
    )
    p.add_argument("--chart", required=True, metavar="I,J")
    p.add_argument("--witness", metavar="STR", help="candidate nilpotent (default: search)")
    p.add_argument("--kmax", type=int, default=4)
    p.set_defaults(func=cmd_certify_nonreduced)

    p = sub.add_parser("singular", parents=[common, variety], help="singular scheme ideal")
    p.add_argument("--codim", type=int)
    p.set_defaults(func=cmd_singular)

    p = sub.add_parser("corpus", parents=[common], help="run the worked-example checks")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    budget = args.budget
    if budget is None and os.environ.get("GAUSSFANO_BUDGET"):
        budget = int(os.environ["GAUSSFANO_BUDGET"])
    try:
        if budget is not None:
            with step_budget(budget):
                return args.func(args)
        return args.func(args)
    except ComputationBudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except LineNotOnVariety as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NOT_ON_VARIETY
    except (InvalidInput, GaussFanoError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
