"""Command line interface: ``qregular analyze | check | paper-examples | appendix``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .appendixpoly import LinearCoefficients, appendix_consistency, linear_function
from .ballintegrals import DomainSpec
from .criterion import CriterionError, classify
from .hstructures import ImaginaryDirection
from .paper_examples import run_paper_examples
from .parser import ParseError, parse_constant, parse_function
from .regularity import check_holomorphic_p
from .report import analyze

EXIT_OK, EXIT_ANALYSIS, EXIT_PARSE = 0, 1, 2


def parse_domain(text: str) -> DomainSpec:
    """unit-ball | ball:<r> | box:<a,b>x<c,d>x<e,f>x<g,h>"""
    if text == "unit-ball":
        return DomainSpec.unit_ball()
    kind, _, rest = text.partition(":")
    try:
        if kind == "ball":
            return DomainSpec.ball(Fraction(rest))
        if kind == "box":
            pairs = [p.split(",") for p in rest.split("x")]
            return DomainSpec.box([(Fraction(a), Fraction(b)) for a, b in pairs])
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad domain {text!r}: {exc}") from None
    raise ValueError(f"bad domain {text!r}")


def _direction(text: str) -> ImaginaryDirection:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError("direction needs three comma-separated components")
    return ImaginaryDirection(*(Fraction(p) for p in parts))


def _complex_pair(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected two comma-separated complex numbers, got {text!r}")
    values = []
    for p in parts:
        q = parse_constant(p)
        a, b = q.complex_pair()
        if not b.is_zero():
            raise ValueError(f"coefficient {p!r} must be complex (no j or k part)")
        values.append(a)
    return values


def cmd_analyze(args) -> int:
    report = analyze(args.function, parse_domain(args.domain), approximate=args.approx)
    print(report.to_json() if args.json else report.to_text())
    return EXIT_OK


def cmd_check(args) -> int:
    f = parse_function(args.function)
    w = _direction(args.direction)
    result = check_holomorphic_p(f, w)
    if args.json:
        print(json.dumps({"function": args.function, "direction": [str(x) for x in w.components],
                          "holomorphic": result.holds}, sort_keys=True))
    else:
        verdict = "holomorphic" if result.holds else "not holomorphic"
        print(f"{f} is {verdict} for p parallel to ({args.direction})")
    return EXIT_OK


def cmd_paper_examples(args) -> int:
    results = run_paper_examples()
    for r in results:
        print(r.line())
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} cases passed")
    return EXIT_OK if passed == len(results) else EXIT_ANALYSIS


def cmd_appendix(args) -> int:
    a1, a2 = _complex_pair(args.q1)
    b1, b2 = _complex_pair(args.q2)
    c1, c2 = _complex_pair(args.q3)
    coeffs = LinearCoefficients.from_complex(a1, a2, b1, b2, c1, c2)
    check = appendix_consistency(coeffs, strict=False)
    f = linear_function(coeffs)
    cls = classify(f)
    payload = {
        "function": f.to_string(),
        "appendix_value": str(check.appendix),
        "det_shifted_over_16": str(check.criterion),
        "agree": check.agrees,
        "holomorphic": check.appendix == 0,
        "classification": cls.type,
    }
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for key, value in payload.items():
            print(f"{key:20s}: {value}")
    return EXIT_OK if check.agrees else EXIT_ANALYSIS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qregular",
                                     description="Regularity and holomorphicity of quaternionic polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full analysis report of one function")
    p.add_argument("--function", required=True)
    p.add_argument("--domain", default="unit-ball")
    p.add_argument("--json", action="store_true")
    p.add_argument("--approx", action="store_true", help="add decimal approximations")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check", help="test membership in Hol_p")
    p.add_argument("--function", required=True)
    p.add_argument("--direction", required=True, help="w1,w2,w3 (unnormalized)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("paper-examples", help="run the regression table of published values")
    p.set_defaults(func=cmd_paper_examples)

    p = sub.add_parser("appendix", help="evaluate the degree-6 holomorphicity polynomial")
    for name in ("--q1", "--q2", "--q3"):
        p.add_argument(name, required=True, help="two complex numbers 'c1,c2' for q = c1 + c2 j")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_appendix)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (CriterionError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ANALYSIS


if __name__ == "__main__":
    sys.exit(main())
