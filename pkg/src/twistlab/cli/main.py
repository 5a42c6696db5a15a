"""``twistlab`` command-line entry point.

Exit codes: 0 on success, 1 when a verification fails or an expression
cannot be evaluated, 2 on usage and parse errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from ..errors import ExpressionSyntaxError, NotInGrading, UnknownSuite
from ..freegroup import LETTERS, parse_word, render_word
from ..twistcore.dynamics import minimality_report
from ..twistcore.groupoid import FreeTwist, isotropy_twist
from ..twistcore.obstruction import chern_of_word, obstruction_certificate
from .evaluate import EvaluationError, eval_text
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twistlab", description="Exact twists over X x| F2.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an element expression")
    p.add_argument("expr", help="e.g. '[b | 0 ; 1/3 | 1/4] * [B | 0 ; 1/3 | 0]'")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=None, help="suite-specific sample count")
    p.add_argument("--json", type=Path, default=None, metavar="PATH", help="write the JSON report here ('-' for stdout)")
    p.add_argument("--stable", action="store_true", help="omit timings so the report is byte-stable")

    p = sub.add_parser("certify", help="obstruction certificate of the fibre over a word")
    p.add_argument("--word", required=True)
    p.add_argument("--samples", type=int, default=1024)
    p.add_argument("--isotropy", action="store_true", help="certify inside the restriction to ker ell_a")

    p = sub.add_parser("orbit", help="orbit-gap check of the golden rotation")
    p.add_argument("--iterations", type=int, required=True)
    p.add_argument("--rotation", type=Fraction, default=None, help="rational rotation instead of theta")
    return parser


def _cmd_eval(args) -> int:
    try:
        result = eval_text(args.expr)
    except ExpressionSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EvaluationError, NotInGrading) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(result)
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        report = run_suite(args.suite, args.seed, args.samples)
    except (UnknownSuite, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json is not None:
        text = report.to_json(stable=args.stable)
        if str(args.json) == "-":
            sys.stdout.write(text)
        else:
            args.json.write_text(text)
    status = "PASS" if report.passed else "FAIL"
    out = sys.stderr if str(args.json) == "-" else sys.stdout
    print(f"{report.suite}: {status} ({report.cases} cases, {len(report.failures)} failures)", file=out)
    for f in report.failures[:10]:
        print(f"  {f['case']}: expected {f['expected']}, got {f['got']}; witness {', '.join(f['witness'])}", file=out)
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_certify(args) -> int:
    text = args.word.strip()
    if any(ch not in LETTERS for ch in text) and text not in ("e", "ε", ""):
        print(f"error: {args.word!r} is not a word in a, A, b, B", file=sys.stderr)
        return EXIT_USAGE
    word = parse_word(text)
    twist = isotropy_twist() if args.isotropy else FreeTwist()
    try:
        cert = obstruction_certificate(twist, word, args.samples)
    except NotInGrading as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    verdict = "no continuous section" if cert else "continuous section exists"
    print(f"{twist.name}^{render_word(word)}: certificate {cert} ({verdict}); closed form {chern_of_word(word)}")
    return EXIT_OK if cert == chern_of_word(word) else EXIT_FAIL


def _cmd_orbit(args) -> int:
    try:
        report = minimality_report(args.iterations, rotation=args.rotation)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    status = "PASS" if report.passed else "FAIL"
    print(f"rotation {report.rotation}, N = {report.iterations}: max gap {report.max_gap:.6e}, bound {report.bound:.6e}: {status}")
    return EXIT_OK if report.passed else EXIT_FAIL


COMMANDS = {"eval": _cmd_eval, "verify": _cmd_verify, "certify": _cmd_certify, "orbit": _cmd_orbit}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
