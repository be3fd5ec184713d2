"""Command-line interface.

Subcommands take a problem file and emit a deterministic text or JSON
report; identical inputs and options produce byte-identical output.
Timings are reported only when requested, so that the default output
stays reproducible.

Exit codes: 0 for success (a mathematical "false" answered by a
membership command is still success, the verdict lives in the payload),
1 when the pinned verification suite has failing rows, 2 for input
errors, 3 when a resource guard tripped, 4 for an internal invariant
violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional

from .closures import (
    ClosureProblemError,
    LiteralModeUnsupportedError,
    arc_closure_approx,
    jet_closure,
    jet_closure_member,
    jet_support_closure_member,
    jsc_member_up_to,
    literal_jet_support_closure_member,
)
from .fields import QQ, field_from_name
from .groebner import GuardExceeded, InternalInvariantError, verify_certificate
from .jets import jet_ideal
from .monomial_ideals import (
    MonomialIdealSpec,
    PowerTestInconclusiveError,
    UnsupportedArityError,
    monomial_integral_closure,
)
from .parser import PolynomialSyntaxError
from .printer import format_polynomial, sort_for_display
from .problemfile import ProblemFile, ProblemFileError, RunConfig, load_problem

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_GUARD = 3
EXIT_INTERNAL_ERROR = 4


class _Report:
    """Accumulates one command's output in both renderings."""

    def __init__(self, command: str, digest: Optional[str]):
        self.command = command
        self.digest = digest
        self.lines: List[str] = []
        self.result: Optional[dict] = None
        self.generators: Optional[List[str]] = None
        self.certificates_verified: Optional[bool] = None
        self.stabilized_at: Optional[int] = None
        self.level_results: Optional[list] = None
        self.timings: Optional[dict] = None

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"

    def json(self) -> str:
        payload = {
            "command": self.command,
            "input_digest": self.digest,
            "result": self.result,
            "generators": self.generators,
            "certificates_verified": self.certificates_verified,
            "stabilized_at": self.stabilized_at,
            "level_results": self.level_results,
            "timings": self.timings,
        }
        return json.dumps(payload, sort_keys=True, separators=(", ", ": ")) + "\n"


def _generator_lines(polys) -> List[str]:
    items = [p for p in sort_for_display(polys) if not p.is_zero()]
    if not items:
        return ["0"]
    return [format_polynomial(p) for p in items]


def _warn_prime_field(pf: ProblemFile) -> None:
    if pf.field != QQ:
        sys.stderr.write(
            f"warning: computing over {pf.field.name}; answers in positive "
            "characteristic need not agree with characteristic-zero claims\n"
        )


# -- individual commands -----------------------------------------------------


def cmd_jet(pf: ProblemFile, config: RunConfig, local: bool, reduced: bool) -> _Report:
    report = _Report("jet", pf.digest)
    level = config.level if config.level is not None else 0
    problem = pf.problem()
    source = problem.combined
    jt = jet_ideal(source, level, local)
    if reduced:
        from .groebner import groebner_basis

        gens = list(groebner_basis(jt.ideal, guard=config.guard()))
        lines = _generator_lines(gens)
    else:
        gens = list(jt.generators)
        lines = [format_polynomial(p) for p in gens] if gens else ["0"]
    report.lines = lines
    report.generators = lines if gens else []
    report.result = {"level": level, "local": local, "reduced": reduced}
    return report


def cmd_closure(pf: ProblemFile, config: RunConfig) -> _Report:
    report = _Report("closure", pf.digest)
    level = config.level if config.level is not None else 0
    closure = jet_closure(pf.problem(), level, guard=config.guard())
    lines = _generator_lines(closure.generators)
    report.lines = lines
    report.generators = lines
    report.result = {"level": level}
    return report


def _resolve_candidate(pf: ProblemFile, poly_text: Optional[str],
                       candidate: Optional[str]):
    if (poly_text is None) == (candidate is None):
        raise ProblemFileError("exactly one of --poly or --candidate is required")
    if candidate is not None:
        return pf.candidate(candidate)
    try:
        from .parser import poly_parse

        return poly_parse(poly_text, pf.ring)
    except PolynomialSyntaxError as exc:
        raise ProblemFileError(str(exc)) from None


def cmd_member(pf: ProblemFile, config: RunConfig, poly_text: Optional[str],
               candidate: Optional[str]) -> _Report:
    report = _Report("member", pf.digest)
    level = config.level if config.level is not None else 0
    g = _resolve_candidate(pf, poly_text, candidate)
    res = jet_closure_member(g, pf.problem(), level, guard=config.guard())
    if res:
        verified = all(verify_certificate(cert) for _, cert in res.certificates)
        report.lines = ["member: true", f"certificates-verified: {str(verified).lower()}"]
        report.certificates_verified = verified
        report.result = {"member": True, "level": level, "failed_coefficient": None}
    else:
        report.lines = ["member: false", f"failed-coefficient: {res.failed_at}"]
        report.result = {"member": False, "level": level,
                         "failed_coefficient": res.failed_at}
    return report


def cmd_jsc_member(pf: ProblemFile, config: RunConfig, poly_text: Optional[str],
                   candidate: Optional[str]) -> _Report:
    report = _Report("jsc-member", pf.digest)
    g = _resolve_candidate(pf, poly_text, candidate)
    problem = pf.problem()
    guard = config.guard()
    if config.max_level is not None:
        if config.literal_support_mode:
            verdict, failing = True, None
            for m in range(config.max_level + 1):
                res = literal_jet_support_closure_member(g, problem, m, guard=guard)
                if not res:
                    verdict, failing = False, m
                    break
        else:
            verdict, failing = jsc_member_up_to(g, problem, config.max_level, guard=guard)
        report.result = {"member": verdict, "max_level": config.max_level,
                         "first_failing_level": failing}
        report.lines = [f"member: {str(verdict).lower()}"]
        if not verdict:
            report.lines.append(f"first-failing-level: {failing}")
        return report
    level = config.level if config.level is not None else 0
    fn = (literal_jet_support_closure_member if config.literal_support_mode
          else jet_support_closure_member)
    res = fn(g, problem, level, guard=guard)
    report.result = {"member": bool(res), "level": level,
                     "failed_coefficient": res.failed_at}
    report.lines = [f"member: {str(bool(res)).lower()}"]
    if not res:
        report.lines.append(f"failed-coefficient: {res.failed_at}")
    return report


def cmd_arc_approx(pf: ProblemFile, config: RunConfig) -> _Report:
    report = _Report("arc-approx", pf.digest)
    max_level = config.max_level if config.max_level is not None else 3
    chain = arc_closure_approx(pf.problem(), max_level, guard=config.guard())
    lines = []
    level_results = []
    for entry, cum in zip(chain.levels, chain.cumulative):
        closure_lines = _generator_lines(entry.closure.generators)
        cumulative_lines = _generator_lines(cum.generators)
        lines.append(f"level {entry.level}: {', '.join(closure_lines)}")
        lines.append(f"cumulative {entry.level}: {', '.join(cumulative_lines)}")
        level_results.append({
            "level": entry.level,
            "closure": closure_lines,
            "cumulative": cumulative_lines,
        })
    stab = chain.stabilized_at
    lines.append(f"stabilized-at: {stab if stab is not None else 'none'}")
    if chain.chain_violations:
        lines.append(
            "level-monotonicity-violations: "
            + ", ".join(str(v) for v in chain.chain_violations)
        )
    if not chain.complete:
        lines.append(f"incomplete: {chain.guard_message}")
    report.lines = lines
    report.level_results = level_results
    report.stabilized_at = stab
    report.result = {
        "complete": chain.complete,
        "guard": chain.guard_message,
        "chain_violations": chain.chain_violations,
        "max_level": max_level,
    }
    if chain.cumulative:
        report.generators = _generator_lines(chain.cumulative[-1].generators)
    return report


def cmd_integral_closure(pf: ProblemFile, config: RunConfig, strict: bool,
                         power_bound: int) -> _Report:
    report = _Report("integral-closure", pf.digest)
    if pf.relations:
        raise ProblemFileError("integral-closure expects a monomial ideal, no relations")
    try:
        spec = MonomialIdealSpec.from_polynomials(pf.ideals)
    except ValueError as exc:
        raise ProblemFileError(str(exc)) from None
    closure = monomial_integral_closure(spec, power_bound=power_bound, strict=strict)
    polys = closure.polynomials(pf.ring)
    lines = _generator_lines(polys)
    report.lines = lines
    report.generators = lines
    report.result = {"minimal_generators": [list(e) for e in closure.generators]}
    return report


def cmd_verify_paper(config: RunConfig) -> _Report:
    from .verify import run_verification

    report = _Report("verify-paper", None)
    outcome = run_verification(field_override=config.field_override,
                               guard=config.guard())
    rows_payload = []
    for row in outcome.rows:
        if row.status == "pass":
            report.lines.append(f"PASS {row.name}")
        elif row.status == "skip":
            report.lines.append(f"SKIP {row.name}: {row.detail}")
        else:
            report.lines.append(f"FAIL {row.name}: {row.detail}")
        rows_payload.append({"name": row.name, "status": row.status,
                             "detail": row.detail})
    report.lines.append(
        f"{outcome.passed} passed, {outcome.failed} failed, {outcome.skipped} skipped"
    )
    report.result = {"rows": rows_payload, "all_passed": outcome.failed == 0}
    return report


# -- argument plumbing --------------------------------------------------------


def _add_common(p: argparse.ArgumentParser, with_file: bool = True) -> None:
    if with_file:
        p.add_argument("file", help="problem file")
    p.add_argument("--format", choices=("text", "json"), default="text",
                   help="output format")
    p.add_argument("--timeout", type=float, default=None,
                   help="wall-clock limit in seconds for basis computations")
    p.add_argument("--max-degree", type=int, default=40,
                   help="maximum S-pair degree before giving up")
    p.add_argument("--field", nargs="+", default=None, metavar=("NAME", "P"),
                   help="override the field declaration, e.g. --field Q or --field Fp 5")
    p.add_argument("--timings", action="store_true",
                   help="include wall-clock timings in the output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jetclosures",
        description="Exact jet-scheme ideals and jet/arc closure operations "
                    "for ideals at the origin.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jet", help="print the generators of the jet ideal")
    _add_common(p)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--local", action="store_true",
                   help="restrict to the fiber over the origin")
    p.add_argument("--reduced", action="store_true",
                   help="print the reduced basis instead of the raw coefficient list")

    p = sub.add_parser("closure", help="compute the level-m closure ideal")
    _add_common(p)
    p.add_argument("--level", type=int, required=True)

    p = sub.add_parser("member", help="test membership in the level-m closure")
    _add_common(p)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--poly", default=None, help="polynomial expression to test")
    p.add_argument("--candidate", default=None, help="candidate name from the file")

    p = sub.add_parser("jsc-member",
                       help="test membership in the level-m support closure")
    _add_common(p)
    p.add_argument("--level", type=int, default=None)
    p.add_argument("--max-level", type=int, default=None)
    p.add_argument("--poly", default=None)
    p.add_argument("--candidate", default=None)
    p.add_argument("--literal", action="store_true",
                   help="radical-first reading; needs a monomial jet ideal")

    p = sub.add_parser("arc-approx",
                       help="cumulative closure intersections up to a level bound")
    _add_common(p)
    p.add_argument("--max-level", type=int, required=True)

    p = sub.add_parser("integral-closure",
                       help="integral closure of a monomial ideal (2 or 3 variables)")
    _add_common(p)
    p.add_argument("--strict", action="store_true",
                   help="raise when the power test is exhausted (3 variables)")
    p.add_argument("--power-bound", type=int, default=12)

    p = sub.add_parser("verify-paper",
                       help="run the bundled suite of pinned worked examples")
    _add_common(p, with_file=False)

    return parser


def _parse_field(tokens) -> Optional[object]:
    if tokens is None:
        return None
    try:
        return field_from_name(" ".join(tokens))
    except ValueError as exc:
        raise ProblemFileError(str(exc)) from None


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    try:
        field_override = _parse_field(args.field)
        config = RunConfig(
            level=getattr(args, "level", None),
            max_level=getattr(args, "max_level", None),
            output_format=args.format,
            timeout=args.timeout,
            max_pair_degree=args.max_degree,
            literal_support_mode=getattr(args, "literal", False),
            field_override=field_override,
            show_timings=args.timings,
        )

        if args.command == "verify-paper":
            report = cmd_verify_paper(config)
            exit_code = EXIT_OK if report.result["all_passed"] else EXIT_VERIFY_FAILED
        else:
            pf = load_problem(args.file, field_override)
            _warn_prime_field(pf)
            if args.command == "jet":
                report = cmd_jet(pf, config, args.local, args.reduced)
            elif args.command == "closure":
                report = cmd_closure(pf, config)
            elif args.command == "member":
                report = cmd_member(pf, config, args.poly, args.candidate)
            elif args.command == "jsc-member":
                report = cmd_jsc_member(pf, config, args.poly, args.candidate)
            elif args.command == "arc-approx":
                report = cmd_arc_approx(pf, config)
            elif args.command == "integral-closure":
                report = cmd_integral_closure(pf, config, args.strict, args.power_bound)
            else:  # pragma: no cover - argparse enforces the choices
                raise AssertionError(args.command)
            exit_code = EXIT_OK

        if config.show_timings:
            report.timings = {"total_seconds": round(time.monotonic() - started, 3)}
        out = report.json() if config.output_format == "json" else report.text()
        sys.stdout.write(out)
        return exit_code
    except (ProblemFileError, ClosureProblemError, PolynomialSyntaxError,
            LiteralModeUnsupportedError, UnsupportedArityError,
            PowerTestInconclusiveError, OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT_ERROR
    except GuardExceeded as exc:
        sys.stderr.write(f"resource guard: {exc}\n")
        return EXIT_RESOURCE_GUARD
    except InternalInvariantError as exc:
        sys.stderr.write(f"internal invariant violation: {exc}\n")
        return EXIT_INTERNAL_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
