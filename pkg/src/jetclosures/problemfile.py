"""Line-based problem files describing a closure problem.

Format, one directive per line, ``#`` starts a comment:

    field Q            (or: field Fp 5)
    vars x, y, z
    relation x^2+y^2+z^2
    ideal x
    ideal y
    candidate z = z

``field`` and ``vars`` appear exactly once; ``vars`` must precede every
relation, ideal and candidate line; at least one ``ideal`` line is
required.  Relations generate the ideal presenting the quotient ring,
ideal lines generate the ideal whose closures are computed, candidates
name polynomials for membership commands.
"""

from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .closures import ClosureProblem
from .fields import CoefficientField, field_from_name
from .groebner import ResourceGuard
from .parser import poly_parse
from .poly import Polynomial, RingContext

TIMEOUT_ENV_VAR = "JETCLOSURES_TIMEOUT"


class ProblemFileError(ValueError):
    """Malformed problem file; carries the offending line number."""

    def __init__(self, message: str, line: Optional[int] = None):
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{message}{where}")
        self.line = line


@dataclass
class ProblemFile:
    """A parsed problem file, with polynomials built over its ring."""

    field: CoefficientField
    variables: Tuple[str, ...]
    ring: RingContext
    relations: List[Polynomial]
    ideals: List[Polynomial]
    candidates: Dict[str, Polynomial]
    digest: str

    def problem(self) -> ClosureProblem:
        return ClosureProblem.from_generators(self.ring, self.relations, self.ideals)

    def candidate(self, name: str) -> Polynomial:
        try:
            return self.candidates[name]
        except KeyError:
            raise ProblemFileError(f"no candidate named {name!r}") from None


def parse_problem_text(text: str, field_override: Optional[CoefficientField] = None,
                       digest: str = "") -> ProblemFile:
    field_decl: Optional[CoefficientField] = None
    variables: Optional[Tuple[str, ...]] = None
    relation_lines: List[Tuple[int, str]] = []
    ideal_lines: List[Tuple[int, str]] = []
    candidate_lines: List[Tuple[int, str, str]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "field":
            if field_decl is not None:
                raise ProblemFileError("duplicate field line", lineno)
            try:
                field_decl = field_from_name(rest)
            except ValueError as exc:
                raise ProblemFileError(str(exc), lineno) from None
        elif keyword == "vars":
            if variables is not None:
                raise ProblemFileError("duplicate vars line", lineno)
            names = tuple(v.strip() for v in rest.split(",") if v.strip())
            if not names:
                raise ProblemFileError("empty vars line", lineno)
            for name in names:
                if "@" in name:
                    raise ProblemFileError(
                        f"variable name {name!r} may not contain '@'", lineno)
            variables = names
        elif keyword == "relation":
            relation_lines.append((lineno, rest))
        elif keyword == "ideal":
            ideal_lines.append((lineno, rest))
        elif keyword == "candidate":
            name, eq, expr = rest.partition("=")
            if not eq:
                raise ProblemFileError("candidate line needs 'name = expression'", lineno)
            candidate_lines.append((lineno, name.strip(), expr.strip()))
        else:
            raise ProblemFileError(f"unknown directive {keyword!r}", lineno)

        if variables is None and keyword in ("relation", "ideal", "candidate"):
            raise ProblemFileError("vars line must precede expression lines", lineno)

    if field_decl is None:
        raise ProblemFileError("missing field line")
    if variables is None:
        raise ProblemFileError("missing vars line")
    if not ideal_lines:
        raise ProblemFileError("at least one ideal line is required")

    chosen = field_override if field_override is not None else field_decl
    try:
        ring = RingContext(chosen, variables)
    except ValueError as exc:
        raise ProblemFileError(str(exc)) from None

    def parse_at(lineno: int, expr: str) -> Polynomial:
        from .parser import PolynomialSyntaxError

        try:
            return poly_parse(expr, ring)
        except PolynomialSyntaxError as exc:
            raise ProblemFileError(str(exc), lineno) from None

    relations = [parse_at(n, e) for n, e in relation_lines]
    ideals = [parse_at(n, e) for n, e in ideal_lines]
    candidates: Dict[str, Polynomial] = {}
    for lineno, name, expr in candidate_lines:
        if not name or "@" in name:
            raise ProblemFileError(f"bad candidate name {name!r}", lineno)
        if name in candidates:
            raise ProblemFileError(f"duplicate candidate {name!r}", lineno)
        candidates[name] = parse_at(lineno, expr)

    return ProblemFile(chosen, variables, ring, relations, ideals, candidates, digest)


def load_problem(path: str, field_override: Optional[CoefficientField] = None) -> ProblemFile:
    with open(path, "rb") as fh:
        data = fh.read()
    digest = hashlib.sha256(data).hexdigest()
    return parse_problem_text(data.decode("utf-8"), field_override, digest)


@dataclass(frozen=True)
class RunConfig:
    """Options shared by the CLI commands."""

    level: Optional[int] = None
    max_level: Optional[int] = None
    output_format: str = "text"
    timeout: Optional[float] = None
    max_pair_degree: int = 40
    literal_support_mode: bool = False
    field_override: Optional[CoefficientField] = None
    show_timings: bool = False

    def __post_init__(self):
        if self.level is not None and self.level < 0:
            raise ValueError("level must be nonnegative")
        if self.max_level is not None and self.max_level < 0:
            raise ValueError("max-level must be nonnegative")
        if self.timeout is not None and self.timeout <= 0:
            raise ValueError("timeout must be positive")
        if self.output_format not in ("text", "json"):
            raise ValueError("output format must be text or json")

    def guard(self) -> ResourceGuard:
        timeout = self.timeout
        if timeout is None:
            env = os.environ.get(TIMEOUT_ENV_VAR)
            if env:
                timeout = float(env)
        return ResourceGuard(max_pair_degree=self.max_pair_degree, timeout=timeout)
