"""The pinned verification suite behind the ``verify-paper`` subcommand.

Each row replays one bundled problem file through a CLI command and
compares the rendered text byte for byte against a pinned expected
output.  The pinned values were computed with this package and
hand-verified (membership certificates re-expanded, closure bases
checked against independent coefficient-wise membership and against the
monomial-ideal oracle); they serve as a regression harness for the
worked examples the package is built around.

Rows whose pinned values genuinely depend on the characteristic are
skipped, with a warning, when a field override puts the computation in
one of the excluded characteristics.
"""

from __future__ import annotations

import hashlib
import importlib.resources
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .fields import CoefficientField
from .groebner import DEFAULT_GUARD, GuardExceeded, ResourceGuard
from .problemfile import RunConfig, parse_problem_text


@dataclass(frozen=True)
class VerifyRow:
    name: str
    fixture: str
    command: str
    options: dict
    expected: str
    char_exclude: Tuple[int, ...] = ()


ROWS: Tuple[VerifyRow, ...] = (
    VerifyRow(
        "cusp-jet-generators-level-4",
        "cusp.problem", "jet", {"level": 4, "local": True},
        "cusp_jet_level4.expected", (2, 3),
    ),
    VerifyRow(
        "cusp-closure-level-4",
        "cusp.problem", "closure", {"level": 4},
        "cusp_closure_level4.expected", (2, 3),
    ),
    VerifyRow(
        "cusp-closure-level-0-is-maximal-ideal",
        "cusp.problem", "closure", {"level": 0},
        "cusp_closure_level0.expected", (),
    ),
    VerifyRow(
        "cusp-membership-xy3",
        "cusp.problem", "member", {"level": 4, "candidate": "xy3"},
        "cusp_member_xy3.expected", (2, 3),
    ),
    VerifyRow(
        "cusp-membership-x-excluded",
        "cusp.problem", "member", {"level": 4, "candidate": "x"},
        "cusp_member_x.expected", (2, 3),
    ),
    VerifyRow(
        "cusp-membership-degree-5-monomial",
        "cusp.problem", "member", {"level": 4, "candidate": "y5"},
        "cusp_member_y5.expected", (2, 3),
    ),
    VerifyRow(
        "cusp-arc-chain-levels-0-4",
        "cusp.problem", "arc-approx", {"max_level": 4},
        "cusp_arc_level4.expected", (2, 3),
    ),
    VerifyRow(
        "quadric-cone-z-fails-support-closure-at-1",
        "quadric_cone.problem", "jsc-member", {"max_level": 4, "candidate": "z"},
        "quadric_jsc_z.expected", (2,),
    ),
    VerifyRow(
        "quadric-cone-reduced-jet-level-2",
        "quadric_cone.problem", "jet", {"level": 2, "local": True, "reduced": True},
        "quadric_jet_level2_reduced.expected", (2,),
    ),
    VerifyRow(
        "one-variable-zero-ideal-closure-level-3",
        "one_var_zero.problem", "closure", {"level": 3},
        "one_var_zero_closure_level3.expected", (),
    ),
    VerifyRow(
        "monomial-integral-closure",
        "monomial_cube.problem", "integral-closure", {},
        "monomial_cube_integral_closure.expected", (),
    ),
    VerifyRow(
        "monomial-x2y-passes-support-levels-0-5",
        "monomial_cube.problem", "jsc-member", {"max_level": 5, "candidate": "x2y"},
        "monomial_cube_jsc_x2y.expected", (2, 3),
    ),
    VerifyRow(
        "monomial-xy-excluded-at-level-2",
        "monomial_cube.problem", "jsc-member", {"max_level": 6, "candidate": "xy"},
        "monomial_cube_jsc_xy.expected", (2, 3),
    ),
    VerifyRow(
        "shadow-x1-member-at-level-3",
        "counterexample_shadow.problem", "member", {"level": 3, "candidate": "x1"},
        "shadow_member_level3.expected", (2, 3),
    ),
    VerifyRow(
        "shadow-x1-excluded-at-level-4",
        "counterexample_shadow.problem", "member", {"level": 4, "candidate": "x1"},
        "shadow_member_level4.expected", (2, 3),
    ),
    VerifyRow(
        "smooth-origin-constant-chain",
        "origin.problem", "arc-approx", {"max_level": 3},
        "origin_arc_level3.expected", (),
    ),
)


@dataclass
class RowOutcome:
    name: str
    status: str  # "pass" | "fail" | "skip"
    detail: Optional[str] = None


@dataclass
class VerificationOutcome:
    rows: List[RowOutcome]

    @property
    def passed(self) -> int:
        return sum(1 for r in self.rows if r.status == "pass")

    @property
    def failed(self) -> int:
        return sum(1 for r in self.rows if r.status == "fail")

    @property
    def skipped(self) -> int:
        return sum(1 for r in self.rows if r.status == "skip")


def _fixture_text(name: str) -> str:
    resource = importlib.resources.files("jetclosures") / "fixtures" / name
    return resource.read_text(encoding="utf-8")


def _run_row(row: VerifyRow, field_override: Optional[CoefficientField],
             guard: ResourceGuard) -> str:
    from . import cli

    config = RunConfig(
        level=row.options.get("level"),
        max_level=row.options.get("max_level"),
        timeout=guard.timeout,
        max_pair_degree=guard.max_pair_degree,
        field_override=field_override,
    )
    text = _fixture_text(row.fixture)
    digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
    pf = parse_problem_text(text, field_override, digest)

    if row.command == "jet":
        report = cli.cmd_jet(pf, config, row.options.get("local", False),
                             row.options.get("reduced", False))
    elif row.command == "closure":
        report = cli.cmd_closure(pf, config)
    elif row.command == "member":
        report = cli.cmd_member(pf, config, None, row.options.get("candidate"))
    elif row.command == "jsc-member":
        report = cli.cmd_jsc_member(pf, config, None, row.options.get("candidate"))
    elif row.command == "arc-approx":
        report = cli.cmd_arc_approx(pf, config)
    elif row.command == "integral-closure":
        report = cli.cmd_integral_closure(pf, config, False, 12)
    else:
        raise ValueError(f"unknown row command {row.command!r}")
    return report.text()


def run_verification(field_override: Optional[CoefficientField] = None,
                     guard: ResourceGuard = DEFAULT_GUARD,
                     rows: Optional[Tuple[VerifyRow, ...]] = None) -> VerificationOutcome:
    if rows is None:
        rows = ROWS
    outcomes: List[RowOutcome] = []
    characteristic = field_override.characteristic if field_override is not None else 0
    for row in rows:
        if characteristic and characteristic in row.char_exclude:
            outcomes.append(RowOutcome(
                row.name, "skip",
                f"pinned values assume characteristic not in {row.char_exclude}; "
                f"got {characteristic}",
            ))
            continue
        expected = _fixture_text(row.expected)
        try:
            got = _run_row(row, field_override, guard)
        except GuardExceeded as exc:
            outcomes.append(RowOutcome(row.name, "fail", f"resource guard: {exc}"))
            continue
        except Exception as exc:  # a row must never crash the table
            outcomes.append(RowOutcome(row.name, "fail", f"{type(exc).__name__}: {exc}"))
            continue
        if got == expected:
            outcomes.append(RowOutcome(row.name, "pass"))
        else:
            outcomes.append(RowOutcome(
                row.name, "fail",
                f"output mismatch; got {got!r}, expected {expected!r}",
            ))
    return VerificationOutcome(outcomes)
