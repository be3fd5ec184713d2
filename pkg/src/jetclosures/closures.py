"""Closure operations on ideals at the origin.

For an ideal a (together with optional defining relations b presenting a
quotient ring) the level-m closure collects every polynomial whose jet
coefficients up to level m lie in the jet ideal of b + a restricted to
the fiber over the origin.  Quotients are handled by computing with
b + a in the ambient polynomial ring throughout, which yields the same
answers in ambient coordinates.

Two independent decision routes exist and are cross-checked in the test
suite: coefficient-wise membership in the jet fiber ideal, and the full
closure ideal obtained as an elimination kernel.  The support variant
replaces membership by radical membership, matching the reduced fiber.
The arc-closure approximation intersects the closures of the levels
0..M cumulatively and reports stabilization of the chain, which is only
evidence, never proof, about the infinite-level closure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from .groebner import (
    DEFAULT_GUARD,
    GuardExceeded,
    Ideal,
    InternalInvariantError,
    MembershipCertificate,
    ResourceGuard,
    groebner_basis,
    ideal_intersect,
    ideal_member,
    radical_member,
)
from .jets import LocalJetIdeal, hasse_schmidt_expand, jet_ideal
from .poly import Polynomial, RingContext


def canonical_ideal(ring: RingContext, generators, guard: ResourceGuard = DEFAULT_GUARD) -> Ideal:
    """An Ideal presented by its reduced basis, with the basis cache seeded."""
    basis = groebner_basis(Ideal(ring, list(generators)), guard=guard)
    result = Ideal(ring, basis)
    result._basis_cache[ring.order.cache_key()] = result.generators
    return result


class ClosureProblemError(ValueError):
    """The input ideals do not define a germ at the origin."""


class LiteralModeUnsupportedError(ValueError):
    """The literal support-closure mode needs a monomial jet ideal."""


@dataclass
class ClosureProblem:
    """An ideal at the origin, with optional relations presenting a quotient.

    ``relations`` generates the ideal b with R = k[x]/b, ``ideal``
    generates a inside R (written in ambient coordinates);
    ``combined`` is b + a, the ideal every closure is computed for.
    All generators must vanish at the origin.
    """

    ambient: RingContext
    relations: Ideal
    ideal: Ideal

    def __post_init__(self):
        if self.relations.ring != self.ambient or self.ideal.ring != self.ambient:
            raise ClosureProblemError("relations and ideal must live in the ambient ring")
        for g in self.relations.generators + self.ideal.generators:
            if g.constant_term():
                raise ClosureProblemError(
                    f"generator {g} does not vanish at the origin"
                )
        self.combined = Ideal(self.ambient, self.relations.generators + self.ideal.generators)
        self._jet_cache: dict = {}
        self._closure_cache: dict = {}

    @classmethod
    def from_generators(cls, ring: RingContext, relations: Sequence[Polynomial],
                        ideal: Sequence[Polynomial]) -> "ClosureProblem":
        return cls(ring, Ideal(ring, list(relations)), Ideal(ring, list(ideal)))

    def local_jet_ideal(self, level: int) -> LocalJetIdeal:
        cached = self._jet_cache.get(level)
        if cached is None:
            cached = jet_ideal(self.combined, level, local=True)
            self._jet_cache[level] = cached
        return cached


class JetMembershipResult:
    """Verdict of a coefficient-wise closure membership test.

    ``certificates`` holds one (level, certificate) entry per jet
    coefficient when the verdict is positive; ``failed_at`` is the first
    coefficient index that fell outside the jet ideal otherwise.
    """

    __slots__ = ("member", "certificates", "failed_at")

    def __init__(self, member: bool, certificates: tuple, failed_at: Optional[int]):
        self.member = member
        self.certificates = certificates
        self.failed_at = failed_at

    def __bool__(self) -> bool:
        return self.member

    def __repr__(self) -> str:
        return f"JetMembershipResult({self.member})"


def jet_closure_member(g: Polynomial, problem: ClosureProblem, level: int,
                       guard: ResourceGuard = DEFAULT_GUARD) -> JetMembershipResult:
    """Is g in the level-m closure, decided coefficient by coefficient."""
    if g.ring != problem.ambient:
        raise ClosureProblemError("candidate must live in the ambient ring")
    local = problem.local_jet_ideal(level)
    J = local.ideal
    coefficients = hasse_schmidt_expand(g, level, local=True, jet=local.context)
    certificates = []
    for i, c in enumerate(coefficients):
        if c.is_zero():
            certificates.append((i, MembershipCertificate(J, c, ())))
            continue
        res = ideal_member(c, J, guard=guard)
        if not res:
            return JetMembershipResult(False, (), i)
        certificates.append((i, res.certificate))
    return JetMembershipResult(True, tuple(certificates), None)


class SupportMembershipResult:
    """Verdict of a support-closure membership test at one level."""

    __slots__ = ("member", "failed_at")

    def __init__(self, member: bool, failed_at: Optional[int]):
        self.member = member
        self.failed_at = failed_at

    def __bool__(self) -> bool:
        return self.member


def jet_support_closure_member(g: Polynomial, problem: ClosureProblem, level: int,
                               guard: ResourceGuard = DEFAULT_GUARD) -> SupportMembershipResult:
    """Is g in the level-m support closure (reduced fiber membership).

    Each jet coefficient is tested for membership in the radical of the
    jet fiber ideal.
    """
    if g.ring != problem.ambient:
        raise ClosureProblemError("candidate must live in the ambient ring")
    local = problem.local_jet_ideal(level)
    J = local.ideal
    coefficients = hasse_schmidt_expand(g, level, local=True, jet=local.context)
    for i, c in enumerate(coefficients):
        if c.is_zero():
            continue
        if not radical_member(c, J, guard=guard):
            return SupportMembershipResult(False, i)
    return SupportMembershipResult(True, None)


def jsc_member_up_to(g: Polynomial, problem: ClosureProblem, max_level: int,
                     guard: ResourceGuard = DEFAULT_GUARD):
    """Support-closure membership for every level up to the bound.

    Returns (verdict, first failing level or None).  A negative verdict
    is a proof of exclusion from the full support closure; a positive
    one is finite-level evidence only.
    """
    for m in range(max_level + 1):
        res = jet_support_closure_member(g, problem, m, guard=guard)
        if not res:
            return False, m
    return True, None


def jet_closure(problem: ClosureProblem, level: int,
                guard: ResourceGuard = DEFAULT_GUARD) -> Ideal:
    """The full level-m closure of the combined ideal, in ambient coordinates.

    Computed as an elimination kernel: adjoin the local jet coordinates
    u and a truncation variable t, impose the jet fiber ideal written in
    u, the substitution relations x_j - sum_i u_{j,i} t^i and t^(m+1),
    and intersect with the ambient variables.  The result always
    contains the combined ideal together with every monomial of degree
    m + 1, and taking the closure twice changes nothing.
    """
    cached = problem._closure_cache.get(level)
    if cached is not None:
        return cached
    amb = problem.ambient
    local = problem.local_jet_ideal(level)
    jet_names = local.context.ring.variables
    t = amb.fresh_name("t")
    elim_ring = RingContext(amb.field, amb.variables + jet_names + (t,), amb.order)
    tvar = elim_ring.variable(t)

    gens = [p.map_into(elim_ring) for p in local.generators]
    for v in amb.variables:
        series = elim_ring.zero()
        for i in range(1, level + 1):
            series = series + elim_ring.variable(f"{v}@{i}") * tvar ** i
        gens.append(elim_ring.variable(v) - series)
    gens.append(tvar ** (level + 1))

    from .groebner import eliminate

    kernel = eliminate(Ideal(elim_ring, gens), amb.variables, guard=guard)
    mapped = [p.map_into(amb) for p in kernel.generators]
    result = canonical_ideal(amb, mapped, guard)
    problem._closure_cache[level] = result
    return result


@dataclass
class LevelEntry:
    level: int
    closure: Ideal


@dataclass
class ClosureChainReport:
    """Per-level closures and their cumulative intersections up to a bound.

    ``stabilized_at`` is the least index from which the cumulative chain
    stays constant through the last computed level, or None; stability
    of the finite chain is heuristic evidence about the infinite
    intersection, never proof.  ``chain_violations`` lists levels m
    where the level-wise inclusion C_{m+1} subset of C_m failed, which
    is recorded as data and not treated as an error.  When a resource
    guard trips, the report carries the completed prefix and
    ``complete`` is False.
    """

    problem: ClosureProblem
    max_level: int
    levels: List[LevelEntry] = field(default_factory=list)
    cumulative: List[Ideal] = field(default_factory=list)
    stabilized_at: Optional[int] = None
    complete: bool = True
    guard_message: Optional[str] = None
    chain_violations: List[int] = field(default_factory=list)


def arc_closure_approx(problem: ClosureProblem, max_level: int,
                       guard: ResourceGuard = DEFAULT_GUARD) -> ClosureChainReport:
    """Cumulative intersection of the closures of levels 0..max_level."""
    if max_level < 0:
        raise ValueError("max_level must be nonnegative")
    report = ClosureChainReport(problem=problem, max_level=max_level)
    amb = problem.ambient
    current: Optional[Ideal] = None
    try:
        for m in range(max_level + 1):
            closure = jet_closure(problem, m, guard=guard)
            report.levels.append(LevelEntry(m, closure))
            if current is None:
                current = closure
            else:
                intersection = ideal_intersect(current, closure, guard=guard)
                current = canonical_ideal(amb, intersection.generators, guard)
            _check_chain_invariants(problem, report, current, m, guard)
            report.cumulative.append(current)
    except GuardExceeded as exc:
        report.complete = False
        report.guard_message = str(exc)
    if len(report.cumulative) > 1:
        last = report.cumulative[-1]
        for i, a in enumerate(report.cumulative[:-1]):
            if groebner_basis(a) == groebner_basis(last):
                report.stabilized_at = i
                break
    return report


def _check_chain_invariants(problem: ClosureProblem, report: ClosureChainReport,
                            current: Ideal, m: int, guard: ResourceGuard) -> None:
    for g in problem.combined.generators:
        if not ideal_member(g, current, guard=guard):
            raise InternalInvariantError(
                f"cumulative intersection at level {m} lost a generator of the input ideal"
            )
    if m >= 1:
        previous = report.cumulative[m - 1]
        for g in groebner_basis(current, guard=guard):
            if not ideal_member(g, previous, guard=guard):
                raise InternalInvariantError(
                    f"cumulative chain is not decreasing at level {m}"
                )
        prev_closure = report.levels[m - 1].closure
        this_closure = report.levels[m].closure
        decreasing = all(
            ideal_member(g, prev_closure, guard=guard)
            for g in groebner_basis(this_closure, guard=guard)
        )
        if not decreasing:
            report.chain_violations.append(m - 1)


def literal_jet_support_closure_member(g: Polynomial, problem: ClosureProblem,
                                       level: int,
                                       guard: ResourceGuard = DEFAULT_GUARD) -> SupportMembershipResult:
    """Support membership under the alternative radical-first reading.

    Takes the radical of the global jet ideal before restricting to the
    fiber, instead of working in the reduced fiber.  Only available when
    the global jet ideal is generated by monomials, where its radical is
    given exactly by squarefree parts; any other input raises, since
    general radical computation is out of scope.
    """
    if g.ring != problem.ambient:
        raise ClosureProblemError("candidate must live in the ambient ring")
    global_jet = jet_ideal(problem.combined, level, local=False)
    exponents = []
    for p in global_jet.generators:
        if len(p.terms) != 1:
            raise LiteralModeUnsupportedError(
                "the global jet ideal is not monomial; the literal mode "
                "supports only monomial jet ideals"
            )
        exponents.append(tuple(p.leading_monomial()))

    from .monomial_ideals import MonomialIdealSpec, monomial_radical

    gring = global_jet.context.ring
    local = problem.local_jet_ideal(level)
    lring = local.context.ring
    fiber_gens = []
    if exponents:
        rad = monomial_radical(MonomialIdealSpec(gring.arity, tuple(exponents)))
        order0 = {i for i, name in enumerate(gring.variables) if name.endswith("@0")}
        for e in rad.generators:
            if any(e[i] for i in order0):
                continue
            fiber_gens.append(
                lring.poly({lring.monomial({gring.variables[i]: k
                                            for i, k in enumerate(e) if k}): 1})
            )
    J0 = Ideal(lring, fiber_gens)
    coefficients = hasse_schmidt_expand(g, level, local=True, jet=local.context)
    for i, c in enumerate(coefficients):
        if c.is_zero():
            continue
        if not ideal_member(c, J0, guard=guard):
            return SupportMembershipResult(False, i)
    return SupportMembershipResult(True, None)
