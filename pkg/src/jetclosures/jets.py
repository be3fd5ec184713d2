"""Truncated coefficient expansion of polynomials along jet coordinates.

Substituting x_j -> sum_i x_j@i * t^i into f and truncating at t^(m+1)
yields the coefficient list [c_0(f), ..., c_m(f)]; these coefficient
extraction operators are k-linear and satisfy the convolution Leibniz
rule c_i(f*g) = sum_{a+b=i} c_a(f)*c_b(g).  The local variant sets the
order-0 coordinates to zero, which realizes restriction to the fiber of
the jet scheme over the origin.  ``brute_force_expand`` recomputes the
same coefficients by fully expanded, untruncated arithmetic in an
auxiliary ring and serves as the independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from .groebner import Ideal
from .poly import Polynomial, RingContext


class OriginNotOnVarietyError(ValueError):
    """A local jet construction was asked for an ideal missing the origin."""


def jet_variable(base_name: str, index: int) -> str:
    return f"{base_name}@{index}"


@dataclass(frozen=True)
class JetRingContext:
    """Coordinate ring of the (local) jet space of an affine ring.

    For each base variable v there are variables ``v@i`` with
    delta <= i <= level, where delta is 1 for the local jet space (the
    fiber over the origin) and 0 for the global one.  Variables are
    grouped by base variable, with increasing index inside each group.
    """

    base: RingContext
    level: int
    local: bool

    def __post_init__(self):
        if self.level < 0:
            raise ValueError("jet level must be nonnegative")
        names = []
        for v in self.base.variables:
            for i in range(self.delta, self.level + 1):
                names.append(jet_variable(v, i))
        ring = RingContext(self.base.field, tuple(names), self.base.order)
        object.__setattr__(self, "ring", ring)

    @property
    def delta(self) -> int:
        return 1 if self.local else 0

    def variable(self, base_name: str, index: int) -> Polynomial:
        return self.ring.variable(jet_variable(base_name, index))

    def coordinate_series(self, base_name: str) -> List[Polynomial]:
        """Coefficients of the universal truncated series for one variable."""
        out = []
        for i in range(self.level + 1):
            if i < self.delta:
                out.append(self.ring.zero())
            else:
                out.append(self.variable(base_name, i))
        return out


def _series_mul(a: List[Polynomial], b: List[Polynomial], zero: Polynomial) -> List[Polynomial]:
    m = len(a) - 1
    out = [zero] * (m + 1)
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j in range(0, m + 1 - i):
            bj = b[j]
            if bj.is_zero():
                continue
            out[i + j] = out[i + j] + ai * bj
    return out


def hasse_schmidt_expand(f: Polynomial, level: int, local: bool,
                         jet: Optional[JetRingContext] = None) -> List[Polynomial]:
    """Coefficients of t^0..t^level of f along the universal jet.

    Arithmetic is truncated at t^(level+1) throughout.  In the local
    case the order-0 jet coordinates are set to zero, so the entries
    are the coefficient polynomials restricted to the fiber over the
    origin.
    """
    if jet is None:
        jet = JetRingContext(f.ring, level, local)
    elif jet.base != f.ring or jet.level != level or jet.local != local:
        raise ValueError("jet context does not match the requested expansion")
    ring = jet.ring
    zero = ring.zero()
    m = level

    series = {v: jet.coordinate_series(v) for v in f.ring.variables}
    power_cache: dict = {}

    def series_power(name: str, k: int) -> List[Polynomial]:
        cached = power_cache.get((name, k))
        if cached is not None:
            return cached
        if k == 1:
            result = series[name]
        else:
            result = _series_mul(series_power(name, k - 1), series[name], zero)
        power_cache[(name, k)] = result
        return result

    total = [zero] * (m + 1)
    for mono, coeff in f.terms:
        term = [ring.constant(coeff)] + [zero] * m
        for pos, e in enumerate(mono):
            if not e:
                continue
            term = _series_mul(term, series_power(f.ring.variables[pos], e), zero)
        for i in range(m + 1):
            total[i] = total[i] + term[i]
    return total


def brute_force_expand(f: Polynomial, level: int, local: bool,
                       jet: Optional[JetRingContext] = None) -> List[Polynomial]:
    """Oracle for hasse_schmidt_expand via untruncated substitution.

    Works in an auxiliary ring that adjoins an honest t variable,
    substitutes the full jet series for every variable, expands the
    product naively, and only then reads off the t-coefficients.
    """
    if jet is None:
        jet = JetRingContext(f.ring, level, local)
    ring = jet.ring
    t = ring.fresh_name("t")
    aux = ring.extend([t])

    assignment = {}
    for v in f.ring.variables:
        total = aux.zero()
        for i in range(jet.delta, level + 1):
            total = total + aux.variable(jet_variable(v, i)) * aux.variable(t) ** i
        assignment[v] = total
    image = f.substitute(aux, assignment)

    t_pos = aux.index(t)
    buckets: dict = {}
    for mono, coeff in image.terms:
        t_exp = mono[t_pos]
        if t_exp > level:
            continue
        stripped = tuple(e for i, e in enumerate(mono) if i != t_pos)
        buckets.setdefault(t_exp, {})[stripped] = coeff
    out = []
    for i in range(level + 1):
        out.append(ring.poly({ring.monomial(e): c for e, c in buckets.get(i, {}).items()}))
    return out


@dataclass
class LocalJetIdeal:
    """The ideal cut out by the jet coefficients of a generating set.

    ``generators`` collects the nonzero coefficient polynomials c_i(f)
    of every source generator f for 0 <= i <= level, deduplicated in
    construction order; a coefficient of index i only involves jet
    variables of index at most i.
    """

    context: JetRingContext
    source: Ideal
    generators: tuple

    @property
    def ideal(self) -> Ideal:
        return Ideal(self.context.ring, self.generators)


def jet_ideal(source: Ideal, level: int, local: bool) -> LocalJetIdeal:
    """Jet ideal of the given generators at the given level.

    In the local case every generator must vanish at the origin,
    otherwise the fiber construction is meaningless and a typed error
    is raised.
    """
    jet = JetRingContext(source.ring, level, local)
    gens = []
    seen = set()
    for f in source.generators:
        if local and f.constant_term():
            raise OriginNotOnVarietyError(
                f"generator {f} has nonzero constant term; the origin is not on the variety"
            )
        for c in hasse_schmidt_expand(f, level, local, jet):
            if c.is_zero():
                continue
            if c.terms in seen:
                continue
            seen.add(c.terms)
            gens.append(c)
    return LocalJetIdeal(jet, source, tuple(gens))
