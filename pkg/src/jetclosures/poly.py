"""Monomials, ring contexts and canonical multivariate polynomials.

A polynomial is stored as a tuple of (monomial, coefficient) pairs,
strictly descending in the ring's monomial order, with no zero
coefficients and no repeated monomials; the zero polynomial is the
empty tuple.  All values are immutable and operations are pure, so
everything here is safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .fields import QQ, CoefficientField, FieldElement, FieldMismatchError
from .orders import DEGREVLEX, MonomialOrder, OrderMismatchError


class RingMismatchError(ValueError):
    """Operands of a polynomial operation live in different rings."""


class Monomial(tuple):
    """Exponent vector of a power product, one entry per ring variable."""

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int]):
        t = tuple(int(e) for e in exponents)
        if any(e < 0 for e in t):
            raise ValueError(f"negative exponent in {t}")
        return super().__new__(cls, t)

    @property
    def exponents(self) -> tuple:
        return tuple(self)

    def degree(self) -> int:
        return sum(self)

    def is_constant(self) -> bool:
        return not any(self)

    def _check(self, other: "Monomial") -> None:
        if len(self) != len(other):
            raise OrderMismatchError(f"arity mismatch: {len(self)} vs {len(other)}")

    def mul(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(a + b for a, b in zip(self, other))

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self, other))

    def divide(self, other: "Monomial") -> "Monomial":
        """Exact quotient self / other; raises if not divisible."""
        self._check(other)
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(a - b for a, b in zip(self, other))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(max(a, b) for a, b in zip(self, other))

    # Ordering a monomial requires a MonomialOrder; forbid the raw tuple order.
    def __lt__(self, other):
        raise TypeError("monomials are compared through a MonomialOrder")

    __le__ = __gt__ = __ge__ = __lt__


def _valid_name(name: str) -> bool:
    head, sep, tail = name.partition("@")
    if not head or not (head[0].isalpha() or head[0] == "_"):
        return False
    if not all(c.isalnum() or c == "_" for c in head):
        return False
    return tail.isdigit() if sep else True


@dataclass(frozen=True)
class RingContext:
    """A polynomial ring: coefficient field, named variables, ambient order."""

    field: CoefficientField
    variables: tuple
    order: MonomialOrder = DEGREVLEX

    def __post_init__(self):
        names = tuple(self.variables)
        object.__setattr__(self, "variables", names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        for name in names:
            if not _valid_name(name):
                raise ValueError(f"invalid variable name {name!r}")
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(names)})

    @property
    def arity(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]  # type: ignore[attr-defined]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def monomial(self, exponents: Iterable[int] | Mapping[str, int]) -> Monomial:
        if isinstance(exponents, Mapping):
            e = [0] * self.arity
            for name, k in exponents.items():
                e[self.index(name)] = k
            return Monomial(e)
        m = Monomial(exponents)
        if len(m) != self.arity:
            raise OrderMismatchError(f"expected {self.arity} exponents, got {len(m)}")
        return m

    def constant_monomial(self) -> Monomial:
        return Monomial((0,) * self.arity)

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        cc = self.field.coerce(c)
        if not cc:
            return self.zero()
        return Polynomial(self, ((self.constant_monomial(), cc),))

    def variable(self, name: str) -> "Polynomial":
        e = [0] * self.arity
        e[self.index(name)] = 1
        return Polynomial(self, ((Monomial(e), self.field.one),))

    def poly(self, terms: Mapping[Monomial, object] | Iterable) -> "Polynomial":
        """Build the canonical polynomial with the given terms."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for mono, coeff in items:
            m = self.monomial(mono) if not isinstance(mono, Monomial) else mono
            if len(m) != self.arity:
                raise OrderMismatchError("monomial arity does not match ring")
            c = self.field.coerce(coeff)
            prev = acc.get(m)
            c = c if prev is None else prev + c
            if c:
                acc[m] = c
            elif prev is not None:
                del acc[m]
        key = self.order.key
        ordered = tuple(
            (m, acc[m]) for m in sorted(acc, key=lambda mm: key(mm), reverse=True)
        )
        return Polynomial(self, ordered)

    def monomials_of_degree(self, d: int) -> list:
        """All monomials of total degree exactly d, in descending ring order."""
        out = []

        def build(prefix: list, remaining: int, pos: int):
            if pos == self.arity - 1:
                out.append(Monomial(prefix + [remaining]))
                return
            for k in range(remaining, -1, -1):
                build(prefix + [k], remaining - k, pos + 1)

        if self.arity == 0:
            return [Monomial(())] if d == 0 else []
        build([], d, 0)
        out.sort(key=self.order.key, reverse=True)
        return out

    def extend(self, new_names: Sequence[str], order: MonomialOrder | None = None) -> "RingContext":
        """A ring with the same field and the given extra variables appended."""
        for name in new_names:
            if name in self.variables:
                raise ValueError(f"variable {name!r} already present")
        return RingContext(self.field, self.variables + tuple(new_names),
                           order if order is not None else self.order)

    def with_order(self, order: MonomialOrder) -> "RingContext":
        return RingContext(self.field, self.variables, order)

    def with_field(self, field: CoefficientField) -> "RingContext":
        return RingContext(field, self.variables, self.order)

    def fresh_name(self, base: str) -> str:
        if base not in self.variables:
            return base
        k = 0
        while f"{base}{k}" in self.variables:
            k += 1
        return f"{base}{k}"

    def __repr__(self) -> str:
        return f"RingContext({self.field.name}[{', '.join(self.variables)}])"


class Polynomial:
    """Canonical sorted term list over a RingContext.

    Construct through RingContext helpers or arithmetic; the raw
    constructor trusts its arguments.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingContext, terms: tuple):
        self.ring = ring
        self.terms = terms

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0]

    def leading_monomial(self) -> Monomial:
        return self.leading_term()[0]

    def leading_coefficient(self) -> FieldElement:
        return self.leading_term()[1]

    def constant_term(self) -> FieldElement:
        c0 = self.ring.constant_monomial()
        for m, c in self.terms:
            if m == c0:
                return c
        return self.ring.field.zero

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(m.degree() for m, _ in self.terms)

    def variables_used(self) -> set:
        used = set()
        for m, _ in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(self.ring.variables[i])
        return used

    def as_dict(self) -> dict:
        return dict(self.terms)

    # -- arithmetic ----------------------------------------------------

    def _same_ring(self, other: "Polynomial") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._same_ring(other)
        acc = dict(self.terms)
        for m, c in other.terms:
            s = acc.get(m)
            s = c if s is None else s + c
            if s:
                acc[m] = s
            elif m in acc:
                del acc[m]
        return self._from_dict(acc)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._same_ring(other)
        acc = dict(self.terms)
        for m, c in other.terms:
            s = acc.get(m)
            s = -c if s is None else s - c
            if s:
                acc[m] = s
            elif m in acc:
                del acc[m]
        return self._from_dict(acc)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, tuple((m, -c) for m, c in self.terms))

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._same_ring(other)
            acc: dict = {}
            for m1, c1 in self.terms:
                for m2, c2 in other.terms:
                    m = m1.mul(m2)
                    c = c1 * c2
                    s = acc.get(m)
                    s = c if s is None else s + c
                    if s:
                        acc[m] = s
                    elif m in acc:
                        del acc[m]
            return self._from_dict(acc)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Polynomial":
        cc = self.ring.field.coerce(c)
        if not cc:
            return self.ring.zero()
        return Polynomial(self.ring, tuple((m, k * cc) for m, k in self.terms))

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def _from_dict(self, acc: dict) -> "Polynomial":
        key = self.ring.order.key
        ordered = tuple(
            (m, acc[m]) for m in sorted(acc, key=lambda mm: key(mm), reverse=True)
        )
        return Polynomial(self.ring, ordered)

    # -- structural maps -----------------------------------------------

    def map_into(self, target: RingContext) -> "Polynomial":
        """Reinterpret by variable name inside another ring.

        Every variable actually used must exist in the target; the
        coefficient field must agree.
        """
        if target.field != self.ring.field:
            raise FieldMismatchError("target ring has a different coefficient field")
        positions = []
        for name in self.ring.variables:
            positions.append(target._index.get(name))  # type: ignore[attr-defined]
        out = {}
        for m, c in self.terms:
            e = [0] * target.arity
            for i, exp in enumerate(m):
                if not exp:
                    continue
                pos = positions[i]
                if pos is None:
                    raise KeyError(
                        f"variable {self.ring.variables[i]!r} is absent from the target ring"
                    )
                e[pos] = exp
            out[Monomial(e)] = c
        return target.poly(out)

    def substitute(self, target: RingContext, assignment: Mapping[str, "Polynomial"]) -> "Polynomial":
        """Evaluate at the given variable assignment inside ``target``.

        Every variable occurring in the polynomial must be assigned a
        polynomial of the target ring.  Products are expanded fully,
        without truncation.
        """
        if target.field != self.ring.field:
            raise FieldMismatchError("target ring has a different coefficient field")
        powers: dict = {}

        def power(name: str, k: int) -> Polynomial:
            cached = powers.get((name, k))
            if cached is None:
                cached = assignment[name] ** k
                powers[(name, k)] = cached
            return cached

        total = target.zero()
        for m, c in self.terms:
            term = target.constant(c)
            for i, exp in enumerate(m):
                if not exp:
                    continue
                name = self.ring.variables[i]
                if name not in assignment:
                    raise KeyError(f"no substitution supplied for variable {name!r}")
                term = term * power(name, exp)
            total = total + term
        return total

    # -- comparisons and rendering --------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.ring.field == other.ring.field
            and self.ring.variables == other.ring.variables
            and dict(self.terms) == dict(other.terms)
        )

    def __hash__(self) -> int:
        return hash((self.ring.field, self.ring.variables, frozenset(self.terms)))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        from .printer import format_polynomial

        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_sub(a: Polynomial, b: Polynomial) -> Polynomial:
    return a - b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def poly_scale(a: Polynomial, c) -> Polynomial:
    return a.scale(c)


def content(p: Polynomial) -> Fraction:
    """Positive rational c with p/c integral and primitive (QQ rings only)."""
    if p.ring.field != QQ:
        raise FieldMismatchError("content is defined for rational coefficients")
    if p.is_zero():
        return Fraction(1)
    from math import gcd

    num = 0
    den = 1
    for _, c in p.terms:
        num = gcd(num, c.numerator)
        den = den * c.denominator // gcd(den, c.denominator)
    return Fraction(num, den)
