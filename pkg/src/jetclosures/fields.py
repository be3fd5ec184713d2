"""Exact coefficient fields: the rationals and prime fields F_p.

Every coefficient in this package is either a ``fractions.Fraction``
(automatically kept in lowest terms with a positive denominator) or a
:class:`Residue`, the canonical representative of a prime-field element.
Floating point is never used anywhere; all arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

MAX_PRIME = 2**31


class FieldMismatchError(TypeError):
    """Two elements of different fields met in one arithmetic operation."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test, exact for all n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True, slots=True)
class Residue:
    """An element of F_p stored as its canonical representative in [0, p)."""

    value: int
    modulus: int

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise FieldMismatchError(
                    f"cannot mix residues mod {self.modulus} and mod {other.modulus}"
                )
            return other.value
        if isinstance(other, int):
            return other % self.modulus
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Residue((self.value + v) % self.modulus, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Residue((self.value - v) % self.modulus, self.modulus)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Residue((v - self.value) % self.modulus, self.modulus)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Residue(self.value * v % self.modulus, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value % self.modulus, self.modulus)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Residue(self.value * pow(v, -1, self.modulus) % self.modulus, self.modulus)

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Residue(v * pow(self.value, -1, self.modulus) % self.modulus, self.modulus)

    def inverse(self) -> "Residue":
        return Residue(pow(self.value, -1, self.modulus), self.modulus)

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Residue):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.modulus))

    def __str__(self) -> str:
        return str(self.value)


class RationalField:
    """The field of rational numbers; elements are ``Fraction`` instances."""

    characteristic = 0
    name = "Q"

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise FieldMismatchError(f"cannot interpret {x!r} as a rational number")

    def from_fraction(self, num: int, den: int) -> Fraction:
        return Fraction(num, den)

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("RationalField")

    def __repr__(self) -> str:
        return "QQ"


QQ = RationalField()


@dataclass(frozen=True, slots=True)
class PrimeField:
    """The finite field F_p for a prime p < 2**31."""

    p: int

    def __post_init__(self):
        if self.p >= MAX_PRIME:
            raise ValueError(f"modulus {self.p} exceeds the 2^31 bound")
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def name(self) -> str:
        return f"Fp {self.p}"

    @property
    def zero(self) -> Residue:
        return Residue(0, self.p)

    @property
    def one(self) -> Residue:
        return Residue(1, self.p)

    def coerce(self, x) -> Residue:
        if isinstance(x, Residue):
            if x.modulus != self.p:
                raise FieldMismatchError(
                    f"residue mod {x.modulus} does not live in F_{self.p}"
                )
            return x
        if isinstance(x, int):
            return Residue(x % self.p, self.p)
        raise FieldMismatchError(f"cannot interpret {x!r} as an element of F_{self.p}")

    def from_fraction(self, num: int, den: int) -> Residue:
        if den % self.p == 0:
            raise ZeroDivisionError(f"denominator {den} vanishes in F_{self.p}")
        return Residue(num * pow(den, -1, self.p) % self.p, self.p)

    def __repr__(self) -> str:
        return f"GF({self.p})"


def GF(p: int) -> PrimeField:
    """Return the prime field with p elements."""
    return PrimeField(p)


CoefficientField = Union[RationalField, PrimeField]
FieldElement = Union[Fraction, Residue]


def field_from_name(text: str) -> CoefficientField:
    """Parse a field declaration such as ``Q`` or ``Fp 5``."""
    parts = text.split()
    if parts == ["Q"]:
        return QQ
    if len(parts) == 2 and parts[0] == "Fp" and parts[1].isdigit():
        return GF(int(parts[1]))
    raise ValueError(f"unrecognized field declaration {text!r}")
