"""Global monomial orders.

Each order turns an exponent vector into a flat integer sort key whose
lexicographic comparison realizes the order.  All keys used here are
additive, key(a*b) = key(a) + key(b) componentwise, which makes them
cheap to maintain through products inside the Groebner engine and
guarantees multiplicativity of the order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

ExponentVector = Tuple[int, ...]


class OrderMismatchError(ValueError):
    """Exponent vectors of different arities were compared."""


@dataclass(frozen=True)
class Degrevlex:
    """Degree reverse lexicographic order.

    Compares by total degree first; ties are broken at the last position
    where the vectors differ, the vector with the smaller exponent there
    being the larger monomial.
    """

    kind = "degrevlex"

    def key(self, e: ExponentVector) -> tuple:
        return (sum(e), *(-x for x in reversed(e)))

    def cache_key(self) -> tuple:
        return ("degrevlex",)


@dataclass(frozen=True)
class Lex:
    """Pure lexicographic order; earlier variables dominate."""

    kind = "lex"

    def key(self, e: ExponentVector) -> tuple:
        return tuple(e)

    def cache_key(self) -> tuple:
        return ("lex",)


DEGREVLEX = Degrevlex()
LEX = Lex()


@dataclass(frozen=True)
class Block:
    """Elimination order: an elimination block dominates the remainder.

    ``elim`` lists the variable positions forming the elimination block;
    the two blocks are compared with their inner orders, elimination
    block first.  A Groebner basis under this order intersected with the
    remainder variables generates the elimination ideal.
    """

    arity: int
    elim: Tuple[int, ...]
    inner_elim: Degrevlex | Lex = DEGREVLEX
    inner_keep: Degrevlex | Lex = DEGREVLEX

    def __post_init__(self):
        if not all(0 <= i < self.arity for i in self.elim):
            raise ValueError("elimination positions out of range")
        if len(set(self.elim)) != len(self.elim):
            raise ValueError("repeated elimination positions")
        keep = tuple(i for i in range(self.arity) if i not in set(self.elim))
        object.__setattr__(self, "_keep", keep)

    @property
    def kind(self) -> str:
        return "block"

    @property
    def keep(self) -> Tuple[int, ...]:
        return self._keep  # type: ignore[attr-defined]

    def key(self, e: ExponentVector) -> tuple:
        head = self.inner_elim.key(tuple(e[i] for i in self.elim))
        tail = self.inner_keep.key(tuple(e[i] for i in self.keep))
        return head + tail

    def cache_key(self) -> tuple:
        return ("block", self.elim, self.inner_elim.cache_key(), self.inner_keep.cache_key())


MonomialOrder = Degrevlex | Lex | Block

LESS, EQUAL, GREATER = -1, 0, 1


def order_compare(a: ExponentVector, b: ExponentVector, order: MonomialOrder) -> int:
    """Compare two exponent vectors; returns -1, 0 or 1.

    Equality holds exactly when the vectors are identical, since every
    order here is total on each arity.
    """
    if len(a) != len(b):
        raise OrderMismatchError(f"arity mismatch: {len(a)} vs {len(b)}")
    ka, kb = order.key(a), order.key(b)
    if ka < kb:
        return LESS
    if ka > kb:
        return GREATER
    return EQUAL
