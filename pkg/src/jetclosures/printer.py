"""Canonical text rendering of polynomials and generator lists.

Terms are printed with earlier ring variables dominating (pure
lexicographic, descending), with explicit ``*`` and ``^`` and rational
coefficients as ``num/den``.  A list of generators is printed with the
lexicographically largest leading monomial first.  The output is
bit-stable: the same polynomial always renders to the same string.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import Residue
from .poly import Monomial, Polynomial


def _coeff_text(c) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    if isinstance(c, Residue):
        return str(c.value)
    return str(c)


def _monomial_text(m: Monomial, names) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    names = p.ring.variables
    pieces = []
    for m, c in sorted(p.terms, key=lambda t: tuple(t[0]), reverse=True):
        mono = _monomial_text(m, names)
        text = _coeff_text(c)
        negative = text.startswith("-")
        if negative:
            text = text[1:]
        if mono:
            body = mono if text == "1" else f"{text}*{mono}"
        else:
            body = text
        if not pieces:
            pieces.append(("-" if negative else "") + body)
        else:
            pieces.append(("-" if negative else "+") + body)
    return "".join(pieces)


def presentation_key(p: Polynomial) -> tuple:
    """Sort key placing the lexicographically largest leading monomial first."""
    if p.is_zero():
        return ()
    return max(tuple(m) for m, _ in p.terms)


def sort_for_display(polys) -> list:
    return sorted(polys, key=presentation_key, reverse=True)


def format_generators(polys) -> str:
    """Comma-separated canonical rendering of a generator list."""
    items = sort_for_display([p for p in polys if not p.is_zero()])
    if not items:
        return "0"
    return ", ".join(format_polynomial(p) for p in items)
