"""Shared helpers for the test suite: random inputs and slow oracles."""

from __future__ import annotations

import random
from fractions import Fraction

from jetclosures import (
    ClosureProblem,
    Ideal,
    QQ,
    RingContext,
    hasse_schmidt_expand,
    normal_form,
)
from jetclosures.poly import Monomial, Polynomial


def random_polynomial(rng: random.Random, ring: RingContext, max_degree: int = 3,
                      max_terms: int = 3, zero_constant: bool = True) -> Polynomial:
    """A small random polynomial with coefficients in {-2,...,3}."""
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        degree = rng.randint(1 if zero_constant else 0, max_degree)
        exps = [0] * ring.arity
        for _ in range(degree):
            exps[rng.randrange(ring.arity)] += 1
        coeff = rng.choice([-2, -1, 1, 2, 3])
        mono = Monomial(exps)
        terms[mono] = terms.get(mono, 0) + coeff
    return ring.poly({m: c for m, c in terms.items() if c})


def random_problem(rng: random.Random, max_vars: int = 3,
                   max_generators: int = 2) -> ClosureProblem:
    n = rng.randint(1, max_vars)
    ring = RingContext(QQ, tuple("xyz"[:n]))
    gens = []
    while not gens:
        gens = [
            g for g in (random_polynomial(rng, ring) for _ in range(rng.randint(1, max_generators)))
            if not g.is_zero()
        ]
    return ClosureProblem.from_generators(ring, [], gens)


def monomials_up_to(ring: RingContext, degree: int) -> list:
    out = []
    for d in range(degree + 1):
        out.extend(ring.monomials_of_degree(d))
    return out


def _nullspace(rows: list, ncols: int) -> list:
    """Basis of the nullspace of a rational matrix by Gaussian elimination."""
    matrix = [list(row) for row in rows]
    pivots = {}
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(matrix)):
            if matrix[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        inv = Fraction(1) / matrix[r][c]
        matrix[r] = [v * inv for v in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][c]:
                factor = matrix[i][c]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[r])]
        pivots[c] = r
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for pc, pr in pivots.items():
            vec[pc] = -matrix[pr][fc]
        basis.append(vec)
    return basis


def closure_by_linear_algebra(problem: ClosureProblem, level: int) -> Ideal:
    """Independent oracle for the level-m closure ideal.

    Because the closure contains every monomial of degree level+1, it is
    determined by a linear subspace of the polynomials of degree at most
    level: a combination lies in the closure exactly when all its jet
    coefficients reduce to zero against the jet fiber ideal.  That
    condition is linear in the combination's coefficients, so the whole
    closure falls out of one exact nullspace computation.
    """
    ring = problem.ambient
    local = problem.local_jet_ideal(level)
    J = local.ideal
    mons = monomials_up_to(ring, level)

    columns = []
    for mu in mons:
        p = ring.poly({mu: 1})
        remainders = []
        for c in hasse_schmidt_expand(p, level, True, local.context):
            r, _ = normal_form(c, J)
            remainders.append(r)
        columns.append(remainders)

    row_index: dict = {}
    rows: list = []
    for col, remainders in enumerate(columns):
        for i, r in enumerate(remainders):
            for mono, coeff in r.terms:
                key = (i, mono)
                if key not in row_index:
                    row_index[key] = len(rows)
                    rows.append([Fraction(0)] * len(mons))
                rows[row_index[key]][col] = coeff

    gens = []
    for vec in _nullspace(rows, len(mons)):
        gens.append(ring.poly({mons[j]: vec[j] for j in range(len(mons)) if vec[j]}))
    for mono in ring.monomials_of_degree(level + 1):
        gens.append(ring.poly({mono: 1}))
    return Ideal(ring, gens)
