"""Exact jet-scheme ideals and jet/arc closure operations at the origin.

The package computes, over the rationals or a prime field and with no
floating point anywhere:

* truncated jet-coefficient expansions of polynomials and the ideals
  they generate on the (local) jet space;
* the level-m closure of an ideal at the origin, both as a membership
  test and as a full ideal via an elimination kernel;
* the level-m support closure (reduced-fiber) membership test and its
  intersection over levels up to a bound;
* finite approximations of the infinite-level closure by cumulative
  intersection;
* a Newton-polyhedron integral-closure oracle for monomial ideals used
  to cross-check the closure computations.
"""

from .closures import (
    ClosureChainReport,
    ClosureProblem,
    ClosureProblemError,
    LiteralModeUnsupportedError,
    arc_closure_approx,
    jet_closure,
    jet_closure_member,
    jet_support_closure_member,
    jsc_member_up_to,
    literal_jet_support_closure_member,
)
from .fields import GF, QQ, FieldMismatchError, PrimeField, RationalField, Residue
from .groebner import (
    DEFAULT_GUARD,
    GuardExceeded,
    Ideal,
    InternalInvariantError,
    MembershipCertificate,
    ResourceGuard,
    eliminate,
    groebner_basis,
    ideal_equal,
    ideal_intersect,
    ideal_member,
    ideal_sum,
    normal_form,
    radical_member,
    verify_certificate,
)
from .jets import (
    JetRingContext,
    LocalJetIdeal,
    OriginNotOnVarietyError,
    brute_force_expand,
    hasse_schmidt_expand,
    jet_ideal,
)
from .monomial_ideals import (
    MonomialIdealSpec,
    PowerTestInconclusiveError,
    UnsupportedArityError,
    cross_check_regular_jsc,
    monomial_integral_closure,
    monomial_radical,
)
from .orders import DEGREVLEX, LEX, Block, Degrevlex, Lex, order_compare
from .parser import PolynomialSyntaxError, poly_parse
from .poly import Monomial, Polynomial, RingContext, RingMismatchError
from .printer import format_generators, format_polynomial

__version__ = "0.1.0"

__all__ = [
    "Block",
    "ClosureChainReport",
    "ClosureProblem",
    "ClosureProblemError",
    "DEFAULT_GUARD",
    "DEGREVLEX",
    "Degrevlex",
    "FieldMismatchError",
    "GF",
    "GuardExceeded",
    "Ideal",
    "InternalInvariantError",
    "JetRingContext",
    "LEX",
    "Lex",
    "LiteralModeUnsupportedError",
    "LocalJetIdeal",
    "MembershipCertificate",
    "Monomial",
    "MonomialIdealSpec",
    "OriginNotOnVarietyError",
    "Polynomial",
    "PolynomialSyntaxError",
    "PowerTestInconclusiveError",
    "PrimeField",
    "QQ",
    "RationalField",
    "Residue",
    "ResourceGuard",
    "RingContext",
    "RingMismatchError",
    "UnsupportedArityError",
    "arc_closure_approx",
    "brute_force_expand",
    "cross_check_regular_jsc",
    "eliminate",
    "format_generators",
    "format_polynomial",
    "groebner_basis",
    "hasse_schmidt_expand",
    "ideal_equal",
    "ideal_intersect",
    "ideal_member",
    "ideal_sum",
    "jet_closure",
    "jet_closure_member",
    "jet_ideal",
    "jet_support_closure_member",
    "jsc_member_up_to",
    "literal_jet_support_closure_member",
    "monomial_integral_closure",
    "monomial_radical",
    "normal_form",
    "order_compare",
    "poly_parse",
    "radical_member",
    "verify_certificate",
]
