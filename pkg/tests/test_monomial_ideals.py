import random

import pytest

from jetclosures import (
    MonomialIdealSpec,
    PowerTestInconclusiveError,
    QQ,
    RingContext,
    UnsupportedArityError,
    cross_check_regular_jsc,
    monomial_integral_closure,
    monomial_radical,
    radical_member,
)
from jetclosures.groebner import Ideal
from jetclosures.monomial_ideals import newton_member_2d, power_test_member


def test_spec_minimalizes_generators():
    spec = MonomialIdealSpec(2, ((2, 0), (2, 1), (0, 3)))
    assert spec.generators == ((0, 3), (2, 0))
    with pytest.raises(ValueError):
        MonomialIdealSpec(2, ())
    with pytest.raises(ValueError):
        MonomialIdealSpec(2, ((1, -1),))


def test_integral_closure_examples():
    assert monomial_integral_closure(MonomialIdealSpec(2, ((3, 0), (0, 3)))).generators == (
        (0, 3), (1, 2), (2, 1), (3, 0))
    assert monomial_integral_closure(MonomialIdealSpec(2, ((1, 0), (0, 1)))).generators == (
        (0, 1), (1, 0))
    assert monomial_integral_closure(MonomialIdealSpec(2, ((2, 0), (0, 3)))).generators == (
        (0, 3), (1, 2), (2, 0))


def test_newton_membership_is_exact():
    spec = MonomialIdealSpec(2, ((3, 0), (0, 3)))
    assert newton_member_2d(spec, (2, 1))
    assert newton_member_2d(spec, (1, 2))
    assert not newton_member_2d(spec, (1, 1))
    assert not newton_member_2d(spec, (2, 0))
    spec2 = MonomialIdealSpec(2, ((1, 3), (3, 0)))
    # points left of the smallest generator exponent stay outside
    assert not newton_member_2d(spec2, (0, 100))
    assert newton_member_2d(spec2, (1, 100))


def test_radical_examples():
    assert monomial_radical(MonomialIdealSpec(2, ((2, 0), (0, 3)))).generators == (
        (0, 1), (1, 0))
    assert monomial_radical(MonomialIdealSpec(2, ((1, 2),))).generators == ((1, 1),)
    assert monomial_radical(MonomialIdealSpec(2, ((2, 0), (1, 1)))).generators == ((1, 0),)


def test_radical_agrees_with_groebner_radical_membership():
    rng = random.Random(83)
    ring = RingContext(QQ, ("x", "y"))
    for _ in range(10):
        gens = tuple(
            (rng.randint(0, 3), rng.randint(0, 3)) for _ in range(rng.randint(1, 3))
        )
        if all(g == (0, 0) for g in gens):
            continue
        spec = MonomialIdealSpec(2, gens)
        rad = monomial_radical(spec)
        I = Ideal(ring, spec.polynomials(ring))
        for e in ((1, 0), (0, 1), (1, 1), (2, 1)):
            mono = ring.poly({ring.monomial(e): 1})
            assert rad.member(e) == bool(radical_member(mono, I))


def test_closure_properties_on_random_2d_ideals():
    rng = random.Random(89)
    for _ in range(15):
        gens = tuple(
            (rng.randint(0, 4), rng.randint(0, 4)) for _ in range(rng.randint(1, 4))
        )
        spec = MonomialIdealSpec(2, gens)
        closure = monomial_integral_closure(spec)
        # extensive
        assert all(closure.member(g) for g in spec.generators)
        # idempotent
        assert monomial_integral_closure(closure).generators == closure.generators
        # monotone against a shrunk ideal
        bigger = MonomialIdealSpec(2, spec.generators + ((5, 5),))
        bigger_closure = monomial_integral_closure(bigger)
        assert all(bigger_closure.member(g) for g in closure.generators)


def test_power_test_certifies_closure_members():
    rng = random.Random(97)
    for _ in range(10):
        gens = tuple(
            (rng.randint(0, 3), rng.randint(0, 3)) for _ in range(rng.randint(1, 3))
        )
        spec = MonomialIdealSpec(2, gens)
        closure = monomial_integral_closure(spec)
        for e in closure.generators:
            # the classical power characterization with a small exponent
            assert power_test_member(spec, e, bound=6)


def test_three_variable_power_test():
    spec = MonomialIdealSpec(3, ((2, 0, 0), (0, 2, 0), (0, 0, 2)))
    closure = monomial_integral_closure(spec)
    # x*y, x*z, y*z are integral: (xy)^2 = x^2 * y^2
    for e in ((1, 1, 0), (1, 0, 1), (0, 1, 1)):
        assert closure.member(e)
    assert not closure.member((1, 0, 0))


def test_unsupported_arities():
    with pytest.raises(UnsupportedArityError):
        monomial_integral_closure(MonomialIdealSpec(1, ((2,),)))
    with pytest.raises(UnsupportedArityError):
        monomial_integral_closure(MonomialIdealSpec(4, ((1, 1, 1, 1),)))
    with pytest.raises(UnsupportedArityError):
        newton_member_2d(MonomialIdealSpec(3, ((1, 1, 1),)), (1, 1, 1))


def test_strict_mode_reports_exhaustion():
    spec = MonomialIdealSpec(3, ((2, 0, 0), (0, 3, 0), (0, 0, 5)))
    with pytest.raises(PowerTestInconclusiveError):
        monomial_integral_closure(spec, power_bound=1, strict=True)


def test_cross_check_on_cube_ideal():
    spec = MonomialIdealSpec(2, ((3, 0), (0, 3)))
    report = cross_check_regular_jsc(spec, [(2, 1), (1, 2), (1, 1), (3, 0)], 5)
    by_candidate = {row.candidate: row for row in report.rows}
    assert by_candidate[(2, 1)].status == "member"
    assert by_candidate[(1, 2)].status == "member"
    assert by_candidate[(3, 0)].status == "member"
    assert by_candidate[(1, 1)].status == "excluded"
    assert by_candidate[(1, 1)].first_failing_level == 2
    assert report.consistent
