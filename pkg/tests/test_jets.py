import random

import pytest

from jetclosures import (
    Ideal,
    JetRingContext,
    OriginNotOnVarietyError,
    QQ,
    RingContext,
    brute_force_expand,
    hasse_schmidt_expand,
    jet_ideal,
    poly_parse,
)
from jetclosures.printer import format_polynomial

from support import random_polynomial

R = RingContext(QQ, ("x", "y"))


def p(text, ring=R):
    return poly_parse(text, ring)


def texts(polys):
    return [format_polynomial(q) for q in polys]


def test_coordinate_expansion_global():
    ring = RingContext(QQ, ("x",))
    exp = hasse_schmidt_expand(poly_parse("x", ring), 2, local=False)
    assert texts(exp) == ["x@0", "x@1", "x@2"]


def test_cusp_expansion_matches_hand_computation():
    exp = hasse_schmidt_expand(p("x^2 + y^3"), 4, local=True)
    assert texts(exp) == [
        "0",
        "0",
        "x@1^2",
        "2*x@1*x@2+y@1^3",
        "2*x@1*x@3+x@2^2+3*y@1^2*y@2",
    ]


def test_constants_are_jet_invariant():
    exp = hasse_schmidt_expand(p("7"), 3, local=True)
    assert texts(exp) == ["7", "0", "0", "0"]


def test_local_level_zero_keeps_only_the_constant_term():
    exp = hasse_schmidt_expand(p("x + y^2 + 5"), 0, local=True)
    assert len(exp) == 1 and texts(exp) == ["5"]


def test_jet_ring_variable_layout():
    jet = JetRingContext(R, 3, local=True)
    assert jet.ring.variables == ("x@1", "x@2", "x@3", "y@1", "y@2", "y@3")
    jet_global = JetRingContext(R, 1, local=False)
    assert jet_global.ring.variables == ("x@0", "x@1", "y@0", "y@1")


def test_jet_ideal_worked_example():
    J = jet_ideal(Ideal(R, [p("x^2 + y^3")]), 4, local=True)
    assert texts(J.generators) == [
        "x@1^2",
        "2*x@1*x@2+y@1^3",
        "2*x@1*x@3+x@2^2+3*y@1^2*y@2",
    ]


def test_jet_ideal_of_zero_ideal_is_zero():
    J = jet_ideal(Ideal(R, []), 3, local=True)
    assert J.generators == ()


def test_jet_ideal_three_generator_example():
    ring = RingContext(QQ, ("x", "y", "z"))
    I = Ideal(ring, [poly_parse(t, ring) for t in ("x", "y", "x^2 + y^2 + z^2")])
    J = jet_ideal(I, 2, local=True)
    assert texts(J.generators) == ["x@1", "x@2", "y@1", "y@2", "x@1^2+y@1^2+z@1^2"]


def test_local_jet_ideal_requires_origin_on_variety():
    with pytest.raises(OriginNotOnVarietyError):
        jet_ideal(Ideal(R, [p("x + 1")]), 2, local=True)


def test_coefficient_index_bounds_variable_indices():
    J = jet_ideal(Ideal(R, [p("x^2 + y^3"), p("x*y")]), 5, local=True)
    jet = J.context
    for g in J.generators:
        assert not g.constant_term()
    for f in J.source.generators:
        for i, c in enumerate(hasse_schmidt_expand(f, 5, local=True, jet=jet)):
            for name in c.variables_used():
                assert int(name.split("@")[1]) <= i


def test_brute_force_oracle_on_worked_example():
    f = p("x^2 + y^3")
    assert hasse_schmidt_expand(f, 4, local=True) == brute_force_expand(f, 4, local=True)
    g = p("x")
    assert hasse_schmidt_expand(g, 3, local=False) == brute_force_expand(g, 3, local=False)


def test_brute_force_oracle_random_sweep():
    rng = random.Random(41)
    ring3 = RingContext(QQ, ("x", "y", "z"))
    for trial in range(100):
        ring = ring3 if trial % 2 else R
        f = random_polynomial(rng, ring, max_degree=4, max_terms=4, zero_constant=False)
        m = rng.randint(0, 5)
        local = bool(rng.getrandbits(1))
        assert hasse_schmidt_expand(f, m, local) == brute_force_expand(f, m, local)


def test_leibniz_convolution_rule():
    rng = random.Random(43)
    for _ in range(20):
        f = random_polynomial(rng, R, max_degree=3, zero_constant=False)
        g = random_polynomial(rng, R, max_degree=3, zero_constant=False)
        m = rng.randint(0, 4)
        local = bool(rng.getrandbits(1))
        jet = JetRingContext(R, m, local)
        ef = hasse_schmidt_expand(f, m, local, jet)
        eg = hasse_schmidt_expand(g, m, local, jet)
        epr = hasse_schmidt_expand(f * g, m, local, jet)
        for i in range(m + 1):
            convolution = jet.ring.zero()
            for a in range(i + 1):
                convolution = convolution + ef[a] * eg[i - a]
            assert epr[i] == convolution


def test_additivity_and_scalar_linearity():
    rng = random.Random(47)
    for _ in range(20):
        f = random_polynomial(rng, R, zero_constant=False)
        g = random_polynomial(rng, R, zero_constant=False)
        m = rng.randint(0, 4)
        jet = JetRingContext(R, m, True)
        ef = hasse_schmidt_expand(f, m, True, jet)
        eg = hasse_schmidt_expand(g, m, True, jet)
        esum = hasse_schmidt_expand(f + g, m, True, jet)
        escale = hasse_schmidt_expand(f.scale(5), m, True, jet)
        for i in range(m + 1):
            assert esum[i] == ef[i] + eg[i]
            assert escale[i] == ef[i].scale(5)


def test_truncation_compatibility():
    rng = random.Random(53)
    for _ in range(12):
        f = random_polynomial(rng, R, zero_constant=False)
        m = rng.randint(0, 4)
        small = hasse_schmidt_expand(f, m, local=True)
        big = hasse_schmidt_expand(f, m + 1, local=True)
        big_ring = JetRingContext(R, m + 1, True).ring
        for i in range(m + 1):
            assert small[i].map_into(big_ring) == big[i]


def test_local_is_global_with_order_zero_set_to_zero():
    rng = random.Random(59)
    for _ in range(12):
        f = random_polynomial(rng, R, zero_constant=False)
        m = rng.randint(0, 4)
        local_jet = JetRingContext(R, m, True)
        global_jet = JetRingContext(R, m, False)
        locals_ = hasse_schmidt_expand(f, m, True, local_jet)
        globals_ = hasse_schmidt_expand(f, m, False, global_jet)
        # substitute zero for the order-0 variables, then compare by name
        assignment = {}
        for name in global_jet.ring.variables:
            if name.endswith("@0"):
                assignment[name] = local_jet.ring.zero()
            else:
                assignment[name] = local_jet.ring.variable(name)
        for i in range(m + 1):
            assert globals_[i].substitute(local_jet.ring, assignment) == locals_[i]
