import pytest
from hypothesis import given, strategies as st

from jetclosures import Block, DEGREVLEX, LEX, order_compare
from jetclosures.orders import OrderMismatchError

exponents = st.tuples(*[st.integers(min_value=0, max_value=6)] * 3)


def test_degrevlex_examples():
    # same degree: the tie breaks at the last differing position
    assert order_compare((2, 0), (1, 1), DEGREVLEX) > 0
    assert order_compare((1, 1), (0, 2), DEGREVLEX) > 0
    # degree dominates
    assert order_compare((0, 3), (2, 0), DEGREVLEX) > 0


def test_lex_examples():
    # lex ignores total degree
    assert order_compare((0, 5), (1, 0), LEX) < 0
    assert order_compare((1, 0), (0, 5), LEX) > 0


def test_reflexivity_gives_equal():
    for order in (DEGREVLEX, LEX, Block(2, (0,))):
        assert order_compare((3, 1), (3, 1), order) == 0


def test_arity_mismatch():
    with pytest.raises(OrderMismatchError):
        order_compare((1, 2), (1, 2, 3), DEGREVLEX)


def test_block_order_elimination_block_dominates():
    order = Block(3, (0,))
    # any positive power of the eliminated variable beats everything else
    assert order_compare((1, 0, 0), (0, 6, 6), order) > 0
    # within the kept block the inner order decides
    assert order_compare((0, 2, 0), (0, 1, 1), order) > 0


def test_block_order_validation():
    with pytest.raises(ValueError):
        Block(2, (0, 0))
    with pytest.raises(ValueError):
        Block(2, (5,))


ORDERS = [DEGREVLEX, LEX, Block(3, (0,)), Block(3, (1, 2))]


@pytest.mark.parametrize("order", ORDERS)
@given(a=exponents, b=exponents)
def test_totality_and_antisymmetry(order, a, b):
    c = order_compare(a, b, order)
    assert c in (-1, 0, 1)
    assert (c == 0) == (a == b)
    assert order_compare(b, a, order) == -c


@pytest.mark.parametrize("order", ORDERS)
@given(a=exponents, b=exponents, c=exponents)
def test_transitivity(order, a, b, c):
    if order_compare(a, b, order) <= 0 and order_compare(b, c, order) <= 0:
        assert order_compare(a, c, order) <= 0


@pytest.mark.parametrize("order", ORDERS)
@given(a=exponents, b=exponents, c=exponents)
def test_multiplicativity(order, a, b, c):
    shifted_a = tuple(x + y for x, y in zip(a, c))
    shifted_b = tuple(x + y for x, y in zip(b, c))
    assert order_compare(a, b, order) == order_compare(shifted_a, shifted_b, order)


@pytest.mark.parametrize("order", ORDERS)
@given(a=exponents)
def test_constant_monomial_is_minimal(order, a):
    assert order_compare((0, 0, 0), a, order) <= 0
