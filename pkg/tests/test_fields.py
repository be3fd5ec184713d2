from fractions import Fraction

import pytest

from jetclosures import GF, QQ
from jetclosures.fields import (
    FieldMismatchError,
    Residue,
    field_from_name,
    is_prime,
)


def test_rational_coercion_stays_reduced():
    assert QQ.coerce(6) == Fraction(6)
    assert QQ.from_fraction(4, 6) == Fraction(2, 3)
    assert QQ.from_fraction(3, -6) == Fraction(-1, 2)
    assert QQ.from_fraction(3, -6).denominator > 0


def test_prime_field_canonical_representatives():
    F5 = GF(5)
    assert F5.coerce(7) == Residue(2, 5)
    assert F5.coerce(-1).value == 4
    assert F5.from_fraction(1, 2) == Residue(3, 5)  # 2 * 3 = 6 = 1 mod 5
    assert (F5.coerce(2) * F5.coerce(4)).value == 3
    assert (F5.coerce(2) - 4).value == 3
    assert F5.coerce(3).inverse().value == 2


def test_prime_field_rejects_composite_and_large_moduli():
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ValueError):
        GF(2**31 + 11)


def test_is_prime_agrees_with_trial_division():
    def slow(n):
        if n < 2:
            return False
        return all(n % d for d in range(2, int(n**0.5) + 1))

    for n in range(1000):
        assert is_prime(n) == slow(n)
    assert is_prime(2_147_483_647)


def test_fields_never_mix_silently():
    F5, F7 = GF(5), GF(7)
    with pytest.raises(FieldMismatchError):
        F5.coerce(F7.coerce(1))
    with pytest.raises(FieldMismatchError):
        QQ.coerce(F5.coerce(1))
    with pytest.raises((TypeError, FieldMismatchError)):
        F5.coerce(1) + F7.coerce(1)
    with pytest.raises(TypeError):
        F5.coerce(1) + Fraction(1, 2)


def test_division_by_vanishing_denominator():
    with pytest.raises(ZeroDivisionError):
        GF(5).from_fraction(1, 10)


def test_field_from_name():
    assert field_from_name("Q") is QQ
    assert field_from_name("Fp 7") == GF(7)
    with pytest.raises(ValueError):
        field_from_name("R")
    with pytest.raises(ValueError):
        field_from_name("Fp")
