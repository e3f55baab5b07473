from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from golodkit import GF, QQ, FieldError


def test_rational_arithmetic():
    a = QQ.coerce(Fraction(2, 3))
    b = QQ.coerce(5)
    assert QQ.add(a, b) == Fraction(17, 3)
    assert QQ.mul(a, b) == Fraction(10, 3)
    assert QQ.sub(a, b) == Fraction(-13, 3)
    assert QQ.neg(a) == Fraction(-2, 3)
    assert QQ.inv(a) == Fraction(3, 2)
    assert QQ.div(b, a) == Fraction(15, 2)
    assert QQ.zero == 0 and QQ.one == 1
    assert QQ.is_zero(Fraction(0)) and not QQ.is_zero(a)


def test_rational_coercions():
    assert QQ.coerce("3/7") == Fraction(3, 7)
    with pytest.raises(ZeroDivisionError):
        QQ.inv(Fraction(0))
    with pytest.raises(TypeError):
        QQ.coerce(0.5)


def test_prime_field_basics():
    F = GF(7)
    assert F.characteristic == 7
    assert F.add(5, 4) == 2
    assert F.mul(3, 5) == 1
    assert F.neg(2) == 5
    assert F.inv(3) == 5
    assert F.coerce(-1) == 6
    # fractions land via modular inverse of the denominator
    assert F.coerce(Fraction(1, 2)) == 4
    with pytest.raises(ZeroDivisionError):
        F.inv(7)


def test_prime_field_rejects_bad_moduli():
    for bad in (4, 6, 9, 1, 0, -3):
        with pytest.raises(FieldError):
            GF(bad)
    with pytest.raises(FieldError):
        GF(2**31)


def test_gf_is_cached_and_comparable():
    assert GF(101) is GF(101)
    assert GF(101) == GF(101)
    assert GF(101) != GF(103)
    assert GF(101) != QQ
    assert hash(GF(101)) == hash(GF(101))


@given(st.integers(-300, 300), st.integers(-300, 300), st.integers(-300, 300))
def test_gf101_field_axioms(a, b, c):
    F = GF(101)
    a, b, c = F.coerce(a), F.coerce(b), F.coerce(c)
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == F.zero
    if a != F.zero:
        assert F.mul(a, F.inv(a)) == F.one


@given(
    st.fractions(min_value=-50, max_value=50, max_denominator=20),
    st.fractions(min_value=-50, max_value=50, max_denominator=20),
)
def test_qq_axioms(a, b):
    assert QQ.sub(QQ.add(a, b), b) == a
    if not QQ.is_zero(b):
        assert QQ.mul(QQ.div(a, b), b) == a
