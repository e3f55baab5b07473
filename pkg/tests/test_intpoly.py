"""Integer polynomials in one variable: the denominator arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from golodkit import (
    IntPolynomial,
    ValidationError,
    divexact,
    poly_gcd,
    squarefree_decomposition,
)
from golodkit.intpoly import divmod_q


def P(*cs):
    return IntPolynomial.of(cs)


def test_construction_and_trimming():
    p = IntPolynomial.of([1, 2, 0, 0])
    assert p.degree == 1
    assert p.coeffs == (1, 2)
    assert IntPolynomial.of([0, 0]).is_zero()
    assert IntPolynomial.zero().degree == -1
    assert IntPolynomial.zero().coeffs == ()
    assert IntPolynomial.t_power(3) == P(0, 0, 0, 1)
    assert p[0] == 1 and p[1] == 2 and p[7] == 0


def test_arithmetic_and_evaluation():
    a, b = P(1, -3, 1), P(1, 1)
    assert a + b == P(2, -2, 1)
    assert a - b == P(0, -4, 1)
    assert a * b == P(1, -2, -2, 1)
    assert (-a) == P(-1, 3, -1)
    assert b ** 3 == P(1, 3, 3, 1)
    assert a(1) == -1
    assert a(Fraction(1, 2)) == Fraction(-1, 4)
    assert a.derivative() == P(-3, 2)
    assert P(6, -9, 12).content() == 3
    assert P(6, -9, 12).primitive() == P(2, -3, 4)
    # primitive parts are sign-normalized to a positive leading coefficient
    assert P(-4, -8).primitive() == P(1, 2)


def test_divexact_and_errors():
    prod = P(1, -3, 1) * P(1, 1, 1)
    assert divexact(prod, P(1, 1, 1)) == P(1, -3, 1)
    with pytest.raises(ValidationError):
        divexact(P(1, 1), P(1, 0, 1))
    with pytest.raises(ValidationError):
        divexact(P(1, 1, 1), P(2, 2))


def test_divmod_identity():
    a, b = P(3, 0, -2, 5), P(1, 2)
    q, r = divmod_q(a, b)
    # a = b*q + r with deg r < deg b, over the rationals
    recomposed = [Fraction(0)] * 4
    for i, qc in enumerate(q):
        for j, bc in enumerate(b.coeffs):
            recomposed[i + j] += qc * bc
    for i, rc in enumerate(r):
        recomposed[i] += rc
    assert recomposed == [Fraction(c) for c in a.coeffs]
    assert len(r) <= b.degree


def test_gcd_examples():
    a = P(1, -2) ** 2 * P(1, 1)
    b = P(1, -2) * P(1, 0, 1)
    # sign-normalized to a positive leading coefficient
    assert poly_gcd(a, b) == P(-1, 2)
    assert poly_gcd(P(1, 1), P(1, -1)) == P(1)
    assert poly_gcd(P(0), P(2, 4)) == P(2, 4)
    # the content part survives
    assert poly_gcd(P(4, 8), P(6, 12)) == P(2, 4)


def test_squarefree_decomposition():
    p = P(1, -2) ** 2 * P(1, 1) ** 3 * P(1, 0, 1)
    parts = squarefree_decomposition(p)
    by_mult = {m: f for f, m in parts}
    assert by_mult[2] in (P(1, -2), P(-1, 2))
    assert by_mult[3] in (P(1, 1), P(-1, -1))
    # the multiplicity-1 slot collects the remaining squarefree factor
    assert 1 in by_mult
    recombined = IntPolynomial.one()
    for f, m in parts:
        recombined = recombined * f ** m
    assert recombined in (p.primitive(), -p.primitive())


small_polys = st.lists(st.integers(-6, 6), min_size=1, max_size=6).map(
    IntPolynomial.of
)
nonzero_polys = small_polys.filter(lambda p: not p.is_zero())


@settings(max_examples=60, deadline=None)
@given(nonzero_polys, nonzero_polys)
def test_gcd_divides_both(a, b):
    g = poly_gcd(a, b)
    assert not g.is_zero()
    assert divexact(a, g) * g == a
    assert divexact(b, g) * g == b


@settings(max_examples=60, deadline=None)
@given(small_polys, nonzero_polys)
def test_divexact_inverts_multiplication(a, b):
    if a.is_zero():
        assert divexact(a, b).is_zero()
    else:
        assert divexact(a * b, b) == a
