"""Polynomial layer: monomials, term orders, arithmetic, parsing."""

from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from golodkit import (
    GF,
    QQ,
    ParseError,
    PolyContext,
    ValidationError,
    format_polynomial,
    parse_poly,
)
from golodkit.monomials import (
    DEGREVLEX,
    Monomial,
    MonomialOrder,
    one_monomial,
    variable_monomial,
)
from golodkit.poly import monomials_of_degree

CTX = PolyContext(("x", "y", "z"), QQ)
CTX7 = PolyContext(("x", "y"), GF(7))


# -- monomials ---------------------------------------------------------


def test_monomial_operations():
    a = Monomial((2, 0, 1))
    b = Monomial((1, 3, 0))
    assert a.degree == 3 and b.degree == 4
    assert a.mul(b) == Monomial((3, 3, 1))
    assert a.lcm(b) == Monomial((2, 3, 1))
    assert not a.divides(b)
    assert Monomial((1, 0, 0)).divides(a)
    assert a.div(Monomial((1, 0, 0))) == Monomial((1, 0, 1))
    assert Monomial((0, 2, 0)).coprime(Monomial((1, 0, 3)))
    assert not a.coprime(b)
    assert one_monomial(3).is_one()
    assert variable_monomial(3, 1) == Monomial((0, 1, 0))
    with pytest.raises(ValueError):
        Monomial((1, -1))


def test_term_orders_disagree_where_expected():
    # degrevlex ranks y^2 above x*z, deglex the other way around
    xz = Monomial((1, 0, 1))
    yy = Monomial((0, 2, 0))
    assert DEGREVLEX.greater(yy, xz)
    assert not MonomialOrder("deglex").greater(yy, xz)
    assert DEGREVLEX.greater(Monomial((1, 1, 0)), xz)
    with pytest.raises(ValueError):
        MonomialOrder("lex").key(xz)


def test_monomials_of_degree_counts():
    for n in (1, 2, 3, 4):
        for d in (0, 1, 2, 3, 5):
            assert len(list(monomials_of_degree(n, d))) == comb(n + d - 1, d)


# -- contexts and arithmetic -------------------------------------------


def test_context_validation():
    with pytest.raises(ValidationError):
        PolyContext(("x", "x"), QQ)
    with pytest.raises(ValidationError):
        PolyContext(("2bad",), QQ)


def test_basic_polynomial_algebra():
    x, y = CTX.variable("x"), CTX.variable("y")
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert (x + y) ** 2 == x * x + x * y + x * y + y * y
    assert p.degree() == 2
    assert p.homogeneous_degree().degree == 2
    mixed = x + x * y
    assert mixed.homogeneous_degree().degree is None
    assert CTX.zero().is_zero() and CTX.zero().degree() is None
    assert mixed.graded_part(2) == x * y
    assert mixed.graded_part(5).is_zero()


def test_substitution():
    p = parse_poly("x^2 + y*z", CTX)
    out = p.substitute({"x": CTX.variable("y"), "y": CTX.zero()})
    assert out == parse_poly("y^2", CTX)


def _poly_strategy(ctx, coeff):
    monos = st.tuples(*(st.integers(0, 2) for _ in range(ctx.nvars))).map(Monomial)
    pairs = st.lists(st.tuples(monos, coeff), max_size=5)

    def build(items):
        acc = ctx.zero()
        for m, c in items:
            from golodkit.poly import Polynomial

            acc = acc + Polynomial.from_terms(ctx, [(m, ctx.field.coerce(c))])
        return acc

    return pairs.map(build)


qq_polys = _poly_strategy(CTX, st.integers(-5, 5))
gf_polys = _poly_strategy(CTX7, st.integers(0, 6))


@settings(max_examples=40, deadline=None)
@given(qq_polys, qq_polys, qq_polys)
def test_ring_axioms_over_qq(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + CTX.zero() == p
    assert p * CTX.one() == p
    assert (p - p).is_zero()


@settings(max_examples=40, deadline=None)
@given(gf_polys, gf_polys)
def test_ring_axioms_mod_seven(p, q):
    assert p * q == q * p
    assert (p + q) - q == p
    seven = CTX7.constant(7)
    assert seven.is_zero()
    assert (p.scale(7)).is_zero()


@settings(max_examples=60, deadline=None)
@given(qq_polys)
def test_format_parse_round_trip(p):
    text = format_polynomial(p)
    assert parse_poly(text, CTX) == p


# -- parsing -----------------------------------------------------------


def test_parse_accepts_the_session_vocabulary():
    p = parse_poly("2*x^2 - 3*x*y + z^2", CTX)
    assert p.coefficient(Monomial((2, 0, 0))) == 2
    assert p.coefficient(Monomial((1, 1, 0))) == -3
    assert p.coefficient(Monomial((0, 0, 2))) == 1
    assert parse_poly("-(x - y)*z", CTX) == parse_poly("y*z - x*z", CTX)
    assert parse_poly("0", CTX).is_zero()
    assert parse_poly("x^0", CTX) == CTX.one()


@pytest.mark.parametrize(
    "text, position",
    [
        ("x + ", 4),
        ("x @ y", 2),
        ("w", 0),
        ("2x", 1),
        ("x^y", 2),
        ("(x + y", 6),
        ("x ^ -2", 4),
    ],
)
def test_parse_errors_carry_positions(text, position):
    with pytest.raises(ParseError) as exc:
        parse_poly(text, CTX)
    assert exc.value.position == position
    assert f"position {position}" in str(exc.value)


def test_format_is_stable_and_readable():
    p = parse_poly("z^2 + x*y", CTX)
    assert format_polynomial(p) == "x*y + z^2"
    assert format_polynomial(parse_poly("-x", CTX)) == "-x"
    assert format_polynomial(CTX.zero()) == "0"
