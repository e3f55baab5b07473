"""Rational series: reduction, expansion, the formula database, Padé."""

import random

import pytest
from hypothesis import given, strategies as st

from golodkit import (
    IntPolynomial,
    RationalSeries,
    TruncatedSeries,
    ValidationError,
    compressed_denominator,
    compressed_series,
    connected_sum_series,
    expand,
    golod_series,
    kustin_denominator,
    levin_quotient_series,
    pade_reconstruct,
    series_compare,
    stretched_series,
)

from conftest import k_over

def P(*cs):
    return IntPolynomial.of(cs)


ONE = IntPolynomial.one()


def mk(num, den, tag="user-asserted"):
    return RationalSeries.make(P(*num) if isinstance(num, tuple) else num,
                               P(*den) if isinstance(den, tuple) else den, tag)


def test_truncated_series_basics():
    ts = TruncatedSeries((1, 3, 8, 21))
    assert ts.order == 3
    assert len(ts) == 4
    assert ts[2] == 8
    assert ts.truncate(1).coefficients == (1, 3)
    assert "8" in str(ts)


def test_make_reduces():
    # (1+t)^2 / (1+t)^2 (1-2t)
    rs = mk((1, 2, 1), (1, 0, -3, -2))
    assert rs.numerator == ONE
    assert rs.denominator == P(1, -2)
    assert not rs.is_polynomial()
    assert rs.denominator_at_one == -1


def test_make_sign_flip():
    rs = mk((1,), (-1, 1))
    assert rs.denominator == P(1, -1)
    assert rs.numerator == P(-1)


def test_make_rejects_nonunit_constant():
    # 2/(2 - t) has no integer expansion: a_1 would be 1/2
    with pytest.raises(ValidationError):
        mk((2,), (2, -1))


def test_make_zero_and_errors():
    z = mk((0,), (1, -1))
    assert z.numerator.is_zero()
    assert z.denominator == ONE
    with pytest.raises(ValidationError):
        mk((1,), (0,))
    with pytest.raises(ValidationError):
        RationalSeries.make(ONE, P(1, -1), "bogus-tag")
    with pytest.raises(ValidationError):
        RationalSeries(ONE, P(2, 1), "user-asserted")


def test_expand_examples():
    assert mk((1,), (1, -3, 1)).expand(5).coefficients == (1, 3, 8, 21, 55, 144)
    # (1-2t)(1-t)^2 = 1 - 4t + 5t^2 - 2t^3
    assert mk((1,), (1, -4, 5, -2)).expand(4).coefficients == (1, 4, 11, 26, 57)
    assert mk((3, 0, 7), (1,)).expand(4).coefficients == (3, 0, 7, 0, 0)
    with pytest.raises(ValidationError):
        expand(mk((1,), (1, -1)), -1)


coeff_lists = st.lists(st.integers(min_value=-4, max_value=4), min_size=1, max_size=5)


@given(coeff_lists, coeff_lists)
def test_reduction_preserves_expansion(pc, dc):
    p = P(*pc)
    d = P(1, *dc)
    rs = RationalSeries.make(p, d, "user-asserted")
    out = []
    for n in range(11):
        a = p[n]
        for j in range(1, min(n, d.degree) + 1):
            a -= d[j] * out[n - j]
        out.append(a)
    assert rs.expand(10).coefficients == tuple(out)


def test_series_compare():
    a = TruncatedSeries((1, 2, 1))
    assert series_compare(a, TruncatedSeries((1, 1, 2))) == "incomparable"
    assert series_compare(a, TruncatedSeries((1, 2, 1, 99))) == "equal"
    assert series_compare(a, TruncatedSeries((1, 2, 5))) == "a<=b"
    assert series_compare(a, TruncatedSeries((0, 2, 1))) == "b<=a"


def test_golod_series_reduction():
    rs = golod_series(2, (1, 3, 2))
    assert rs.provenance == "golod-formula"
    assert rs.numerator == ONE
    assert rs.denominator == P(1, -2)
    assert rs.full_denominator == P(1, 0, -3, -2)
    assert rs.full_denominator_at_one == -4
    # reduction leaves the expansion alone
    assert rs.expand(10).coefficients == tuple(2**n for n in range(11))


def test_golod_series_hypersurface():
    rs = golod_series(1, (1, 1))
    assert rs.denominator == P(1, -1)
    assert rs.numerator == ONE


def test_golod_series_validation():
    with pytest.raises(ValidationError):
        golod_series(0, (1,))
    with pytest.raises(ValidationError):
        golod_series(2, (1, 3))
    with pytest.raises(ValidationError):
        golod_series(2, (2, 3, 2))
    with pytest.raises(ValidationError):
        golod_series(2, (1, -3, 2))


def test_levin_removes_top_socle():
    rs = levin_quotient_series(mk((1,), (1, -2, 1)))
    assert rs.provenance == "levin"
    assert rs.denominator == P(1, -2)
    assert rs.warnings == ()


def test_levin_hypersurface_is_fixed_point():
    # the socle quotient of k[x]/(x^n) is k[x]/(x^(n-1)): same series
    rs = levin_quotient_series(mk((1,), (1, -1)))
    assert rs.denominator == P(1, -1)
    assert rs.numerator == ONE
    assert any("hypersurface" in w for w in rs.warnings)


def test_levin_flags_degenerate_input():
    rs = levin_quotient_series(mk((1,), (1,)))
    assert rs.denominator == P(1, 0, -1)
    assert any("beta_1" in w for w in rs.warnings)
    with pytest.raises(ValidationError):
        levin_quotient_series(mk((0,), (1,)))


def test_connected_sum_series_examples():
    ps = mk((1,), (1, -2))
    pt = mk((1,), (1, -1))
    rs = connected_sum_series(ps, pt)
    assert rs.provenance == "connected-sum"
    assert rs.denominator == P(1, -3, 1)
    assert rs.numerator == ONE
    assert rs.warnings == ()
    both = connected_sum_series(pt, pt)
    assert both.denominator == P(1, -2, 1)
    assert both.warnings  # two hypersurface-type inputs get flagged


def test_connected_sum_series_symmetry():
    pairs = [
        (mk((1,), (1, -2)), mk((1,), (1, -1))),
        (mk((1, 1), (1, -1, -1)), mk((1,), (1, -3, 1))),
        (mk((2, 1), (1, -2, 0, 1)), mk((1, 0, 1), (1, -1))),
    ]
    for ps, pt in pairs:
        a = connected_sum_series(ps, pt)
        b = connected_sum_series(pt, ps)
        assert (a.numerator, a.denominator) == (b.numerator, b.denominator)


def test_connected_sum_matches_direct_resolution(connsum_ring, rescache):
    # socle quotients of the two summands are k[x,y]/m^2 and k[z]/(z^2)
    ps = levin_quotient_series(mk((1,), (1, -2, 1)))
    pt = levin_quotient_series(mk((1,), (1, -1)))
    rs = connected_sum_series(ps, pt)
    res = rescache.get("connsum.k", connsum_ring, k_over(connsum_ring), 8)
    assert rs.expand(8).coefficients == res.betti.totals[:9]


def test_compressed_denominator():
    d = compressed_denominator(3, P(1, 5, 5, 1))
    assert d == P(1, 0, -5, -5, 0, 1)
    assert d(1) == -8
    with pytest.raises(ValidationError):
        compressed_denominator(3, P(1, 5, 5))
    with pytest.raises(ValidationError):
        compressed_denominator(2, P(1, -5, 1))
    with pytest.raises(ValidationError):
        compressed_denominator(2, P(2, 5, 1))


def test_compressed_series_reduces():
    rs = compressed_series(3, P(1, 5, 5, 1))
    assert rs.provenance == "compressed"
    assert rs.numerator == ONE
    assert rs.denominator == P(1, -3, 1)
    assert rs.full_denominator_at_one == -8


def test_stretched_series():
    rs = stretched_series(3)
    assert rs.provenance == "stretched"
    assert rs.expand(4).coefficients == (1, 3, 8, 21, 55)
    assert rs.full_denominator == (P(1, 1) ** 3) * P(1, -3, 1)
    assert rs.full_denominator_at_one == -8
    assert stretched_series(2).full_denominator_at_one == 0
    assert stretched_series(5).full_denominator_at_one == 2**5 * (2 - 5)
    assert any("3" in w for w in stretched_series(1).warnings)
    with pytest.raises(ValidationError):
        stretched_series(0)


def test_kustin_denominator_cases():
    d0 = kustin_denominator(2, 0)
    assert d0 == (P(1, 1) ** 5) * ((P(1, -1) ** 5) - IntPolynomial.t_power(3))
    assert d0(1) == -32
    d2 = kustin_denominator(2, 2)
    extra = ONE - IntPolynomial.t_power(5) - IntPolynomial.t_power(6)
    assert d2 == (P(1, 1) ** 5) * ((P(1, -1) ** 5) * extra - IntPolynomial.t_power(3))
    assert d2(1) == -32
    # large prime falls back to the first case
    assert kustin_denominator(2, 5) == d0
    with pytest.raises(ValidationError):
        kustin_denominator(1, 0)
    with pytest.raises(ValidationError):
        kustin_denominator(2, 4)  # composite
    with pytest.raises(ValidationError):
        kustin_denominator(3, 2)  # between the two ranges


def test_pade_reconstruct_examples():
    fib = TruncatedSeries((1, 3, 8, 21, 55, 144, 377, 987, 2584))
    rs = pade_reconstruct(fib, 0, 2)
    assert rs is not None
    assert rs.provenance == "pade-reconstructed"
    assert (rs.numerator, rs.denominator) == (ONE, P(1, -3, 1))
    cube = TruncatedSeries((1, 4, 11, 26, 57, 120, 247, 502))
    rs = pade_reconstruct(cube, 0, 3)
    assert (rs.numerator, rs.denominator) == (ONE, P(1, -4, 5, -2))
    assert pade_reconstruct(TruncatedSeries((1, 1, 2, 6, 24)), 1, 2) is None


def test_pade_minimality():
    # (1+t)/(1-t) fits already with dq = 1; larger bounds must not
    # inflate the answer
    ts = TruncatedSeries((1, 2, 2, 2, 2, 2, 2))
    rs = pade_reconstruct(ts, 2, 3)
    assert (rs.numerator, rs.denominator) == (P(1, 1), P(1, -1))


def test_pade_requires_surplus():
    with pytest.raises(ValidationError):
        pade_reconstruct(TruncatedSeries((1, 3, 8)), 1, 1)
    with pytest.raises(ValidationError):
        pade_reconstruct(TruncatedSeries((1, 3, 8)), -1, 1)


def test_pade_round_trips():
    rng = random.Random(7)
    done = 0
    while done < 100:
        pc = [rng.randint(-3, 3) for _ in range(rng.randint(1, 4))]
        dc = [1] + [rng.randint(-3, 3) for _ in range(rng.randint(0, 3))]
        p, d = P(*pc), P(*dc)
        if p.is_zero():
            continue
        rs = RationalSeries.make(p, d, "user-asserted")
        dp, dq = rs.numerator.degree, rs.denominator.degree
        back = pade_reconstruct(rs.expand(dp + dq + 1), dp, dq)
        assert back is not None
        assert (back.numerator, back.denominator) == (rs.numerator, rs.denominator)
        done += 1
