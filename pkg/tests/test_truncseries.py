import json
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from ellsigma.curvegen import CurveParams, sigma_series, x_from_u, y_from_u
from ellsigma.exactnum import ZETA, Rational
from ellsigma.formulas.hurwitz import is_integral
from ellsigma.gradedpoly import parse_poly
from ellsigma.truncseries import (
    LaurentSeries, SeriesError, TruncSeries, compose, exp_series, laurent_from, laurent_mul,
    log_unit, revert,
)

from oracles import revert_newton, scompose

rats = st.fractions(max_denominator=9).map(lambda f: Rational(f.numerator, f.denominator))


def uni(coeffs, var="u", bound=None):
    return TruncSeries.from_list(var, coeffs, bound)


def series(var="u", n=7, zero_const=False, unit_linear=False):
    def build(cs):
        cs = list(cs)
        if zero_const:
            cs[0] = 0
        if unit_linear and not cs[1]:
            cs[1] = Rational(1)
        return uni(cs, var)
    return st.lists(rats, min_size=n, max_size=n).map(build)


def biv():
    items = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), rats, max_size=8)
    return items.map(lambda d: TruncSeries.from_coeffs(("u", "v"), 5, d))


def test_square_of_u():
    u = TruncSeries.var("u", ("u",), 5)
    assert u * u == uni([0, 0, 1, 0, 0, 0])


def test_geometric_inverse():
    prod = uni([1, 1, 0, 0, 0]) * uni([1, -1, 1, -1, 1])
    assert prod == uni([1, 0, 0, 0, 0])
    assert prod.bound == 4


def test_sigma_squared_hurwitz():
    s2 = sigma_series(CurveParams.symbolic(), 8) ** 2
    for n in range(9):
        assert is_integral(s2[n] * factorial(n))


def test_compose_odd():
    t = TruncSeries.var("t", ("t",), 7, -1)
    got = compose(uni([0, 1, 0, Rational(1, 6)], bound=7), t)
    assert got == uni([0, -1, 0, Rational(-1, 6), 0, 0, 0, 0], "t")


def test_sigma_zeta_homogeneity():
    params = CurveParams.from_binding({"mu1": 0, "mu2": 0, "mu4": 0})
    sig = sigma_series(params, 13)
    got = compose(sig, TruncSeries.var("v", ("v",), 13, ZETA))
    want = sig.embed(("v",), {"u": "v"}).scale(ZETA)
    assert got == want


def test_revert_linear():
    assert revert(uni([0, -1], "t", 6), "u") == uni([0, -1, 0, 0, 0, 0, 0])


def test_revert_rejects_bad_input():
    with pytest.raises(SeriesError):
        revert(uni([1, 1, 0]))
    with pytest.raises(SeriesError):
        revert(uni([0, 0, 1]))


def test_compose_rejects_constant_inner():
    with pytest.raises(SeriesError):
        compose(uni([0, 1]), uni([1, 1]))


def test_exp_log():
    s = uni([1, 1, 0, 0, 0, 0, 0, 0])
    assert exp_series(log_unit(s)) == s


def test_log_needs_unit():
    with pytest.raises(SeriesError):
        log_unit(uni([2, 1, 0]))


def test_x_from_sigma_quotient():
    # x = (s'^2 - s'' s) / s^2 written as a power series times u^-2
    params = CurveParams.symbolic()
    s = sigma_series(params, 12)
    d1 = s.differentiate("u")
    d2 = d1.differentiate("u")
    num = (d1 * d1 - d2 * s).truncate(10)
    x = laurent_mul(laurent_from(num), laurent_from(s * s).inverse())
    assert (x - x_from_u(params, 6)).is_zero()


def test_laurent_pole_cancellation():
    a = LaurentSeries(2, uni([1, 0, 0, 0]))
    b = LaurentSeries(-3, uni([1, 0, 0, 0]))
    c = laurent_mul(a, b)
    assert c.pole == -1 and c.unit == uni([1, 0, 0, 0])


def test_y_sigma_cubed_is_power_series():
    params = CurveParams.symbolic()
    prod = laurent_mul(y_from_u(params, 8), laurent_from(sigma_series(params, 9)) ** 3)
    s = prod.to_series()
    assert s[0] == parse_poly("-1")


def test_json_roundtrip():
    s = sigma_series(CurveParams.symbolic(), 7)
    assert TruncSeries.from_json(json.loads(json.dumps(s.to_json()))) == s


def test_bound_tracking():
    a = uni([0, 1, 2, 3], bound=3)
    assert (a * a).bound == 4          # valuation 1 on each side
    assert a.integrate("u").bound == 4
    assert a.differentiate("u").bound == 2


def test_beyond_bound_raises():
    with pytest.raises(SeriesError):
        uni([1, 2])[5]


def test_incompatible_vars():
    with pytest.raises(SeriesError):
        uni([1, 2]) + uni([1, 2], "v")


@given(biv(), biv(), biv())
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a + b - b == a


@given(series(zero_const=True, unit_linear=True))
def test_revert_involution(s):
    r = revert(s, "u")
    assert compose(r, s) == uni([0, 1] + [0] * 5)
    assert revert(r, "u") == s


@given(series(zero_const=True, unit_linear=True))
def test_revert_matches_newton(s):
    want = revert_newton([s[k].constant_term() for k in range(7)], 7)
    assert [revert(s)[k].constant_term() for k in range(7)] == want


@given(series(n=6), series(var="t", n=6, zero_const=True))
def test_compose_matches_dense(f, g):
    want = scompose([f[k].constant_term() for k in range(6)],
                    [g[k].constant_term() for k in range(6)], 6)
    got = compose(f, g)
    assert [got[k].constant_term() for k in range(got.bound + 1)] == want[: got.bound + 1]


@given(series(zero_const=True))
def test_differentiate_integrate(s):
    assert s.integrate("u").differentiate("u") == s


@given(series(zero_const=True))
def test_exp_log_roundtrip(s):
    assert log_unit(exp_series(s)) == s


@settings(max_examples=30)
@given(series())
def test_inverse(s):
    if s[0]:
        assert s * s.inverse() == uni([1] + [0] * 6)
