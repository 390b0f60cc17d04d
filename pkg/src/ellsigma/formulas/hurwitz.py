"""Integrality of the sigma expansion (Hurwitz form)."""

from math import factorial

from gmpy2 import mpq

from ..curvegen import CurveParams, sigma_series
from ..gradedpoly import TABLE, GradedPoly
from .golden import r_sum
from .report import FAIL, PASS, IdentityReport

_MU1 = TABLE.index["mu1"]


def is_integral(poly):
    return all(isinstance(c, type(mpq(0))) and c.denominator == 1 for c in poly.terms.values())


def bar_mu1_integral(poly):
    """Integral after mu1 -> 2 * mubar1, i.e. c * 2^deg_mu1 is an integer."""
    for k, c in poly.terms.items():
        a = (k >> (8 * _MU1)) & 0xFF
        if (c * 2 ** a).denominator != 1:
            return False
    return True


def hurwitz_coefficients(params, N):
    """[(n, n! [u^n] sigma, n! [u^n] sigma^2)] for n <= N."""
    s = sigma_series(params, N)
    s2 = (s * s).truncate(N)
    return [(n, s[n] * factorial(n), s2[n] * factorial(n)) for n in range(N + 1)]


def check_hurwitz(params=None, N=20, include_derived=True):
    params = CurveParams.symbolic() if params is None else params
    bad_sigma, bad_sigma2 = [], []
    for n, a, b in hurwitz_coefficients(params, N):
        if not bar_mu1_integral(a):
            bad_sigma.append(n)
        if not is_integral(b):
            bad_sigma2.append(n)
    notes = {"sigma_failures": bad_sigma, "sigma2_failures": bad_sigma2,
             "r_sum_integral": is_integral(r_sum())}
    if include_derived:
        from .derive import derive_rhs
        notes["derived_n2_integral"] = is_integral(derive_rhs(2).poly)
    ok = not bad_sigma and not bad_sigma2 and notes["r_sum_integral"] and \
        notes.get("derived_n2_integral", True)
    residual = None
    if bad_sigma or bad_sigma2:
        n = min(bad_sigma + bad_sigma2)
        residual = {"vars": ["u"], "exponents": [n],
                    "coefficient": GradedPoly(dict(sigma_series(params, N).coeff_raw(n))).to_text()}
    return IdentityReport("hurwitz", params.describe(), N, PASS if ok else FAIL, residual, notes)
