"""Pole-cleared multivariate series used by the verifiers and by derive.

A point j carries an expansion variable, the power k of sigma used to clear
poles, and the power m of S = sigma(v*) sigma(v**) / sigma(v)^2 multiplied in.
"""

from functools import lru_cache

from ..curvegen import (
    ConsistencyError, sigma_series, sigma_star_product, star_series, wp_prime_series,
    wp_series, x_from_u, y_from_u,
)
from ..exactnum import ZETA, ZETA2
from ..gradedpoly import BITS, MASK, specialize
from ..truncseries import SeriesError, TruncSeries, compose


def _sigma_in(params, T, var):
    return sigma_series(params, T).embed((var,), {"u": var})


@lru_cache(maxsize=512)
def coordinate_factor(params, T, var, k, m, p, e, basis="xy"):
    """x^p y^e sigma^k S^m (or wp^p wp'^e sigma^k S^m) in ``var``, exact through T."""
    pole = 2 * p + 3 * e
    if pole > k:
        raise SeriesError(f"pole {pole} is not cleared by sigma^{k}")
    if basis == "xy":
        X, Y = x_from_u(params, T), y_from_u(params, T)
    elif basis == "wp":
        X, Y = wp_series(params, T), wp_prime_series(params, T)
    else:
        raise ValueError(f"unknown basis {basis!r}")
    unit = sigma_series(params, T + 1).shift((-1,)) ** k
    if p:
        unit = unit * X.unit ** p
    if e:
        unit = unit * Y.unit ** e
    if m:
        unit = unit * sigma_star_product(params, T, "u") ** m
    out = unit.truncate(T).shift((k - pole,)).truncate(T)
    return out.embed((var,), {"u": var})


class Point:
    __slots__ = ("var", "x", "y", "k", "m")

    def __init__(self, var, x, y, k, m=0):
        self.var, self.x, self.y, self.k, self.m = var, x, y, k, m


def split_coordinates(poly, points):
    """Group terms by coordinate exponents: {((p, e) per point): raw mu-poly}."""
    tbl = poly.table
    idx = [(tbl.index[pt.x], tbl.index[pt.y]) for pt in points]
    groups = {}
    for key, c in poly.terms.items():
        rest = key
        ce = []
        for ix, iy in idx:
            p = (key >> (BITS * ix)) & MASK
            e = (key >> (BITS * iy)) & MASK
            rest -= (p << (BITS * ix)) + (e << (BITS * iy))
            ce.append((p, e))
        groups.setdefault(tuple(ce), {})[rest] = c
    return groups


def tensor(factors, vars):
    """Product of univariate series in distinct variables, embedded into ``vars``."""
    out = None
    for f in factors:
        f = f.embed(vars)
        out = f if out is None else out * f
    return out


def eval_pole_cleared(poly, params, points, T, basis="xy"):
    """poly(x_j, y_j) * prod_j sigma(u_j)^k_j S(u_j)^m_j as a series, exact through T."""
    vars = tuple(pt.var for pt in points)
    if not params.is_symbolic():
        poly = specialize(poly, params.binding())
    groups = split_coordinates(poly, points)
    acc = TruncSeries.zero(vars, T)
    prefix = {}
    for ce in sorted(groups):
        # reuse products over leading points
        prod = None
        for j, (pt, (p, e)) in enumerate(zip(points, ce)):
            key = ce[: j + 1]
            hit = prefix.get(key)
            if hit is None:
                f = coordinate_factor(params, T, pt.var, pt.k, pt.m, p, e, basis).embed(vars)
                hit = f if prod is None else (prod * f).truncate(T)
                prefix[key] = hit
            prod = hit
        acc = acc + prod.scale(groups[ce])
    return acc.truncate(T)


# --- left-hand sides ----------------------------------------------------------

def sigma_of_sum(params, vars, T, signs=None):
    """sigma(sum of +-vars) as a series in ``vars``."""
    signs = signs or [1] * len(vars)
    inner = TruncSeries.zero(vars, T)
    for v, s in zip(vars, signs):
        inner = inner + TruncSeries.var(v, vars, T, s)
    return compose(_sigma_in(params, T, "s"), inner)


def sigma_of_scaled_sum(params, vars, coeffs, T):
    """sigma(sum c_j var_j) for scalar c_j (e.g. powers of zeta)."""
    inner = TruncSeries.zero(vars, T)
    for v, c in zip(vars, coeffs):
        inner = inner + TruncSeries.var(v, vars, T, c)
    return compose(_sigma_in(params, T, "s"), inner)


@lru_cache(maxsize=32)
def star_pair(params, T):
    """P(a, b) = sigma(a + b*) sigma(a + b**) over Q; raises if zeta survives."""
    vars = ("a", "b")
    a = TruncSeries.var("a", vars, T)
    out = None
    for which in (1, 2):
        bs = star_series(params, T, which, "b").embed(vars)
        f = compose(_sigma_in(params, T, "s"), a + bs)
        out = f if out is None else (out * f).truncate(T)
    if not out.is_rational():
        raise ConsistencyError("sigma(a + b*) sigma(a + b**) has a zeta component")
    return out.real_part()


def star_numerator(params, vars, T):
    """sigma(sum vars) * prod_{i<j} P(u_i, u_j)."""
    out = sigma_of_sum(params, vars, T)
    P = star_pair(params, T)
    for i in range(len(vars)):
        for j in range(i + 1, len(vars)):
            f = P.embed(vars, {"a": vars[i], "b": vars[j]})
            out = (out * f).truncate(T)
    return out


def zeta_pair(params, T, a, b, vars):
    """sigma(a + zeta b) sigma(a + zeta^2 b) using explicit zeta multiples."""
    out = None
    for z in (ZETA, ZETA2):
        f = sigma_of_scaled_sum(params, (a, b), (1, z), T).embed(vars)
        out = f if out is None else (out * f).truncate(T)
    return out


@lru_cache(maxsize=32)
def zeta_sigma_ratio(params, T, var="u"):
    """sigma(zeta v) sigma(zeta^2 v) / sigma(v)^2 via explicit zeta multiples."""
    s = sigma_series(params, T + 1).shift((-1,))
    a = s.substitute_scaled("u", ZETA).scale(ZETA)
    b = s.substitute_scaled("u", ZETA2).scale(ZETA2)
    out = (a * b * (s * s).inverse()).truncate(T)
    return out.embed((var,), {"u": var})
