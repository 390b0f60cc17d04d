"""Expansions attached to y^2 + (mu1 x + mu3) y = x^3 + mu2 x^2 + mu4 x + mu6.

Local parameter at infinity: y = t^-3, branch x = t^-2 + ..., hence u = -t + ...
All series are cached per (params, order); they are immutable.
"""

import random
from dataclasses import dataclass
from functools import lru_cache

from gmpy2 import mpq

from .exactnum import ZETA, ZETA2, rational
from .gradedpoly import GradedPoly, MU_NAMES, padd_into, pclean, pmul, pscale, psub
from .truncseries import (
    LaurentSeries, TruncSeries, compose, exp_series, laurent_compose, log_unit, revert,
)


class ConsistencyError(AssertionError):
    """An internal identity failed; this indicates a bug, not bad input."""


@dataclass(frozen=True)
class CurveParams:
    """mu1, mu2, mu3, mu4, mu6, each a GradedPoly (a symbol, a constant, or in g2/g3)."""

    mu1: GradedPoly
    mu2: GradedPoly
    mu3: GradedPoly
    mu4: GradedPoly
    mu6: GradedPoly

    @classmethod
    def symbolic(cls):
        return cls(*(GradedPoly.var(n) for n in MU_NAMES))

    @classmethod
    def from_binding(cls, binding=None):
        """binding: name -> rational literal / int / GradedPoly / "symbolic"."""
        binding = dict(binding or {})
        unknown = set(binding) - set(MU_NAMES)
        if unknown:
            raise ValueError(f"unknown curve parameters: {sorted(unknown)}")
        vals = []
        for n in MU_NAMES:
            v = binding.get(n, "symbolic")
            if isinstance(v, GradedPoly):
                vals.append(v)
            elif v == "symbolic" or v is None:
                vals.append(GradedPoly.var(n))
            else:
                vals.append(GradedPoly.const(rational(v)))
        return cls(*vals)

    @classmethod
    def zero(cls):
        return cls.from_binding({n: 0 for n in MU_NAMES})

    @classmethod
    def classical(cls, g2=None, g3=None):
        """mu1 = mu2 = mu3 = 0, mu4 = -g2/4, mu6 = -g3/4 (g2, g3 symbolic by default)."""
        G2 = GradedPoly.var("g2") if g2 is None else GradedPoly.const(rational(g2))
        G3 = GradedPoly.var("g3") if g3 is None else GradedPoly.const(rational(g3))
        z = GradedPoly.const(0)
        return cls(z, z, z, G2 * mpq(-1, 4), G3 * mpq(-1, 4))

    @classmethod
    def equianharmonic(cls, g3=None):
        """mu1 = mu2 = mu3 = mu4 = 0, mu6 = -g3/4."""
        return cls.classical(g2=0, g3=g3)

    @classmethod
    def random_rational(cls, seed, spread=5, keep=None):
        """Seeded small random rationals; names in ``keep`` (e.g. zeros) are left as given."""
        rng = random.Random(seed)
        keep = keep or {}
        vals = []
        for n in MU_NAMES:
            if n in keep:
                vals.append(GradedPoly.const(rational(keep[n])))
                continue
            num = rng.randint(-spread, spread)
            den = rng.randint(1, spread)
            vals.append(GradedPoly.const(mpq(num, den)))
        return cls(*vals)

    def as_tuple(self):
        return (self.mu1, self.mu2, self.mu3, self.mu4, self.mu6)

    def binding(self):
        """name -> GradedPoly, for specialize()."""
        return dict(zip(MU_NAMES, self.as_tuple()))

    def is_symbolic(self):
        return all(p == GradedPoly.var(n) for n, p in self.binding().items())

    def describe(self):
        return {n: ("symbolic" if p == GradedPoly.var(n) else p.to_text())
                for n, p in self.binding().items()}


def _raw(p):
    return p.terms


# --- x(t), u(t), t(u) --------------------------------------------------------

@lru_cache(maxsize=64)
def _x_unit(params, K):
    """Coefficients a_0..a_K of X(t) = t^2 x(t)."""
    m1, m2, m3, m4, m6 = (_raw(p) for p in params.as_tuple())
    third = mpq(1, 3)
    a = [{0: mpq(1)}]
    sq = [{0: mpq(1)}]
    for k in range(1, K + 1):
        rest2 = {}
        for i in range(1, k):
            padd_into(rest2, pmul(a[i], a[k - i]))
        rhs = {}
        padd_into(rhs, pmul(m1, a[k - 1]))
        if k >= 2:
            rhs = psub(rhs, pmul(m2, sq[k - 2]))
        if k == 3:
            padd_into(rhs, m3)
        if k >= 4:
            rhs = psub(rhs, pmul(m4, a[k - 4]))
        if k == 6:
            rhs = psub(rhs, m6)
        lower = dict(rest2)
        for m in range(1, k):
            padd_into(lower, pmul(sq[m], a[k - m]))
        ak = pclean(pscale(psub(pclean(rhs), pclean(lower)), third))
        a.append(ak)
        sq.append(pclean(padd_into_copy(rest2, pscale(ak, mpq(2)))))
    return tuple(a)


def padd_into_copy(a, b):
    out = dict(a)
    padd_into(out, b)
    return out


def x_from_t(params, T):
    """x(t) as a Laurent series with pole 2, exact through t^T."""
    if T < 1:
        raise ValueError("order must be at least 1")
    a = _x_unit(params, T + 2)
    unit = TruncSeries.from_list("t", list(a), T + 2)
    return LaurentSeries(2, unit)


@lru_cache(maxsize=64)
def u_from_t(params, T):
    """u(t) = integral of dx / (2y + mu1 x + mu3) from infinity, exact through t^T."""
    X = x_from_t(params, max(T - 2, 1)).unit.truncate(T)
    t = TruncSeries.var("t", ("t",), T)
    num = X.differentiate("t").shift((1,)) - X.scale(2)          # t X' - 2X
    den = (TruncSeries.const(2, ("t",), T) + (t * X).scale(params.mu1)
           + (t ** 3).scale(params.mu3))
    du = (num * den.inverse()).truncate(T - 1)
    return du.integrate("t").truncate(T)


@lru_cache(maxsize=64)
def t_from_u(params, T):
    return revert(u_from_t(params, T), "u")


@lru_cache(maxsize=64)
def x_from_u(params, T):
    """x(u) with pole 2, exact through u^T."""
    B = T + 3
    tu = t_from_u(params, B)
    X = x_from_t(params, B).unit
    tau = tu.shift((-1,))                                        # t(u)/u
    XU = compose(X.embed(("u",), {"t": "u"}), tu)
    unit = (XU * (tau ** 2).inverse()).truncate(T + 2)
    return LaurentSeries(2, unit)


@lru_cache(maxsize=64)
def y_from_u(params, T):
    """y(u) = t(u)^-3, pole 3, exact through u^T."""
    tu = t_from_u(params, T + 4)
    tau = tu.shift((-1,))
    return LaurentSeries(3, (tau ** 3).inverse().truncate(T + 3))


# --- sigma, wp, wp' ------------------------------------------------------------

@lru_cache(maxsize=64)
def sigma_series(params, T):
    """The odd series sigma(u) = u + ... with (log sigma)'' = -x(u), exact through u^T."""
    x = x_from_u(params, max(T - 3, 1))
    U = x.unit
    if U.coeff_raw(1):
        raise ConsistencyError("x(u) has a u^-1 term")
    R = (U - 1).shift((-2,))                                     # regular part of x - u^-2
    I2 = R.integrate("u").integrate("u")
    sig = exp_series(-I2).shift((1,))
    return sig.truncate(T)


@lru_cache(maxsize=64)
def wp_series(params, T, check=True):
    """wp = -(log sigma)'' as a Laurent series, exact through u^T; checked against x(u)."""
    sig = sigma_series(params, T + 3)
    L = log_unit(sig.shift((-1,)))                               # log(sigma/u)
    L2 = L.differentiate("u").differentiate("u")
    unit = (TruncSeries.const(1, ("u",), T + 2) - L2.shift((2,))).truncate(T + 2)
    wp = LaurentSeries(2, unit)
    if check:
        x = x_from_u(params, T)
        if not (wp - x).is_zero():
            raise ConsistencyError("wp from sigma differs from x(u)")
        const = wp.coefficient(0)
        expect = -(params.mu1 ** 2 + params.mu2 * 4) * mpq(1, 12)
        if const != expect:
            raise ConsistencyError("constant term of wp is not -(mu1^2 + 4 mu2)/12")
    return wp


@lru_cache(maxsize=64)
def wp_prime_series(params, T, check=True):
    """wp' exact through u^T; checked against 2y + mu1 x + mu3."""
    wpp = wp_series(params, T + 1, check).differentiate().truncate(T)
    if check:
        alt = wp_prime_from_xy(params, T)
        if not (wpp - alt).is_zero():
            raise ConsistencyError("wp' differs from 2y + mu1 x + mu3")
    return wpp


def wp_prime_from_xy(params, T):
    x = x_from_u(params, T)
    y = y_from_u(params, T)
    return y * 2 + x * params.mu1 + params.mu3


@lru_cache(maxsize=64)
def wp_derivative(params, k, T):
    """k-th derivative of wp, exact through u^T."""
    f = wp_series(params, T + k, check=False)
    for _ in range(k):
        f = f.differentiate()
    return f.truncate(T)


# --- conjugate points -----------------------------------------------------------

@lru_cache(maxsize=64)
def star_series(params, T, which=1, var="v"):
    """v* (which=1) or v** (which=2) as a series in v over Q(zeta)[mu], exact through v^T."""
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    z = ZETA if which == 1 else ZETA2
    ut = u_from_t(params, T).embed((var,), {"t": var})
    tu = t_from_u(params, T).embed((var,), {"u": var}).scale(z)
    return compose(ut, tu)


@lru_cache(maxsize=64)
def x_star(params, T, which=1, var="u"):
    """x(u*) (or x(u**)) as a Laurent series in u, exact through u^T."""
    z = ZETA if which == 1 else ZETA2
    B = T + 3
    xt = x_from_t(params, B)
    xt = LaurentSeries(xt.pole, xt.unit.embed((var,), {"t": var}))
    tu = t_from_u(params, B).embed((var,), {"u": var}).scale(z)
    return laurent_compose(xt, tu).truncate(T)


def sigma_of(params, inner, T=None):
    """sigma(inner) for a series ``inner`` without constant term."""
    T = inner.bound if T is None else min(T, inner.bound)
    sig = sigma_series(params, T).embed(("s",), {"u": "s"})
    return compose(sig, inner.truncate(T))


@lru_cache(maxsize=64)
def sigma_star_product(params, T, var="v"):
    """S(v) = sigma(v*) sigma(v**) / sigma(v)^2, a unit series that must be zeta-free."""
    B = T + 1
    A = sigma_of(params, star_series(params, B, 1, var), B).shift((-1,))
    Bs = sigma_of(params, star_series(params, B, 2, var), B).shift((-1,))
    C = sigma_series(params, B).embed((var,), {"u": var}).shift((-1,))
    S = (A * Bs * (C ** 2).inverse()).truncate(T)
    if not S.is_rational():
        raise ConsistencyError("sigma(v*) sigma(v**) / sigma(v)^2 has a zeta component")
    return S.real_part()


@dataclass
class ExpansionSet:
    x_of_t: LaurentSeries
    u_of_t: TruncSeries
    t_of_u: TruncSeries
    x_of_u: LaurentSeries
    y_of_u: LaurentSeries
    wp: LaurentSeries
    wp_prime: LaurentSeries
    sigma: TruncSeries
    star: TruncSeries
    starstar: TruncSeries
    bound: int


def expansion_set(params, T):
    return ExpansionSet(
        x_of_t=x_from_t(params, T),
        u_of_t=u_from_t(params, T),
        t_of_u=t_from_u(params, T),
        x_of_u=x_from_u(params, T),
        y_of_u=y_from_u(params, T),
        wp=wp_series(params, T),
        wp_prime=wp_prime_series(params, T),
        sigma=sigma_series(params, T),
        star=star_series(params, T, 1),
        starstar=star_series(params, T, 2),
        bound=T,
    )


def curve_polynomial(params, x, y):
    """f(x, y) for Laurent series (or polynomials) x, y."""
    return y * y + (x * params.mu1 + params.mu3) * y - (
        x * x * x + x * x * params.mu2 + x * params.mu4 + params.mu6)


def series_weight_violations(series, weight, table=None):
    """Terms of a (Truncated or Laurent) series breaking weight homogeneity.

    The coefficient of u^d in an object of weight W must have weight W - d.
    """
    bad = []
    if isinstance(series, LaurentSeries):
        for n, p in series.terms():
            for k in p.terms:
                if p.table.weight(k) != weight - n:
                    bad.append((n, k))
        return bad
    from .truncseries import _deg
    for k, p in series.coeffs.items():
        d = _deg(k)
        for m in p:
            if GradedPoly().table.weight(m) != weight - d:
                bad.append((k, m))
    return bad
