"""Total-degree-truncated power series with polynomial coefficients.

A :class:`TruncSeries` in variables ``vars`` is exact through total degree
``bound``. Coefficients are raw ``{mu-key: scalar}`` dicts (see
:mod:`ellsigma.gradedpoly`); expansion exponents are packed 8 bits per variable.
Bounds are tracked pessimistically: ``a*b`` is exact through
``min(bound(a) + val(b), bound(b) + val(a))``.
"""

from gmpy2 import mpq

from .exactnum import CycNum, format_scalar, real_part
from .gradedpoly import (
    GradedPoly, padd_into, paddmul_into, pclean, pmul, pmul_into, pscale,
)

EBITS = 8
EMASK = (1 << EBITS) - 1

_degcache = {}


def _deg(key):
    d = _degcache.get(key)
    if d is None:
        d, k = 0, key
        while k:
            d += k & EMASK
            k >>= EBITS
        _degcache[key] = d
    return d


def _ekey(exps):
    k = 0
    for i, e in enumerate(exps):
        if e < 0 or e > EMASK:
            raise ValueError(f"expansion exponent {e} out of range")
        k |= e << (EBITS * i)
    return k


def _eexps(key, n):
    return tuple((key >> (EBITS * i)) & EMASK for i in range(n))


def _as_raw(c):
    """Coerce scalar or GradedPoly to a raw poly dict."""
    if isinstance(c, GradedPoly):
        return c.terms
    if isinstance(c, dict):
        return c
    if isinstance(c, int):
        c = mpq(c)
    return {0: c} if c else {}


def _buckets(coeffs, top):
    """Terms grouped by total degree: list indexed by degree, up to top."""
    out = [[] for _ in range(top + 1)]
    for k, p in coeffs.items():
        d = _deg(k)
        if d <= top:
            out[d].append((k, p))
    return out


def _mul_raw(A, B, T):
    la = _buckets(A, T)
    lb = _buckets(B, T)
    out = {}
    get = out.get
    for da in range(T + 1):
        ia = la[da]
        if not ia:
            continue
        for db in range(T - da + 1):
            ib = lb[db]
            if not ib:
                continue
            for ka, pa in ia:
                for kb, pb in ib:
                    k = ka + kb
                    acc = get(k)
                    if acc is None:
                        acc = out[k] = {}
                    pmul_into(acc, pa, pb)
    return _clean(out)


def _clean(coeffs):
    for k in list(coeffs):
        p = pclean(coeffs[k])
        if not p:
            del coeffs[k]
    return coeffs


class SeriesError(ValueError):
    pass


class TruncSeries:
    """Power series in ``vars`` with GradedPoly coefficients, exact through ``bound``."""

    __slots__ = ("vars", "bound", "coeffs")

    def __init__(self, vars, bound, coeffs=None):
        self.vars = tuple(vars)
        self.bound = bound
        if coeffs is None:
            coeffs = {}
        else:
            coeffs = {k: p for k, p in coeffs.items() if p and _deg(k) <= bound}
        self.coeffs = coeffs

    # construction -------------------------------------------------------
    @classmethod
    def zero(cls, vars, bound):
        return cls(vars, bound)

    @classmethod
    def const(cls, c, vars, bound):
        p = _as_raw(c)
        return cls(vars, bound, {0: dict(p)} if p else {})

    @classmethod
    def var(cls, name, vars, bound, coeff=1):
        i = tuple(vars).index(name)
        p = _as_raw(coeff)
        return cls(vars, bound, {1 << (EBITS * i): dict(p)} if p else {})

    @classmethod
    def from_coeffs(cls, vars, bound, items):
        """``items``: mapping exponent tuple (or int for one variable) -> coeff."""
        out = {}
        for e, c in items.items():
            if isinstance(e, int):
                e = (e,)
            p = _as_raw(c)
            if p:
                k = _ekey(e)
                acc = out.setdefault(k, {})
                padd_into(acc, p)
        return cls(vars, bound, _clean(out))

    @classmethod
    def from_list(cls, var, coeffs, bound=None):
        """Univariate series from a list of coefficients c_0, c_1, ..."""
        if bound is None:
            bound = len(coeffs) - 1
        return cls.from_coeffs((var,), bound, {i: c for i, c in enumerate(coeffs) if i <= bound})

    def _like(self, coeffs, bound=None):
        s = TruncSeries.__new__(TruncSeries)
        s.vars = self.vars
        s.bound = self.bound if bound is None else bound
        s.coeffs = coeffs
        return s

    # inspection ---------------------------------------------------------
    def __getitem__(self, exps):
        if isinstance(exps, int):
            exps = (exps,)
        if sum(exps) > self.bound:
            raise SeriesError(f"degree {sum(exps)} beyond bound {self.bound}")
        return GradedPoly(dict(self.coeffs.get(_ekey(exps), {})))

    def coeff_raw(self, exps):
        if isinstance(exps, int):
            exps = (exps,)
        return self.coeffs.get(_ekey(exps), {})

    def terms(self):
        """(exponent tuple, GradedPoly) in canonical order (degree, then lex)."""
        n = len(self.vars)
        pairs = [(_eexps(k, n), GradedPoly(p)) for k, p in self.coeffs.items()]
        pairs.sort(key=lambda t: (sum(t[0]), tuple(-e for e in t[0])))
        return pairs

    def valuation(self):
        if not self.coeffs:
            return self.bound + 1
        return min(_deg(k) for k in self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def nterms(self):
        return sum(len(p) for p in self.coeffs.values())

    def constant(self):
        return self.coeffs.get(0, {})

    def homogeneous(self, d):
        return {k: p for k, p in self.coeffs.items() if _deg(k) == d}

    def coefficient_list(self):
        """Univariate: [GradedPoly for degree 0..bound]."""
        self._need_univariate()
        return [GradedPoly(dict(self.coeffs.get(i, {}))) for i in range(self.bound + 1)]

    def _need_univariate(self):
        if len(self.vars) != 1:
            raise SeriesError("operation needs a univariate series")

    def _compat(self, other):
        if not isinstance(other, TruncSeries):
            raise TypeError("expected a TruncSeries")
        if other.vars != self.vars:
            raise SeriesError(f"incompatible variables {self.vars} vs {other.vars}")

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return self + TruncSeries.const(other, self.vars, self.bound)
        self._compat(other)
        T = min(self.bound, other.bound)
        out = {}
        for src in (self.coeffs, other.coeffs):
            for k, p in src.items():
                if _deg(k) <= T:
                    acc = out.get(k)
                    if acc is None:
                        out[k] = dict(p)
                    else:
                        padd_into(acc, p)
        return self._like(_clean(out), T)

    __radd__ = __add__

    def __neg__(self):
        return self._like({k: {m: -c for m, c in p.items()} for k, p in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, TruncSeries) else -_as_scalar_or_poly(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return self.scale(other)
        self._compat(other)
        va, vb = self.valuation(), other.valuation()
        T = min(self.bound + vb, other.bound + va)
        return self._like(_mul_raw(self.coeffs, other.coeffs, T), T)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        p = _as_raw(c)
        if not p:
            return self._like({})
        if len(p) == 1 and 0 in p:
            s = p[0]
            return self._like(_clean({k: pscale(q, s) for k, q in self.coeffs.items()}))
        return self._like(_clean({k: pmul(q, p) for k, q in self.coeffs.items()}))

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = TruncSeries.const(1, self.vars, self.bound)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def truncate(self, T):
        T = min(T, self.bound)
        return self._like({k: p for k, p in self.coeffs.items() if _deg(k) <= T}, T)

    def shift(self, exps, bound_delta=None):
        """Multiply by a monomial var^exps."""
        if isinstance(exps, int):
            exps = (exps,)
        if any(e < 0 for e in exps):
            return self._shift_down(exps)
        sk = _ekey(exps)
        d = sum(exps)
        return self._like({k + sk: p for k, p in self.coeffs.items()}, self.bound + d)

    def _shift_down(self, exps):
        n = len(self.vars)
        out = {}
        for k, p in self.coeffs.items():
            e = _eexps(k, n)
            ne = tuple(a + b for a, b in zip(e, exps))
            if min(ne) < 0:
                raise SeriesError("shift would create negative exponents")
            out[_ekey(ne)] = p
        return self._like(out, self.bound + sum(exps))

    def map_coeffs(self, fn):
        """Apply fn to every GradedPoly coefficient."""
        out = {}
        for k, p in self.coeffs.items():
            q = fn(GradedPoly(p))
            if q:
                out[k] = q.terms
        return self._like(out)

    def map_scalars(self, fn):
        out = {}
        for k, p in self.coeffs.items():
            q = {}
            for m, c in p.items():
                c = fn(c)
                if c:
                    q[m] = c
            if q:
                out[k] = q
        return self._like(out)

    def real_part(self):
        """Project Q(zeta) coefficients to Q; raises if a zeta part survives."""
        return self.map_scalars(real_part)

    def is_rational(self):
        return all(not isinstance(c, CycNum) or not c.ze
                   for p in self.coeffs.values() for c in p.values())

    def conjugate(self):
        return self.map_scalars(lambda c: c.conjugate() if isinstance(c, CycNum) else c)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        if self.vars != other.vars:
            return False
        T = min(self.bound, other.bound)
        return not (self.truncate(T) - other.truncate(T)).coeffs

    __hash__ = None

    # variable handling --------------------------------------------------
    def embed(self, new_vars, mapping=None):
        """Re-express in ``new_vars``; ``mapping`` renames old -> new (default identity)."""
        new_vars = tuple(new_vars)
        mapping = mapping or {}
        pos = [new_vars.index(mapping.get(v, v)) for v in self.vars]
        n = len(self.vars)
        if len(set(pos)) != n:
            raise SeriesError("embedding maps two variables to one")
        out = {}
        for k, p in self.coeffs.items():
            e = _eexps(k, n)
            nk = 0
            for i, ei in zip(pos, e):
                nk |= ei << (EBITS * i)
            out[nk] = p
        s = TruncSeries.__new__(TruncSeries)
        s.vars, s.bound, s.coeffs = new_vars, self.bound, out
        return s

    def substitute_scaled(self, var, c):
        """var -> c*var for a scalar c (e.g. zeta)."""
        i = self.vars.index(var)
        n = len(self.vars)
        out = {}
        powers = {}
        for k, p in self.coeffs.items():
            e = _eexps(k, n)[i]
            f = powers.get(e)
            if f is None:
                f = powers[e] = _spow(c, e)
            q = pscale(p, f)
            if q:
                out[k] = q
        return self._like(out)

    def negate_var(self, var):
        return self.substitute_scaled(var, mpq(-1))

    # calculus -----------------------------------------------------------
    def differentiate(self, var):
        i = self.vars.index(var)
        step = 1 << (EBITS * i)
        out = {}
        for k, p in self.coeffs.items():
            e = (k >> (EBITS * i)) & EMASK
            if e:
                out[k - step] = pscale(p, mpq(e))
        return self._like(out, self.bound - 1)

    def integrate(self, var):
        """Termwise antiderivative with zero constant; exact through bound + 1."""
        i = self.vars.index(var)
        step = 1 << (EBITS * i)
        out = {}
        for k, p in self.coeffs.items():
            e = (k >> (EBITS * i)) & EMASK
            out[k + step] = pscale(p, mpq(1, e + 1))
        return self._like(out, self.bound + 1)

    def _components(self):
        comps = [dict() for _ in range(self.bound + 1)]
        for k, p in self.coeffs.items():
            comps[_deg(k)][k] = p
        return comps

    def inverse(self):
        """1/s for s with a nonzero scalar constant term."""
        c0 = _unit_scalar(self.constant(), "inverse")
        inv0 = 1 / c0
        T = self.bound
        S = self._components()
        B = [dict() for _ in range(T + 1)]
        B[0] = {0: {0: inv0}}
        for n in range(1, T + 1):
            acc = {}
            for k in range(1, n + 1):
                if S[k] and B[n - k]:
                    _comp_mul_into(acc, S[k], B[n - k])
            B[n] = _clean({key: pscale(p, -inv0) for key, p in acc.items()})
        return self._like(_merge(B), T)

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return self * other.inverse()
        p = _as_raw(other)
        if not (len(p) == 1 and 0 in p):
            raise SeriesError("division by a non-scalar polynomial")
        return self.scale(1 / p[0])

    def exp(self):
        return exp_series(self)

    def log(self):
        return log_unit(self)

    # serialization ------------------------------------------------------
    def to_json(self):
        return {
            "vars": list(self.vars),
            "bound": self.bound,
            "coeffs": [{"exponents": list(e), "poly": p.to_json()} for e, p in self.terms()],
        }

    @classmethod
    def from_json(cls, data):
        items = {tuple(t["exponents"]): GradedPoly.from_json(t["poly"]) for t in data["coeffs"]}
        return cls.from_coeffs(tuple(data["vars"]), data["bound"], items)

    def to_text(self, max_terms=None):
        parts = []
        for e, p in self.terms():
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            body = p.to_text()
            if mono:
                parts.append(f"({body})*{mono}")
            else:
                parts.append(f"({body})")
            if max_terms and len(parts) >= max_terms:
                break
        head = " + ".join(parts) if parts else "0"
        return f"{head} + O(deg {self.bound + 1})"

    def __repr__(self):
        return f"TruncSeries(vars={self.vars}, bound={self.bound}, terms={len(self.coeffs)})"


def _as_scalar_or_poly(c):
    if isinstance(c, GradedPoly):
        return c
    return GradedPoly(_as_raw(c))


def _spow(c, e):
    out = mpq(1)
    for _ in range(e):
        out = out * c
    return out


def _unit_scalar(p, what):
    if not p or any(k != 0 for k in p):
        raise SeriesError(f"{what}: constant term must be a nonzero scalar")
    return p[0]


def _comp_mul_into(acc, A, B):
    for ka, pa in A.items():
        for kb, pb in B.items():
            k = ka + kb
            t = acc.get(k)
            if t is None:
                t = acc[k] = {}
            pmul_into(t, pa, pb)


def _merge(comps):
    out = {}
    for c in comps:
        for k, p in c.items():
            if p:
                out[k] = p
    return out


def mul(a, b):
    return a * b


def add(a, b):
    return a + b


def scale(c, a):
    return a.scale(c)


def exp_series(s):
    """exp(s) for s without constant term, via n E_n = sum_k k S_k E_{n-k}."""
    if s.constant():
        raise SeriesError("exp: series has a nonzero constant term")
    T = s.bound
    S = s._components()
    E = [dict() for _ in range(T + 1)]
    E[0] = {0: {0: mpq(1)}}
    for n in range(1, T + 1):
        acc = {}
        for k in range(1, n + 1):
            if S[k] and E[n - k]:
                tmp = {}
                _comp_mul_into(tmp, S[k], E[n - k])
                for key, p in tmp.items():
                    t = acc.get(key)
                    if t is None:
                        t = acc[key] = {}
                    paddmul_into(t, p, mpq(k))
        E[n] = _clean({key: pscale(p, mpq(1, n)) for key, p in acc.items()})
    return s._like(_merge(E), T)


def log_unit(s):
    """log(s) for s with constant term 1, via n L_n = n S_n - sum_{k<n} k L_k S_{n-k}."""
    c = s.constant()
    if c != {0: 1}:
        raise SeriesError("log: constant term must be 1")
    T = s.bound
    S = s._components()
    L = [dict() for _ in range(T + 1)]
    for n in range(1, T + 1):
        acc = {}
        for key, p in S[n].items():
            acc[key] = pscale(p, mpq(n))
        for k in range(1, n):
            if L[k] and S[n - k]:
                tmp = {}
                _comp_mul_into(tmp, L[k], S[n - k])
                for key, p in tmp.items():
                    t = acc.get(key)
                    if t is None:
                        t = acc[key] = {}
                    paddmul_into(t, p, mpq(-k))
        L[n] = _clean({key: pscale(p, mpq(1, n)) for key, p in acc.items()})
    return s._like(_merge(L), T)


def integrate(s, var):
    return s.integrate(var)


def differentiate(s, var):
    return s.differentiate(var)


def compose(outer, inner):
    """outer(inner) for univariate ``outer`` and ``inner`` without constant term."""
    outer._need_univariate()
    if inner.constant():
        raise SeriesError("compose: inner series has a nonzero constant term")
    vg = inner.valuation()
    if vg > inner.bound:
        # inner is zero through its bound
        return TruncSeries.const(outer.constant(), inner.vars, inner.bound)
    T = min((outer.bound + 1) * vg - 1, inner.bound)
    g = inner.truncate(T)
    acc = {}
    c0 = outer.coeffs.get(0)
    if c0:
        acc[0] = dict(c0)
    top = max((k for k in outer.coeffs), default=0)
    power = None
    for k in range(1, min(top, T // vg) + 1):
        power = g if power is None else power * g
        power = power.truncate(T)
        ck = outer.coeffs.get(k)
        if not ck:
            continue
        if len(ck) == 1 and 0 in ck:
            s = ck[0]
            for key, p in power.coeffs.items():
                t = acc.get(key)
                if t is None:
                    t = acc[key] = {}
                paddmul_into(t, p, s)
        else:
            for key, p in power.coeffs.items():
                t = acc.get(key)
                if t is None:
                    t = acc[key] = {}
                pmul_into(t, p, ck)
    return inner._like(_clean(acc), T)


def revert(s, out_var=None):
    """Compositional inverse of a univariate series s = a1*t + ... (a1 a nonzero scalar).

    Lagrange inversion: [u^k] s^{-1} = (1/k) [t^{k-1}] (t/s(t))^k.
    """
    s._need_univariate()
    if s.constant():
        raise SeriesError("revert: nonzero constant term")
    a1 = s.coeffs.get(1)
    if not a1 or any(k != 0 for k in a1):
        raise SeriesError("revert: linear coefficient is not an invertible scalar")
    B = s.bound
    out_var = out_var or s.vars[0]
    q = s.shift((-1,))  # s/t, exact through B - 1
    phi = q.inverse()
    coeffs = {}
    power = None
    for k in range(1, B + 1):
        power = phi if power is None else (power * phi).truncate(B - 1)
        c = power.coeffs.get(k - 1)
        if c:
            coeffs[k] = pscale(c, mpq(1, k))
    return TruncSeries((out_var,), B, coeffs)


class LaurentSeries:
    """var^(-pole) * unit, with unit a univariate TruncSeries.

    ``pole`` may be negative (a zero of that order). ``unit`` has a nonzero
    constant term unless the value is zero. Exact through var^(unit.bound - pole).
    """

    __slots__ = ("pole", "unit")

    def __init__(self, pole, unit):
        unit._need_univariate()
        self.pole = pole
        self.unit = unit

    @property
    def var(self):
        return self.unit.vars[0]

    @property
    def abs_bound(self):
        return self.unit.bound - self.pole

    def is_zero(self):
        return not self.unit.coeffs

    @classmethod
    def from_series(cls, s, pole_shift=0):
        """Series s times var^(-pole_shift), normalized to a minimal pole."""
        s._need_univariate()
        if not s.coeffs:
            return cls(pole_shift, s)
        v = s.valuation()
        return cls(pole_shift - v, s.shift((-v,)))

    def normalized(self):
        if not self.unit.coeffs:
            return self
        v = self.unit.valuation()
        if v == 0:
            return self
        return LaurentSeries(self.pole - v, self.unit.shift((-v,)))

    def __mul__(self, other):
        if isinstance(other, LaurentSeries):
            if other.var != self.var:
                raise SeriesError("Laurent series in different variables")
            return LaurentSeries(self.pole + other.pole, self.unit * other.unit)
        return LaurentSeries(self.pole, self.unit.scale(other))

    __rmul__ = __mul__

    def _aligned(self, other):
        if not isinstance(other, LaurentSeries):
            other = LaurentSeries(0, TruncSeries.const(other, self.unit.vars, self.abs_bound))
        if other.var != self.var:
            raise SeriesError("Laurent series in different variables")
        P = max(self.pole, other.pole)
        a = self.unit.shift((P - self.pole,))
        b = other.unit.shift((P - other.pole,))
        return P, a, b

    def __add__(self, other):
        P, a, b = self._aligned(other)
        return LaurentSeries(P, a + b).normalized()

    __radd__ = __add__

    def __sub__(self, other):
        P, a, b = self._aligned(other)
        return LaurentSeries(P, a - b).normalized()

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return LaurentSeries(self.pole, -self.unit)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return LaurentSeries(self.pole * n, self.unit ** n)

    def inverse(self):
        return LaurentSeries(-self.pole, self.unit.inverse())

    def __truediv__(self, other):
        if isinstance(other, LaurentSeries):
            return self * other.inverse()
        return self * (1 / other)

    def differentiate(self):
        # d/du (u^-k U) = u^(-k-1) (u U' - k U)
        v = self.var
        U = self.unit
        dU = U.differentiate(v).shift((1,))
        return LaurentSeries(self.pole + 1, dU - U.scale(self.pole)).normalized()

    def negate_var(self):
        """f(-u)."""
        u = self.unit.negate_var(self.var)
        if self.pole % 2:
            u = -u
        return LaurentSeries(self.pole, u)

    def coefficient(self, n):
        """GradedPoly coefficient of var^n."""
        if n > self.abs_bound:
            raise SeriesError(f"u^{n} beyond exactness bound {self.abs_bound}")
        i = n + self.pole
        if i < 0:
            return GradedPoly()
        return GradedPoly(dict(self.unit.coeffs.get(i, {})))

    def to_series(self):
        """As a power series; requires pole <= 0."""
        if self.pole > 0 and self.unit.coeffs:
            raise SeriesError(f"pole of order {self.pole} remains")
        if not self.unit.coeffs:
            return TruncSeries(self.unit.vars, self.abs_bound)
        return self.unit.shift((-self.pole,))

    def regular_part(self):
        """Nonnegative-power part as a TruncSeries."""
        n = self.pole
        out = {}
        for k, p in self.unit.coeffs.items():
            if k >= n:
                out[k - n] = p
        return TruncSeries(self.unit.vars, self.abs_bound, out)

    def truncate(self, abs_T):
        return LaurentSeries(self.pole, self.unit.truncate(abs_T + self.pole))

    def map_scalars(self, fn):
        return LaurentSeries(self.pole, self.unit.map_scalars(fn))

    def real_part(self):
        return LaurentSeries(self.pole, self.unit.real_part())

    def terms(self):
        """(power of var, GradedPoly) pairs in increasing order."""
        return [(e[0] - self.pole, p) for e, p in self.unit.terms()]

    def equals(self, other):
        d = self - other
        return d.is_zero()

    def to_text(self):
        v = self.var
        parts = []
        for n, p in self.terms():
            mono = "" if n == 0 else (v if n == 1 else f"{v}^{n}" if n > 0 else f"{v}^({n})")
            parts.append(f"({p.to_text()})*{mono}" if mono else f"({p.to_text()})")
        head = " + ".join(parts) if parts else "0"
        return f"{head} + O({v}^{self.abs_bound + 1})"

    def to_json(self):
        return {"var": self.var, "pole": self.pole, "unit": self.unit.to_json()}

    def __repr__(self):
        return f"LaurentSeries({self.var}, pole={self.pole}, abs_bound={self.abs_bound})"


def laurent_from(s, pole_shift=0):
    return LaurentSeries.from_series(s, pole_shift)


def laurent_mul(a, b):
    return a * b


def laurent_compose(outer, inner):
    """outer(inner) for Laurent outer = t^-k U(t) and inner = u*h(u), h(0) a unit scalar."""
    if inner.constant():
        raise SeriesError("compose: inner has a constant term")
    h = inner.shift((-1,))
    U = compose(outer.unit, inner)
    hk = h.inverse() ** outer.pole if outer.pole >= 0 else h ** (-outer.pole)
    return LaurentSeries(outer.pole, U * hk).normalized()


def coeff_text(c):
    return format_scalar(c)
