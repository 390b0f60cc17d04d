"""Re-derive the addition-formula right-hand side by undetermined coefficients.

The pole-cleared left-hand side sigma(sum u_j) prod_{i<j} P(u_i, u_j) is matched
against sum_M C_M(mu) M sigma(u_j)^(2n-1) S(u_j)^(j-1) over coordinate
monomials M = prod x_j^p_j y_j^e_j. Unknowns are the rational coefficients of
the mu-monomials in each C_M.
"""

import time
from dataclasses import dataclass, field
from math import comb

from gmpy2 import mpq

from ..curvegen import CurveParams
from ..gradedpoly import MU_NAMES, TABLE, GradedPoly, SymbolTable, specialize, weight_of
from ..linsolve import RatMatrix, solve_unique
from ..truncseries import _deg
from .blocks import coordinate_factor, star_numerator
from .golden import xy_to_wp

# A fourth point for n = 4; same packing as TABLE with two more symbols.
TABLE4 = SymbolTable(TABLE.names + ("x_z", "y_z"), TABLE.weights + (-2, -3))
POINT_NAMES = ("u", "v", "w", "z")

# Overall sign of the left-hand side: the two-point formula carries a minus.
LHS_SIGN = {2: -1, 3: 1, 4: 1}


class ResourceLimit(RuntimeError):
    def __init__(self, report):
        super().__init__(report.get("status", "resource limit"))
        self.report = report


@dataclass
class DerivedRHS:
    n: int
    poly: GradedPoly
    weight: int
    bound: int
    params: CurveParams = None
    stats: dict = field(default_factory=dict)

    def strata(self):
        """mu-weight strata: {i: part of poly whose mu-part has weight -i}."""
        tbl = self.poly.table
        mu_mask = sum(0xFF << (8 * tbl.index[n]) for n in MU_NAMES)
        out = {}
        for k, c in self.poly.terms.items():
            i = -tbl.weight(k & mu_mask)
            out.setdefault(i, {})[k] = c
        return {i: GradedPoly(t, tbl) for i, t in sorted(out.items())}

    def wp_form(self):
        if self.poly.table is not TABLE:
            raise ValueError("wp form is available for n <= 3 only")
        p = xy_to_wp(self.poly)
        if self.params is not None and not self.params.is_symbolic():
            p = specialize(p, self.params.binding())
        return p

    def to_dict(self):
        return {"n": self.n, "weight": self.weight, "bound": self.bound,
                "poly": self.poly.to_text(), "stats": self.stats}


def coordinate_monomials(n, k=None, W=None):
    """Tuples ((p_1, e_1), ..., (p_n, e_n)) with 2p_j + 3e_j <= k and total <= W."""
    k = 2 * n - 1 if k is None else k
    W = n * n - 1 if W is None else W
    single = [(p, e) for e in (0, 1) for p in range(k // 2 + 1) if 2 * p + 3 * e <= k]
    out = [()]
    for _ in range(n):
        out = [m + (pe,) for m in out for pe in single]
    return [m for m in out if sum(2 * p + 3 * e for p, e in m) <= W]


def _monomials_of_weight(symbols, weights, w):
    """Exponent dicts over ``symbols`` (positive weights) summing to w."""
    if not symbols:
        return [{}] if w == 0 else []
    out = []
    s, ws = symbols[0], weights[0]
    for e in range(w // ws + 1):
        for rest in _monomials_of_weight(symbols[1:], weights[1:], w - e * ws):
            d = dict(rest)
            if e:
                d[s] = e
            out.append(d)
    return out


def _free_symbols(params):
    used = set()
    for p in params.as_tuple():
        used.update(p.symbols())
    names = [n for n in TABLE.names if n in used]
    return names, [-TABLE.weights[TABLE.index[n]] for n in names]


def _graded(params):
    for j, p in zip((1, 2, 3, 4, 6), params.as_tuple()):
        if p and weight_of(p) != -j:
            return False
    return True


def coefficient_monomials(params, w):
    """mu-monomial keys allowed in front of a coordinate monomial needing weight w."""
    names, weights = _free_symbols(params)
    if _graded(params):
        ws = [w]
    else:
        ws = range(w + 1)
    keys = []
    for target in ws:
        for d in _monomials_of_weight(names, weights, target):
            keys.append(TABLE.key(d))
    return sorted(set(keys))


def unknown_count(n, params=None):
    params = CurveParams.symbolic() if params is None else params
    W = n * n - 1
    return sum(len(coefficient_monomials(params, W - sum(2 * p + 3 * e for p, e in M)))
               for M in coordinate_monomials(n))


def required_order(n, params=None):
    """Smallest T at which every unknown's leading term is inside the window."""
    params = CurveParams.symbolic() if params is None else params
    k, W = 2 * n - 1, n * n - 1
    top = 0
    for M in coordinate_monomials(n):
        c = sum(2 * p + 3 * e for p, e in M)
        if coefficient_monomials(params, W - c):
            top = max(top, n * k - c)
    return top


def _basis_series(params, M, T, vars, cache):
    k = 2 * len(vars) - 1
    prod = None
    for j, (var, pe) in enumerate(zip(vars, M)):
        key = M[: j + 1]
        hit = cache.get(key)
        if hit is None:
            f = coordinate_factor(params, T, var, k, j, pe[0], pe[1]).embed(vars)
            hit = f if prod is None else (prod * f).truncate(T)
            cache[key] = hit
        prod = hit
    return prod


def _monomial_poly(M, table):
    d = {}
    for var, (p, e) in zip(POINT_NAMES, M):
        if p:
            d[f"x_{var}"] = p
        if e:
            d[f"y_{var}"] = e
    return GradedPoly({table.key(d): mpq(1)}, table)


def derive_rhs(n, T=None, params=None, max_terms=None):
    """Solve for the right-hand side of the n-point formula (n = 2, 3)."""
    if n not in (2, 3):
        raise ValueError("derive_rhs supports n = 2 or 3; use derive_rhs_experimental for n = 4")
    return _derive(n, T, params, max_terms)


def derive_rhs_experimental(n=4, T=None, params=None, opt_in=False, max_terms=2_000_000):
    """n = 4 attempt; returns a DerivedRHS or a progress report dict on resource limits."""
    if not opt_in:
        raise PermissionError("n = 4 derivation requires the explicit opt-in flag")
    if n != 4:
        raise ValueError("the experimental path is for n = 4")
    try:
        return _derive(n, T, params, max_terms)
    except ResourceLimit as exc:
        return exc.report


def _estimate_terms(n, T, params):
    # one basis series per unknown, each with up to C(T+n, n) expansion monomials
    return unknown_count(n, params) * comb(T + n, n)


def _derive(n, T, params, max_terms):
    params = CurveParams.symbolic() if params is None else params
    t0 = time.monotonic()
    W, k = n * n - 1, 2 * n - 1
    vars = POINT_NAMES[:n]
    table = TABLE if n <= 3 else TABLE4
    cols = []
    for M in coordinate_monomials(n):
        c = sum(2 * p + 3 * e for p, e in M)
        for m in coefficient_monomials(params, W - c):
            cols.append((n * k - c, M, m))
    cols.sort(key=lambda t: (t[0], t[1], t[2]))
    need = required_order(n, params)
    T = need if T is None else T
    report = {"n": n, "unknowns": len(cols), "coordinate_monomials": len(coordinate_monomials(n)),
              "required_order": need, "order": T}
    if T < need:
        report["status"] = "order below the leading degree of some unknown"
        raise ResourceLimit(report)
    est = _estimate_terms(n, T, params)
    report["estimated_terms"] = est
    if max_terms is not None and est > max_terms:
        report["status"] = "resource limit: estimated series size exceeds max_terms"
        raise ResourceLimit(report)

    lhs = star_numerator(params, vars, T).scale(LHS_SIGN[n])
    rows, rhs, index = [], [], {}

    def row_of(key):
        r = index.get(key)
        if r is None:
            r = index[key] = len(rows)
            rows.append({})
            rhs.append(mpq(0))
        return r

    cache = {}
    for j, (_, M, m) in enumerate(cols):
        B = _basis_series(params, M, T, vars, cache)
        for ek, poly in B.coeffs.items():
            for mk, c in poly.items():
                r = rows[row_of((ek, mk + m))]
                r[j] = r.get(j, 0) + c
    for ek, poly in lhs.coeffs.items():
        for mk, c in poly.items():
            rhs[row_of((ek, mk))] += c
    report["equations"] = len(rows)
    # lowest total degree first so each unknown's leading row comes early
    order = sorted(range(len(rows)), key=lambda i: _row_sort_key(index_inv(index), i))
    A = RatMatrix.from_rows([rows[i] for i in order], len(cols))
    b = [rhs[i] for i in order]
    sol = solve_unique(A, b)
    acc = {}
    for (_, M, m), v in zip(cols, sol.values):
        if v:
            key = next(iter(_monomial_poly(M, table).terms)) + m
            acc[key] = acc.get(key, 0) + v
    poly = GradedPoly({kk: v for kk, v in acc.items() if v}, table)
    report.update(rank=sol.rank, seconds=round(time.monotonic() - t0, 3))
    report.pop("status", None)
    return DerivedRHS(n, poly, -W, T, params, report)


def index_inv(index):
    return {r: key for key, r in index.items()}


def _row_sort_key(inv, i):
    ek, mk = inv[i]
    return (_deg(ek), ek, mk)
