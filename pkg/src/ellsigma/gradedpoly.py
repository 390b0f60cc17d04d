"""Sparse weight-graded polynomials in the curve parameters and point coordinates.

Monomials are packed into a single int, 8 bits per symbol, so multiplying two
monomials is one integer addition. Coefficients are ``mpq`` or ``CycNum``.
The raw kernels (``padd``, ``pmul_into`` ...) work on plain ``{key: coeff}``
dicts and are shared with :mod:`ellsigma.truncseries`.
"""

import re
from itertools import product

from gmpy2 import mpq

from .exactnum import CycNum, ZETA, format_scalar, parse_rational

BITS = 8
MASK = (1 << BITS) - 1
INHOMOGENEOUS = "inhomogeneous"


class SymbolTable:
    def __init__(self, names, weights):
        if len(names) != len(weights):
            raise ValueError("names and weights differ in length")
        self.names = tuple(names)
        self.weights = tuple(weights)
        self.index = {n: i for i, n in enumerate(self.names)}
        self.nsym = len(self.names)
        self._wcache = {}

    def key(self, exps):
        """Pack an exponent vector (or {name: exp} mapping) into an int."""
        if isinstance(exps, dict):
            vec = [0] * self.nsym
            for name, e in exps.items():
                vec[self.index[name]] = e
            exps = vec
        if len(exps) > self.nsym:
            raise ValueError("exponent vector longer than symbol table")
        k = 0
        for i, e in enumerate(exps):
            if e < 0 or e > MASK:
                raise ValueError(f"exponent {e} out of range")
            k |= e << (BITS * i)
        return k

    def exps(self, key):
        return tuple((key >> (BITS * i)) & MASK for i in range(self.nsym))

    def var_key(self, name):
        return 1 << (BITS * self.index[name])

    def weight(self, key):
        w = self._wcache.get(key)
        if w is None:
            w = 0
            k, i = key, 0
            while k:
                w += (k & MASK) * self.weights[i]
                k >>= BITS
                i += 1
            self._wcache[key] = w
        return w

    def degree(self, key):
        d = 0
        while key:
            d += key & MASK
            key >>= BITS
        return d


MU_NAMES = ("mu1", "mu2", "mu3", "mu4", "mu6")
COORD_NAMES = ("x_u", "y_u", "x_v", "y_v", "x_w", "y_w")

# wt(x) = -2, wt(y) = -3 (the values under which the curve equation is homogeneous)
TABLE = SymbolTable(
    MU_NAMES + COORD_NAMES + ("g2", "g3"),
    (-1, -2, -3, -4, -6, -2, -3, -2, -3, -2, -3, -4, -6),
)

_ALIASES = {"μ1": "mu1", "μ2": "mu2", "μ3": "mu3", "μ4": "mu4", "μ6": "mu6",
            "g₂": "g2", "g₃": "g3"}


# --- raw kernels on {key: coeff} dicts ------------------------------------

def padd(a, b):
    out = dict(a)
    for k, c in b.items():
        v = out.get(k)
        if v is None:
            out[k] = c
        else:
            v = v + c
            if v:
                out[k] = v
            else:
                del out[k]
    return out


def psub(a, b):
    out = dict(a)
    for k, c in b.items():
        v = out.get(k)
        if v is None:
            out[k] = -c
        else:
            v = v - c
            if v:
                out[k] = v
            else:
                del out[k]
    return out


def pscale(a, c):
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def pshift(a, key):
    """Multiply by a monomial."""
    return {k + key: v for k, v in a.items()}


def pmul_into(acc, a, b):
    """acc += a*b; zero entries may be left behind, call ``pclean``."""
    get = acc.get
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            k = k1 + k2
            v = get(k)
            acc[k] = c1 * c2 if v is None else v + c1 * c2


def paddmul_into(acc, a, c):
    """acc += c*a for a scalar c."""
    get = acc.get
    for k, v0 in a.items():
        v = get(k)
        acc[k] = v0 * c if v is None else v + v0 * c


def padd_into(acc, a):
    get = acc.get
    for k, c in a.items():
        v = get(k)
        acc[k] = c if v is None else v + c


def pclean(acc):
    for k in [k for k, v in acc.items() if not v]:
        del acc[k]
    return acc


def pmul(a, b):
    if len(a) == 1:
        (k1, c1), = a.items()
        return {k1 + k: c1 * c for k, c in b.items()}
    if len(b) == 1:
        (k2, c2), = b.items()
        return {k + k2: c * c2 for k, c in a.items()}
    acc = {}
    pmul_into(acc, a, b)
    return pclean(acc)


def ppow(a, n):
    out = {0: mpq(1)}
    base = a
    while n:
        if n & 1:
            out = pmul(out, base)
        n >>= 1
        if n:
            base = pmul(base, base)
    return out


# --- the polynomial type ---------------------------------------------------

class GradedPoly:
    """Immutable sparse polynomial over Q or Q(zeta) with weight grading."""

    __slots__ = ("terms", "table")

    def __init__(self, terms=None, table=TABLE):
        # terms: {packed key: coeff}, assumed free of zeros
        self.terms = terms if terms is not None else {}
        self.table = table

    # constructors
    @classmethod
    def const(cls, c, table=TABLE):
        if isinstance(c, int):
            c = mpq(c)
        return cls({0: c} if c else {}, table)

    @classmethod
    def var(cls, name, table=TABLE):
        name = _ALIASES.get(name, name)
        return cls({table.var_key(name): mpq(1)}, table)

    @classmethod
    def from_exps(cls, items, table=TABLE):
        """Build from ``{exponent vector or {name: exp}: coeff}``."""
        acc = {}
        for exps, c in items.items() if isinstance(items, dict) else items:
            e = dict(exps) if isinstance(exps, (dict, frozenset)) else exps
            k = table.key(e)
            acc[k] = acc.get(k, 0) + (mpq(c) if isinstance(c, int) else c)
        return cls(pclean(acc), table)

    def _check(self, other):
        if isinstance(other, GradedPoly):
            if other.table is not self.table:
                raise ValueError("symbol-table mismatch")
            return other.terms
        if isinstance(other, (int, CycNum)) or hasattr(other, "denominator"):
            return {0: other} if other else {}
        return None

    def __add__(self, other):
        t = self._check(other)
        if t is None:
            return NotImplemented
        return GradedPoly(padd(self.terms, t), self.table)

    __radd__ = __add__

    def __sub__(self, other):
        t = self._check(other)
        if t is None:
            return NotImplemented
        return GradedPoly(psub(self.terms, t), self.table)

    def __rsub__(self, other):
        t = self._check(other)
        if t is None:
            return NotImplemented
        return GradedPoly(psub(t, self.terms), self.table)

    def __neg__(self):
        return GradedPoly({k: -c for k, c in self.terms.items()}, self.table)

    def __mul__(self, other):
        if isinstance(other, GradedPoly):
            self._check(other)
            return GradedPoly(pmul(self.terms, other.terms), self.table)
        if isinstance(other, (int, CycNum)) or hasattr(other, "denominator"):
            return GradedPoly(pscale(self.terms, other), self.table)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, GradedPoly):
            if not c.is_constant() or not c:
                raise ZeroDivisionError("division only by nonzero constants")
            c = c.terms[0]
        if isinstance(c, int):
            c = mpq(c)
        return self * (1 / c)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        return GradedPoly(ppow(self.terms, n), self.table)

    def __eq__(self, other):
        t = self._check(other)
        if t is None:
            return NotImplemented
        return self.terms == t

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_term(self):
        return self.terms.get(0, mpq(0))

    @property
    def ring(self):
        if any(isinstance(c, CycNum) and c.ze for c in self.terms.values()):
            return "Q(zeta)"
        return "Q"

    def items(self):
        """(exponent tuple, coeff) pairs in canonical order."""
        tbl = self.table
        pairs = [(tbl.exps(k), c) for k, c in self.terms.items()]
        pairs.sort(key=lambda p: _order_key(p[0]), reverse=True)
        return pairs

    def coefficient(self, exps):
        return self.terms.get(self.table.key(exps), mpq(0))

    def symbols(self):
        used = 0
        for k in self.terms:
            used |= k
        return [n for i, n in enumerate(self.table.names) if (used >> (BITS * i)) & MASK]

    def degree_in(self, name):
        shift = BITS * self.table.index[name]
        return max(((k >> shift) & MASK for k in self.terms), default=0)

    def weight(self):
        return weight_of(self)

    def map_coeffs(self, fn):
        out = {}
        for k, c in self.terms.items():
            c = fn(c)
            if c:
                out[k] = c
        return GradedPoly(out, self.table)

    def to_text(self):
        return format_poly(self)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"GradedPoly({format_poly(self)!r})"

    def to_json(self):
        return [{"exponents": list(e), "coefficient": format_scalar(c)}
                for e, c in self.items()]

    @classmethod
    def from_json(cls, data, table=TABLE):
        from .exactnum import parse_scalar
        return cls.from_exps([(tuple(t["exponents"]), parse_scalar(t["coefficient"]))
                              for t in data], table)


def _order_key(exps):
    # graded order: total degree first, ties by the exponent vector read from mu1 up
    return (sum(exps), exps)


def weight_of(p):
    if not p.terms:
        raise ValueError("weight of the zero polynomial is undefined")
    ws = {p.table.weight(k) for k in p.terms}
    if len(ws) == 1:
        return ws.pop()
    return INHOMOGENEOUS


def poly_mul(a, b):
    return a * b


def mu_weight_partitions(w):
    """All (a, b, c, d, e) with a + 2b + 3c + 4d + 6e = w."""
    out = []
    for e in range(w // 6 + 1):
        r6 = w - 6 * e
        for d in range(r6 // 4 + 1):
            r4 = r6 - 4 * d
            for c in range(r4 // 3 + 1):
                r3 = r4 - 3 * c
                for b in range(r3 // 2 + 1):
                    out.append((r3 - 2 * b, b, c, d, e))
    return out


def enumerate_mu_monomials(w):
    """Exponent vectors over (mu1, mu2, mu3, mu4, mu6) of mu-weight w, canonical order."""
    if w < 0:
        return []
    mons = mu_weight_partitions(w)
    mons.sort(key=_order_key, reverse=True)
    return mons


def mu_monomial_keys(w, table=TABLE):
    return [table.key(m) for m in enumerate_mu_monomials(w)]


def specialize(p, binding):
    """Substitute symbols by rationals or polynomials; unbound symbols stay."""
    if not binding:
        return p
    tbl = p.table
    subs = {}
    for name, val in binding.items():
        name = _ALIASES.get(name, name)
        i = tbl.index[name]
        if isinstance(val, GradedPoly):
            subs[i] = val.terms
        elif isinstance(val, str):
            v = parse_rational(val)
            subs[i] = {0: v} if v else {}
        else:
            v = mpq(val) if not isinstance(val, CycNum) else val
            subs[i] = {0: v} if v else {}
    powcache = {}

    def power(i, e):
        ck = (i, e)
        r = powcache.get(ck)
        if r is None:
            r = ppow(subs[i], e)
            powcache[ck] = r
        return r

    acc = {}
    for k, c in p.terms.items():
        term = {0: c}
        rest = k
        for i in subs:
            e = (k >> (BITS * i)) & MASK
            if e:
                rest -= e << (BITS * i)
                term = pmul(term, power(i, e))
                if not term:
                    break
        if term:
            padd_into(acc, pshift(term, rest))
    return GradedPoly(pclean(acc), tbl)


# --- text rendering and parsing -----------------------------------------

def _mono_text(exps, names):
    parts = []
    for e, n in zip(exps, names):
        if e == 1:
            parts.append(n)
        elif e > 1:
            parts.append(f"{n}^{e}")
    return "*".join(parts)


def format_poly(p):
    if not p.terms:
        return "0"
    out = []
    for exps, c in p.items():
        mono = _mono_text(exps, p.table.names)
        if isinstance(c, CycNum) and c.ze:
            coeff = f"({format_scalar(c)})"
            sign = "+"
        else:
            if isinstance(c, CycNum):
                c = c.re
            sign = "-" if c < 0 else "+"
            c = abs(c)
            coeff = format_scalar(c)
        if mono:
            s = mono if coeff == "1" else f"{coeff}*{mono}"
        else:
            s = coeff
        out.append((sign, s))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, s in out[1:]:
        text += f" {sign} {s}"
    return text


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_μ][A-Za-z_0-9₂₃μ]*)|(\S))")


def _tokens(text):
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        if m.group(1):
            out.append(("num", int(m.group(1))))
        elif m.group(2):
            out.append(("sym", m.group(2)))
        else:
            tok = m.group(3)
            if tok == "*" and text[m.end():m.end() + 1] == "*":
                out.append(("op", "^"))
                pos = m.end() + 1
                continue
            out.append(("op", tok))
        pos = m.end()
    return out


def parse_poly(text, table=TABLE):
    """Parse "mu1^2*mu2 - 3/4*x_u + (1 + 2*z)*y_v" style text; 'z' is zeta."""
    toks = _tokens(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take():
        nonlocal pos
        t = toks[pos]
        pos += 1
        return t

    def expr():
        kind, val = peek()
        if kind == "op" and val in "+-":
            take()
            acc = term()
            if val == "-":
                acc = -acc
        else:
            acc = term()
        while True:
            kind, val = peek()
            if kind == "op" and val in "+-":
                take()
                rhs = term()
                acc = acc + rhs if val == "+" else acc - rhs
            else:
                return acc

    def term():
        acc = power()
        while True:
            kind, val = peek()
            if kind == "op" and val == "*":
                take()
                acc = acc * power()
            elif kind == "op" and val == "/":
                take()
                d = power()
                acc = acc / d
            else:
                return acc

    def power():
        base = unary()
        kind, val = peek()
        if kind == "op" and val == "^":
            take()
            kind, n = take()
            if kind != "num":
                raise ValueError("exponent must be a nonnegative integer")
            base = base ** n
        return base

    def unary():
        kind, val = peek()
        if kind == "op" and val == "-":
            take()
            return -power()
        if kind == "op" and val == "+":
            take()
            return power()
        return atom()

    def atom():
        if pos >= len(toks):
            raise ValueError(f"unexpected end of input in {text!r}")
        kind, val = take()
        if kind == "num":
            return GradedPoly.const(mpq(val), table)
        if kind == "sym":
            if val == "z":
                return GradedPoly({0: ZETA}, table)
            name = _ALIASES.get(val, val)
            if name not in table.index:
                raise ValueError(f"unknown symbol {val!r}")
            return GradedPoly.var(name, table)
        if val == "(":
            e = expr()
            k, v = take() if pos < len(toks) else (None, None)
            if v != ")":
                raise ValueError(f"missing ')' in {text!r}")
            return e
        raise ValueError(f"unexpected token {val!r} in {text!r}")

    out = expr()
    if pos != len(toks):
        raise ValueError(f"trailing input in {text!r}")
    return out


def symbols(*names):
    return [GradedPoly.var(n) for n in names]


def all_exponent_vectors(nvars, maxdeg):
    return [e for e in product(range(maxdeg + 1), repeat=nvars) if sum(e) <= maxdeg]
