"""Verdicts for series identities."""

import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"


@dataclass
class IdentityReport:
    id: str
    binding: dict
    bound: int
    verdict: str
    residual: dict = None
    notes: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.verdict == PASS

    def to_dict(self):
        d = {"id": self.id, "binding": self.binding, "bound": self.bound,
             "verdict": self.verdict}
        if self.residual is not None:
            d["residual"] = self.residual
        if self.notes:
            d["notes"] = self.notes
        return d

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    def to_text(self):
        scope = f"through total degree {self.bound}" if self.bound else "as a polynomial identity"
        line = f"{self.id}: {self.verdict.upper()} {scope}"
        if self.residual:
            r = self.residual
            if r["vars"]:
                mono = "*".join(f"{v}^{e}" for v, e in zip(r["vars"], r["exponents"]))
                line += f"\n  first residual at {mono}: {r['coefficient']}"
            else:
                line += f"\n  residual: {r['coefficient']}"
        for k in sorted(self.notes):
            line += f"\n  {k}: {self.notes[k]}"
        return line


def compare(lhs, rhs, T, ident, binding, weight=None, notes=None):
    """Report whether two TruncSeries agree through total degree T.

    Both sides must also be zeta-free and, when ``weight`` is given, homogeneous
    of that weight (coefficient of a degree-d monomial has weight weight - d).
    """
    from ..curvegen import series_weight_violations

    bound = min(T, lhs.bound, rhs.bound)
    lhs, rhs = lhs.truncate(bound), rhs.truncate(bound)
    diff = lhs - rhs
    residual = None
    if diff.coeffs:
        exps, poly = diff.terms()[0]
        residual = {"vars": list(diff.vars), "exponents": list(exps),
                    "coefficient": poly.to_text()}
    notes = dict(notes or {})
    if bound < T:
        notes["requested_bound"] = T
    ok = residual is None
    for side, s in (("lhs", lhs), ("rhs", rhs)):
        if not s.is_rational():
            notes[f"{side}_zeta_free"] = False
            ok = False
        if weight is not None and series_weight_violations(s, weight):
            notes[f"{side}_homogeneous"] = False
            ok = False
    return IdentityReport(ident, binding, bound, PASS if ok else FAIL, residual, notes)


def combine(ident, reports, binding=None):
    """One report that passes iff every sub-report passes."""
    failed = [r for r in reports if not r.passed]
    first = failed[0] if failed else None
    notes = {"checks": [f"{r.id}: {r.verdict}" for r in reports]}
    return IdentityReport(ident, binding if binding is not None else {},
                          min((r.bound for r in reports if r.bound), default=0),
                          FAIL if failed else PASS,
                          first.residual if first else None, notes)
