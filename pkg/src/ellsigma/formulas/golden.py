"""Golden polynomials shipped as JSON (transcribed once by tools/transcribe_golden.py).

Files in ``data/`` keep the transcribed text next to the terms; loading checks
that the two agree. Files with ``"basis": "wp"`` use :data:`WP_TABLE`, where
``wp_u``/``dwp_u`` stand for wp(u)/wp'(u); :func:`wp_to_xy` rewrites them in x, y.
"""

import json
from functools import lru_cache
from importlib import resources

from ..gradedpoly import MU_NAMES, TABLE, GradedPoly, SymbolTable, parse_poly, specialize

# Same layout as TABLE, so a packed key means the same exponents in both tables.
WP_TABLE = SymbolTable(
    MU_NAMES + ("wp_u", "dwp_u", "wp_v", "dwp_v", "wp_w", "dwp_w", "g2", "g3"),
    TABLE.weights,
)

R_NAMES = tuple(f"r{i}" for i in range(9))
POINTS = ("u", "v", "w")


class GoldenDataError(ValueError):
    pass


@lru_cache(maxsize=None)
def load_golden(name):
    try:
        raw = resources.files(__package__).joinpath("data", f"{name}.json").read_text()
    except FileNotFoundError:
        raise GoldenDataError(f"no golden polynomial named {name!r}") from None
    doc = json.loads(raw)
    table = WP_TABLE if doc["basis"] == "wp" else TABLE
    poly = GradedPoly.from_json(doc["terms"], table)
    if parse_poly(doc["text"], table) != poly:
        raise GoldenDataError(f"{name}: stored terms disagree with the stored text")
    return poly


def golden_names():
    d = resources.files(__package__).joinpath("data")
    return sorted(p.name[:-5] for p in d.iterdir() if p.name.endswith(".json"))


def r_terms():
    return [load_golden(n) for n in R_NAMES]


def r_sum():
    out = GradedPoly()
    for r in r_terms():
        out = out + r
    return out


def wp_to_xy(p):
    """wp -> x, wp' -> 2y + mu1 x + mu3, pointwise."""
    if p.table is TABLE:
        return p
    q = GradedPoly(dict(p.terms), TABLE)
    mu1, mu3 = GradedPoly.var("mu1"), GradedPoly.var("mu3")
    sub = {}
    for pt in POINTS:
        x, y = GradedPoly.var(f"x_{pt}"), GradedPoly.var(f"y_{pt}")
        sub[f"y_{pt}"] = y * 2 + mu1 * x + mu3
    return specialize(q, sub)


def xy_to_wp(p):
    """Inverse of :func:`wp_to_xy`: y -> (wp' - mu1 wp - mu3)/2."""
    q = GradedPoly(dict(p.terms), WP_TABLE)
    mu1, mu3 = GradedPoly.var("mu1", WP_TABLE), GradedPoly.var("mu3", WP_TABLE)
    sub = {}
    for pt in POINTS:
        P, dP = GradedPoly.var(f"wp_{pt}", WP_TABLE), GradedPoly.var(f"dwp_{pt}", WP_TABLE)
        sub[f"dwp_{pt}"] = (dP - mu1 * P - mu3) / 2
    return specialize(q, sub)
