"""Command-line interface: expansions, identity checks and derivations.

Exit status: 0 when every verdict passes, 2 when some verdict fails, 1 on errors.
"""

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import factorial

from .curvegen import (
    CurveParams, sigma_series, star_series, wp_series, x_from_u, y_from_u,
)
from .exactnum import parse_rational
from .gradedpoly import MU_NAMES, TABLE, GradedPoly, SymbolTable

EXIT_PASS, EXIT_ERROR, EXIT_FAIL = 0, 1, 2

VERIFY_TARGETS = ("two-term", "det", "n2", "n3", "n3-special", "ideal", "star-vanishing",
                  "equianharmonic", "parity", "hurwitz", "all")

# mubar1 = mu1/2 in place of mu1, for the integral (Hurwitz) form of sigma
_HURWITZ_TABLE = SymbolTable(("mubar1",) + TABLE.names[1:], TABLE.weights)


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    target: str = None
    order: int = None
    binding: dict = field(default_factory=dict)
    fmt: str = "text"
    fast: bool = False
    seed: int = 0
    n: int = None
    case: int = None
    experimental: bool = False
    jobs: int = 1
    style: str = "plain"

    def params(self):
        if self.fast:
            keep = {k: v for k, v in self.binding.items() if v != "symbolic"}
            return CurveParams.random_rational(self.seed, keep=keep)
        return CurveParams.from_binding(self.binding)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _mu_value(text):
    if text == "symbolic":
        return text
    try:
        parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"{text!r} is not an exact rational or 'symbolic'") from exc
    return text


def _order(text):
    try:
        T = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"order must be an integer, got {text!r}") from None
    if T < 1:
        raise argparse.ArgumentTypeError("order must be at least 1")
    return T


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=_order, help="truncation order T (total degree)")
    common.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    for name in MU_NAMES:
        common.add_argument(f"--{name}", type=_mu_value, metavar="Q",
                            help=f"bind {name} to a rational literal (default symbolic)")
    p = _Parser(prog="ellsigma", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    e = sub.add_parser("expand", parents=[common], help="print a series expansion")
    e.add_argument("what", choices=("sigma", "x", "y", "wp", "star"))
    e.add_argument("--style", choices=("plain", "hurwitz"), default="plain",
                   help="hurwitz: sigma as sum A_n u^n/n! in mubar1 = mu1/2")
    v = sub.add_parser("verify", parents=[common], help="check an identity")
    v.add_argument("target", choices=VERIFY_TARGETS)
    v.add_argument("--n", type=int, default=3, help="size of the determinant formula")
    v.add_argument("--case", type=int, choices=(1, 2, 3), default=1)
    v.add_argument("--fast", action="store_true", help="seeded random rational binding")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1, help="parallel workers for 'verify all'")
    d = sub.add_parser("derive", parents=[common], help="re-derive a right-hand side")
    d.add_argument("--n", type=int, choices=(2, 3, 4), required=True)
    d.add_argument("--experimental", action="store_true", help="required for n = 4")
    return p


def parse_config(argv):
    a = build_parser().parse_args(argv)
    binding = {n: getattr(a, n) for n in MU_NAMES if getattr(a, n) is not None}
    return RunConfig(
        command=a.command, target=getattr(a, "what", None) or getattr(a, "target", None),
        order=a.order, binding=binding, fmt=a.fmt, fast=getattr(a, "fast", False),
        seed=getattr(a, "seed", 0), n=getattr(a, "n", None), case=getattr(a, "case", None),
        experimental=getattr(a, "experimental", False), jobs=getattr(a, "jobs", 1),
        style=getattr(a, "style", "plain"),
    )


# --- expand ---------------------------------------------------------------------------

def _hurwitz_text(s, T):
    parts = []
    mu1 = TABLE.index["mu1"]
    for n in range(T + 1):
        c = s[n]
        if not c:
            continue
        terms = {}
        for k, v in c.terms.items():
            a = (k >> (8 * mu1)) & 0xFF
            terms[k] = v * factorial(n) * 2 ** a
        body = GradedPoly(terms, _HURWITZ_TABLE).to_text()
        parts.append(f"({body})*(1/{n}!)*u^{n}" if n > 1 else f"({body})*u")
    return " + ".join(parts) + f" + O(u^{T + 1})"


def run_expand(cfg):
    T = cfg.order or 7
    params = cfg.params()
    what = cfg.target
    if what == "sigma":
        obj = sigma_series(params, T)
    elif what == "x":
        obj = x_from_u(params, T)
    elif what == "y":
        obj = y_from_u(params, T)
    elif what == "wp":
        obj = wp_series(params, T)
    else:
        obj = star_series(params, T, 1, "v")
    if cfg.fmt == "json":
        doc = {"expansion": what, "order": T, "binding": params.describe(), "series": obj.to_json()}
        return json.dumps(doc, sort_keys=True, separators=(",", ":")), EXIT_PASS
    if what == "sigma" and cfg.style == "hurwitz":
        return _hurwitz_text(obj, T), EXIT_PASS
    return obj.to_text(), EXIT_PASS


# --- verify ---------------------------------------------------------------------------

DEFAULT_ORDER = {"two-term": 10, "det": 9, "n2": 10, "n3": 15, "n3-special": 15,
                 "star-vanishing": 8, "equianharmonic": 10, "parity": 10, "hurwitz": 20}


def _verify_one(target, cfg):
    from .formulas import hurwitz, verify as V

    T = cfg.order or DEFAULT_ORDER.get(target, 8)
    if target == "det":
        n = cfg.n
        T = cfg.order or max(9, n * (n + 1) // 2 + 3)
        if cfg.fast:
            import random
            rng = random.Random(cfg.seed)
            g2, g3 = (f"{rng.randint(-9, 9)}/{rng.randint(1, 9)}" for _ in range(2))
            params = CurveParams.classical(g2, g3)
        else:
            params = None
        return V.verify_det_formula(n, T, params)
    if target == "ideal":
        return V.verify_ideal_decomposition()
    if target == "n3-special":
        return V.verify_n3_specializations(cfg.case, T)
    if target == "equianharmonic":
        return V.verify_equianharmonic(T)
    params = cfg.params()
    fn = {"two-term": V.verify_two_term, "n2": V.verify_n2, "n3": V.verify_n3,
          "star-vanishing": V.verify_star_vanishing, "parity": V.verify_n2_parity}.get(target)
    if fn is not None:
        return fn(params, T)
    if target == "hurwitz":
        return hurwitz.check_hurwitz(params, T)
    raise UsageError(f"unknown verification target {target!r}")


ALL_CHECKS = (("two-term", {}), ("det", {"n": 2}), ("det", {"n": 3}), ("det", {"n": 4}),
              ("n2", {}),
              ("parity", {}), ("equianharmonic", {}), ("n3", {}), ("n3-special", {"case": 1}),
              ("n3-special", {"case": 2}), ("n3-special", {"case": 3}), ("ideal", {}),
              ("star-vanishing", {}), ("hurwitz", {}))


def _run_check(args):
    target, overrides, cfg = args
    c = RunConfig(**{**cfg.__dict__, **overrides})
    return _verify_one(target, c)


def run_verify(cfg):
    if cfg.target == "all":
        base = RunConfig(**{**cfg.__dict__, "order": None})
        jobs = [(t, o, base) for t, o in ALL_CHECKS]
        if cfg.jobs > 1:
            with ProcessPoolExecutor(cfg.jobs) as ex:
                reports = list(ex.map(_run_check, jobs))
        else:
            reports = [_run_check(j) for j in jobs]
    else:
        reports = [_verify_one(cfg.target, cfg)]
    status = EXIT_PASS if all(r.passed for r in reports) else EXIT_FAIL
    if cfg.fmt == "json":
        docs = [r.to_dict() for r in reports]
        out = docs[0] if len(docs) == 1 else docs
        return json.dumps(out, sort_keys=True, separators=(",", ":")), status
    return "\n".join(r.to_text() for r in reports), status


# --- derive ---------------------------------------------------------------------------

def run_derive(cfg):
    from .formulas.derive import derive_rhs, derive_rhs_experimental

    params = cfg.params() if cfg.binding else None
    if cfg.n == 4:
        if not cfg.experimental:
            raise UsageError("derive --n 4 requires --experimental")
        res = derive_rhs_experimental(4, cfg.order, params, opt_in=True)
    else:
        res = derive_rhs(cfg.n, cfg.order, params)
    if isinstance(res, dict):
        if cfg.fmt == "json":
            return json.dumps(res, sort_keys=True, separators=(",", ":")), EXIT_FAIL
        return "resource report:\n" + "\n".join(f"  {k}: {res[k]}" for k in sorted(res)), EXIT_FAIL
    doc = res.to_dict()
    if res.n <= 3:
        doc["wp_form"] = res.wp_form().to_text()
    doc["stats"] = {k: v for k, v in doc["stats"].items() if k != "seconds"}
    if cfg.fmt == "json":
        return json.dumps(doc, sort_keys=True, separators=(",", ":")), EXIT_PASS
    lines = [f"n = {res.n}, weight {res.weight}, order {res.bound}", f"rhs = {doc['poly']}"]
    if "wp_form" in doc:
        lines.append(f"wp form = {doc['wp_form']}")
    lines.append(f"unknowns {doc['stats']['unknowns']}, equations {doc['stats']['equations']}, "
                 f"rank {doc['stats']['rank']}")
    return "\n".join(lines), EXIT_PASS


def run(argv=None):
    """Parse argv, run, and return (output text, exit status)."""
    try:
        cfg = parse_config(argv)
        if cfg.command == "expand":
            return run_expand(cfg)
        if cfg.command == "verify":
            return run_verify(cfg)
        return run_derive(cfg)
    except UsageError as exc:
        return f"error: {exc}", EXIT_ERROR
    except (ValueError, ArithmeticError) as exc:
        return f"error: {exc}", EXIT_ERROR


def main(argv=None):
    try:
        out, status = run(argv)
    except SystemExit as exc:        # --help
        return exc.code or 0
    stream = sys.stderr if status == EXIT_ERROR else sys.stdout
    print(out, file=stream)
    return status


if __name__ == "__main__":
    sys.exit(main())
