"""Freeze the hand-transcribed golden polynomials into JSON files.

Run once: python tools/transcribe_golden.py
wp_* / dwp_* stand for wp(.) and wp'(.) of the point with that suffix.
"""

import json
from pathlib import Path

from ellsigma.formulas.golden import WP_TABLE
from ellsigma.gradedpoly import TABLE, parse_poly

OUT = Path(__file__).resolve().parents[1] / "src" / "ellsigma" / "formulas" / "data"

XY = {
    "r0": "(y_u*y_v + y_u*y_w + y_v*y_w - x_u*x_v*x_w)*(x_u + x_v + x_w)"
          " - x_u^2*x_v^2 - x_u^2*x_w^2 - x_v^2*x_w^2",
    "r1": "mu1*(x_v*x_u*y_v + 2*x_v*x_u*y_w + 2*y_w*x_u^2 + x_w*x_u*y_w - x_w^2*y_u"
          " + x_v*x_u*y_u + x_w*y_v*x_u + y_v*x_u^2 + y_w*x_v^2)",
    "r2": "(x_u^2*x_v - x_u*x_w^2 + y_w*y_u)*mu1^2 - (x_v^2*x_w - y_v*y_u + x_u^2*x_v"
          " + x_u*x_w^2 + 2*x_v*x_w*x_u - y_w*y_u - y_w*y_v + x_v*x_w^2 + x_u^2*x_w"
          " + x_u*x_v^2)*mu2",
    "r3": "mu1^3*y_w*x_u + (x_u*y_v + 2*y_w*x_u + x_v*y_w - x_w*y_u)*mu2*mu1"
          " + (y_v + y_w + y_u)*(x_u + x_v + x_w)*mu3",
    "r4": "-mu1^2*x_u*mu2*x_w + (x_u^2 - x_w^2 + 2*x_u*x_v + x_u*x_w)*mu3*mu1"
          " - (x_u*x_v + x_v*x_w + x_u*x_w)*mu2^2 - (x_u^2 + x_v^2 + x_w^2)*mu4",
    "r5": "mu1^2*y_w*mu3 - (y_u - y_w)*mu4*mu1 + (y_v + y_w + y_u)*mu3*mu2",
    "r6": "-mu1^2*x_u*mu4 + (x_u - x_w)*mu3*mu2*mu1 - (x_u + x_v + x_w)*(mu2*mu4 - mu6 - mu3^2)",
    "r7": "0",
    "r8": "-mu1*mu3*mu4 + (mu6 + mu3^2)*mu2 - mu4^2",
    "f2": "x_u + x_v + x_w + mu2",
    "f4": "x_u*x_v + x_v*x_w + x_u*x_w - mu4 + mu1*y_w",
    "Q6": "y_w*mu1^3 - (mu4 - x_v*x_w - x_u*x_v)*mu1^2"
          " + (x_u*mu3 - mu3*x_w - x_w*y_w - x_w*y_u + 2*y_w*x_u + x_u*y_v)*mu1"
          " - (x_u*x_v + x_v*x_w + x_u*x_w)*mu2 + mu3^2 + (y_v + y_w + y_u)*mu3"
          " - x_u*x_v^2 + mu6 - x_u*x_w^2 + y_w*y_u - x_v^2*x_w + y_v*y_u - x_v*x_w^2"
          " + y_w*y_v - x_v*x_w*x_u - x_u*mu4",
    "Q4": "(y_u + mu3)*mu1 - (mu2 + x_v + x_w)*mu1^2 + (x_v + x_w)*mu2 + mu4"
          " + x_w^2 + x_v*x_w + x_v^2",
    "special_no_mu124": "(x_v + x_u + x_w)*mu6 + (x_v + x_u + x_w)*mu3^2"
                   " + (y_u + y_v + y_w)*(x_v + x_u + x_w)*mu3"
                   " - x_u^2*x_w^2 - x_v^2*x_w^2 - x_u^2*x_v^2"
                   " - (x_v + x_u + x_w)*(x_v*x_w*x_u - y_v*y_w - y_u*y_w - y_v*y_u)",
}

WP = {
    "special_classical": "-1/16*g2^2 + 1/4*g2*(wp_v^2 + wp_w^2 + wp_u^2)"
                   " - wp_u^2*wp_w^2 - wp_v^2*wp_w^2 - wp_u^2*wp_v^2"
                   " - 1/4*(wp_u + wp_v + wp_w)*(4*wp_u*wp_v*wp_w + g3"
                   " - dwp_u*dwp_v - dwp_v*dwp_w - dwp_u*dwp_w)",
    "special_equianharmonic": "1/4*(wp_u + wp_v + wp_w)*(dwp_u*dwp_v + dwp_v*dwp_w + dwp_u*dwp_w"
                   " - g3 - 4*wp_v*wp_w*wp_u) - wp_u^2*wp_v^2 - wp_u^2*wp_w^2 - wp_v^2*wp_w^2",
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, text in XY.items():
        p = parse_poly(text, TABLE)
        doc = {"name": name, "basis": "xy", "text": text, "terms": p.to_json()}
        (OUT / f"{name}.json").write_text(json.dumps(doc, indent=1) + "\n")
    for name, text in WP.items():
        p = parse_poly(text, WP_TABLE)
        doc = {"name": name, "basis": "wp", "text": text, "terms": p.to_json()}
        (OUT / f"{name}.json").write_text(json.dumps(doc, indent=1) + "\n")


if __name__ == "__main__":
    main()
