"""JSON rendering. Valuations become ``{"num": .., "den": ..}`` or ``"inf"``."""

from __future__ import annotations

import json
from fractions import Fraction

from ..gauss_lucas import CriticalRadii, TheoremReport
from ..newton_polygon import NewtonPolygon
from ..valuation import INF, norm_string


def val_json(v):
    if v is INF:
        return "inf"
    v = Fraction(v)
    return {"num": v.numerator, "den": v.denominator}


def val_from_json(obj):
    if obj == "inf":
        return INF
    return Fraction(obj["num"], obj["den"])


def valued(v, p) -> dict:
    return {"valuation": val_json(v), "norm": norm_string(v, p)}


def polygon_json(poly: NewtonPolygon) -> dict:
    return {
        "vertices": [{"index": i, "valuation": val_json(v)} for i, v in poly.vertices],
        "zero_root_count": poly.zero_root_count,
    }


def radii_json(radii: CriticalRadii) -> list[dict]:
    return [
        {"k": k, **valued(v, radii.prime)}
        for k, v in enumerate(radii.radii_vals, start=1)
    ]


def report_json(rep: TheoremReport) -> dict:
    p = rep.prime
    return {
        "prime": p,
        "degree": rep.degree,
        "base_val": valued(rep.base_val, p),
        "per_k": [
            {
                "k": r.k,
                "bound_val": valued(r.bound_val, p),
                "count_in_disk": r.count_in_disk,
                "holds": r.holds,
                "tight": r.tight,
            }
            for r in rep.per_k
        ],
        "all_hold": rep.all_hold,
        "c1_val": valued(rep.c1_val, p),
        "c2_val": valued(rep.c2_val, p),
        "corollary1_holds": rep.corollary1_holds,
        "corollary2_holds": rep.corollary2_holds,
        "corollary3_applicable": rep.corollary3_applicable,
        "corollary3_holds": rep.corollary3_holds,
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)
