"""JSON encodings.  Rationals are always ``{"num": n, "den": d}``; keys are sorted."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .curve import Cycle, TropicalCurve
from .geometry import MarkedPolygon, UnimodularMap
from .puiseux import PuiseuxNumber, format_puiseux, is_inf
from .subdivision import MarkedSubdivision


def rational(q) -> Any:
    if q is None:
        return None
    if isinstance(q, float) and is_inf(q):
        return "inf"
    q = Fraction(q)
    return {"num": q.numerator, "den": q.denominator}


def from_rational(obj) -> Any:
    if obj == "inf":
        return float("inf")
    if isinstance(obj, dict):
        return Fraction(obj["num"], obj["den"])
    return Fraction(obj)


def point(p):
    return [rational(p[0]), rational(p[1])]


def polygon(P: MarkedPolygon) -> dict:
    return {"vertices": [list(v) for v in P.vertices], "marked": sorted(list(m) for m in P.marked)}


def subdivision(S: MarkedSubdivision) -> dict:
    return {"parent": polygon(S.parent), "cells": [polygon(c) for c in S.cells]}


def cycle(C: Cycle) -> dict:
    return {
        "center": list(C.center),
        "neighbors": [list(w) for w in C.neighbors],
        "lengths": [rational(e.length) for e in C.edges],
        "length": rational(C.length),
    }


def curve(T: TropicalCurve, C: Cycle = None) -> dict:
    out = {
        "vertices": [point(v) for v in T.vertices],
        "edges": [
            {
                "start": point(e.start),
                "end": point(e.end),
                "direction": list(e.direction),
                "length": rational(e.length),
                "facet": [list(p) for p in e.facet],
            }
            for e in T.bounded_edges
        ],
        "rays": [
            {"base": point(r.base), "direction": list(r.direction), "weight": r.weight,
             "facet": [list(p) for p in r.facet]}
            for r in T.rays
        ],
        "subdivision": subdivision(T.subdivision),
    }
    if C is not None:
        out["cycle"] = cycle(C)
    return out


def unimodular(phi: UnimodularMap) -> dict:
    return {"matrix": [list(r) for r in phi.matrix], "translation": list(phi.translation)}


def puiseux(c: PuiseuxNumber) -> dict:
    return {"text": format_puiseux(c), "terms": [[rational(e), rational(k)] for e, k in c.terms]}


def lifts(u) -> list:
    return [[p[0], p[1], rational(v)] for p, v in sorted(u.items())]


def trial(r) -> dict:
    out = {
        "index": r.index,
        "label": r.label,
        "lifts": lifts(r.lifts),
        "cycle_present": r.cycle_present,
        "singular": r.singular,
        "agreement": r.agreement,
        "first_pass": r.first_pass,
        "retries": r.retries,
        "j_trop": rational(r.j_trop),
        "val_j_generic": rational(r.val_j_generic),
        "val_j_exact": rational(r.val_j_exact),
        "notes": list(r.notes),
    }
    if r.phi is not None:
        out["phi"] = unimodular(r.phi)
    return out


def harness_summary(h) -> dict:
    return {
        "label": h.label,
        "mode": h.mode,
        "trials": h.trials,
        "cycles": h.cycles,
        "singular": h.singular,
        "agreements": h.agreements,
        "first_pass_agreements": h.first_pass_agreements,
        "disagreements": [trial(r) for r in h.disagreements],
    }


def report(rep) -> dict:
    return {
        "j_trop": rational(rep.j_trop),
        "val_j_exact": rational(rep.val_j_exact),
        "val_j_generic": rational(rep.val_j_generic),
        "cycle_present": rep.cycle_present,
        "agreement": rep.agreement,
        "label": rep.label,
        "case": rep.case,
        "notes": list(rep.notes),
    }


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)
