"""Command-line interface: ``tropj <command> [input] [options]``.

Input is polynomial text, or JSON lifts ``{"points": [[i, j, u], ...]}``,
or ``-`` to read either from standard input.  Results go to standard
output as JSON (SVG for ``plot``).  Exit codes: 0 success, 1 failed
agreement in ``check``/``harness``, 2 domain or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

from . import serialize as ser
from .curve import cycle_of, j_trop
from .errors import TropjError
from .geometry import (
    BASE_CASE,
    CASE_POLYGON,
    MarkedPolygon,
    UnimodularMap,
    apply_unimodular,
    case_points,
    classify_polygon,
    classify_vertices,
    lattice_points,
)
from .jinvariant import j_exact, symbolic_AB
from .laurent import LaurentPoly, format_poly, newton_vertices, parse
from .plot import render_svg
from .subdivision import TropicalPoly, lower_hull_subdivision, tropicalize
from .theorem import check_theorem, random_harness, reduce_support


class UsageError(TropjError):
    pass


def read_input(text: Optional[str]):
    """Return a :class:`LaurentPoly` or, for JSON input, a :class:`TropicalPoly`."""
    if text is None:
        raise UsageError("this command needs an input polynomial or JSON lifts")
    if text == "-":
        text = sys.stdin.read()
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
            return TropicalPoly({(int(i), int(j)): ser.from_rational(u) for i, j, u in data["points"]})
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"malformed JSON lifts: {exc}") from exc
    return parse(stripped)


def as_tropical(obj) -> TropicalPoly:
    return obj if isinstance(obj, TropicalPoly) else tropicalize(obj)


def as_poly(obj) -> LaurentPoly:
    if isinstance(obj, TropicalPoly):
        raise UsageError("this command needs a polynomial, not lifts")
    return obj


def _ints(text: str, n: int) -> List[int]:
    try:
        vals = [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"expected {n} comma-separated integers, got {text!r}") from exc
    if len(vals) != n:
        raise UsageError(f"expected {n} comma-separated integers, got {text!r}")
    return vals


def _map(args) -> UnimodularMap:
    if args.matrix is None:
        raise UsageError("transform needs --matrix a,b,c,d")
    a, b, c, d = _ints(args.matrix, 4)
    tau = _ints(args.tau, 2) if args.tau else [0, 0]
    try:
        return UnimodularMap(((a, b), (c, d)), tuple(tau))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _case_label(case: str) -> str:
    if case in CASE_POLYGON:
        return case
    if case in BASE_CASE:
        return BASE_CASE[case]
    raise UsageError(f"unknown case {case!r}")


def run(args) -> int:
    cmd = args.command
    out = sys.stdout

    if cmd == "symab":
        case = _case_label(args.case or "Ac")
        A, B = symbolic_AB(case)
        if args.counts:
            out.write(ser.dumps({"A_terms": len(A), "B_terms": len(B)}) + "\n")
        else:
            out.write("# A\n" + A.to_text() + "# B\n" + B.to_text())
        return 0

    if cmd == "harness":
        summary = random_harness(
            args.case or "Ac", args.trials, seed=args.seed, mode=args.mode,
            conditioned=not args.unconditioned, workers=args.workers,
            lift_range=Fraction(args.lift_range),
        )
        out.write(ser.dumps(ser.harness_summary(summary)) + "\n")
        return 0 if not summary.disagreements else 1

    obj = read_input(args.input)

    if cmd == "parse":
        f = as_poly(obj)
        payload = {"poly": format_poly(f), "terms": [[i, j, ser.puiseux(c)] for (i, j), c in sorted(f.items())]}
    elif cmd == "tropicalize":
        F = as_tropical(obj)
        payload = {"points": ser.lifts(F.lifts), "text": F.terms_text()}
    elif cmd == "subdivide":
        payload = ser.subdivision(lower_hull_subdivision(as_tropical(obj)))
    elif cmd == "curve":
        curve, cycle = cycle_of(as_tropical(obj))
        payload = ser.curve(curve, cycle)
    elif cmd == "jtrop":
        payload = {"j_trop": ser.rational(j_trop(as_tropical(obj)))}
    elif cmd == "jexact":
        J = j_exact(as_poly(obj))
        payload = {
            "numerator": ser.puiseux(J.numerator),
            "denominator": ser.puiseux(J.denominator),
            "valuation": ser.rational(J.valuation),
            "pipeline": J.pipeline,
        }
    elif cmd == "check":
        rep = check_theorem(as_poly(obj))
        out.write(ser.dumps(ser.report(rep)) + "\n")
        return 0 if rep.agreement else 1
    elif cmd == "classify":
        if isinstance(obj, TropicalPoly):
            P = MarkedPolygon(obj.newton_vertices(), obj.support().keys())
            label, phi = classify_polygon(P) if args.strict else classify_vertices(P.vertices)
        else:
            verts = newton_vertices(obj)
            if args.strict:
                label, phi = classify_polygon(MarkedPolygon(verts, obj.support()))
            else:
                label, phi = classify_vertices(verts)
        payload = {"label": label, "case": BASE_CASE[label], "phi": ser.unimodular(phi)}
    elif cmd == "transform":
        phi = _map(args)
        res = apply_unimodular(phi, obj)
        if isinstance(res, TropicalPoly):
            payload = {"points": ser.lifts(res.lifts)}
        else:
            payload = {"poly": format_poly(res)}
    elif cmd == "reduce":
        f = as_poly(obj)
        if args.case:
            target = case_points(_case_label(args.case))
        else:
            target = sorted(lattice_points(newton_vertices(f)))
        alpha = Fraction(args.alpha) if args.alpha is not None else None
        payload = {"poly": format_poly(reduce_support(f, target, alpha))}
    elif cmd == "plot":
        svg = render_svg(*cycle_of(as_tropical(obj)))
        if args.svg:
            with open(args.svg, "w", encoding="utf-8") as fh:
                fh.write(svg + "\n")
            return 0
        out.write(svg + "\n")
        return 0
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown command {cmd!r}")

    if args.svg and cmd in ("curve", "subdivide", "jtrop"):
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(*cycle_of(as_tropical(obj))) + "\n")
    out.write(ser.dumps(payload) + "\n")
    return 0


COMMANDS = ("parse", "tropicalize", "subdivide", "curve", "jtrop", "jexact", "check",
            "classify", "transform", "reduce", "symab", "harness", "plot")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tropj", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", nargs="?", help="polynomial text, JSON lifts, or - for stdin")
    p.add_argument("--case", help="Aa|Ab|Ac or a polygon label such as Qcm")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--alpha", help="padding exponent for reduce (rational)")
    p.add_argument("--matrix", help="a,b,c,d of a unimodular matrix")
    p.add_argument("--tau", help="e,f translation")
    p.add_argument("--json", action="store_true", help="JSON output (the default)")
    p.add_argument("--svg", metavar="PATH", help="write an SVG rendering to PATH")
    p.add_argument("--counts", action="store_true", help="symab: print term counts only")
    p.add_argument("--mode", choices=("lifts", "exact"), default="lifts", help="harness trial mode")
    p.add_argument("--unconditioned", action="store_true", help="harness: do not bias lifts towards cycles")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--lift-range", default="10")
    p.add_argument("--strict", action="store_true", help="classify: require every lattice point marked")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except (TropjError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
