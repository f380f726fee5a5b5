"""SVG rendering of a tropical curve next to its dual marked subdivision."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from fractions import Fraction
from typing import Optional, Tuple

from .curve import Cycle, TropicalCurve, cycle_of
from .geometry import lattice_points
from .subdivision import TropicalPoly

PANEL = 300
GAP = 40
PAD = 20


def _num(x) -> str:
    return f"{float(x):.6g}"


class _Frame:
    """Maps a world box onto a square panel with ``y`` pointing up."""

    def __init__(self, lo: Tuple[Fraction, Fraction], hi: Tuple[Fraction, Fraction], offset: int):
        self.lo, self.hi = lo, hi
        span = max(hi[0] - lo[0], hi[1] - lo[1])
        self.scale = Fraction(PANEL - 2 * PAD) / span
        self.offset = offset

    def __call__(self, p):
        x = self.offset + PAD + (Fraction(p[0]) - self.lo[0]) * self.scale
        y = PAD + (self.hi[1] - Fraction(p[1])) * self.scale
        return _num(x), _num(y)


def curve_box(curve: TropicalCurve):
    """Bounding box of the vertices grown by 20% of its extent on every side."""
    xs = [v[0] for v in curve.vertices]
    ys = [v[1] for v in curve.vertices]
    w = max(max(xs) - min(xs), max(ys) - min(ys), Fraction(1))
    m = w / 5
    return (min(xs) - m, min(ys) - m), (max(xs) + m, max(ys) + m)


def clip_ray(base, direction, lo, hi):
    """Point where the ray leaves the box ``[lo, hi]``."""
    best = None
    for k in range(2):
        d = direction[k]
        if d == 0:
            continue
        bound = hi[k] if d > 0 else lo[k]
        s = (bound - Fraction(base[k])) / d
        if best is None or s < best:
            best = s
    return (base[0] + best * direction[0], base[1] + best * direction[1])


def _line(parent, frame, a, b, cls):
    x1, y1 = frame(a)
    x2, y2 = frame(b)
    ET.SubElement(parent, "line", {"class": cls, "x1": x1, "y1": y1, "x2": x2, "y2": y2})


def _dot(parent, frame, p, cls, r="4"):
    cx, cy = frame(p)
    ET.SubElement(parent, "circle", {"class": cls, "cx": cx, "cy": cy, "r": r})


def render_svg(curve: TropicalCurve, cycle: Optional[Cycle] = None) -> str:
    width = 2 * PANEL + GAP
    svg = ET.Element("svg", {"xmlns": "http://www.w3.org/2000/svg", "width": str(width),
                             "height": str(PANEL), "viewBox": f"0 0 {width} {PANEL}"})
    ET.SubElement(svg, "style").text = (
        ".edge,.ray{stroke:#000;stroke-width:1.5}.cycle{stroke:#d22;stroke-width:3}"
        ".vertex{fill:#000}.cell{fill:none;stroke:#555}.marked{fill:#000}"
        ".unmarked{fill:#fff;stroke:#000}"
    )
    cycle_facets = {e.facet for e in cycle.edges} if cycle is not None else set()

    left = ET.SubElement(svg, "g", {"id": "curve"})
    lo, hi = curve_box(curve)
    frame = _Frame(lo, hi, 0)
    for e in curve.bounded_edges:
        _line(left, frame, e.start, e.end, "cycle" if e.facet in cycle_facets else "edge")
    for r in curve.rays:
        _line(left, frame, r.base, clip_ray(r.base, r.direction, lo, hi), "ray")
    for v in curve.vertices:
        _dot(left, frame, v, "vertex")

    right = ET.SubElement(svg, "g", {"id": "subdivision"})
    S = curve.subdivision
    xs = [p[0] for p in S.parent.vertices]
    ys = [p[1] for p in S.parent.vertices]
    m = Fraction(max(max(xs) - min(xs), max(ys) - min(ys), 1), 5)
    dframe = _Frame((min(xs) - m, min(ys) - m), (max(xs) + m, max(ys) + m), PANEL + GAP)
    for cell in S.cells:
        pts = " ".join(",".join(dframe(v)) for v in cell.vertices)
        ET.SubElement(right, "polygon", {"class": "cell", "points": pts})
    for a, b in sorted(cycle_facets):
        _line(right, dframe, a, b, "cycle")
    marked = S.marked_points()
    for p in sorted(lattice_points(S.parent.vertices)):
        _dot(right, dframe, p, "marked" if p in marked else "unmarked", "3")
    return ET.tostring(svg, encoding="unicode")


def plot(F: TropicalPoly) -> str:
    curve, cycle = cycle_of(F)
    return render_svg(curve, cycle)
