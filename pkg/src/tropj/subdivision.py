"""Tropical polynomials and the regular marked subdivisions they induce."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple

from .errors import DegenerateLift, EmptyPolynomial
from .geometry import MarkedPolygon, convex_hull, cross, lattice_points, twice_area
from .laurent import LaurentPoly
from .puiseux import INF, is_inf

Point = Tuple[int, int]


@dataclass(frozen=True)
class TropicalPoly:
    """``F(x, y) = min(u_ij + i x + j y)`` over a marked point set.

    ``lifts`` maps every point of the domain to a Fraction or ``INF``;
    the support is the set of points with a finite lift.
    """

    lifts: Mapping[Point, object]

    def __init__(self, lifts: Mapping[Point, object]):
        clean = {}
        for (i, j), u in lifts.items():
            clean[(int(i), int(j))] = INF if is_inf(u) else Fraction(u)
        object.__setattr__(self, "lifts", dict(sorted(clean.items())))

    @property
    def domain(self) -> frozenset:
        return frozenset(self.lifts)

    def support(self) -> Dict[Point, Fraction]:
        return {p: u for p, u in self.lifts.items() if not is_inf(u)}

    def newton_vertices(self):
        supp = self.support()
        if not supp:
            raise EmptyPolynomial("tropical polynomial with empty support")
        return convex_hull(supp)

    def parent(self) -> MarkedPolygon:
        """The Newton polygon marked by the whole domain."""
        verts = self.newton_vertices()
        return MarkedPolygon(verts, [p for p in self.lifts if _inside(p, verts)])

    def __call__(self, x, y):
        return min(u + i * x + j * y for (i, j), u in self.support().items())

    def scaled(self, factor) -> "TropicalPoly":
        return TropicalPoly({p: (u if is_inf(u) else u * factor) for p, u in self.lifts.items()})

    def __add__(self, other: "TropicalPoly") -> "TropicalPoly":
        keys = set(self.lifts) | set(other.lifts)
        out = {}
        for p in keys:
            a = self.lifts.get(p, INF)
            b = other.lifts.get(p, INF)
            out[p] = INF if is_inf(a) or is_inf(b) else a + b
        return TropicalPoly(out)

    def terms_text(self) -> str:
        """``min{...}`` rendering with the terms ordered as stored."""
        parts = []
        for (i, j), u in self.support().items():
            pieces = []
            if u != 0 or (i == 0 and j == 0):
                pieces.append(str(u))
            for var, e in (("x", i), ("y", j)):
                if e:
                    pieces.append(var if e == 1 else f"{e}{var}")
            parts.append("+".join(pieces).replace("+-", "-"))
        return "min{" + ",".join(parts) + "}"


def _inside(p, verts):
    from .geometry import point_in_polygon

    return point_in_polygon(p, verts)


def tropicalize(f: LaurentPoly, marked: Optional[Iterable[Point]] = None) -> TropicalPoly:
    """Lifts ``val(a_ij)`` on ``supp(f)``, ``INF`` on the rest of the marked set.

    The marked set defaults to all lattice points of the Newton polygon.
    """
    if f.is_zero():
        raise EmptyPolynomial("cannot tropicalize the zero polynomial")
    support = f.support()
    if marked is None:
        marked = lattice_points(convex_hull(support))
    marked = frozenset(tuple(p) for p in marked)
    if not support <= marked:
        raise ValueError("the marked set must contain the support")
    verts = convex_hull(support)
    for p in marked:
        if not _inside(p, verts):
            raise ValueError(f"marked point {p} lies outside the Newton polygon")
    return TropicalPoly({p: (f[p].val() if p in support else INF) for p in marked})


@dataclass(frozen=True)
class MarkedSubdivision:
    """Cells of a marked subdivision of ``parent``."""

    cells: Tuple[MarkedPolygon, ...]
    parent: MarkedPolygon

    def facets(self):
        """``{(a, b): [cell indices]}`` over all cell edges, endpoints sorted."""
        out: Dict[Tuple[Point, Point], list] = {}
        for idx, cell in enumerate(self.cells):
            for a, b in cell.edges():
                out.setdefault(tuple(sorted((a, b))), []).append(idx)
        return out

    def cell_set(self):
        return frozenset((frozenset(c.vertices), c.marked) for c in self.cells)

    def same_as(self, other: "MarkedSubdivision") -> bool:
        return self.cell_set() == other.cell_set() and self.parent == other.parent

    def marked_points(self) -> frozenset:
        return frozenset().union(*(c.marked for c in self.cells)) if self.cells else frozenset()


def _plane(p, q, r):
    """Coefficients ``(a, b, c)`` of ``z = a + b i + c j`` through three lifted points."""
    (x1, y1, z1), (x2, y2, z2), (x3, y3, z3) = p, q, r
    det = (x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1)
    b = Fraction((z2 - z1) * (y3 - y1) - (z3 - z1) * (y2 - y1), det)
    c = Fraction((x2 - x1) * (z3 - z1) - (x3 - x1) * (z2 - z1), det)
    a = z1 - b * x1 - c * y1
    return a, b, c


def lower_hull_subdivision(F: TropicalPoly) -> MarkedSubdivision:
    """Project the lower faces of the lifted support onto the plane.

    A face is lower when every lifted point lies on or above its plane.
    Coplanar lifted points give one (possibly non-triangular) cell; a point
    is marked in a cell exactly when its lift lies on that cell's face.
    """
    supp = F.support()
    pts = sorted(supp)
    if len(pts) < 3:
        raise DegenerateLift("fewer than three points with finite lift")
    lifted = [(i, j, supp[(i, j)]) for i, j in pts]
    parent = F.parent()
    if parent.dimension < 2:
        raise DegenerateLift("all finite-lift points are collinear")

    faces: Dict[Tuple, frozenset] = {}
    # each lower face is spanned by some triple of its points
    for p, q, r in itertools.combinations(lifted, 3):
        if cross(p[:2], q[:2], r[:2]) == 0:
            continue
        a, b, c = _plane(p, q, r)
        if (a, b, c) in faces:
            continue
        on = []
        ok = True
        for s in lifted:
            h = a + b * s[0] + c * s[1]
            if s[2] < h:
                ok = False
                break
            if s[2] == h:
                on.append(s[:2])
        if ok:
            faces[(a, b, c)] = frozenset(on)

    cells = []
    for (_, b, c), on in sorted(faces.items(), key=lambda kv: sorted(kv[1])):
        cells.append(MarkedPolygon(convex_hull(on), on))
    cells.sort(key=lambda cell: cell.vertices)
    return MarkedSubdivision(tuple(cells), parent)


def face_gradient(F: TropicalPoly, cell: MarkedPolygon) -> Tuple[Fraction, Fraction]:
    """``(b, c)`` with ``u_ij = a + b i + c j`` on the cell's marked points."""
    supp = F.support()
    v = cell.vertices
    for p, q, r in itertools.combinations(v, 3):
        if cross(p, q, r) != 0:
            _, b, c = _plane((*p, supp[p]), (*q, supp[q]), (*r, supp[r]))
            return b, c
    raise DegenerateLift("cell is not two-dimensional")


def subdivision_area_check(S: MarkedSubdivision) -> bool:
    """Sum of cell areas equals the parent area."""
    return sum(twice_area(c.vertices) for c in S.cells) == twice_area(S.parent.vertices)
