"""Plane tropical curves dual to marked subdivisions, cycles and ``j_trop``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import gcd
from typing import List, Mapping, Optional, Sequence, Tuple

from .errors import DegenerateFan, DegenerateLift, NotOneInteriorPoint
from .geometry import MarkedPolygon, interior_lattice_points
from .subdivision import MarkedSubdivision, TropicalPoly, face_gradient, lower_hull_subdivision

Point = Tuple[int, int]
QPoint = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Edge:
    """Bounded edge joining the vertices dual to cells ``start_cell`` and ``end_cell``."""

    start_cell: int
    end_cell: int
    start: QPoint
    end: QPoint
    facet: Tuple[Point, Point]
    direction: Tuple[int, int]
    length: Fraction


@dataclass(frozen=True)
class Ray:
    cell: int
    base: QPoint
    facet: Tuple[Point, Point]
    direction: Tuple[int, int]
    weight: int


@dataclass(frozen=True)
class Cycle:
    center: Point
    neighbors: Tuple[Point, ...]
    edges: Tuple[Edge, ...]
    length: Fraction
    # cycle facets with lattice points strictly between their endpoints
    flagged_facets: Tuple[Tuple[Point, Point], ...] = ()


@dataclass(frozen=True)
class TropicalCurve:
    subdivision: MarkedSubdivision
    vertices: Tuple[QPoint, ...]
    bounded_edges: Tuple[Edge, ...]
    rays: Tuple[Ray, ...]

    @property
    def cells(self) -> Tuple[MarkedPolygon, ...]:
        return self.subdivision.cells

    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)


def direction_vector(a: Point, b: Point) -> Tuple[int, int]:
    """``(y2 - y1, x1 - x2)`` for the facet from ``a = (x1, y1)`` to ``b = (x2, y2)``."""
    return (b[1] - a[1], a[0] - b[0])


def _ratio_along(delta, v) -> Fraction:
    """``lam`` with ``delta = lam * v``."""
    k = 0 if v[0] != 0 else 1
    lam = Fraction(delta[k]) / v[k]
    if delta[1 - k] != lam * v[1 - k]:
        raise ValueError(f"edge {delta} is not parallel to {v}")
    return lam


def lattice_length(start: QPoint, end: QPoint, facet: Tuple[Point, Point]) -> Fraction:
    """``|lam|`` where ``end - start = lam * v`` and ``v`` comes from the dual facet."""
    v = direction_vector(*facet)
    return abs(_ratio_along((end[0] - start[0], end[1] - start[1]), v))


def _primitive(v):
    g = gcd(v[0], v[1])
    return (v[0] // g, v[1] // g)


def dual_curve(F: TropicalPoly, subdivision: Optional[MarkedSubdivision] = None) -> TropicalCurve:
    """One vertex per cell, one bounded edge per interior facet, one ray per boundary facet."""
    S = subdivision if subdivision is not None else lower_hull_subdivision(F)
    if not S.cells:
        raise DegenerateLift("subdivision has no two-dimensional cell")
    verts: List[QPoint] = []
    for cell in S.cells:
        b, c = face_gradient(F, cell)
        verts.append((-b, -c))

    edges: List[Edge] = []
    rays: List[Ray] = []
    for facet, owners in sorted(S.facets().items()):
        if len(owners) == 2:
            i, k = owners
            start, end = verts[i], verts[k]
            v = direction_vector(*facet)
            lam = _ratio_along((end[0] - start[0], end[1] - start[1]), v)
            if lam < 0:
                v = (-v[0], -v[1])
            edges.append(Edge(i, k, start, end, facet, v, abs(lam)))
        elif len(owners) == 1:
            i = owners[0]
            a, b = facet
            n = _primitive((b[1] - a[1], a[0] - b[0]))
            # inward normal: points towards the cell's remaining vertices
            other = next(p for p in S.cells[i].vertices if p not in facet)
            if n[0] * (other[0] - a[0]) + n[1] * (other[1] - a[1]) < 0:
                n = (-n[0], -n[1])
            weight = gcd(b[0] - a[0], b[1] - a[1])
            rays.append(Ray(i, verts[i], facet, n, weight))
        else:
            raise DegenerateLift(f"facet {facet} is shared by {len(owners)} cells")
    return TropicalCurve(S, tuple(verts), tuple(edges), tuple(rays))


def _angle_key(center: Point):
    def half(w):
        return 0 if (w[1] > 0 or (w[1] == 0 and w[0] > 0)) else 1

    def cmp(p, q):
        wp = (p[0] - center[0], p[1] - center[1])
        wq = (q[0] - center[0], q[1] - center[1])
        hp, hq = half(wp), half(wq)
        if hp != hq:
            return hp - hq
        c = wp[0] * wq[1] - wp[1] * wq[0]
        return -1 if c > 0 else (1 if c < 0 else 0)

    return cmp_to_key(cmp)


def sort_counterclockwise(center: Point, points) -> Tuple[Point, ...]:
    return tuple(sorted(points, key=_angle_key(center)))


def find_cycle(S: MarkedSubdivision, curve: Optional[TropicalCurve] = None) -> Optional[Cycle]:
    """The cycle determined by the interior lattice point, if it has one.

    The interior point determines a cycle when it is marked and is a vertex
    of every cell containing it.  ``curve`` supplies edge geometry; without
    it the returned cycle carries no edges and zero length.
    """
    inner = interior_lattice_points(S.parent)
    if len(inner) != 1:
        raise NotOneInteriorPoint(f"parent polygon has {len(inner)} interior lattice points")
    center = next(iter(inner))
    if center not in S.marked_points():
        return None
    around = [k for k, cell in enumerate(S.cells) if cell.contains(center)]
    if not around or any(center not in S.cells[k].vertices for k in around):
        return None

    neighbors = set()
    for k in around:
        vs = S.cells[k].vertices
        idx = vs.index(center)
        neighbors.add(vs[idx - 1])
        neighbors.add(vs[(idx + 1) % len(vs)])
    ordered = sort_counterclockwise(center, neighbors)

    flagged = tuple(
        (center, w)
        for w in ordered
        if gcd(w[0] - center[0], w[1] - center[1]) > 1
    )
    edges: Tuple[Edge, ...] = ()
    length = Fraction(0)
    if curve is not None:
        by_facet = {e.facet: e for e in curve.bounded_edges}
        edges = tuple(by_facet[tuple(sorted((center, w)))] for w in ordered)
        length = sum((e.length for e in edges), Fraction(0))
    return Cycle(center, ordered, edges, length, flagged)


def cycle_of(F: TropicalPoly) -> Tuple[TropicalCurve, Optional[Cycle]]:
    curve = dual_curve(F)
    return curve, find_cycle(curve.subdivision, curve)


def j_trop(F: TropicalPoly) -> Fraction:
    """Lattice length of the cycle, or zero when the curve has none."""
    inner = interior_lattice_points(MarkedPolygon(F.newton_vertices()))
    if len(inner) != 1:
        raise NotOneInteriorPoint(f"Newton polygon has {len(inner)} interior lattice points")
    _, cycle = cycle_of(F)
    return cycle.length if cycle is not None else Fraction(0)


def cycle_length_formula(u: Mapping[Point, object], center: Point, neighbors: Sequence[Point]) -> Fraction:
    """Closed-form cycle length from the lifts around the interior point.

    ``neighbors`` are the subdivision vertices adjacent to ``center`` in
    cyclic order.  With counterclockwise order every ``D`` is positive and
    the raw sum comes out as the negative of the geometric length, so the
    absolute value is returned.
    """
    k = len(neighbors)
    if k < 3:
        raise DegenerateFan("a cycle needs at least three neighbors")
    w = [(p[0] - center[0], p[1] - center[1]) for p in neighbors]

    def D(a, b):
        return w[a % k][0] * w[b % k][1] - w[a % k][1] * w[b % k][0]

    total = Fraction(0)
    uc = Fraction(u[center])
    for j in range(k):
        d_prev, d_next = D(j - 1, j), D(j, j + 1)
        if d_prev == 0 or d_next == 0:
            raise DegenerateFan(f"neighbors around {center} are collinear")
        total += (uc - Fraction(u[neighbors[j]])) * Fraction(d_prev + d_next + D(j + 1, j - 1), d_prev * d_next)
    return abs(total)
