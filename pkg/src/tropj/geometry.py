"""Lattice polygons, unimodular affine maps and the sixteen reflexive shapes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import DegeneratePolygon, NotFullyMarked, NotOneInteriorPoint

Point = Tuple[int, int]


def cross(o, a, b):
    """Twice the signed area of triangle ``o a b`` (positive if counterclockwise)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Iterable) -> Tuple:
    """Counterclockwise hull vertices, collinear points dropped (monotone chain).

    Works for any exactly comparable coordinates (ints, Fractions).
    """
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 2:
        return tuple(pts)

    def half(seq):
        chain = []
        for p in seq:
            while len(chain) >= 2 and cross(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    return tuple(hull)


def twice_area(vertices: Sequence) -> int:
    """Shoelace sum; twice the signed area of the polygon."""
    n = len(vertices)
    return sum(
        vertices[k][0] * vertices[(k + 1) % n][1] - vertices[(k + 1) % n][0] * vertices[k][1]
        for k in range(n)
    )


def point_in_polygon(p, vertices: Sequence, strict: bool = False) -> bool:
    """Membership in a convex counterclockwise polygon (closed unless ``strict``)."""
    n = len(vertices)
    if n == 1:
        return not strict and tuple(p) == tuple(vertices[0])
    if n == 2:
        if strict:
            return False
        a, b = vertices
        if cross(a, b, p) != 0:
            return False
        return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    for k in range(n):
        c = cross(vertices[k], vertices[(k + 1) % n], p)
        if c < 0 or (strict and c == 0):
            return False
    return True


def on_segment(p, a, b) -> bool:
    return point_in_polygon(p, (a, b))


@dataclass(frozen=True)
class MarkedPolygon:
    """A convex lattice polygon with a marked subset of its lattice points.

    ``vertices`` are stored counterclockwise, starting from the
    lexicographically smallest one; the marked set always contains them.
    """

    vertices: Tuple[Point, ...]
    marked: FrozenSet[Point]

    def __init__(self, vertices: Iterable[Point], marked: Optional[Iterable[Point]] = None):
        hull = convex_hull(tuple(map(int, v)) for v in vertices)
        marked_set = frozenset(tuple(map(int, p)) for p in (marked if marked is not None else ()))
        marked_set = marked_set | frozenset(hull)
        for p in marked_set:
            if not point_in_polygon(p, hull):
                raise ValueError(f"marked point {p} lies outside the polygon")
        object.__setattr__(self, "vertices", hull)
        object.__setattr__(self, "marked", marked_set)

    @classmethod
    def full(cls, vertices: Iterable[Point]) -> "MarkedPolygon":
        """The polygon with every lattice point marked."""
        poly = cls(vertices)
        return cls(poly.vertices, lattice_points(poly.vertices))

    @property
    def dimension(self) -> int:
        return min(len(self.vertices) - 1, 2)

    def area2(self) -> int:
        return twice_area(self.vertices) if len(self.vertices) >= 3 else 0

    def lattice_points(self) -> FrozenSet[Point]:
        return lattice_points(self.vertices)

    def edges(self) -> List[Tuple[Point, Point]]:
        n = len(self.vertices)
        if n < 3:
            return [tuple(self.vertices)] if n == 2 else []
        return [(self.vertices[k], self.vertices[(k + 1) % n]) for k in range(n)]

    def contains(self, p, strict: bool = False) -> bool:
        return point_in_polygon(p, self.vertices, strict=strict)


def lattice_points(vertices: Sequence[Point]) -> FrozenSet[Point]:
    if not vertices:
        return frozenset()
    xs = [v[0] for v in vertices]
    ys = [v[1] for v in vertices]
    return frozenset(
        (x, y)
        for x in range(min(xs), max(xs) + 1)
        for y in range(min(ys), max(ys) + 1)
        if point_in_polygon((x, y), vertices)
    )


def interior_lattice_points(P: MarkedPolygon) -> FrozenSet[Point]:
    """Lattice points strictly inside a two-dimensional polygon."""
    if P.dimension < 2:
        raise DegeneratePolygon(f"polygon {P.vertices} is not two-dimensional")
    return frozenset(p for p in P.lattice_points() if P.contains(p, strict=True))


def unique_interior_point(vertices: Sequence[Point]) -> Point:
    P = MarkedPolygon(vertices)
    if P.dimension < 2:
        raise NotOneInteriorPoint(f"polygon {P.vertices} is degenerate")
    inner = interior_lattice_points(P)
    if len(inner) != 1:
        raise NotOneInteriorPoint(
            f"polygon {P.vertices} has {len(inner)} interior lattice points"
        )
    return next(iter(inner))


# -- unimodular maps ---------------------------------------------------------


@dataclass(frozen=True)
class UnimodularMap:
    """``alpha -> M alpha + tau`` with ``M`` integral and ``det M = ±1``."""

    matrix: Tuple[Tuple[int, int], Tuple[int, int]] = ((1, 0), (0, 1))
    translation: Tuple[int, int] = (0, 0)

    def __post_init__(self):
        (a, b), (c, d) = self.matrix
        m = ((int(a), int(b)), (int(c), int(d)))
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "translation", (int(self.translation[0]), int(self.translation[1])))
        if abs(self.det) != 1:
            raise ValueError(f"matrix {m} is not unimodular (det={self.det})")

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    def __call__(self, p):
        (a, b), (c, d) = self.matrix
        return (a * p[0] + b * p[1] + self.translation[0], c * p[0] + d * p[1] + self.translation[1])

    def linear(self, v):
        (a, b), (c, d) = self.matrix
        return (a * v[0] + b * v[1], c * v[0] + d * v[1])

    def inverse(self) -> "UnimodularMap":
        (a, b), (c, d) = self.matrix
        det = self.det
        inv = ((d * det, -b * det), (-c * det, a * det))
        tx, ty = self.translation
        ((p, q), (r, s)) = inv
        return UnimodularMap(inv, (-(p * tx + q * ty), -(r * tx + s * ty)))

    def compose(self, other: "UnimodularMap") -> "UnimodularMap":
        """``self ∘ other``."""
        (a, b), (c, d) = self.matrix
        (e, f), (g, h) = other.matrix
        m = ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))
        return UnimodularMap(m, self(other.translation))

    def dual(self, point):
        """Image of a tropical-curve point under the induced map ``(M^t)^{-1}``."""
        (a, b), (c, d) = self.matrix
        det = self.det
        # (M^t)^{-1} = adj(M)^t / det
        return (
            Fraction(d * point[0] - c * point[1], det),
            Fraction(-b * point[0] + a * point[1], det),
        )

    def is_identity(self) -> bool:
        return self.matrix == ((1, 0), (0, 1)) and self.translation == (0, 0)

    def apply_polygon(self, P: MarkedPolygon) -> MarkedPolygon:
        return MarkedPolygon([self(v) for v in P.vertices], [self(p) for p in P.marked])


IDENTITY = UnimodularMap()


def apply_unimodular(phi: UnimodularMap, obj):
    """Push a polynomial, tropical polynomial, polygon or subdivision through ``phi``.

    Exponents move, coefficients and lifts are carried along unchanged.
    """
    from .laurent import LaurentPoly
    from .subdivision import MarkedSubdivision, TropicalPoly

    if isinstance(obj, LaurentPoly):
        return obj.map_exponents(phi)
    if isinstance(obj, TropicalPoly):
        return TropicalPoly({phi(p): u for p, u in obj.lifts.items()})
    if isinstance(obj, MarkedPolygon):
        return phi.apply_polygon(obj)
    if isinstance(obj, MarkedSubdivision):
        return MarkedSubdivision(
            tuple(phi.apply_polygon(c) for c in obj.cells), phi.apply_polygon(obj.parent)
        )
    raise TypeError(f"cannot apply a unimodular map to {type(obj).__name__}")


# -- the sixteen polygons with one interior lattice point --------------------

REFERENCE_VERTICES: Dict[str, Tuple[Point, ...]] = {
    "Qa": ((0, 0), (4, 0), (0, 2)),
    "Qb": ((0, 0), (2, 0), (2, 2), (0, 2)),
    "Qc": ((0, 0), (3, 0), (0, 3)),
    "Qca": ((0, 0), (3, 0), (1, 2), (0, 2)),
    "Qcb": ((0, 0), (2, 0), (2, 1), (1, 2), (0, 2)),
    "Qcc": ((0, 0), (3, 0), (1, 2), (0, 1)),
    "Qcd": ((1, 0), (2, 0), (2, 1), (1, 2), (0, 2), (0, 1)),
    "Qce": ((0, 0), (2, 0), (2, 1), (1, 2), (0, 1)),
    "Qcf": ((0, 0), (2, 0), (1, 2), (0, 2)),
    "Qcg": ((0, 0), (3, 0), (1, 2)),
    "Qch": ((0, 0), (2, 0), (2, 1), (1, 2)),
    "Qci": ((1, 0), (2, 0), (2, 1), (1, 2), (0, 1)),
    "Qcj": ((1, 0), (2, 1), (1, 2), (0, 1)),
    "Qck": ((1, 0), (2, 0), (1, 2), (0, 1)),
    "Qcl": ((0, 0), (2, 0), (1, 2)),
    "Qcm": ((2, 0), (1, 2), (0, 1)),
}

REFERENCE_LABELS: Tuple[str, ...] = tuple(REFERENCE_VERTICES)
INTERIOR_POINT: Point = (1, 1)

# The three marked sets every reference polygon embeds into.
BASE_CASE = {label: ("Aa" if label == "Qa" else "Ab" if label == "Qb" else "Ac") for label in REFERENCE_LABELS}
CASE_POLYGON = {"Aa": "Qa", "Ab": "Qb", "Ac": "Qc"}


def reference_polygon(label: str) -> MarkedPolygon:
    return MarkedPolygon.full(REFERENCE_VERTICES[label])


def case_points(case: str) -> Tuple[Point, ...]:
    """Lattice points of the base marked polygon ``case`` in lexicographic order."""
    return tuple(sorted(reference_polygon(CASE_POLYGON[case]).marked))


def _primitive(v):
    from math import gcd

    g = gcd(v[0], v[1])
    return (v[0] // g, v[1] // g)


def _solve_integer_map(src, dst) -> Optional[Tuple[Tuple[int, int], Tuple[int, int]]]:
    """Integer matrix ``M`` with ``M src[k] = dst[k]`` for two independent vectors."""
    (a1, a2), (b1, b2) = src
    det = a1 * b2 - a2 * b1
    if det == 0:
        return None
    (p1, p2), (q1, q2) = dst
    # M = [p q] * [a b]^{-1}
    m11 = Fraction(p1 * b2 - q1 * a2, det)
    m12 = Fraction(-p1 * b1 + q1 * a1, det)
    m21 = Fraction(p2 * b2 - q2 * a2, det)
    m22 = Fraction(-p2 * b1 + q2 * a1, det)
    entries = (m11, m12, m21, m22)
    if any(e.denominator != 1 for e in entries):
        return None
    m = ((int(m11), int(m12)), (int(m21), int(m22)))
    if abs(m[0][0] * m[1][1] - m[0][1] * m[1][0]) != 1:
        return None
    return m


def _corner_frames(vertices: Sequence[Point]):
    """Per vertex: (vertex, primitive vector to next, primitive vector to previous)."""
    n = len(vertices)
    for k in range(n):
        v = vertices[k]
        nxt = vertices[(k + 1) % n]
        prv = vertices[k - 1]
        yield v, _primitive((nxt[0] - v[0], nxt[1] - v[1])), _primitive((prv[0] - v[0], prv[1] - v[1]))


def unimodular_equivalences(P: MarkedPolygon, R: MarkedPolygon):
    """Yield every unimodular map carrying the lattice points of ``P`` onto those of ``R``.

    A unimodular map sends vertices to vertices and the two edge directions
    at a vertex to the edge directions at the image vertex, so matching
    corner frames enumerates all candidates.
    """
    if len(P.vertices) != len(R.vertices) or P.area2() != R.area2():
        return
    p_points = P.lattice_points()
    r_points = R.lattice_points()
    if len(p_points) != len(r_points):
        return
    p0, e1, e2 = next(_corner_frames(P.vertices))
    seen = set()
    for w, f1, f2 in _corner_frames(R.vertices):
        for target in ((f1, f2), (f2, f1)):
            m = _solve_integer_map((e1, e2), target)
            if m is None:
                continue
            lin = UnimodularMap(m)
            img = lin(p0)
            phi = UnimodularMap(m, (w[0] - img[0], w[1] - img[1]))
            if phi in seen:
                continue
            seen.add(phi)
            if frozenset(phi(p) for p in p_points) == r_points:
                yield phi


def classify_polygon(P: MarkedPolygon) -> Tuple[str, UnimodularMap]:
    """Label of the reference polygon equivalent to ``P`` and a map onto it.

    ``P`` must have one interior lattice point and all lattice points marked.
    The identity is returned whenever ``P`` already is a reference polygon.
    """
    if P.dimension < 2:
        raise NotOneInteriorPoint(f"polygon {P.vertices} is degenerate")
    inner = interior_lattice_points(P)
    if len(inner) != 1:
        raise NotOneInteriorPoint(f"polygon {P.vertices} has {len(inner)} interior lattice points")
    if P.marked != P.lattice_points():
        raise NotFullyMarked(f"polygon {P.vertices} does not mark all of its lattice points")
    return classify_vertices(P.vertices)


def classify_vertices(vertices: Sequence[Point]) -> Tuple[str, UnimodularMap]:
    """Like :func:`classify_polygon` but ignores the marking."""
    P = MarkedPolygon(vertices)
    unique_interior_point(P.vertices)
    for label in REFERENCE_LABELS:
        R = reference_polygon(label)
        maps = list(unimodular_equivalences(P, R))
        if not maps:
            continue
        for phi in maps:
            if phi.is_identity():
                return label, phi
        maps.sort(key=lambda m: (sum(abs(x) for row in m.matrix for x in row), m.matrix, m.translation))
        return label, maps[0]
    raise NotOneInteriorPoint(f"polygon {P.vertices} matches no reference polygon")
