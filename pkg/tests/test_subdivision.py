import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from oracles import F3, F3_CELLS, F3_LIFTS, F3_TERMS, F5, F5_CELLS, F6, F6_LIFTS
from tropj.errors import DegenerateLift
from tropj.geometry import (
    REFERENCE_LABELS,
    UnimodularMap,
    apply_unimodular,
    reference_polygon,
    twice_area,
)
from tropj.laurent import parse
from tropj.puiseux import INF
from tropj.subdivision import TropicalPoly, lower_hull_subdivision, subdivision_area_check, tropicalize


def cells_of(S):
    return {frozenset(c.vertices) for c in S.cells}


def test_tropicalize_examples():
    F = tropicalize(parse(F3))
    assert F.support() == F3_LIFTS
    assert set(F.terms_text()[4:-1].split(",")) == set(F3_TERMS[4:-1].split(","))
    assert tropicalize(parse(F6)).lifts == F6_LIFTS


def test_tropicalize_with_marked_set():
    f = parse("xy + t*(y+x^2+x^2y^2) + t^3")
    F = tropicalize(f, F3_LIFTS)
    assert F.lifts[(1, 0)] == INF
    assert set(F.support()) == set(F3_LIFTS) - {(1, 0)}


def test_constant_polynomial():
    F = tropicalize(parse("1"))
    assert F.lifts == {(0, 0): 0}
    with pytest.raises(DegenerateLift):
        lower_hull_subdivision(F)


def test_four_cell_example_subdivision():
    S = lower_hull_subdivision(tropicalize(parse(F3)))
    assert cells_of(S) == F3_CELLS
    assert S.marked_points() == set(F3_LIFTS)


def test_coplanar_lift_single_cell():
    R = reference_polygon("Qb")
    S = lower_hull_subdivision(TropicalPoly({p: 0 for p in R.marked}))
    assert len(S.cells) == 1
    assert set(S.cells[0].vertices) == set(R.vertices)
    assert S.cells[0].marked == R.marked


def test_transform_example_subdivision():
    S = lower_hull_subdivision(tropicalize(parse(F5)))
    assert cells_of(S) == F5_CELLS


def test_infinite_lifts_never_marked():
    u = {p: 0 for p in reference_polygon("Qc").marked}
    u[(1, 0)] = INF
    S = lower_hull_subdivision(TropicalPoly(u))
    assert (1, 0) not in S.marked_points()


def test_collinear_lifts_rejected():
    with pytest.raises(DegenerateLift):
        lower_hull_subdivision(TropicalPoly({(0, 0): 0, (1, 1): 1, (2, 2): 0}))


def random_lifts(seed, label):
    rng = random.Random(seed)
    return {p: Q(rng.randint(-12, 12), rng.randint(1, 3)) for p in reference_polygon(label).marked}


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(REFERENCE_LABELS), st.integers(0, 10 ** 6))
def test_cells_tile_parent(label, seed):
    S = lower_hull_subdivision(TropicalPoly(random_lifts(seed, label)))
    assert subdivision_area_check(S)
    assert sum(twice_area(c.vertices) for c in S.cells) == twice_area(S.parent.vertices)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(REFERENCE_LABELS), st.integers(0, 10 ** 6))
def test_marked_points_on_lower_face(label, seed):
    u = random_lifts(seed, label)
    F = TropicalPoly(u)
    S = lower_hull_subdivision(F)
    from tropj.subdivision import face_gradient

    for cell in S.cells:
        b, c = face_gradient(F, cell)
        a0 = u[cell.vertices[0]] - b * cell.vertices[0][0] - c * cell.vertices[0][1]
        for p, h in u.items():
            plane = a0 + b * p[0] + c * p[1]
            assert h >= plane
            if cell.contains(p):
                assert (h == plane) == (p in cell.marked)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(REFERENCE_LABELS), st.integers(0, 10 ** 6))
def test_unimodular_equivariance(label, seed):
    rng = random.Random(seed)
    while True:
        m = [rng.randint(-3, 3) for _ in range(4)]
        if abs(m[0] * m[3] - m[1] * m[2]) == 1:
            break
    phi = UnimodularMap(((m[0], m[1]), (m[2], m[3])), (rng.randint(-3, 3), rng.randint(-3, 3)))
    F = TropicalPoly(random_lifts(seed, label))
    S = lower_hull_subdivision(F)
    image = lower_hull_subdivision(apply_unimodular(phi, F))
    assert image.same_as(apply_unimodular(phi, S))
