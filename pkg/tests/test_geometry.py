import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import F5, F5_IMAGE, F5_PHI, MARKED_COUNTS
from tropj.errors import DegeneratePolygon, NotFullyMarked, NotOneInteriorPoint
from tropj.geometry import (
    IDENTITY,
    REFERENCE_LABELS,
    MarkedPolygon,
    UnimodularMap,
    apply_unimodular,
    classify_polygon,
    interior_lattice_points,
    reference_polygon,
    twice_area,
)
from tropj.laurent import format_poly, parse


def test_interior_points_examples():
    assert interior_lattice_points(MarkedPolygon([(0, 0), (3, 0), (0, 3)])) == {(1, 1)}
    assert interior_lattice_points(MarkedPolygon([(0, 0), (1, 0), (1, 1), (0, 1)])) == set()
    assert interior_lattice_points(MarkedPolygon([(0, 0), (2, 0), (2, 2), (0, 2)])) == {(1, 1)}
    with pytest.raises(DegeneratePolygon):
        interior_lattice_points(MarkedPolygon([(0, 0), (2, 2)]))


def test_vertices_counterclockwise():
    P = MarkedPolygon([(0, 3), (3, 0), (0, 0)])
    assert twice_area(P.vertices) > 0
    assert P.vertices[0] == (0, 0)


@pytest.mark.parametrize("label", REFERENCE_LABELS)
def test_reference_polygons(label):
    R = reference_polygon(label)
    assert interior_lattice_points(R) == {(1, 1)}
    assert len(R.marked) == MARKED_COUNTS[label]
    assert classify_polygon(R) == (label, IDENTITY)


def test_sixteen_labels_pairwise_inequivalent():
    assert len(REFERENCE_LABELS) == 16
    for a in REFERENCE_LABELS:
        for b in REFERENCE_LABELS:
            if a != b:
                assert classify_polygon(reference_polygon(a))[0] != b


def test_classify_transformed_square():
    phi = UnimodularMap(((2, 1), (1, 1)), (0, 0))
    P = phi.apply_polygon(reference_polygon("Qb"))
    label, psi = classify_polygon(P)
    assert label == "Qb"
    assert psi.apply_polygon(P) == reference_polygon("Qb")


def test_classify_errors():
    with pytest.raises(NotOneInteriorPoint):
        classify_polygon(MarkedPolygon.full([(0, 0), (2, 0), (0, 2)]))
    with pytest.raises(NotFullyMarked):
        classify_polygon(MarkedPolygon([(0, 0), (3, 0), (0, 3)]))


def test_determinant_checked():
    with pytest.raises(ValueError):
        UnimodularMap(((2, 0), (0, 1)), (0, 0))


def test_apply_unimodular_examples():
    f = parse(F5)
    phi = UnimodularMap(F5_PHI, (0, 0))
    assert format_poly(apply_unimodular(phi, f)) == F5_IMAGE
    assert apply_unimodular(IDENTITY, f) == f
    shift = UnimodularMap(((1, 0), (0, 1)), (1, 0))
    assert apply_unimodular(shift, f) == f * parse("x")


def random_map(rng):
    while True:
        m = [rng.randint(-3, 3) for _ in range(4)]
        if abs(m[0] * m[3] - m[1] * m[2]) == 1:
            return UnimodularMap(((m[0], m[1]), (m[2], m[3])), (rng.randint(-4, 4), rng.randint(-4, 4)))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(REFERENCE_LABELS), st.integers(0, 10 ** 6))
def test_classification_recovers_label(label, seed):
    phi = random_map(random.Random(seed))
    P = phi.apply_polygon(reference_polygon(label))
    assert len(interior_lattice_points(P)) == 1
    got, psi = classify_polygon(P)
    assert got == label
    assert psi.apply_polygon(P) == reference_polygon(label)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_map_algebra(seed):
    rng = random.Random(seed)
    phi, psi = random_map(rng), random_map(rng)
    p = (rng.randint(-5, 5), rng.randint(-5, 5))
    assert phi.inverse()(phi(p)) == p
    assert phi.compose(psi)(p) == phi(psi(p))
