import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from oracles import (
    F3, F3_EDGE_LENGTHS, F3_JTROP, F3_NEIGHBORS, F3_VERTICES, F5, F5_JTROP, F5_PHI, F6, F6_JTROP, F6_VERTICES,
)
from tropj.curve import (
    cycle_length_formula,
    cycle_of,
    direction_vector,
    dual_curve,
    find_cycle,
    j_trop,
    lattice_length,
)
from tropj.errors import DegenerateFan, NotOneInteriorPoint
from tropj.geometry import REFERENCE_LABELS, UnimodularMap, apply_unimodular, reference_polygon
from tropj.laurent import parse
from tropj.subdivision import TropicalPoly, lower_hull_subdivision, tropicalize


def test_direction_vectors():
    assert direction_vector((0, 1), (1, 1)) == (0, -1)
    assert direction_vector((1, 0), (0, 1)) == (1, 1)
    assert direction_vector((1, 1), (2, 2)) == (1, -1)


def test_lattice_length_examples():
    assert lattice_length((1, -2), (1, 1), ((0, 1), (1, 1))) == 3
    assert lattice_length((-1, 0), (1, -2), ((1, 1), (2, 2))) == 2
    assert lattice_length((1, 1), (1, 1), ((0, 1), (1, 1))) == 0


def test_four_cell_example_curve():
    curve, cycle = cycle_of(tropicalize(parse(F3)))
    assert set(curve.vertices) == F3_VERTICES
    assert cycle.center == (1, 1)
    k = cycle.neighbors.index(F3_NEIGHBORS[0])
    assert cycle.neighbors[k:] + cycle.neighbors[:k] == F3_NEIGHBORS
    assert sorted(e.length for e in cycle.edges) == F3_EDGE_LENGTHS
    assert cycle.length == F3_JTROP
    assert cycle.flagged_facets == ()


def test_triangle_example_curve():
    F = tropicalize(parse(F6))
    curve, cycle = cycle_of(F)
    assert set(curve.vertices) == F6_VERTICES
    assert len(curve.bounded_edges) == 3
    assert len(curve.rays) == 3
    assert len(cycle.edges) == 3
    assert j_trop(F) == F6_JTROP


def test_transform_example():
    f = parse(F5)
    assert j_trop(tropicalize(f)) == F5_JTROP
    g = apply_unimodular(UnimodularMap(F5_PHI, (0, 0)), f)
    assert j_trop(tropicalize(g)) == F5_JTROP


def test_single_cell_curve():
    F = TropicalPoly({p: 0 for p in reference_polygon("Qc").marked})
    curve, cycle = cycle_of(F)
    assert len(curve.vertices) == 1
    assert curve.bounded_edges == ()
    assert cycle is None
    assert j_trop(F) == 0


def test_jtrop_requires_one_interior_point():
    with pytest.raises(NotOneInteriorPoint):
        j_trop(TropicalPoly({(0, 0): 0, (1, 0): 0, (0, 1): 0}))


def test_formula_examples():
    assert cycle_length_formula({(1, 1): 0, **{w: 1 for w in F3_NEIGHBORS}}, (1, 1), F3_NEIGHBORS) == 7
    nb = ((2, 0), (1, 2), (0, 1))
    u = {(1, 1): 0, **{w: Q(3, 2) for w in nb}}
    assert cycle_length_formula(u, (1, 1), nb) == Q(27, 2)
    assert cycle_length_formula({k: 2 * v for k, v in u.items()}, (1, 1), nb) == 27
    with pytest.raises(DegenerateFan):
        cycle_length_formula(u, (1, 1), ((0, 1), (2, 1)))


def random_F(label, seed, center_low=True):
    rng = random.Random(seed)
    u = {}
    for p in reference_polygon(label).marked:
        lo, hi = (-10, 0) if (p == (1, 1) and center_low) else (0, 10)
        u[p] = Q(rng.randint(lo * 3, hi * 3), 3)
    return TropicalPoly(u)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(REFERENCE_LABELS), st.integers(0, 10 ** 6))
def test_duality_counts_and_certificate(label, seed):
    F = random_F(label, seed)
    curve = dual_curve(F)
    S = curve.subdivision
    facets = S.facets()
    assert len(curve.vertices) == len(S.cells)
    assert len(curve.bounded_edges) == sum(len(v) == 2 for v in facets.values())
    assert len(curve.rays) == sum(len(v) == 1 for v in facets.values())
    for cell, (x, y) in zip(S.cells, curve.vertices):
        values = {p: F.lifts[p] + p[0] * x + p[1] * y for p in F.support()}
        m = min(values.values())
        assert {p for p, v in values.items() if v == m} == set(cell.marked)
    for e in curve.bounded_edges:
        a, b = e.facet
        assert e.direction[0] * (b[0] - a[0]) + e.direction[1] * (b[1] - a[1]) == 0


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(REFERENCE_LABELS), st.integers(0, 10 ** 6))
def test_formula_matches_geometry(label, seed):
    F = random_F(label, seed)
    _, cycle = cycle_of(F)
    if cycle is not None:
        assert cycle_length_formula(F.lifts, cycle.center, cycle.neighbors) == cycle.length
        assert cycle.length > 0


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(REFERENCE_LABELS), st.integers(0, 10 ** 6), st.integers(1, 7))
def test_jtrop_linear_on_cones(label, seed, k):
    F = random_F(label, seed)
    lam = Q(k, 3)
    assert j_trop(F.scaled(lam)) == lam * j_trop(F)
    # a small perturbation usually stays in the same cone
    rng = random.Random(seed + 1)
    G = TropicalPoly({p: u + Q(rng.randint(-5, 5), 1000) for p, u in F.lifts.items()})
    S = lower_hull_subdivision(F)
    if lower_hull_subdivision(G).same_as(S) and lower_hull_subdivision(F + G).same_as(S):
        assert j_trop(F + G) == j_trop(F) + j_trop(G)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(REFERENCE_LABELS), st.integers(0, 10 ** 6))
def test_jtrop_unimodular_invariance(label, seed):
    rng = random.Random(seed)
    while True:
        m = [rng.randint(-3, 3) for _ in range(4)]
        if abs(m[0] * m[3] - m[1] * m[2]) == 1:
            break
    phi = UnimodularMap(((m[0], m[1]), (m[2], m[3])), (rng.randint(-3, 3), rng.randint(-3, 3)))
    F = random_F(label, seed)
    assert j_trop(apply_unimodular(phi, F)) == j_trop(F)


def test_unmarked_center_has_no_cycle():
    u = {p: 0 for p in reference_polygon("Qb").marked}
    u[(1, 1)] = 5
    assert find_cycle(lower_hull_subdivision(TropicalPoly(u))) is None
