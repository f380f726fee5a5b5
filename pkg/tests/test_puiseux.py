from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from tropj.puiseux import INF, ONE, T, ZERO, PuiseuxNumber, ext_add, format_puiseux, val


def P(d):
    return PuiseuxNumber(d)


exps = st.fractions(min_value=-6, max_value=6, max_denominator=4)
coeffs = st.fractions(min_value=-9, max_value=9, max_denominator=5).filter(lambda c: c != 0)
puiseux = st.dictionaries(exps, coeffs, max_size=4).map(PuiseuxNumber)


def test_valuation_examples():
    assert val(P({Q(3, 2): 1, 3: 1})) == Q(3, 2)
    assert val(ZERO) == INF
    assert val(P({-1: 1, 0: 5})) == -1


def test_inverse_exponents():
    assert PuiseuxNumber.monomial(1, -1) * T == ONE


def test_normal_form_drops_zero_terms():
    assert P({1: 2, 2: 0}) == PuiseuxNumber.monomial(2, 1)
    assert (T - T).is_zero()


def test_leading_data():
    p = P({Q(1, 2): -3, 4: 1})
    assert p.leading_coefficient() == -3
    assert p.val() == Q(1, 2)


def test_division_by_monomial_only():
    assert (T ** 3) / T == T ** 2
    with pytest.raises(Exception):
        ONE / (ONE + T)


def test_ext_add():
    assert ext_add(INF, 3) == INF
    assert ext_add(Q(1, 2), 2) == Q(5, 2)


def test_format():
    assert format_puiseux(PuiseuxNumber.monomial(1, -1)) == "1/t"
    assert format_puiseux(PuiseuxNumber.monomial(Q(3, 2), Q(1, 2))) == "3/2*t^(1/2)"


@given(puiseux, puiseux)
def test_val_multiplicative(p, q):
    assert val(p * q) == ext_add(val(p), val(q))


@given(puiseux, puiseux)
def test_val_ultrametric(p, q):
    v = val(p + q)
    assert v >= min(val(p), val(q))
    if val(p) != val(q):
        assert v == min(val(p), val(q))


@given(puiseux, puiseux)
def test_ring_axioms(p, q):
    assert p + q == q + p
    assert p * q == q * p
    assert (p - q) + q == p


@given(puiseux, puiseux)
def test_equality_iff_terms(p, q):
    assert (p == q) == (p.terms == q.terms)
