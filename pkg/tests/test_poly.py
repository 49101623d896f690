import pytest
from hypothesis import given, strategies as st

from cliffrep.algebra import CyclotomicScalar, Poly, linear_form, monomials
from cliffrep.algebra.poly import grlex_key

from strategies import points, polys


@given(p=polys(2, 3), q=polys(2, 3), pt=points(2))
def test_product_matches_pointwise_product(p, q, pt):
    assert (p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt)
    assert (p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt)


@given(p=polys(3, 1), q=polys(3, 1))
def test_leibniz(p, q):
    for i in range(3):
        assert (p * q).derivative(i) == p.derivative(i) * q + p * q.derivative(i)


@given(p=polys(2, 4), q=polys(2, 4))
def test_exact_division(p, q):
    if q.is_zero():
        return
    assert (p * q).exact_div(q) == p


@given(p=polys(3, 5))
def test_json_round_trip(p):
    if p.is_zero():
        return
    assert Poly.from_json(p.to_json(), p.N) == p


def test_terms_are_graded_lex():
    x, y, z = Poly.variables(3)
    f = (x + y + z) ** 3
    keys = list(f.terms)
    assert keys == sorted(keys, key=grlex_key)
    assert len(keys) == len(monomials(3, 3)) == 10


def test_sum_of_cubes_factorisation():
    w = CyclotomicScalar.zeta(3, 1)
    x, y = Poly.variables(2, 3)
    lhs = (x + y) * (x + y * w) * (x + y * w * w)
    assert lhs == x**3 + y**3


def test_substitute_linear_forms():
    x, y = Poly.variables(2)
    f = x**2 - y**2
    g = f.substitute([linear_form([1, 1]), linear_form([1, -1])])
    assert g == Poly(2, 1, {(1, 1): 4})


def test_bad_exponent_rejected():
    with pytest.raises(ValueError):
        Poly(2, 1, {(1,): 1})


@given(st.integers(1, 4), st.integers(0, 5))
def test_monomial_count(n, d):
    from math import comb

    assert len(monomials(n, d)) == comb(n + d - 1, d)
