import random
from math import comb

import pytest
from hypothesis import given, strategies as st

from cliffrep.algebra import CyclotomicScalar, Matrix, Poly
from cliffrep.clifford import (
    Form,
    Representation,
    construct_clock_shift,
    construct_tensor_diagonal,
    generate_relations,
    transform_rep,
    verify,
    verify_via_relations,
)
from cliffrep.clifford.relations import words_with_content
from cliffrep.clifford.representation import zero_representation

from fixtures import exact_fixtures
from strategies import int_matrices


@given(st.integers(1, 4), st.integers(2, 5))
def test_relation_count(n, d):
    pres = generate_relations(Form.fermat(n, d))
    assert len(pres.relations) == comb(n + d - 1, d) == pres.expected_count


@given(st.lists(st.integers(0, 3), min_size=1, max_size=3))
def test_word_count_is_multinomial(content):
    from math import factorial

    words = words_with_content(tuple(content))
    expected = factorial(sum(content))
    for c in content:
        expected //= factorial(c)
    assert len(words) == len(set(words)) == expected


def test_quadratic_relations_are_classical():
    pres = generate_relations(Form.fermat(2, 2))
    got = {r.multidegree: (r.words, r.value) for r in pres.relations}
    assert got[(2, 0)] == (((0, 0),), 1)
    assert got[(0, 2)] == (((1, 1),), 1)
    assert got[(1, 1)] == (((0, 1), (1, 0)), 0)


def test_degree_one_rejected():
    with pytest.raises(ValueError):
        generate_relations(Form(Poly(2, 1, {(1, 0): 1})))


@pytest.mark.parametrize("label,rep,f", exact_fixtures(), ids=lambda x: x if isinstance(x, str) else "")
def test_fixtures_verify_both_ways(label, rep, f):
    assert verify(rep, f).ok
    assert verify_via_relations(rep, generate_relations(f)).ok


def test_one_by_one_cube():
    rep = Representation((Matrix([[1]], 1),))
    assert verify(rep, Form.fermat(1, 3)).ok


def test_zero_matrices_fail_exactly_where_f_is_nonzero():
    f = Form.fermat(3, 3)
    report = verify(zero_representation(2, 3), f)
    assert not report.ok
    assert {fl.monomial for fl in report.failures} == {(3, 0, 0), (0, 3, 0), (0, 0, 3)}


def test_conductor_embedding_of_form():
    rep = construct_clock_shift(2, N=4)
    assert verify(rep, Form.fermat(2, 2)).ok


@given(rows=int_matrices(3))
def test_linear_change_of_variables(rows):
    M = Matrix(rows, 3)
    if not M.det():
        return
    rep = construct_tensor_diagonal(3, 3)
    f = Form.fermat(3, 3, 3).change_of_variables(M)
    assert verify(transform_rep(rep, M), f).ok


@given(seed=st.integers(0, 10**6))
def test_routes_agree_on_corruptions(seed):
    rng = random.Random(seed)
    rep = construct_clock_shift(3)
    f = Form.fermat(2, 3)
    mats = [[list(r) for r in A.rows] for A in rep.matrices]
    k, i, j = rng.randrange(2), rng.randrange(3), rng.randrange(3)
    mats[k][i][j] = mats[k][i][j] + CyclotomicScalar.rational(rng.choice([-1, 1, 2]), 3)
    bad = Representation(tuple(Matrix(m, 3) for m in mats))
    a = verify(bad, f)
    b = verify_via_relations(bad, generate_relations(f))
    assert not a.ok and not b.ok
    assert a.failure_keys() == b.failure_keys()
