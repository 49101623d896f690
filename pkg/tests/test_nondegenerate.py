import pytest
from hypothesis import given, strategies as st

from cliffrep.algebra import Matrix, Poly
from cliffrep.clifford import Form, nondegenerate
from cliffrep.clifford.nondegenerate import binary_resultant

from strategies import int_matrices


def ternary(terms, N=1):
    return Form(Poly(3, N, terms))


FERMAT = {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1}


@pytest.mark.parametrize(
    "terms,expected",
    [
        (FERMAT, True),
        ({**FERMAT, (1, 1, 1): -3}, False),  # product of three lines
        ({**FERMAT, (1, 1, 1): 1}, True),
        ({(0, 2, 1): 1, (3, 0, 0): -1}, False),  # cuspidal cubic
        ({(0, 2, 1): 1, (3, 0, 0): -1, (2, 0, 1): -1}, False),  # nodal cubic
        ({(0, 2, 1): 1, (3, 0, 0): -1, (1, 0, 2): 1}, True),
        ({(1, 1, 1): 1}, False),
        ({(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1}, True),
        ({(2, 0, 0): 1, (0, 2, 0): 1}, False),
        ({(4, 0, 0): 1, (0, 4, 0): 1, (0, 0, 4): 1}, True),
        ({(4, 0, 0): 1, (0, 4, 0): 1, (0, 0, 4): 1, (2, 2, 0): 2}, False),
    ],
)
def test_ternary_forms(terms, expected):
    assert nondegenerate(ternary(terms), seed=0) is expected


def test_binary_forms():
    assert nondegenerate(Form.fermat(2, 3))
    assert nondegenerate(Form(Poly(2, 1, {(2, 1): 1, (0, 3): 1})))
    assert not nondegenerate(Form(Poly(2, 1, {(2, 1): 1})))  # x^2 y, double root
    assert not nondegenerate(Form(Poly(2, 1, {(4, 0): 1, (2, 2): 2, (0, 4): 1})))


def test_unary_and_linear():
    assert nondegenerate(Form.fermat(1, 5))
    assert nondegenerate(Form(Poly(3, 1, {(1, 0, 0): 1, (0, 1, 0): 2})))


def test_unsupported_arity():
    with pytest.raises(ValueError):
        nondegenerate(Form.fermat(4, 3))


def test_resultant_of_products_of_linear_forms():
    x, y = Poly.variables(2)
    # Res(x - 2y, x - 3y) is +-1 times (3 - 2)
    assert abs(complex(binary_resultant(x - y * 2, x - y * 3, 1, 1))) == 1
    assert not binary_resultant((x - y) * (x + y), (x - y) * x, 2, 2)


@given(rows=int_matrices(3), seed=st.integers(0, 50))
def test_invariant_under_coordinate_change(rows, seed):
    M = Matrix(rows, 1)
    if not M.det():
        return
    assert nondegenerate(Form.fermat(3, 3).change_of_variables(M), seed=seed)
    assert not nondegenerate(ternary({**FERMAT, (1, 1, 1): -3}).change_of_variables(M), seed=seed)
