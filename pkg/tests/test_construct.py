import pytest

from cliffrep.algebra import CyclotomicScalar, Poly
from cliffrep.clifford import (
    DeterminantIdentityError,
    Form,
    clock_shift_form,
    construct_clock_shift,
    construct_tensor_diagonal,
    determinant_identity,
    direct_sum,
    nondegenerate,
    verify,
)
from cliffrep.clifford.construct import clock_matrix, shift_matrix
from cliffrep.clifford.relations import align, pencil_determinant

from fixtures import exact_fixtures


@pytest.mark.parametrize("d", range(2, 8))
def test_clock_shift_commutation(d):
    S, D = shift_matrix(d, d), clock_matrix(d, d)
    z = CyclotomicScalar.zeta(d, 1)
    assert D @ S == (S @ D).scale(z)
    assert verify(construct_clock_shift(d), clock_shift_form(d)).ok


def test_clock_shift_with_coefficients():
    i = CyclotomicScalar.zeta(4, 1)
    z8 = CyclotomicScalar.zeta(8, 1)
    rep = construct_clock_shift(2, 1, -1, 1, i, N=4)
    assert verify(rep, clock_shift_form(2, 1, -1, N=4)).ok
    rep = construct_clock_shift(4, 1, -1, 1, z8, N=8)
    assert verify(rep, clock_shift_form(4, 1, -1, N=8)).ok
    with pytest.raises(ValueError):
        construct_clock_shift(3, 2, 1, 1, 1)


@pytest.mark.parametrize("d,n", [(2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (4, 2), (4, 3), (5, 2)])
def test_tensor_construction(d, n):
    rep = construct_tensor_diagonal(d, n)
    assert rep.m == d ** (n - 1)
    assert verify(rep, Form.fermat(n, d)).ok


def test_pencil_determinant_of_clock_shift():
    x, y = Poly.variables(2, 3)
    assert pencil_determinant(construct_clock_shift(3)) == x**3 + y**3


@pytest.mark.parametrize("label,rep,f", exact_fixtures(), ids=lambda x: x if isinstance(x, str) else "")
def test_divisibility_and_unit(label, rep, f):
    assert nondegenerate(f)
    r, c = determinant_identity(rep, f)
    assert rep.m == r * f.d
    assert c**f.d == 1
    assert pencil_determinant(rep) == (align(rep, f).poly ** r) * c


def test_quadratic_pair_has_unit_minus_one():
    r, c = determinant_identity(construct_clock_shift(2), clock_shift_form(2))
    assert (r, c) == (1, -1)


def test_direct_sum_squares_determinant():
    rep = construct_clock_shift(3)
    f = clock_shift_form(3)
    assert determinant_identity(direct_sum(rep, rep), f) == (2, 1)


def test_det_identity_rejects_non_representations():
    rep = construct_clock_shift(3)
    with pytest.raises(DeterminantIdentityError):
        determinant_identity(rep, clock_shift_form(3, 1, 2))
