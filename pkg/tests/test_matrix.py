import numpy as np
import pytest
from hypothesis import given, strategies as st

from cliffrep.algebra import CyclotomicScalar, EchelonBasis, Matrix, Poly, PolyMatrix

from strategies import int_matrices, matrices, points


@given(A=matrices(3, 3), B=matrices(3, 3))
def test_det_is_multiplicative(A, B):
    assert (A @ B).det() == A.det() * B.det()


@given(A=matrices(4, 3))
def test_inverse_and_rank(A):
    if A.det():
        assert A @ A.inverse() == Matrix.identity(3, 4)
        assert A.rank() == 3
    else:
        assert A.rank() < 3


@given(rows=int_matrices(4, -2, 2))
def test_rank_nullity(rows):
    A = Matrix(rows, 5)
    null = A.nullspace()
    assert A.rank() + len(null) == 4
    for v in null:
        assert (A @ Matrix.from_columns([v], 5)).is_zero()


@given(A=matrices(1, 4))
def test_numeric_det_oracle(A):
    assert abs(complex(A.det()) - np.linalg.det(A.numeric())) < 1e-6 * max(1, abs(complex(A.det())))


def test_rank_over_cyclotomic_field():
    z = CyclotomicScalar.zeta(3, 1)
    assert Matrix([[1, z], [z * z, 1]], 3).rank() == 1


def test_echelon_basis_membership():
    eb = EchelonBasis(3, 1)
    one = CyclotomicScalar.one(1)
    assert eb.add({0: one, 1: one}) is not None
    assert eb.add({2: one}) is not None
    assert eb.contains({0: one * 2, 1: one * 2, 2: one * 5})
    assert eb.add({0: one, 1: one, 2: one}) is None


def random_pencil(rng, m, n, N=1):
    mats = [Matrix([[int(x) for x in row] for row in rng.integers(-2, 3, size=(m, m))], N) for _ in range(n)]
    return PolyMatrix.pencil(mats)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_cofactor_matches_bareiss(m):
    rng = np.random.default_rng(m)
    for _ in range(3):
        P = random_pencil(rng, m, 3)
        assert P.det("cofactor") == P.det("bareiss")


@given(pt=points(2), seed=st.integers(0, 10**6))
def test_det_commutes_with_evaluation(pt, seed):
    P = random_pencil(np.random.default_rng(seed), 5, 2)
    assert P.det().evaluate(pt) == P.evaluate(pt).det()


def test_char_data_of_clock_shift():
    from cliffrep.clifford import construct_clock_shift

    rep = construct_clock_shift(3)
    e1, e2, e3 = rep.pencil().char_data()
    x, y = Poly.variables(2, 3)
    assert e1.is_zero() and e2.is_zero()
    assert e3 == x**3 + y**3
