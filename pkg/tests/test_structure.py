import random

import pytest
from hypothesis import given, settings, strategies as st

from cliffrep.algebra import CyclotomicScalar, Matrix
from cliffrep.clifford import (
    Form,
    Representation,
    commutant,
    construct_clock_shift,
    construct_tensor_diagonal,
    direct_sum,
    equivalent,
    intertwiners,
    irreducible,
    split,
    verify,
)

from fixtures import fermat_split, rotation_n1


def random_invertible(rng, m, N):
    while True:
        M = Matrix([[rng.randint(-2, 2) for _ in range(m)] for _ in range(m)], N)
        if M.det():
            return M


def test_tensor_algebra_dimension():
    report = irreducible(construct_tensor_diagonal(3, 3))
    assert report.algebra_dimension == 27 and not report.irreducible


def test_one_by_one_is_irreducible():
    report = irreducible(Representation((Matrix([[1]], 1),)))
    assert report.algebra_dimension == 1 and report.irreducible


def test_clock_shift_irreducible():
    for d in (2, 3, 4, 5):
        assert irreducible(construct_clock_shift(d)).irreducible


def test_fermat_split():
    result = fermat_split()
    assert result.status == "split"
    assert [p.m for p in result.parts] == [3, 3, 3]
    f = Form.fermat(3, 3)
    for p in result.parts:
        assert p.provenance == "split-output"
        assert verify(p, f).ok
        assert irreducible(p).algebra_dimension == 9
    for i in range(3):
        for j in range(i + 1, 3):
            assert intertwiners(result.parts[i], result.parts[j]) == []


def test_split_of_irreducible_is_trivial():
    rep = construct_clock_shift(3)
    result = split(rep, seed=0)
    assert result.status == "irreducible" and result.parts == (rep,)


def test_unsplittable_over_base_field():
    result = split(rotation_n1(), seed=0)
    assert result.status == "reducible-unsplit"
    assert result.verdicts == ("reducible-unsplit",)


def test_split_after_conjugation():
    rng = random.Random(5)
    R = fermat_split().parts[0]
    T = fermat_split().parts[1]
    big = direct_sum(R, T).conjugate(random_invertible(rng, 6, 3))
    result = split(big, seed=1)
    assert result.status == "split" and len(result) == 2
    matches = sorted(
        (equivalent(p, R)[0], equivalent(p, T)[0]) for p in result.parts
    )
    assert matches == [(False, True), (True, False)]


def test_intertwiner_dimensions():
    R = fermat_split().parts[0]
    assert len(commutant(R)) == 1
    RR = direct_sum(R, R)
    verdict, space = equivalent(RR, RR)
    assert verdict and space.dimension == 4


def test_reducible_equivalence_uses_grid_witness():
    R, T = fermat_split().parts[:2]
    a = direct_sum(R, T)
    b = direct_sum(T, R)
    verdict, space = equivalent(a, b)
    assert verdict and space.dimension == 2
    theta = space.witness
    assert theta.det()
    assert all(A @ theta == theta @ B for A, B in zip(a.matrices, b.matrices))
    verdict, space = equivalent(direct_sum(R, R), direct_sum(R, T))
    assert not verdict and space.dimension == 2


@settings(max_examples=10)
@given(seed=st.integers(0, 10**6))
def test_conjugation_preserves_equivalence(seed):
    rng = random.Random(seed)
    R = fermat_split().parts[rng.randrange(3)]
    theta = random_invertible(rng, 3, 3)
    verdict, space = equivalent(R, R.conjugate(theta))
    assert verdict and space.dimension == 1


def test_shape_mismatch():
    with pytest.raises(ValueError):
        equivalent(construct_clock_shift(3), construct_clock_shift(2, N=6).embed(6))
