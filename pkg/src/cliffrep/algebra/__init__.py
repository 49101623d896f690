from .cyclotomic import (
    ConductorMismatch,
    CyclotomicScalar,
    cyclotomic_polynomial,
    euler_phi,
    format_scalar,
    parse_scalar,
)
from .matrix import EchelonBasis, Matrix, block_diag, sparse_nullspace
from .poly import Poly, grlex_key, linear_form, monomials
from .polymatrix import PolyMatrix

__all__ = [
    "ConductorMismatch",
    "CyclotomicScalar",
    "EchelonBasis",
    "Matrix",
    "Poly",
    "PolyMatrix",
    "block_diag",
    "cyclotomic_polynomial",
    "euler_phi",
    "format_scalar",
    "grlex_key",
    "linear_form",
    "monomials",
    "parse_scalar",
    "sparse_nullspace",
]
