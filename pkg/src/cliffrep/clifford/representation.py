from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..algebra import ConductorMismatch, CyclotomicScalar, Matrix, PolyMatrix, block_diag

PROVENANCES = ("constructed", "user-supplied", "split-output")


@dataclass(frozen=True)
class Representation:
    """Square matrices A_1..A_n of size m over Q(zeta_N)."""

    matrices: tuple[Matrix, ...]
    provenance: str = "user-supplied"
    N: int = field(init=False)

    def __post_init__(self):
        mats = tuple(self.matrices)
        if not mats:
            raise ValueError("a representation needs at least one matrix")
        object.__setattr__(self, "matrices", mats)
        object.__setattr__(self, "N", mats[0].N)
        m = mats[0].nrows
        for A in mats:
            if A.shape != (m, m):
                raise ValueError("all matrices must be square of the same size")
            if A.N != self.N:
                raise ConductorMismatch("all matrices must share one conductor")

    @property
    def m(self) -> int:
        return self.matrices[0].nrows

    @property
    def n(self) -> int:
        return len(self.matrices)

    def pencil(self) -> PolyMatrix:
        return PolyMatrix.pencil(self.matrices)

    def embed(self, N2: int) -> Representation:
        return Representation(tuple(A.embed(N2) for A in self.matrices), self.provenance)

    def conjugate(self, theta: Matrix) -> Representation:
        """theta A_i theta^-1."""
        inv = theta.inverse()
        return Representation(tuple(theta @ A @ inv for A in self.matrices), self.provenance)

    def with_provenance(self, tag: str) -> Representation:
        return Representation(self.matrices, tag)

    def numeric(self):
        import numpy as np

        return np.stack([A.numeric() for A in self.matrices])

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "N": self.N,
            "matrices": [A.to_json() for A in self.matrices],
            "provenance": self.provenance,
        }

    @classmethod
    def from_json(cls, data) -> Representation:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            N = int(data["N"])
            mats = tuple(Matrix.from_json(M, N) for M in data["matrices"])
        except (KeyError, TypeError) as exc:
            raise ValueError("representation JSON needs 'N' and 'matrices'") from exc
        rep = cls(mats, data.get("provenance", "user-supplied"))
        if "m" in data and int(data["m"]) != rep.m:
            raise ValueError(f"declared m={data['m']} but matrices are {rep.m}x{rep.m}")
        if "n" in data and int(data["n"]) != rep.n:
            raise ValueError(f"declared n={data['n']} but {rep.n} matrices given")
        return rep


def direct_sum(a: Representation, b: Representation) -> Representation:
    """Block-diagonal sum A_i (+) B_i."""
    if a.n != b.n:
        raise ValueError(f"arity mismatch: {a.n} vs {b.n} matrices")
    if a.N != b.N:
        raise ConductorMismatch(f"conductor mismatch: {a.N} vs {b.N}")
    return Representation(tuple(block_diag([A, B]) for A, B in zip(a.matrices, b.matrices)), "constructed")


def transform_rep(rep: Representation, M: Matrix) -> Representation:
    """B_j = sum_i M_ij A_i, the partner of ``Form.change_of_variables``."""
    if M.shape != (rep.n, rep.n):
        raise ValueError(f"transform needs a {rep.n}x{rep.n} matrix")
    if M.N != rep.N:
        M = M.embed(rep.N)
    if not M.det():
        raise ValueError("transform matrix is singular")
    out = []
    for j in range(rep.n):
        B = Matrix.zeros(rep.m, rep.m, rep.N)
        for i in range(rep.n):
            c = M.rows[i][j]
            if c:
                B = B + rep.matrices[i].scale(c)
        out.append(B)
    return Representation(tuple(out), rep.provenance)


def zero_representation(m: int, n: int, N: int = 1) -> Representation:
    return Representation(tuple(Matrix.zeros(m, m, N) for _ in range(n)), "user-supplied")


def scalar_matrix(c: CyclotomicScalar, m: int) -> Matrix:
    return Matrix.identity(m, c.N).scale(c)
