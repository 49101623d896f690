from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Sequence

from ..algebra import CyclotomicScalar, Matrix, Poly, linear_form


@dataclass(frozen=True)
class Form:
    """Nonzero homogeneous polynomial f of degree d >= 1 in n variables."""

    poly: Poly

    def __post_init__(self):
        if self.poly.is_zero():
            raise ValueError("a form must have at least one nonzero coefficient")
        if not self.poly.is_homogeneous():
            raise ValueError("form is not homogeneous")

    @classmethod
    def from_coeffs(cls, coeffs: Mapping[tuple[int, ...], object], N: int = 1) -> Form:
        n = len(next(iter(coeffs)))
        return cls(Poly(n, N, coeffs))

    @classmethod
    def diagonal(cls, coeffs: Sequence, d: int, N: int = 1) -> Form:
        """c_1 x_1^d + ... + c_n x_n^d."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            mono = tuple(d if k == i else 0 for k in range(n))
            terms[mono] = c
        return cls(Poly(n, N, terms))

    @classmethod
    def fermat(cls, n: int, d: int, N: int = 1) -> Form:
        return cls.diagonal([1] * n, d, N)

    @property
    def n(self) -> int:
        return self.poly.n

    @property
    def d(self) -> int:
        return self.poly.degree()

    @property
    def N(self) -> int:
        return self.poly.N

    def coefficient(self, mono) -> CyclotomicScalar:
        return self.poly.coefficient(mono)

    def embed(self, N2: int) -> Form:
        return Form(self.poly.embed(N2))

    def over(self, N2: int) -> Form:
        """The same form read in Q(zeta_N2); requires N | N2."""
        return self.embed(N2)

    def change_of_variables(self, M: Matrix) -> Form:
        """f(Mx), i.e. substitute x_i -> sum_j M_ij x_j."""
        if M.shape != (self.n, self.n):
            raise ValueError(f"change of variables needs a {self.n}x{self.n} matrix")
        if not M.det():
            raise ValueError("change of variables matrix is singular")
        f = self.poly.embed(M.N) if M.N != self.N else self.poly
        images = [linear_form(row, M.N) for row in M.rows]
        return Form(f.substitute(images))

    def to_json(self) -> dict:
        return self.poly.to_json()

    @classmethod
    def from_json(cls, data, N: int | None = None) -> Form:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(Poly.from_json(data, N))

    def __str__(self):
        return str(self.poly)
