"""Square matrices with polynomial entries: pencils, determinants, char data."""
from __future__ import annotations

from typing import Sequence

from .cyclotomic import ConductorMismatch
from .matrix import Matrix
from .poly import Poly

COFACTOR_LIMIT = 4


class PolyMatrix:
    """Immutable m x m matrix over Q(zeta_N)[x_1..x_n]."""

    __slots__ = ("entries", "m", "n", "N")

    def __init__(self, entries: Sequence[Sequence[Poly]]):
        self.entries = tuple(tuple(r) for r in entries)
        self.m = len(self.entries)
        if any(len(r) != self.m for r in self.entries):
            raise ValueError("PolyMatrix must be square")
        first = self.entries[0][0]
        self.n, self.N = first.n, first.N
        for r in self.entries:
            for p in r:
                if p.n != self.n:
                    raise ValueError("entries disagree on the number of variables")
                if p.N != self.N:
                    raise ConductorMismatch("entries disagree on the conductor")

    @classmethod
    def pencil(cls, matrices: Sequence[Matrix]) -> PolyMatrix:
        """x_1 A_1 + ... + x_n A_n."""
        n = len(matrices)
        N = matrices[0].N
        m = matrices[0].nrows
        xs = Poly.variables(n, N)
        rows = []
        for i in range(m):
            row = []
            for j in range(m):
                terms = {}
                for k, A in enumerate(matrices):
                    c = A.rows[i][j]
                    if c:
                        terms[next(iter(xs[k].terms))] = c
                row.append(Poly._raw(n, N, terms))
            rows.append(row)
        return cls(rows)

    @classmethod
    def scalar_identity(cls, p: Poly, m: int) -> PolyMatrix:
        zero = Poly.zero(p.n, p.N)
        return cls([[p if i == j else zero for j in range(m)] for i in range(m)])

    @classmethod
    def from_matrix(cls, A: Matrix, n: int) -> PolyMatrix:
        return cls([[Poly.constant(x, n, A.N) for x in r] for r in A.rows])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        if other.m != self.m:
            raise ValueError("size mismatch")
        cols = list(zip(*other.entries))
        out = []
        for r in self.entries:
            nz = [(k, a) for k, a in enumerate(r) if a]
            row = []
            for col in cols:
                acc = Poly.zero(self.n, self.N)
                for k, a in nz:
                    b = col[k]
                    if b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def __add__(self, other: PolyMatrix) -> PolyMatrix:
        return PolyMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: PolyMatrix) -> PolyMatrix:
        return PolyMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __pow__(self, k: int) -> PolyMatrix:
        if k < 1:
            raise ValueError("PolyMatrix power must be positive")
        result = self
        for _ in range(k - 1):
            result = result @ self
        return result

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.entries == other.entries

    def trace(self) -> Poly:
        total = Poly.zero(self.n, self.N)
        for i in range(self.m):
            total = total + self.entries[i][i]
        return total

    def evaluate(self, point) -> Matrix:
        return Matrix._raw([[p.evaluate(point) for p in r] for r in self.entries], self.N)

    def det(self, method: str = "auto") -> Poly:
        """Exact determinant.

        ``cofactor`` is Laplace expansion (used for m <= 4 under ``auto``),
        ``bareiss`` is fraction-free elimination over the polynomial ring.
        """
        if method == "auto":
            method = "cofactor" if self.m <= COFACTOR_LIMIT else "bareiss"
        if method == "cofactor":
            return _cofactor_det([list(r) for r in self.entries], self.n, self.N)
        if method == "bareiss":
            return _bareiss_det([list(r) for r in self.entries], self.n, self.N)
        raise ValueError(f"unknown determinant method {method!r}")

    def char_data(self, check: bool = True) -> list[Poly]:
        """Elementary symmetric functions e_1..e_m of the eigenvalues.

        Faddeev-LeVerrier recursion; det(tI - P) = sum_k (-1)^k e_k t^(m-k).
        With ``check`` the top function is compared against :meth:`det`.
        """
        m, n, N = self.m, self.n, self.N
        ident = PolyMatrix.scalar_identity(Poly.constant(1, n, N), m)
        # c[k] is the coefficient of t^(m-k) in det(tI - P)
        c = [Poly.constant(1, n, N)]
        M = ident
        for k in range(1, m + 1):
            AM = self @ M
            ck = AM.trace() * _rational(-1, k)
            c.append(ck)
            if k < m:
                M = AM + PolyMatrix.scalar_identity(ck, m)
        es = [c[k] * (-1) ** k for k in range(1, m + 1)]
        if check and es[-1] != self.det():
            raise AssertionError("characteristic data disagrees with the determinant")
        return es

    def __repr__(self):
        return f"PolyMatrix({[[str(p) for p in r] for r in self.entries]})"


def _rational(p: int, q: int):
    from fractions import Fraction

    return Fraction(p, q)


def _cofactor_det(a: list[list[Poly]], n: int, N: int) -> Poly:
    m = len(a)
    if m == 1:
        return a[0][0]
    if m == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = Poly.zero(n, N)
    for j in range(m):
        if not a[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        term = a[0][j] * _cofactor_det(minor, n, N)
        total = total + term if j % 2 == 0 else total - term
    return total


def _bareiss_det(a: list[list[Poly]], n: int, N: int) -> Poly:
    m = len(a)
    sign = 1
    prev = Poly.constant(1, n, N)
    for k in range(m - 1):
        if not a[k][k]:
            p = next((r for r in range(k + 1, m) if a[r][k]), None)
            if p is None:
                return Poly.zero(n, N)
            a[k], a[p] = a[p], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                num = a[i][j] * piv - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev) if num else num
            a[i][k] = Poly.zero(n, N)
        prev = piv
    det = a[m - 1][m - 1]
    return det if sign > 0 else -det
