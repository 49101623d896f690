"""Dense and sparse exact linear algebra over Q(zeta_N)."""
from __future__ import annotations

from typing import Iterable, Sequence

from .cyclotomic import CyclotomicScalar, ConductorMismatch, parse_scalar, format_scalar

SparseRow = dict[int, CyclotomicScalar]


class EchelonBasis:
    """Incrementally maintained row-echelon basis of a subspace of K^ncols.

    Rows are sparse dicts normalised to a leading 1.  ``add`` reduces a vector
    against the basis and keeps it if it is independent.
    """

    def __init__(self, ncols: int, N: int):
        self.ncols = ncols
        self.N = N
        self.rows: dict[int, SparseRow] = {}
        self._order: list[int] = []

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: SparseRow) -> SparseRow:
        v = dict(vec)
        for p in self._order:
            c = v.get(p)
            if c is None:
                continue
            for k, x in self.rows[p].items():
                if k in v:
                    y = v[k] - c * x
                    if y:
                        v[k] = y
                    else:
                        del v[k]
                else:
                    v[k] = -(c * x)
        return v

    def add(self, vec: SparseRow) -> SparseRow | None:
        """Insert ``vec``; return its reduced form if new, else ``None``."""
        v = self.reduce(vec)
        if not v:
            return None
        lead = min(v)
        inv = v[lead].inverse()
        row = {k: x * inv for k, x in v.items()}
        self.rows[lead] = row
        self._order.append(lead)
        self._order.sort()
        return row

    def contains(self, vec: SparseRow) -> bool:
        return not self.reduce(vec)

    def reduced_rows(self) -> dict[int, SparseRow]:
        """Fully reduced echelon form (zeros above every pivot)."""
        rows = {p: dict(r) for p, r in self.rows.items()}
        for p in sorted(rows, reverse=True):
            piv = rows[p]
            for q in rows:
                if q == p:
                    continue
                c = rows[q].get(p)
                if c is None:
                    continue
                target = rows[q]
                for k, x in piv.items():
                    y = target[k] - c * x if k in target else -(c * x)
                    if y:
                        target[k] = y
                    else:
                        target.pop(k, None)
        return rows


def sparse_nullspace(rows: Iterable[SparseRow], ncols: int, N: int) -> list[SparseRow]:
    """Basis of {x : row . x = 0 for every row}, one vector per free column."""
    ech = EchelonBasis(ncols, N)
    for r in rows:
        if r:
            ech.add(r)
    red = ech.reduced_rows()
    one = CyclotomicScalar.one(N)
    basis = []
    for f in range(ncols):
        if f in red:
            continue
        vec = {f: one}
        for p, row in red.items():
            c = row.get(f)
            if c is not None:
                vec[p] = -c
        basis.append(vec)
    return basis


class Matrix:
    """Immutable dense matrix over Q(zeta_N)."""

    __slots__ = ("rows", "N", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence], N: int = 1):
        self.N = N
        self.rows = tuple(tuple(_scalar(x, N) for x in r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix rows")

    @classmethod
    def _raw(cls, rows, N: int) -> Matrix:
        obj = object.__new__(cls)
        obj.rows = tuple(tuple(r) for r in rows)
        obj.N = N
        obj.nrows = len(obj.rows)
        obj.ncols = len(obj.rows[0]) if obj.rows else 0
        return obj

    @classmethod
    def identity(cls, m: int, N: int = 1) -> Matrix:
        one, zero = CyclotomicScalar.one(N), CyclotomicScalar.zero(N)
        return cls._raw([[one if i == j else zero for j in range(m)] for i in range(m)], N)

    @classmethod
    def zeros(cls, r: int, c: int, N: int = 1) -> Matrix:
        zero = CyclotomicScalar.zero(N)
        return cls._raw([[zero] * c for _ in range(r)], N)

    @classmethod
    def diagonal(cls, entries: Sequence, N: int = 1) -> Matrix:
        m = len(entries)
        zero = CyclotomicScalar.zero(N)
        ents = [_scalar(e, N) for e in entries]
        return cls._raw([[ents[i] if i == j else zero for j in range(m)] for i in range(m)], N)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[CyclotomicScalar]], N: int) -> Matrix:
        return cls._raw([[c[i] for c in cols] for i in range(len(cols[0]))], N)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def embed(self, N2: int) -> Matrix:
        if N2 == self.N:
            return self
        return Matrix._raw([[x.embed(N2) for x in r] for r in self.rows], N2)

    # arithmetic --------------------------------------------------------------------
    def _check(self, other: Matrix):
        if other.N != self.N:
            raise ConductorMismatch(f"conductor mismatch: {self.N} vs {other.N}")

    def __add__(self, other: Matrix) -> Matrix:
        self._check(other)
        if other.shape != self.shape:
            raise ValueError("shape mismatch")
        return Matrix._raw([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.N)

    def __sub__(self, other: Matrix) -> Matrix:
        self._check(other)
        if other.shape != self.shape:
            raise ValueError("shape mismatch")
        return Matrix._raw([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.N)

    def __neg__(self) -> Matrix:
        return Matrix._raw([[-a for a in r] for r in self.rows], self.N)

    def scale(self, c) -> Matrix:
        c = _scalar(c, self.N)
        return Matrix._raw([[a * c for a in r] for r in self.rows], self.N)

    def __matmul__(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        zero = CyclotomicScalar.zero(self.N)
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a]
            row = []
            for col in cols:
                acc = zero
                for k, a in nz:
                    b = col[k]
                    if b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix._raw(out, self.N)

    def __pow__(self, k: int) -> Matrix:
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        if k < 0:
            return self.inverse() ** (-k)
        result = Matrix.identity(self.nrows, self.N)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.N == other.N and self.rows == other.rows

    def __hash__(self):
        return hash((self.N, self.rows))

    @property
    def T(self) -> Matrix:
        return Matrix._raw(list(zip(*self.rows)), self.N) if self.rows else self

    def trace(self) -> CyclotomicScalar:
        total = CyclotomicScalar.zero(self.N)
        for i in range(min(self.shape)):
            total = total + self.rows[i][i]
        return total

    def flat(self) -> SparseRow:
        """Sparse row-major coordinate vector."""
        m = self.ncols
        return {i * m + j: x for i, r in enumerate(self.rows) for j, x in enumerate(r) if x}

    @classmethod
    def from_flat(cls, vec: SparseRow, nrows: int, ncols: int, N: int) -> Matrix:
        zero = CyclotomicScalar.zero(N)
        return cls._raw([[vec.get(i * ncols + j, zero) for j in range(ncols)] for i in range(nrows)], N)

    def kron(self, other: Matrix) -> Matrix:
        self._check(other)
        out = []
        for r in self.rows:
            for s in other.rows:
                out.append([a * b for a in r for b in s])
        return Matrix._raw(out, self.N)

    def block(self, r0: int, r1: int, c0: int, c1: int) -> Matrix:
        return Matrix._raw([r[c0:c1] for r in self.rows[r0:r1]], self.N)

    # elimination ---------------------------------------------------------------------
    def _sparse_rows(self) -> list[SparseRow]:
        return [{j: x for j, x in enumerate(r) if x} for r in self.rows]

    def rank(self) -> int:
        ech = EchelonBasis(self.ncols, self.N)
        for r in self._sparse_rows():
            if r:
                ech.add(r)
        return len(ech)

    def nullspace(self) -> list[list[CyclotomicScalar]]:
        """Dense basis vectors v with self @ v = 0."""
        zero = CyclotomicScalar.zero(self.N)
        basis = sparse_nullspace(self._sparse_rows(), self.ncols, self.N)
        return [[v.get(j, zero) for j in range(self.ncols)] for v in basis]

    def rank_nullspace(self) -> tuple[int, list[list[CyclotomicScalar]]]:
        ns = self.nullspace()
        return self.ncols - len(ns), ns

    def det(self) -> CyclotomicScalar:
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        m = self.nrows
        a = [list(r) for r in self.rows]
        det = CyclotomicScalar.one(self.N)
        for c in range(m):
            p = next((r for r in range(c, m) if a[r][c]), None)
            if p is None:
                return CyclotomicScalar.zero(self.N)
            if p != c:
                a[c], a[p] = a[p], a[c]
                det = -det
            piv = a[c][c]
            det = det * piv
            inv = piv.inverse()
            for r in range(c + 1, m):
                f = a[r][c]
                if f:
                    f = f * inv
                    a[r] = [x - f * y if y else x for x, y in zip(a[r], a[c])]
        return det

    def inverse(self) -> Matrix:
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        m = self.nrows
        one, zero = CyclotomicScalar.one(self.N), CyclotomicScalar.zero(self.N)
        a = [list(r) + [one if i == j else zero for j in range(m)] for i, r in enumerate(self.rows)]
        for c in range(m):
            p = next((r for r in range(c, m) if a[r][c]), None)
            if p is None:
                raise ZeroDivisionError("matrix is singular")
            a[c], a[p] = a[p], a[c]
            inv = a[c][c].inverse()
            a[c] = [x * inv for x in a[c]]
            for r in range(m):
                f = a[r][c]
                if r != c and f:
                    a[r] = [x - f * y if y else x for x, y in zip(a[r], a[c])]
        return Matrix._raw([r[m:] for r in a], self.N)

    # io ---------------------------------------------------------------------------------
    def to_json(self) -> list[list[str]]:
        return [[format_scalar(x) for x in r] for r in self.rows]

    @classmethod
    def from_json(cls, data, N: int) -> Matrix:
        return cls._raw([[parse_scalar(x, N) for x in r] for r in data], N)

    def numeric(self):
        import numpy as np

        return np.array([[complex(x) for x in r] for r in self.rows], dtype=complex)

    def __repr__(self):
        return "Matrix(" + repr(self.to_json()) + f", N={self.N})"


def block_diag(blocks: Sequence[Matrix]) -> Matrix:
    N = blocks[0].N
    size = sum(b.nrows for b in blocks)
    zero = CyclotomicScalar.zero(N)
    out = [[zero] * size for _ in range(size)]
    off = 0
    for b in blocks:
        if b.N != N:
            raise ConductorMismatch("conductor mismatch in block_diag")
        for i, r in enumerate(b.rows):
            out[off + i][off:off + b.ncols] = r
        off += b.nrows
    return Matrix._raw(out, N)


def _scalar(x, N: int) -> CyclotomicScalar:
    if isinstance(x, CyclotomicScalar):
        if x.N != N:
            raise ConductorMismatch(f"conductor mismatch: {x.N} vs {N}")
        return x
    if isinstance(x, str):
        return parse_scalar(x, N)
    return CyclotomicScalar.rational(x, N)
