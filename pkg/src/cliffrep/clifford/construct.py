"""Explicit representations built from clock and shift matrices.

With S the cyclic shift (S e_i = e_{i+1}) and D = diag(1, z, ..., z^(d-1))
for a primitive d-th root of unity z, one has D S = z S D and
S^d = D^d = I.  Whenever generators e_1..e_n satisfy e_i^d = I and
e_j e_i = z e_i e_j for i < j, every q-multinomial coefficient in the
expansion of (sum x_i e_i)^d vanishes at q = z, leaving sum x_i^d.
"""
from __future__ import annotations

from ..algebra import CyclotomicScalar, Matrix
from ..algebra.cyclotomic import parse_scalar
from .forms import Form
from .representation import Representation


def shift_matrix(d: int, N: int = 1) -> Matrix:
    return Matrix([[1 if i == (j + 1) % d else 0 for j in range(d)] for i in range(d)], N)


def clock_matrix(d: int, N: int) -> Matrix:
    if N % d:
        raise ValueError(f"conductor {N} has no primitive {d}-th root of unity")
    z = CyclotomicScalar.zeta(N, N // d)
    return Matrix.diagonal([z**k for k in range(d)], N)


def _as_scalar(x, N: int) -> CyclotomicScalar:
    if isinstance(x, CyclotomicScalar):
        return x
    return parse_scalar(x, N) if isinstance(x, str) else CyclotomicScalar.rational(x, N)


def construct_clock_shift(d: int, c1=1, c2=1, g1=1, g2=1, N: int | None = None) -> Representation:
    """d-dimensional representation of c1 x^d + c2 y^d: A_1 = g1 S, A_2 = g2 D.

    ``g1``, ``g2`` must be d-th roots of ``c1``, ``c2`` in Q(zeta_N).
    """
    if d < 2:
        raise ValueError("degree must be at least 2")
    N = d if N is None else N
    if N % d:
        raise ValueError(f"conductor {N} is not divisible by d={d}")
    c1, c2, g1, g2 = (_as_scalar(x, N) for x in (c1, c2, g1, g2))
    for c, g, name in ((c1, g1, "g1"), (c2, g2, "g2")):
        if c.N != N or g.N != N:
            raise ValueError(f"scalars must live in conductor {N}")
        if g**d != c:
            raise ValueError(f"{name}^{d} != c: {g}^{d} = {g**d}, expected {c}")
    S = shift_matrix(d, N)
    D = clock_matrix(d, N)
    return Representation((S.scale(g1), D.scale(g2)), "constructed")


def clock_shift_form(d: int, c1=1, c2=1, N: int | None = None) -> Form:
    N = d if N is None else N
    return Form.diagonal([_as_scalar(c1, N), _as_scalar(c2, N)], d, N)


def construct_tensor_diagonal(d: int, n: int, N: int | None = None) -> Representation:
    """d^(n-1)-dimensional representation of x_1^d + ... + x_n^d.

    e_k = D^(x(k-1)) (x) S (x) I^(x(n-1-k)) for k < n and e_n = D^(x(n-1)),
    a chain of pairwise z-commuting generators.
    """
    if d < 2 or n < 1:
        raise ValueError("need d >= 2 and n >= 1")
    N = d if N is None else N
    if N % d:
        raise ValueError(f"conductor {N} is not divisible by d={d}")
    u = shift_matrix(d, N)
    v = clock_matrix(d, N)
    ident = Matrix.identity(d, N)
    gens = []
    for k in range(1, n + 1):
        factors = [v] * (k - 1) + ([u] + [ident] * (n - 1 - k) if k < n else [])
        M = Matrix.identity(1, N)
        for F in factors:
            M = M.kron(F)
        gens.append(M)
    return Representation(tuple(gens), "constructed")
