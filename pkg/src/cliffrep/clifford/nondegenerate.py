"""Nondegeneracy: the partials of f have no common projective zero.

n = 2 is one binary resultant.  For n = 3 the variable z is eliminated
twice, Res_z(g1, g2) and Res_z(g1, g3), and the two binary results are
tested for a common zero.  A common root of the two eliminants can in
principle come from two different points on one line through (0:0:1), so
the test runs after a random integer change of coordinates and a form is
declared degenerate only when every trial finds a common root.
"""
from __future__ import annotations

import random

from ..algebra import CyclotomicScalar, Matrix, Poly, PolyMatrix
from .forms import Form

TRIALS = 3


def binary_resultant(g: Poly, h: Poly, p: int, q: int) -> CyclotomicScalar:
    """Resultant of binary forms of formal degrees p, q in the first two variables.

    Other variables must not occur.  Vanishes iff g and h share a zero on P^1
    (counting a simultaneous drop in degree as a common zero at infinity).
    """
    N = g.N
    zero = CyclotomicScalar.zero(N)

    def coeffs(P: Poly, deg: int):
        out = [zero] * (deg + 1)
        for mono, c in P.terms.items():
            if any(mono[2:]) or mono[0] + mono[1] != deg:
                raise ValueError("expected a binary form of the stated degree")
            out[mono[1]] = c
        return out

    if p == 0 and q == 0:
        return CyclotomicScalar.one(N)
    a, b = coeffs(g, p), coeffs(h, q)
    size = p + q
    rows = []
    for i in range(q):
        rows.append([zero] * i + a + [zero] * (size - p - 1 - i))
    for i in range(p):
        rows.append([zero] * i + b + [zero] * (size - q - 1 - i))
    return Matrix(rows, N).det()


def _z_coefficients(P: Poly, deg: int) -> list[Poly]:
    """P = sum_k c_k z^k with c_k in Q[x, y]; returns [c_deg, ..., c_0]."""
    buckets = [dict() for _ in range(deg + 1)]
    for mono, c in P.terms.items():
        buckets[deg - mono[2]][(mono[0], mono[1], 0)] = c
    return [Poly(3, P.N, b) for b in buckets]


def resultant_z(g: Poly, h: Poly, deg: int) -> Poly:
    """Sylvester resultant in z of two ternary forms of z-degree ``deg``."""
    a, b = _z_coefficients(g, deg), _z_coefficients(h, deg)
    zero = Poly.zero(3, g.N)
    size = 2 * deg
    rows = []
    for i in range(deg):
        rows.append([zero] * i + a + [zero] * (size - deg - 1 - i))
    for i in range(deg):
        rows.append([zero] * i + b + [zero] * (size - deg - 1 - i))
    return PolyMatrix(rows).det()


def _random_change(n: int, N: int, rng: random.Random) -> Matrix:
    while True:
        M = Matrix([[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)], N)
        if M.det():
            return M


def _ternary_trial(f: Form, rng: random.Random) -> bool | None:
    """True if this coordinate system certifies nondegeneracy, None if inconclusive."""
    e = f.d - 1
    corner = (0, 0, 1)
    for _ in range(50):
        g = f.change_of_variables(_random_change(3, f.N, rng)).poly
        parts = [g.derivative(i) for i in range(3)]
        if all(p.evaluate(corner) for p in parts):
            break
    else:
        return None
    r12 = resultant_z(parts[0], parts[1], e)
    if not r12:
        return False
    r13 = resultant_z(parts[0], parts[2], e)
    if not r13:
        return False
    return bool(binary_resultant(r12, r13, e * e, e * e))


def nondegenerate(f: Form, seed: int = 0) -> bool:
    """Whether w^d = f is smooth, i.e. grad f has no common projective zero.

    ``seed`` drives the random coordinate changes for n = 3; the n <= 2
    answers are deterministic.
    """
    n, d = f.n, f.d
    if n == 1 or d == 1:
        # a nonzero c x^d, or any nonzero linear form
        return True
    parts = [f.poly.derivative(i) for i in range(n)]
    if any(p.is_zero() for p in parts):
        return False
    if n == 2:
        return bool(binary_resultant(parts[0], parts[1], d - 1, d - 1))
    if n == 3:
        rng = random.Random(seed)
        for _ in range(TRIALS):
            verdict = _ternary_trial(f, rng)
            if verdict:
                return True
        return False
    raise ValueError(f"nondegeneracy test supports n <= 3, got n={n}")
