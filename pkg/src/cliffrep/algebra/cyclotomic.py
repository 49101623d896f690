"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements are stored as coordinate vectors in the power basis
1, zeta, ..., zeta^(phi(N)-1), reduced modulo the N-th cyclotomic
polynomial, so equal field elements always have identical coordinates.
Coordinates are ``gmpy2.mpq`` rationals; nothing here touches floats
except the explicit ``__complex__`` embedding.
"""
from __future__ import annotations

import cmath
import functools
import re
from fractions import Fraction

from gmpy2 import mpq

MAX_CONDUCTOR = 100

_ZERO = mpq(0)
_ONE = mpq(1)


class ConductorMismatch(ValueError):
    pass


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den is monic; coefficient lists are low -> high
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    dd = len(den) - 1
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            q[k - dd] = c
            for i, di in enumerate(den):
                num[k - dd + i] -= c * di
    return q, num[:dd]


@functools.cache
def cyclotomic_polynomial(N: int) -> tuple[int, ...]:
    """Integer coefficients (low to high) of the N-th cyclotomic polynomial."""
    if not 1 <= N <= MAX_CONDUCTOR:
        raise ValueError(f"conductor must lie in [1, {MAX_CONDUCTOR}], got {N}")
    poly = [-1] + [0] * (N - 1) + [1]
    for k in range(1, N):
        if N % k == 0:
            poly, rem = _poly_divmod_int(poly, list(cyclotomic_polynomial(k)))
            assert not any(rem)
    return tuple(poly)


def euler_phi(N: int) -> int:
    return len(cyclotomic_polynomial(N)) - 1


@functools.cache
def _reduction_table(N: int) -> tuple[tuple[mpq, ...], ...]:
    """Row k holds x^(phi+k) mod Phi_N, for k = 0 .. phi-2."""
    phi_poly = cyclotomic_polynomial(N)
    phi = len(phi_poly) - 1
    rows = []
    cur = [mpq(-c) for c in phi_poly[:-1]]  # x^phi
    for _ in range(max(phi - 1, 0)):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [_ZERO] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi_poly[:-1])]
    return tuple(rows)


def _reduce(N: int, coeffs) -> tuple[mpq, ...]:
    """Reduce an arbitrary-length coefficient list modulo Phi_N."""
    phi_poly = cyclotomic_polynomial(N)
    phi = len(phi_poly) - 1
    work = [mpq(c) for c in coeffs]
    for k in range(len(work) - 1, phi - 1, -1):
        c = work[k]
        if c:
            for i in range(phi + 1):
                work[k - phi + i] -= c * phi_poly[i]
    work = work[:phi]
    work.extend([_ZERO] * (phi - len(work)))
    return tuple(work)


class CyclotomicScalar:
    """An element of Q(zeta_N) with canonical power-basis coordinates.

    Plain ``int``, ``Fraction`` and ``mpq`` operands are promoted, since Q
    sits inside every cyclotomic field.  Two scalars with different
    conductors never mix; use :meth:`embed` explicitly.
    """

    __slots__ = ("N", "coeffs", "_hash")

    def __init__(self, N: int, coeffs=None):
        if coeffs is None:
            coeffs = ()
        self.N = N
        self.coeffs = _reduce(N, coeffs)
        self._hash = None

    @classmethod
    def _raw(cls, N: int, coeffs: tuple) -> CyclotomicScalar:
        obj = object.__new__(cls)
        obj.N = N
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    # constructors ------------------------------------------------------
    @classmethod
    def rational(cls, q, N: int = 1) -> CyclotomicScalar:
        phi = euler_phi(N)
        return cls._raw(N, (mpq(q),) + (_ZERO,) * (phi - 1))

    @classmethod
    def zero(cls, N: int = 1) -> CyclotomicScalar:
        return cls.rational(0, N)

    @classmethod
    def one(cls, N: int = 1) -> CyclotomicScalar:
        return cls.rational(1, N)

    @classmethod
    def zeta(cls, N: int, k: int = 1) -> CyclotomicScalar:
        return _zeta_power(N, k % N)

    # predicates ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        c = self.coeffs[0]
        return Fraction(int(c.numerator), int(c.denominator))

    # coercion -------------------------------------------------------------
    def _coerce(self, other) -> CyclotomicScalar:
        if isinstance(other, CyclotomicScalar):
            if other.N != self.N:
                raise ConductorMismatch(f"conductor mismatch: {self.N} vs {other.N}")
            return other
        if isinstance(other, (int, Fraction)) or type(other) is type(_ZERO):
            return CyclotomicScalar.rational(other, self.N)
        return NotImplemented

    def embed(self, N2: int) -> CyclotomicScalar:
        """Image under Q(zeta_N) -> Q(zeta_N2), zeta_N -> zeta_N2^(N2/N)."""
        if N2 == self.N:
            return self
        if N2 % self.N:
            raise ConductorMismatch(f"cannot embed conductor {self.N} into {N2}")
        step = N2 // self.N
        out = CyclotomicScalar.zero(N2)
        for k, c in enumerate(self.coeffs):
            if c:
                out = out + _zeta_power(N2, (k * step) % N2) * c
        return out

    # arithmetic -------------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicScalar._raw(self.N, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicScalar._raw(self.N, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicScalar._raw(self.N, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, CyclotomicScalar):
            if isinstance(other, (int, Fraction)) or type(other) is type(_ZERO):
                q = mpq(other)
                return CyclotomicScalar._raw(self.N, tuple(a * q for a in self.coeffs))
            return NotImplemented
        if other.N != self.N:
            raise ConductorMismatch(f"conductor mismatch: {self.N} vs {other.N}")
        a, b = self.coeffs, other.coeffs
        phi = len(a)
        if phi == 1:
            return CyclotomicScalar._raw(self.N, (a[0] * b[0],))
        prod = [_ZERO] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        table = _reduction_table(self.N)
        low = prod[:phi]
        for k in range(phi, 2 * phi - 1):
            c = prod[k]
            if c:
                row = table[k - phi]
                for i in range(phi):
                    if row[i]:
                        low[i] += c * row[i]
        return CyclotomicScalar._raw(self.N, tuple(low))

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicScalar:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_N)")
        phi = len(self.coeffs)
        if phi == 1:
            return CyclotomicScalar._raw(self.N, (1 / self.coeffs[0],))
        # column j of the multiplication matrix is self * zeta^j
        cols = [(self * _zeta_power(self.N, j)).coeffs for j in range(phi)]
        aug = [[cols[j][i] for j in range(phi)] + [_ONE if i == 0 else _ZERO] for i in range(phi)]
        for c in range(phi):
            p = next(r for r in range(c, phi) if aug[r][c])
            aug[c], aug[p] = aug[p], aug[c]
            inv = 1 / aug[c][c]
            aug[c] = [x * inv for x in aug[c]]
            for r in range(phi):
                if r != c and aug[r][c]:
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
        return CyclotomicScalar._raw(self.N, tuple(aug[i][phi] for i in range(phi)))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicScalar.one(self.N)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison / hashing ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, CyclotomicScalar):
            return self.N == other.N and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)) or type(other) is type(_ZERO):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs[0]) if self.is_rational() else hash((self.N, self.coeffs))
        return self._hash

    # conversion ------------------------------------------------------------
    def __complex__(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.N)
        return sum((float(c) * z**k for k, c in enumerate(self.coeffs)), 0j)

    def __str__(self):
        # display form; rationals read back into any conductor via parse_scalar(text, N)
        return _fmt_q(self.coeffs[0]) if self.is_rational() else format_scalar(self)

    def __repr__(self):
        return f"CyclotomicScalar({self.N}, {format_scalar(self)!r})"


@functools.cache
def _zeta_power(N: int, k: int) -> CyclotomicScalar:
    coeffs = [0] * (k + 1)
    coeffs[k] = 1
    return CyclotomicScalar(N, coeffs)


# text format ---------------------------------------------------------------

def _fmt_q(q) -> str:
    q = mpq(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(x: CyclotomicScalar) -> str:
    """``"p/q"`` for conductor 1, ``"[c0,c1,...]@N"`` otherwise."""
    if x.N == 1:
        return _fmt_q(x.coeffs[0])
    return "[" + ",".join(_fmt_q(c) for c in x.coeffs) + f"]@{x.N}"


_CYCLO_RE = re.compile(r"^\[(.*)\]@(\d+)$")


def _parse_q(text: str) -> mpq:
    text = text.strip()
    try:
        return mpq(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational {text!r}") from exc


def parse_scalar(text, N: int | None = None) -> CyclotomicScalar:
    """Parse the scalar text format; rationals are lifted into conductor N."""
    if isinstance(text, int):
        return CyclotomicScalar.rational(text, N or 1)
    text = str(text).strip()
    m = _CYCLO_RE.match(text)
    if m:
        N0 = int(m.group(2))
        body = m.group(1).strip()
        parts = [_parse_q(p) for p in body.split(",")] if body else []
        if len(parts) != euler_phi(N0):
            raise ValueError(f"scalar {text!r} needs {euler_phi(N0)} coordinates")
        x = CyclotomicScalar._raw(N0, tuple(parts))
        return x if N is None else x.embed(N)
    return CyclotomicScalar.rational(_parse_q(text), N or 1)
