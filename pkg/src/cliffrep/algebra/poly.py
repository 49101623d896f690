"""Sparse multivariate polynomials over Q(zeta_N)."""
from __future__ import annotations

import json
from typing import Iterable, Mapping, Sequence

from .cyclotomic import CyclotomicScalar, ConductorMismatch, format_scalar, parse_scalar

Monomial = tuple[int, ...]


def grlex_key(mono: Monomial):
    """Sort key: higher total degree first, then lexicographically larger first."""
    return (-sum(mono), tuple(-e for e in mono))


class Poly:
    """Immutable polynomial in ``n`` variables with coefficients in Q(zeta_N).

    ``terms`` maps exponent tuples to nonzero :class:`CyclotomicScalar`
    values and is kept in graded-lex order so iteration (and therefore any
    serialized output) is deterministic.
    """

    __slots__ = ("n", "N", "terms")

    def __init__(self, n: int, N: int, terms: Mapping[Monomial, object] | None = None):
        self.n = n
        self.N = N
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != n or any(e < 0 for e in mono):
                raise ValueError(f"bad exponent vector {mono} for {n} variables")
            c = _scalar(c, N)
            clean[mono] = clean[mono] + c if mono in clean else c
        self.terms = {m: clean[m] for m in sorted(clean, key=grlex_key) if clean[m]}

    @classmethod
    def _raw(cls, n: int, N: int, terms: dict) -> Poly:
        obj = object.__new__(cls)
        obj.n = n
        obj.N = N
        obj.terms = {m: terms[m] for m in sorted(terms, key=grlex_key)}
        return obj

    @classmethod
    def zero(cls, n: int, N: int = 1) -> Poly:
        return cls._raw(n, N, {})

    @classmethod
    def constant(cls, c, n: int, N: int = 1) -> Poly:
        c = _scalar(c, N)
        return cls._raw(n, N, {(0,) * n: c} if c else {})

    @classmethod
    def variable(cls, i: int, n: int, N: int = 1) -> Poly:
        mono = tuple(1 if k == i else 0 for k in range(n))
        return cls._raw(n, N, {mono: CyclotomicScalar.one(N)})

    @classmethod
    def variables(cls, n: int, N: int = 1) -> list[Poly]:
        return [cls.variable(i, n, N) for i in range(n)]

    # structure --------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def coefficient(self, mono: Sequence[int]) -> CyclotomicScalar:
        return self.terms.get(tuple(mono), CyclotomicScalar.zero(self.N))

    def leading(self) -> tuple[Monomial, CyclotomicScalar]:
        mono = next(iter(self.terms))
        return mono, self.terms[mono]

    def embed(self, N2: int) -> Poly:
        if N2 == self.N:
            return self
        return Poly._raw(self.n, N2, {m: c.embed(N2) for m, c in self.terms.items()})

    # arithmetic ----------------------------------------------------------------
    def _check(self, other: Poly):
        if other.n != self.n:
            raise ValueError(f"arity mismatch: {self.n} vs {other.n} variables")
        if other.N != self.N:
            raise ConductorMismatch(f"conductor mismatch: {self.N} vs {other.N}")

    def _promote(self, other) -> Poly:
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.constant(other, self.n, self.N)

    def __add__(self, other):
        other = self._promote(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            if m in out:
                s = out[m] + c
                if s:
                    out[m] = s
                else:
                    del out[m]
            else:
                out[m] = c
        return Poly._raw(self.n, self.N, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.n, self.N, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._promote(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _scalar(other, self.N)
            if not c:
                return Poly.zero(self.n, self.N)
            return Poly._raw(self.n, self.N, {m: v * c for m, v in self.terms.items()})
        self._check(other)
        out: dict[Monomial, CyclotomicScalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = c1 * c2
                if m in out:
                    out[m] = out[m] + v
                else:
                    out[m] = v
        return Poly._raw(self.n, self.N, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative polynomial power")
        result = Poly.constant(1, self.n, self.N)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, other: Poly) -> Poly:
        """Quotient of an exact division; raises ``ValueError`` if a remainder appears."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lm, lc = other.leading()
        inv = lc.inverse()
        quot: dict[Monomial, CyclotomicScalar] = {}
        rem = self
        while rem:
            m, c = rem.leading()
            shift = tuple(a - b for a, b in zip(m, lm))
            if any(e < 0 for e in shift):
                raise ValueError("polynomial division is not exact")
            q = c * inv
            quot[shift] = q
            rem = rem - Poly._raw(self.n, self.N, {tuple(a + s for a, s in zip(mm, shift)): cc * q
                                                   for mm, cc in other.terms.items()})
        return Poly._raw(self.n, self.N, quot)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.n == other.n and self.N == other.N and self.terms == other.terms
        try:
            return self == Poly.constant(other, self.n, self.N)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.n, self.N, tuple(self.terms.items())))

    # calculus / evaluation --------------------------------------------------------
    def derivative(self, i: int) -> Poly:
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                mm = list(m)
                mm[i] -= 1
                out[tuple(mm)] = c * m[i]
        return Poly._raw(self.n, self.N, out)

    def evaluate(self, point: Sequence) -> CyclotomicScalar:
        if len(point) != self.n:
            raise ValueError(f"arity mismatch: point has {len(point)} coordinates, need {self.n}")
        pt = [_scalar(p, self.N) for p in point]
        total = CyclotomicScalar.zero(self.N)
        for m, c in self.terms.items():
            term = c
            for p, e in zip(pt, m):
                if e:
                    term = term * p**e
            total = total + term
        return total

    def substitute(self, images: Sequence[Poly]) -> Poly:
        """Compose with ``x_i -> images[i]`` (all images share arity)."""
        if len(images) != self.n:
            raise ValueError("need one image per variable")
        n2 = images[0].n
        total = Poly.zero(n2, self.N)
        cache: dict[tuple[int, int], Poly] = {}
        for m, c in self.terms.items():
            term = Poly.constant(c, n2, self.N)
            for i, e in enumerate(m):
                if e:
                    if (i, e) not in cache:
                        cache[(i, e)] = images[i] ** e
                    term = term * cache[(i, e)]
            total = total + term
        return total

    def numeric_coeffs(self) -> dict[Monomial, complex]:
        return {m: complex(c) for m, c in self.terms.items()}

    # text / json -------------------------------------------------------------------
    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        names = _var_names(self.n)
        parts = []
        for m, c in self.terms.items():
            mono = "*".join(f"{names[i]}^{e}" if e > 1 else names[i] for i, e in enumerate(m) if e)
            cs = format_scalar(c)
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "coeffs": {",".join(str(e) for e in m): format_scalar(c) for m, c in self.terms.items()},
        }

    @classmethod
    def from_json(cls, data: Mapping, N: int | None = None) -> Poly:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            n = int(data["n"])
            raw = data["coeffs"]
        except (KeyError, TypeError) as exc:
            raise ValueError("polynomial JSON needs 'n' and 'coeffs'") from exc
        scalars = {}
        for key, val in raw.items():
            mono = tuple(int(e) for e in key.split(",")) if key != "" else ()
            scalars[mono] = parse_scalar(val)
        if N is None:
            conductors = {s.N for s in scalars.values() if s.N != 1}
            if len(conductors) > 1:
                raise ConductorMismatch(f"mixed conductors in polynomial: {sorted(conductors)}")
            N = conductors.pop() if conductors else 1
        return cls(n, N, {m: s.embed(N) for m, s in scalars.items()})


def _var_names(n: int) -> list[str]:
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i + 1}" for i in range(n)]


def _scalar(c, N: int) -> CyclotomicScalar:
    if isinstance(c, CyclotomicScalar):
        if c.N != N:
            raise ConductorMismatch(f"conductor mismatch: {c.N} vs {N}")
        return c
    if isinstance(c, str):
        return parse_scalar(c, N)
    return CyclotomicScalar.rational(c, N)


def monomials(n: int, d: int) -> list[Monomial]:
    """All exponent vectors of length n summing to d, in graded-lex order."""
    if n == 0:
        return [()] if d == 0 else []
    if n == 1:
        return [(d,)]
    out = []
    for e in range(d, -1, -1):
        out.extend((e,) + rest for rest in monomials(n - 1, d - e))
    return out


def linear_form(coeffs: Iterable, N: int = 1) -> Poly:
    coeffs = list(coeffs)
    n = len(coeffs)
    return sum((Poly.variable(i, n, N) * c for i, c in enumerate(coeffs)), Poly.zero(n, N))
