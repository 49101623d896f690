"""Integer calculus in Pic(X) = Z^7 for a smooth cubic surface X.

Classes are written D = a e0 - sum b_i e_i with pairing a a' - sum b_i b'_i,
so H = (3; 1,...,1) and every twisted cubic class has b_i >= 0.  Lines are
the classes with L^2 = -1, L.H = 1 and twisted cubics those with T^2 = 1,
T.H = 3; both catalogs come from exhaustive search, which terminates because
fixing a pins sum b_i and sum b_i^2.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import isqrt

import numpy as np

MAX_DECOMPOSE_RANK = 4
MAX_FAMILY_RANK = 3
STABLE_CAVEAT = (
    "inequality status only: the existence criterion is known to admit a single "
    "unidentified exceptional case, so a positive verdict is not an unconditional "
    "existence claim"
)


@dataclass(frozen=True, order=True)
class DivisorClass:
    a: int
    b: tuple[int, ...]

    def __post_init__(self):
        b = tuple(int(x) for x in self.b)
        if len(b) != 6:
            raise ValueError(f"a divisor class needs 6 exceptional coefficients, got {len(b)}")
        object.__setattr__(self, "a", int(self.a))
        object.__setattr__(self, "b", b)

    @classmethod
    def parse(cls, text: str) -> DivisorClass:
        m = re.fullmatch(r"\s*(-?\d+)\s*;\s*(-?\d+(?:\s*,\s*-?\d+){5})\s*", text)
        if not m:
            raise ValueError(f"expected 'a;b1,b2,b3,b4,b5,b6', got {text!r}")
        return cls(int(m.group(1)), tuple(int(x) for x in m.group(2).split(",")))

    def __str__(self):
        return f"{self.a};" + ",".join(str(x) for x in self.b)

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.a + other.a, tuple(x + y for x, y in zip(self.b, other.b)))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.a - other.a, tuple(x - y for x, y in zip(self.b, other.b)))

    def __neg__(self) -> DivisorClass:
        return DivisorClass(-self.a, tuple(-x for x in self.b))

    def __rmul__(self, k: int) -> DivisorClass:
        return DivisorClass(k * self.a, tuple(k * x for x in self.b))

    def vector(self) -> tuple[int, ...]:
        return (self.a,) + self.b

    def permute(self, perm) -> DivisorClass:
        return DivisorClass(self.a, tuple(self.b[p] for p in perm))


H = DivisorClass(3, (1,) * 6)
K = -H
E0 = DivisorClass(1, (0,) * 6)


def exceptional(i: int) -> DivisorClass:
    """The class e_i (1 <= i <= 6), i.e. b_i = -1."""
    return DivisorClass(0, tuple(-1 if k == i - 1 else 0 for k in range(6)))


def intersect(D: DivisorClass, E: DivisorClass) -> int:
    return D.a * E.a - sum(x * y for x, y in zip(D.b, E.b))


def degree(D: DivisorClass) -> int:
    return intersect(D, H)


def arithmetic_genus(D: DivisorClass) -> int:
    # adjunction with K = -H: 2g - 2 = D^2 + D.K
    return (intersect(D, D) - degree(D)) // 2 + 1


def _b_vectors(total: int, squares: int, slots: int = 6):
    """All integer b with sum b = total and sum b^2 = squares, lexicographic."""
    if slots == 0:
        if total == 0 and squares == 0:
            yield ()
        return
    # Cauchy-Schwarz: the remaining slots need total^2 <= slots * squares
    if squares < 0 or total * total > slots * squares:
        return
    bound = isqrt(squares)
    for x in range(-bound, bound + 1):
        for rest in _b_vectors(total - x, squares - x * x, slots - 1):
            yield (x,) + rest


def classes_with(square: int, deg: int, a_range: range) -> tuple[DivisorClass, ...]:
    """Every class with D^2 = square and D.H = deg whose a lies in ``a_range``."""
    out = []
    for a in a_range:
        for b in _b_vectors(3 * a - deg, a * a - square):
            out.append(DivisorClass(a, b))
    return tuple(sorted(out))


# Search boxes.  With s = sum b and q = sum b^2, Cauchy-Schwarz s^2 <= 6q gives
# (3a - deg)^2 <= 6(a^2 - square), i.e. 3a^2 - 6 deg a + deg^2 + 6 square <= 0.
# Lines (deg 1, square -1): a in [0, 2].  Cubics (3, 1): a in [1, 5].
# Roots (0, -2): a in [-2, 2].


@lru_cache(maxsize=None)
def lines() -> tuple[DivisorClass, ...]:
    return classes_with(-1, 1, range(0, 3))


@lru_cache(maxsize=None)
def twisted_cubics() -> tuple[DivisorClass, ...]:
    return classes_with(1, 3, range(0, 6))


@lru_cache(maxsize=None)
def roots() -> tuple[DivisorClass, ...]:
    return classes_with(-2, 0, range(-2, 3))


@lru_cache(maxsize=None)
def _cubic_set() -> frozenset:
    return frozenset(twisted_cubics())


@lru_cache(maxsize=None)
def _line_array() -> np.ndarray:
    # rows give D -> D.L as a dot product with (a, b)
    return np.array([(L.a,) + tuple(-x for x in L.b) for L in lines()], dtype=np.int64)


@dataclass(frozen=True)
class UlrichVerdict:
    ok: bool
    D: DivisorClass
    r: int
    degree: int
    violations: tuple[tuple[DivisorClass, int], ...] = ()
    square: int | None = None

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {
            "D": str(self.D),
            "r": self.r,
            "ulrich": self.ok,
            "degree": self.degree,
            "expected_degree": 3 * self.r,
            "violations": [{"line": str(L), "pairing": v} for L, v in self.violations],
            "square": self.square,
        }


def line_condition(D: DivisorClass, r: int) -> tuple[tuple[DivisorClass, int], ...]:
    """Lines L with D.L outside [0, 2r]."""
    bad = []
    for L in lines():
        v = intersect(D, L)
        if v < 0 or v > 2 * r:
            bad.append((L, v))
    return tuple(bad)


def satisfies_line_criterion(D: DivisorClass, r: int) -> bool:
    """deg D = 3r and 0 <= D.L <= 2r for every line, nothing else."""
    return degree(D) == 3 * r and not line_condition(D, r)


def is_ulrich_class(D: DivisorClass, r: int) -> UlrichVerdict:
    """First Chern class test for a rank-r Ulrich bundle.

    Degree 3r and 0 <= D.L <= 2r on all 27 lines.  For r = 1 the bundle is a
    line bundle with c2 = (D^2 - 1)/2 = 0, so D^2 = 1 is required as well;
    without it H itself would pass while O(H) has four sections, not three.
    """
    if r < 1:
        raise ValueError("rank must be at least 1")
    deg = degree(D)
    bad = line_condition(D, r)
    ok = deg == 3 * r and not bad
    square = None
    if r == 1:
        square = intersect(D, D)
        ok = ok and square == 1
    return UlrichVerdict(ok, D, r, deg, bad, square)


def decompose_sum_of_cubics(D: DivisorClass, r: int) -> list[tuple[DivisorClass, ...]]:
    """All multisets of r twisted cubic classes with sum D (sorted tuples)."""
    if r < 1:
        raise ValueError("rank must be at least 1")
    if r > MAX_DECOMPOSE_RANK:
        raise ValueError(f"decomposition budget exceeded: r <= {MAX_DECOMPOSE_RANK}")
    cubics = twisted_cubics()
    cubic_set = _cubic_set()
    ls = lines()
    out = []

    def feasible(R: DivisorClass, k: int) -> bool:
        # every cubic pairs into [0, 2] with every line
        if degree(R) != 3 * k:
            return False
        return all(0 <= intersect(R, L) <= 2 * k for L in ls)

    def go(R: DivisorClass, k: int, start: int, chosen: tuple):
        if k == 1:
            if R in cubic_set and R >= cubics[start]:
                out.append(chosen + (R,))
            return
        for idx in range(start, len(cubics)):
            T = cubics[idx]
            rest = R - T
            if feasible(rest, k - 1):
                go(rest, k - 1, idx, chosen + (T,))

    if feasible(D, r):
        go(D, r, 0, ())
    return out


@dataclass(frozen=True)
class StableVerdict:
    D: DivisorClass
    r: int
    degree_ok: bool
    line_ok: bool
    cubic_ok: bool
    line_violations: tuple[tuple[DivisorClass, int], ...]
    cubic_violations: tuple[tuple[DivisorClass, int], ...]
    exception_caveat: str = STABLE_CAVEAT

    @property
    def conditions_met(self) -> bool:
        return self.degree_ok and self.line_ok and self.cubic_ok

    def __bool__(self):
        return self.conditions_met

    def to_json(self) -> dict:
        return {
            "D": str(self.D),
            "r": self.r,
            "degree_ok": self.degree_ok,
            "line_ok": self.line_ok,
            "cubic_ok": self.cubic_ok,
            "conditions_met": self.conditions_met,
            "line_violations": [{"line": str(L), "pairing": v} for L, v in self.line_violations],
            "cubic_violations": [{"cubic": str(T), "pairing": v} for T, v in self.cubic_violations],
            "exception_caveat": self.exception_caveat,
        }


def stable_exists(D: DivisorClass, r: int) -> StableVerdict:
    """Inequalities 0 <= D.L <= 2r and D.T >= 2r over the catalogs (r >= 2)."""
    if r < 2:
        raise ValueError("the stable-existence criterion needs r >= 2")
    bad_lines = line_condition(D, r)
    bad_cubics = tuple((T, v) for T in twisted_cubics() if (v := intersect(D, T)) < 2 * r)
    return StableVerdict(D, r, degree(D) == 3 * r, not bad_lines, not bad_cubics, bad_lines, bad_cubics)


def moduli_dimension(D: DivisorClass, r: int) -> int:
    return intersect(D, D) - 2 * r * r + 1


def chern_c2(D: DivisorClass, r: int) -> Fraction:
    return Fraction(intersect(D, D) - r, 2)


def hilbert_value(r: int, t: int) -> int:
    return 3 * r * (t + 2) * (t + 1) // 2


def family_box(r: int) -> list[DivisorClass]:
    """Degree-3r classes with a in [r, 5r] and b_i in [0, 2r]."""
    grid = np.array(list(itertools.product(range(2 * r + 1), repeat=6)), dtype=np.int64)
    sums = grid.sum(axis=1)
    out = []
    for a in range(r, 5 * r + 1):
        for b in grid[sums == 3 * a - 3 * r]:
            out.append(DivisorClass(a, tuple(int(x) for x in b)))
    return out


@dataclass(frozen=True)
class Families:
    r: int
    ulrich: tuple[DivisorClass, ...]
    stable: tuple[DivisorClass, ...] | None = field(default=None)

    def to_json(self) -> dict:
        out = {"r": self.r, "count": len(self.ulrich), "ulrich": [str(D) for D in self.ulrich]}
        if self.stable is not None:
            out["stable_count"] = len(self.stable)
            out["stable"] = [str(D) for D in self.stable]
        return out


def count_families(r: int, stable: bool = False):
    """Classes D passing :func:`is_ulrich_class` for rank r, sorted.

    With ``stable`` (r >= 2) a :class:`Families` record is returned that
    also lists the subset meeting the stable-existence inequalities.
    """
    if not 1 <= r <= MAX_FAMILY_RANK:
        raise ValueError(f"family enumeration budget exceeded: 1 <= r <= {MAX_FAMILY_RANK}")
    box = family_box(r)
    vecs = np.array([(D.a,) + D.b for D in box], dtype=np.int64)
    pair = vecs @ _line_array().T
    keep = np.all((pair >= 0) & (pair <= 2 * r), axis=1)
    found = [D for D, k in zip(box, keep) if k and is_ulrich_class(D, r)]
    found.sort()
    if not stable:
        return found
    if r < 2:
        raise ValueError("the stable-existence filter needs r >= 2")
    return Families(r, tuple(found), tuple(D for D in found if stable_exists(D, r)))
