"""Gauss-Newton search for 3x3 matrices with (x A1 + y A2 + z A3)^3 = f I.

A1^3 = f(1,0,0) I with three distinct eigenvalues, so up to conjugation
A1 = diag(a, w a, w^2 a) with a^3 = f(1,0,0) and w = exp(2 pi i/3).  The
solver fixes A1 that way and runs least squares on the 18 entries of A2,
A3 against the 90 equations (10 cubic monomials x 9 matrix entries).  The
diagonal torus still acts on the solutions, so results are compared by
conjugation invariants rather than by entries.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

import numpy as np

from .algebra import Matrix, monomials
from .clifford import Form, nondegenerate

OMEGA = np.exp(2j * np.pi / 3)
WORDS = list(itertools.product(range(3), repeat=3))
MONOS = monomials(3, 3)
_CONTENT = {m: i for i, m in enumerate(MONOS)}
_WORD_MONO = np.array([_CONTENT[tuple(w.count(v) for v in range(3))] for w in WORDS])
# Traces of words up to length 6 generate the conjugation invariants of
# triples of 3x3 matrices; a trace only depends on the word's rotation class.
FINGERPRINT_LENGTH = 6


def _necklaces(length: int) -> list[tuple[int, ...]]:
    words = itertools.product(range(3), repeat=length)
    return sorted({min(w[k:] + w[:k] for k in range(length)) for w in words})


NECKLACES = [w for length in range(2, FINGERPRINT_LENGTH + 1) for w in _necklaces(length)]


@dataclass(frozen=True)
class SolverConfig:
    starts: int = 200
    seed: int = 0
    max_iter: int = 80
    accept: float = 1e-9
    merge_tol: float = 1e-6
    gap: float = 1e-4
    init_scale: float = 1.0
    damping: bool = True


def cubic_coefficients(f: Form) -> np.ndarray:
    if f.n != 3 or f.d != 3:
        raise ValueError("the solver handles ternary cubics only")
    return np.array([complex(f.coefficient(m)) for m in MONOS])


def _words(A: np.ndarray) -> np.ndarray:
    """All 27 products A_i A_j A_k, shape (27, 3, 3)."""
    P2 = np.einsum("iab,jbc->ijac", A, A)
    P3 = np.einsum("ijac,kcd->ijkad", P2, A)
    return P3.reshape(27, 3, 3)


def residual_tensor(A: np.ndarray, coeffs: np.ndarray) -> np.ndarray:
    """Coefficient matrices of M^3 - f I, shape (10, 3, 3)."""
    out = np.zeros((10, 3, 3), dtype=complex)
    np.add.at(out, _WORD_MONO, _words(A))
    out -= coeffs[:, None, None] * np.eye(3)
    return out


def residual(A, coeffs) -> float:
    """Max-norm deviation of (sum x_i A_i)^3 from f I over all 90 identities."""
    A = np.asarray(A, dtype=complex)
    if isinstance(coeffs, Form):
        coeffs = cubic_coefficients(coeffs)
    return float(np.max(np.abs(residual_tensor(A, coeffs))))


def jacobian(A: np.ndarray, unknowns=(1, 2)) -> np.ndarray:
    """d(residual)/d(A_v[p, q]) for v in ``unknowns``, shape (90, 9 * len(unknowns)).

    Each word contributes prefix[:, p] * suffix[q, :] at every position
    occupied by the varied generator.
    """
    eye = np.eye(3, dtype=complex)
    col = {v: k for k, v in enumerate(unknowns)}
    J = np.zeros((10, 3, 3, len(unknowns), 3, 3), dtype=complex)
    for w, mono in zip(WORDS, _WORD_MONO):
        for t, v in enumerate(w):
            if v not in col:
                continue
            pre = eye
            for s in w[:t]:
                pre = pre @ A[s]
            suf = eye
            for s in w[t + 1:]:
                suf = suf @ A[s]
            J[mono, :, :, col[v]] += np.einsum("ap,qb->abpq", pre, suf)
    return J.reshape(90, 9 * len(unknowns))


def gauge_diagonal(f100: complex) -> np.ndarray:
    alpha = complex(f100) ** (1 / 3)
    return np.diag([alpha, OMEGA * alpha, OMEGA**2 * alpha])


def gauge_fix(A: np.ndarray, f100: complex) -> np.ndarray:
    """Conjugate a solution so that A1 = diag(a, w a, w^2 a)."""
    A = np.asarray(A, dtype=complex)
    vals, vecs = np.linalg.eig(A[0])
    target = np.diag(gauge_diagonal(f100))
    order = [int(np.argmin(np.abs(vals - t))) for t in target]
    if len(set(order)) != 3:
        raise ValueError("A1 does not have the three cube roots of f(1,0,0) as eigenvalues")
    P = vecs[:, order]
    Pinv = np.linalg.inv(P)
    return np.einsum("ab,ibc,cd->iad", Pinv, A, P)


def newton(A: np.ndarray, coeffs: np.ndarray, cfg: SolverConfig) -> tuple[np.ndarray, float, int]:
    """Gauss-Newton iterations on A2, A3 with A1 held fixed."""
    A = A.copy()
    res = residual_tensor(A, coeffs).ravel()
    norm = np.linalg.norm(res)
    it = 0
    for it in range(1, cfg.max_iter + 1):
        J = jacobian(A)
        step = np.linalg.lstsq(J, -res, rcond=None)[0].reshape(2, 3, 3)
        t = 1.0
        while True:
            trial = A.copy()
            trial[1:] += t * step
            tres = residual_tensor(trial, coeffs).ravel()
            tnorm = np.linalg.norm(tres)
            if not cfg.damping or tnorm < norm or t < 1e-3:
                break
            t /= 2
        A, res, norm = trial, tres, tnorm
        if not np.all(np.isfinite(res)):
            break
        if np.max(np.abs(res)) < 1e-14:
            break
    return A, float(np.max(np.abs(res))) if np.all(np.isfinite(res)) else np.inf, it


def fingerprint(A: np.ndarray) -> np.ndarray:
    """Conjugation invariants: traces of words of length 2..6 up to rotation, spectra of A2, A3.

    Words of length 2 and 3 alone do not separate representations that
    differ by twisting generators with cube roots of unity.
    """
    A = np.asarray(A, dtype=complex)
    products = {(): np.eye(3, dtype=complex)}
    parts = []
    for w in NECKLACES:
        for k in range(1, len(w) + 1):
            if w[:k] not in products:
                products[w[:k]] = products[w[: k - 1]] @ A[w[k - 1]]
        parts.append(np.trace(products[w]))
    for v in (1, 2):
        ev = np.linalg.eigvals(A[v])
        parts += sorted(ev, key=lambda z: (round(z.real, 6), round(z.imag, 6)))
    return np.array(parts, dtype=complex)


@dataclass
class NumericRepresentation:
    matrices: np.ndarray
    residual: float
    fingerprint: np.ndarray = field(repr=False)
    seed: int = 0
    start: int = -1
    iterations: int = 0

    @classmethod
    def build(cls, A, coeffs, seed=0, start=-1, iterations=0) -> NumericRepresentation:
        A = np.asarray(A, dtype=complex)
        return cls(A, residual(A, coeffs), fingerprint(A), seed, start, iterations)

    def to_json(self) -> dict:
        def pairs(arr):
            return [[[float(z.real), float(z.imag)] for z in row] for row in arr]

        return {
            "matrices": [pairs(M) for M in self.matrices],
            "residual": self.residual,
            "fingerprint": [[float(z.real), float(z.imag)] for z in self.fingerprint],
            "seed": self.seed,
            "start": self.start,
            "iterations": self.iterations,
        }

    @classmethod
    def from_json(cls, data, coeffs) -> NumericRepresentation:
        A = np.array([[[complex(re, im) for re, im in row] for row in M] for M in data["matrices"]])
        rep = cls.build(A, coeffs, data.get("seed", 0), data.get("start", -1), data.get("iterations", 0))
        stored = data.get("residual")
        if stored is not None and abs(rep.residual - float(stored)) > 1e-12:
            raise ValueError(f"stored residual {stored} does not match recomputed {rep.residual}")
        return rep


@dataclass
class Classification:
    classes: list[list[int]]
    flagged: list[tuple[int, int, float]]

    def __len__(self):
        return len(self.classes)

    def to_json(self) -> dict:
        return {
            "count": len(self.classes),
            "classes": self.classes,
            "flagged": [{"a": a, "b": b, "distance": d} for a, b, d in self.flagged],
        }


def classify(solutions, merge_tol: float = 1e-6, gap: float = 1e-4) -> Classification:
    """Greedy partition by fingerprint distance (max-norm).

    A solution joins the first class whose representative is within
    ``merge_tol``.  Pairs of representatives closer than ``gap`` but
    farther than ``merge_tol`` are kept apart and reported in ``flagged``.
    """
    classes: list[list[int]] = []
    reps: list[np.ndarray] = []
    flagged = []
    for idx, sol in enumerate(solutions):
        fp = sol.fingerprint
        home = None
        for c, rfp in enumerate(reps):
            dist = float(np.max(np.abs(fp - rfp)))
            if dist <= merge_tol:
                home = c
                break
        if home is None:
            for c, rfp in enumerate(reps):
                dist = float(np.max(np.abs(fp - rfp)))
                if dist < gap:
                    flagged.append((classes[c][0], idx, dist))
            classes.append([idx])
            reps.append(fp)
        else:
            classes[home].append(idx)
    return Classification(classes, flagged)


def _prepare(f: Form, rng: np.random.Generator):
    """Coordinates with f(1,0,0) != 0; returns (coeffs, back) where A = back(B)."""
    if not nondegenerate(f):
        raise ValueError("linearizer: form is degenerate (partials share a projective zero)")
    if f.coefficient((3, 0, 0)):
        return cubic_coefficients(f), None
    while True:
        M = Matrix([[int(x) for x in row] for row in rng.integers(-3, 4, size=(3, 3))], f.N)
        if M.det():
            g = f.change_of_variables(M)
            if g.coefficient((3, 0, 0)):
                break
    # (sum x_i B_i) = sum_j (Mx)_j A_j means B = M^T A stacked, so A = M^-T B
    back = np.linalg.inv(M.numeric().T)
    return cubic_coefficients(g), back


def _map_back(B: np.ndarray, back) -> np.ndarray:
    if back is None:
        return B
    return np.einsum("ji,jab->iab", back.T, B)


def run_starts(f: Form, config: SolverConfig | None = None) -> list[NumericRepresentation]:
    """All accepted solutions, in start order."""
    cfg = config or SolverConfig()
    root = np.random.SeedSequence(cfg.seed)
    coeffs, back = _prepare(f, np.random.default_rng(root.spawn(1)[0]))
    f_orig = cubic_coefficients(f)
    A1 = gauge_diagonal(coeffs[_CONTENT[(3, 0, 0)]])
    out = []
    for k, child in enumerate(root.spawn(cfg.starts)):
        rng = np.random.default_rng(child)
        A = np.empty((3, 3, 3), dtype=complex)
        A[0] = A1
        A[1:] = cfg.init_scale * (rng.standard_normal((2, 3, 3)) + 1j * rng.standard_normal((2, 3, 3))) / np.sqrt(2)
        B, res, its = newton(A, coeffs, cfg)
        if res < cfg.accept:
            sol = NumericRepresentation.build(_map_back(B, back), f_orig, cfg.seed, k, its)
            if sol.residual < cfg.accept:
                out.append(sol)
    return out


def solve3(f: Form, starts: int = 200, seed: int = 0, config: SolverConfig | None = None):
    """One representative per fingerprint class, in order of first discovery."""
    cfg = config or SolverConfig(starts=starts, seed=seed)
    sols = run_starts(f, cfg)
    part = classify(sols, cfg.merge_tol, cfg.gap)
    return [sols[c[0]] for c in part.classes]


def refine(A, f: Form, config: SolverConfig | None = None) -> NumericRepresentation:
    """Gauge-fix a given numeric solution (e.g. cast from an exact one) and polish it."""
    cfg = config or SolverConfig()
    coeffs = cubic_coefficients(f)
    B = gauge_fix(A, coeffs[_CONTENT[(3, 0, 0)]])
    B, res, its = newton(B, coeffs, cfg)
    return NumericRepresentation.build(B, coeffs, iterations=its)


def _poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            out[m] = out.get(m, 0) + c1 * c2
    return out


def _power_sum(A: np.ndarray, k: int) -> dict:
    out: dict = {}
    for w in itertools.product(range(3), repeat=k):
        M = np.eye(3, dtype=complex)
        for s in w:
            M = M @ A[s]
        m = tuple(w.count(v) for v in range(3))
        out[m] = out.get(m, 0) + np.trace(M)
    return out


def charpoly_residuals(A, coeffs) -> tuple[float, float, float]:
    """Max coefficient of tr M(x), e2(M(x)) and det M(x) - f (Newton identities)."""
    A = np.asarray(A, dtype=complex)
    if isinstance(coeffs, Form):
        coeffs = cubic_coefficients(coeffs)
    p1, p2, p3 = (_power_sum(A, k) for k in (1, 2, 3))
    p1sq = _poly_mul(p1, p1)
    e2 = {m: (p1sq.get(m, 0) - p2.get(m, 0)) / 2 for m in set(p1sq) | set(p2)}
    p1cube = _poly_mul(p1sq, p1)
    p1p2 = _poly_mul(p1, p2)
    e3 = {m: (p1cube.get(m, 0) - 3 * p1p2.get(m, 0) + 2 * p3.get(m, 0)) / 6 for m in MONOS}
    det_dev = max(abs(e3[m] - coeffs[_CONTENT[m]]) for m in MONOS)
    return (
        float(max(abs(v) for v in p1.values())),
        float(max(abs(v) for v in e2.values())),
        float(det_dev),
    )


def dump_solutions(sols, f: Form) -> str:
    return json.dumps({"form": f.to_json(), "solutions": [s.to_json() for s in sols]}, sort_keys=True)


def load_solutions(data) -> tuple[Form, list[NumericRepresentation]]:
    if isinstance(data, str):
        data = json.loads(data)
    f = Form.from_json(data["form"])
    coeffs = cubic_coefficients(f)
    return f, [NumericRepresentation.from_json(s, coeffs) for s in data["solutions"]]
