"""Irreducibility, equivalence and decomposition of matrix representations.

All tests are rank computations over Q(zeta_N).  Rank does not change under
field extension, so the dimension of the algebra generated by the A_i and
the dimension of an intertwiner space are the same over the algebraic
closure; the verdicts are therefore the ones an algebraically closed base
field would give.  Decomposition is the exception: an invariant subspace may
only be defined over an extension, which is why :func:`split` can answer
"reducible-unsplit".
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ..algebra import CyclotomicScalar, EchelonBasis, Matrix, sparse_nullspace
from ..algebra.cyclotomic import euler_phi
from .representation import Representation


# ---------------------------------------------------------------------------
# word-span closure


@dataclass(frozen=True)
class IrreducibilityReport:
    algebra_dimension: int
    m: int
    word_length: int
    basis: tuple[Matrix, ...] = field(repr=False, compare=False)

    @property
    def irreducible(self) -> bool:
        return self.algebra_dimension == self.m * self.m

    def to_json(self) -> dict:
        return {
            "algebra_dimension": self.algebra_dimension,
            "m": self.m,
            "irreducible": self.irreducible,
            "word_length": self.word_length,
        }


def algebra_closure(rep: Representation) -> IrreducibilityReport:
    """Span of all words in the generators (identity included).

    Seeds with I and the generators, then repeatedly left-multiplies each new
    basis element by every generator until nothing new appears.  Left
    products of generators reach every word, so this is the whole algebra.
    """
    m, N = rep.m, rep.N
    full = m * m
    ech = EchelonBasis(full, N)
    basis: list[Matrix] = []
    longest = 0
    frontier: list[tuple[Matrix, int]] = []
    for X, length in [(Matrix.identity(m, N), 0)] + [(A, 1) for A in rep.matrices]:
        if ech.add(X.flat()) is not None:
            basis.append(X)
            frontier.append((X, length))
            longest = max(longest, length)
    while frontier and len(ech) < full:
        new = []
        for X, length in frontier:
            for A in rep.matrices:
                Y = A @ X
                if ech.add(Y.flat()) is not None:
                    basis.append(Y)
                    new.append((Y, length + 1))
                    longest = max(longest, length + 1)
                    if len(ech) == full:
                        break
            if len(ech) == full:
                break
        frontier = new
    return IrreducibilityReport(len(ech), m, longest, tuple(basis))


def irreducible(rep: Representation) -> IrreducibilityReport:
    return algebra_closure(rep)


# ---------------------------------------------------------------------------
# intertwiners and equivalence


@dataclass(frozen=True)
class IntertwinerSpace:
    basis: tuple[Matrix, ...]
    witness: Matrix | None = None

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "basis": [B.to_json() for B in self.basis],
            "witness": self.witness.to_json() if self.witness is not None else None,
        }


def intertwiners(a: Representation, b: Representation) -> list[Matrix]:
    """Basis of {theta : A_i theta = theta B_i for all i}."""
    if a.m != b.m or a.n != b.n:
        raise ValueError(f"shape mismatch: (m={a.m}, n={a.n}) vs (m={b.m}, n={b.n})")
    if a.N != b.N:
        raise ValueError(f"conductor mismatch: {a.N} vs {b.N}")
    m, N = a.m, a.N
    rows = []
    for A, B in zip(a.matrices, b.matrices):
        a_rows = [[(l, x) for l, x in enumerate(r) if x] for r in A.rows]
        b_cols = [[(l, B.rows[l][k]) for l in range(m) if B.rows[l][k]] for k in range(m)]
        for j in range(m):
            for k in range(m):
                row: dict[int, CyclotomicScalar] = {}
                for l, x in a_rows[j]:
                    row[l * m + k] = x
                for l, y in b_cols[k]:
                    idx = j * m + l
                    v = row[idx] - y if idx in row else -y
                    if v:
                        row[idx] = v
                    else:
                        row.pop(idx, None)
                if row:
                    rows.append(row)
    return [Matrix.from_flat(v, m, m, N) for v in sparse_nullspace(rows, m * m, N)]


def _combination(basis, coeffs, m, N) -> Matrix:
    out = Matrix.zeros(m, m, N)
    for t, B in zip(coeffs, basis):
        if t:
            out = out + B.scale(t)
    return out


def equivalent(a: Representation, b: Representation) -> tuple[bool, IntertwinerSpace]:
    """Decide whether an invertible theta with A_i theta = theta B_i exists.

    Irreducible pairs: any nonzero intertwiner is invertible (Schur).
    Otherwise det(sum t_j theta_j) is a polynomial of degree <= m in the s
    coordinates t_j; it is nonzero iff it is nonzero somewhere on the grid
    {1..m*s+1}^s, so scanning the grid either finds a witness or certifies
    that no invertible intertwiner exists.
    """
    basis = intertwiners(a, b)
    m, N = a.m, a.N
    if not basis:
        return False, IntertwinerSpace(())
    if irreducible(a).irreducible and irreducible(b).irreducible:
        return True, IntertwinerSpace(tuple(basis), basis[0])
    s = len(basis)
    values = range(1, m * s + 2)
    for point in itertools.product(values, repeat=s):
        theta = _combination(basis, point, m, N)
        if theta.det():
            return True, IntertwinerSpace(tuple(basis), theta)
    return False, IntertwinerSpace(tuple(basis))


def commutant(rep: Representation) -> list[Matrix]:
    return intertwiners(rep, rep)


# ---------------------------------------------------------------------------
# eigenvalues that lie in the base field


def charpoly(M: Matrix) -> list[CyclotomicScalar]:
    """Coefficients c_0..c_m (high degree first) of det(tI - M)."""
    m, N = M.nrows, M.N
    coeffs = [CyclotomicScalar.one(N)]
    K = Matrix.identity(m, N)
    for k in range(1, m + 1):
        AK = M @ K
        ck = AK.trace() * Fraction(-1, k)
        coeffs.append(ck)
        K = AK + Matrix.identity(m, N).scale(ck)
    return coeffs


def _horner(coeffs, x):
    acc = CyclotomicScalar.zero(x.N)
    for c in coeffs:
        acc = acc * x + c
    return acc


def _recognise(z: complex, N: int, max_den: int) -> list[CyclotomicScalar]:
    out = []
    phi = euler_phi(N)
    zeta = np.exp(2j * np.pi / N)
    if abs(z.imag) < 1e-9:
        out.append(CyclotomicScalar.rational(Fraction(z.real).limit_denominator(max_den), N))
    if phi == 2:
        c1 = z.imag / zeta.imag
        c0 = z.real - c1 * zeta.real
        out.append(
            CyclotomicScalar(N, [Fraction(c0).limit_denominator(max_den), Fraction(c1).limit_denominator(max_den)])
        )
    r = abs(z)
    if r > 1e-12:
        j = round(np.angle(z) / (2 * np.pi / N)) % N
        q = Fraction(r).limit_denominator(max_den)
        out.append(CyclotomicScalar.zeta(N, j) * q)
    return out


def field_eigenvalues(M: Matrix, max_den: int = 10**6) -> list[CyclotomicScalar]:
    """Eigenvalues of M that lie in Q(zeta_N), found numerically and certified exactly.

    Candidates come from rational reconstruction of numerical roots (all of
    Q(zeta_N) when phi(N) <= 2, rational multiples of roots of unity
    otherwise); each is kept only if it is an exact root of the
    characteristic polynomial.
    """
    N = M.N
    cp = charpoly(M)
    roots = np.roots([complex(c) for c in cp])
    found: list[CyclotomicScalar] = []
    for z in roots:
        for cand in _recognise(complex(z), N, max_den):
            if cand not in found and not _horner(cp, cand):
                found.append(cand)
    return found


# ---------------------------------------------------------------------------
# invariant subspaces


def orbit_span(vectors, gens, m: int, N: int) -> EchelonBasis:
    """Smallest subspace containing ``vectors`` and stable under ``gens``."""
    ech = EchelonBasis(m, N)
    queue = []
    for v in vectors:
        sv = {i: x for i, x in enumerate(v) if x} if not isinstance(v, dict) else v
        if ech.add(sv) is not None:
            queue.append(sv)
    while queue and len(ech) < m:
        v = queue.pop()
        for A in gens:
            w = {}
            for i, r in enumerate(A.rows):
                acc = CyclotomicScalar.zero(N)
                for k, x in v.items():
                    a = r[k]
                    if a:
                        acc = acc + a * x
                if acc:
                    w[i] = acc
            if w and ech.add(w) is not None:
                queue.append(w)
    return ech


def _dense(ech: EchelonBasis, m: int, N: int) -> list[list[CyclotomicScalar]]:
    zero = CyclotomicScalar.zero(N)
    rows = ech.reduced_rows()
    return [[rows[p].get(j, zero) for j in range(m)] for p in sorted(rows)]


@dataclass(frozen=True)
class SplitConfig:
    """Fixed candidate pool for :func:`split`.

    ``word_length``: eigenvectors of all generator words up to this length
    are tried (for eigenvalues zeta_N^j).  ``random_elements``: number of
    random singular algebra elements tried, with their transposes (dual
    modules).  ``max_depth``: recursion bound, further capped by m.
    """

    word_length: int = 4
    random_elements: int = 8
    max_depth: int | None = None


def _proper(ech: EchelonBasis, m: int) -> bool:
    return 0 < len(ech) < m


def _candidate_subspaces(rep: Representation, report: IrreducibilityReport, rng: random.Random, cfg: SplitConfig):
    """Yield proper invariant subspaces (as echelon bases) in pool order."""
    m, N, gens = rep.m, rep.N, rep.matrices
    ident = Matrix.identity(m, N)

    # 1. eigenspaces of commutant elements are submodules
    comm = commutant(rep)
    if len(comm) > 1:
        trials = list(comm) + [_combination(comm, [rng.randint(-3, 3) for _ in comm], m, N)]
        for theta in trials:
            for lam in field_eigenvalues(theta):
                ker = (theta - ident.scale(lam)).nullspace()
                ech = orbit_span(ker, gens, m, N)
                if _proper(ech, m):
                    yield ech

    def spin_all(vectors):
        for v in vectors:
            ech = orbit_span([v], gens, m, N)
            if _proper(ech, m):
                yield ech

    # 2. standard basis vectors
    one, zero = CyclotomicScalar.one(N), CyclotomicScalar.zero(N)
    yield from spin_all([[one if i == j else zero for i in range(m)] for j in range(m)])

    # 3. eigenvectors of short words for eigenvalues zeta_N^j
    roots = [CyclotomicScalar.zeta(N, j) for j in range(N)]
    words = {(): ident}
    for length in range(1, cfg.word_length + 1):
        for w in itertools.product(range(rep.n), repeat=length):
            W = gens[w[0]] @ words[w[1:]]
            words[w] = W
            for z in roots:
                yield from spin_all((W - ident.scale(z)).nullspace())

    # 4. random singular algebra elements, and their transposes (dual module)
    basis = report.basis
    gens_t = [A.T for A in gens]
    for _ in range(cfg.random_elements):
        v = [CyclotomicScalar.rational(rng.randint(-3, 3), N) for _ in range(m)]
        images = [B @ Matrix.from_columns([v], N) for B in basis]
        # coefficient vectors c with sum c_k B_k v = 0
        system = [{k: img.rows[i][0] for k, img in enumerate(images) if img.rows[i][0]} for i in range(m)]
        null = sparse_nullspace(system, len(basis), N)
        if not null:
            continue
        coeffs = [CyclotomicScalar.zero(N)] * len(basis)
        for vec in null:
            t = rng.randint(-3, 3)
            for k, x in vec.items():
                coeffs[k] = coeffs[k] + x * t
        b = _combination(basis, coeffs, m, N)
        if b.is_zero():
            continue
        yield from spin_all(b.nullspace())
        for u in b.T.nullspace():
            dual = orbit_span([u], gens_t, m, N)
            if _proper(dual, m):
                # the annihilator of an invariant subspace of the dual is invariant
                ann = Matrix(_dense(dual, m, N), N).nullspace()
                ech = orbit_span(ann, gens, m, N)
                if _proper(ech, m):
                    yield ech


def restrict(rep: Representation, sub: EchelonBasis) -> tuple[Representation, Representation]:
    """Sub- and quotient representation in a basis adapted to ``sub``."""
    m, N = rep.m, rep.N
    cols = _dense(sub, m, N)
    k = len(cols)
    ech = EchelonBasis(m, N)
    for c in cols:
        ech.add({i: x for i, x in enumerate(c) if x})
    one, zero = CyclotomicScalar.one(N), CyclotomicScalar.zero(N)
    for j in range(m):
        if len(cols) == m:
            break
        e = [one if i == j else zero for i in range(m)]
        if ech.add({j: one}) is not None:
            cols.append(e)
    P = Matrix.from_columns(cols, N)
    Pinv = P.inverse()
    conj = [Pinv @ A @ P for A in rep.matrices]
    sub_rep = Representation(tuple(B.block(0, k, 0, k) for B in conj), "split-output")
    quo_rep = Representation(tuple(B.block(k, m, k, m) for B in conj), "split-output")
    return sub_rep, quo_rep


@dataclass(frozen=True)
class SplitResult:
    parts: tuple[Representation, ...]
    verdicts: tuple[str, ...]

    @property
    def status(self) -> str:
        if "reducible-unsplit" in self.verdicts:
            return "reducible-unsplit"
        return "irreducible" if len(self.parts) == 1 else "split"

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "verdicts": list(self.verdicts),
            "parts": [p.to_json() for p in self.parts],
        }


def split(rep: Representation, seed: int = 0, config: SplitConfig | None = None) -> SplitResult:
    """Best-effort decomposition into irreducible blocks.

    Every returned part is either certified irreducible or explicitly
    marked "reducible-unsplit" (reducibility is certain but no invariant
    subspace was found from the candidate pool); an irreducible verdict is
    never guessed.
    """
    cfg = config or SplitConfig()
    rng = random.Random(seed)
    max_depth = rep.m if cfg.max_depth is None else min(cfg.max_depth, rep.m)
    out: list[tuple[Representation, str]] = []

    def go(block: Representation, depth: int):
        report = irreducible(block)
        if report.irreducible:
            out.append((block, "irreducible"))
            return
        if depth >= max_depth:
            out.append((block, "reducible-unsplit"))
            return
        sub = next(_candidate_subspaces(block, report, rng, cfg), None)
        if sub is None:
            out.append((block, "reducible-unsplit"))
            return
        lo, hi = restrict(block, sub)
        go(lo, depth + 1)
        go(hi, depth + 1)

    go(rep, 0)
    if len(out) == 1 and out[0][1] == "irreducible":
        return SplitResult((rep,), ("irreducible",))
    return SplitResult(tuple(p for p, _ in out), tuple(v for _, v in out))
