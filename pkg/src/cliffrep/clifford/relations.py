"""Defining relations of C_f and the two independent verification routes.

The algebra C_f is the free algebra on y_1..y_n modulo
(a_1 y_1 + ... + a_n y_n)^d - f(a) for every scalar vector a.  Expanding
the d-th power groups the noncommutative words by their letter content m
(an exponent vector with |m| = d); the coefficient of a^m is the sum of all
words with content m.  Over an infinite field the monomials a^m are linearly
independent functions of a, so the infinite family is equivalent to the
finite one

    sum_{words w of content m} y_w = f_m * 1,   one relation per m,

which is what :func:`generate_relations` returns.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from ..algebra import ConductorMismatch, CyclotomicScalar, Matrix, PolyMatrix, monomials
from .forms import Form
from .representation import Representation


@dataclass(frozen=True)
class Relation:
    multidegree: tuple[int, ...]
    words: tuple[tuple[int, ...], ...]
    value: CyclotomicScalar

    def __str__(self):
        lhs = " + ".join("".join(f"y{i + 1}" for i in w) for w in self.words)
        return f"{lhs} = {self.value}"


@dataclass(frozen=True)
class CliffordPresentation:
    form: Form
    relations: tuple[Relation, ...]

    @property
    def expected_count(self) -> int:
        n, d = self.form.n, self.form.d
        return comb(n + d - 1, d)

    def to_json(self) -> dict:
        return {
            "form": self.form.to_json(),
            "relations": [
                {
                    "multidegree": list(r.multidegree),
                    "words": [list(w) for w in r.words],
                    "value": str(r.value),
                }
                for r in self.relations
            ],
        }


def words_with_content(content: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All distinct words whose letter multiplicities are ``content``, lexicographic."""
    total = sum(content)
    if total == 0:
        return [()]
    out = []
    for i, c in enumerate(content):
        if c:
            rest = list(content)
            rest[i] -= 1
            out.extend((i,) + w for w in words_with_content(tuple(rest)))
    return out


def generate_relations(f: Form) -> CliffordPresentation:
    if f.d < 2:
        raise ValueError("Clifford algebras are defined for forms of degree >= 2")
    rels = tuple(
        Relation(m, tuple(words_with_content(m)), f.coefficient(m)) for m in monomials(f.n, f.d)
    )
    return CliffordPresentation(f, rels)


@dataclass(frozen=True)
class Failure:
    monomial: tuple[int, ...]
    row: int
    col: int
    actual: CyclotomicScalar
    expected: CyclotomicScalar

    def key(self):
        return (self.monomial, self.row, self.col)

    def to_json(self) -> dict:
        return {
            "monomial": list(self.monomial),
            "entry": [self.row, self.col],
            "actual": str(self.actual),
            "expected": str(self.expected),
        }


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    failures: tuple[Failure, ...]
    method: str

    def failure_keys(self) -> set:
        return {f.key() for f in self.failures}

    def to_json(self) -> dict:
        return {"ok": self.ok, "method": self.method, "failures": [f.to_json() for f in self.failures]}


def align(rep: Representation, f: Form) -> Form:
    """Check arity and read f over the representation's field."""
    if rep.n != f.n:
        raise ValueError(f"arity mismatch: representation has {rep.n} matrices, form has {f.n} variables")
    if f.N == rep.N:
        return f
    if rep.N % f.N == 0:
        return f.embed(rep.N)
    raise ConductorMismatch(f"form over conductor {f.N} does not embed in conductor {rep.N}")


def verify(rep: Representation, f: Form) -> VerificationReport:
    """Expand (sum x_i A_i)^d symbolically and compare with f * I entrywise."""
    f = align(rep, f)
    power = rep.pencil() ** f.d
    zero = CyclotomicScalar.zero(rep.N)
    failures = []
    for mono in monomials(f.n, f.d):
        want = f.coefficient(mono)
        for i in range(rep.m):
            for j in range(rep.m):
                got = power[i, j].coefficient(mono)
                expected = want if i == j else zero
                if got != expected:
                    failures.append(Failure(mono, i, j, got, expected))
    return VerificationReport(not failures, tuple(failures), "expansion")


def verify_via_relations(rep: Representation, presentation: CliffordPresentation) -> VerificationReport:
    """Substitute A_i for y_i in every relation of the presentation."""
    align(rep, presentation.form)
    zero = CyclotomicScalar.zero(rep.N)
    ident = Matrix.identity(rep.m, rep.N)
    cache: dict[tuple[int, ...], Matrix] = {(): ident}

    def word(w):
        if w not in cache:
            cache[w] = word(w[:-1]) @ rep.matrices[w[-1]]
        return cache[w]

    failures = []
    for rel in presentation.relations:
        acc = Matrix.zeros(rep.m, rep.m, rep.N)
        for w in rel.words:
            acc = acc + word(w)
        want = rel.value.embed(rep.N) if rel.value.N != rep.N else rel.value
        for i in range(rep.m):
            for j in range(rep.m):
                expected = want if i == j else zero
                got = acc.rows[i][j]
                if got != expected:
                    failures.append(Failure(rel.multidegree, i, j, got, expected))
    return VerificationReport(not failures, tuple(failures), "relations")


class DeterminantIdentityError(ValueError):
    pass


def determinant_identity(rep: Representation, f: Form, check: bool = True) -> tuple[int, CyclotomicScalar]:
    """Return ``(r, c)`` with det(sum x_i A_i) = c f^r, m = d r and c^d = 1.

    Taking determinants of (sum x_i A_i)^d = f I_m gives det^d = f^m, which
    pins det to f^r only up to a d-th root of unity c; for odd d on the
    usual fixtures c = 1, while every 2-dimensional representation of a
    quadratic form has c = -1.  Raises :class:`DeterminantIdentityError`
    when d does not divide m or det is not of that shape (degenerate or
    corrupted input).  With ``check`` the representation is verified first.
    """
    f = align(rep, f)
    if check and not verify(rep, f).ok:
        raise DeterminantIdentityError("representation does not linearize the form")
    if rep.m % f.d:
        raise DeterminantIdentityError(f"degree {f.d} does not divide dimension {rep.m}")
    r = rep.m // f.d
    det = rep.pencil().det()
    target = f.poly ** r
    mono, lead = target.leading()
    c = det.coefficient(mono) / lead
    if det != target * c or c ** f.d != 1:
        raise DeterminantIdentityError(f"det(sum x_i A_i) is not a root of unity times f^{r}")
    return r, c


def pencil_determinant(rep: Representation):
    return PolyMatrix.pencil(rep.matrices).det()
