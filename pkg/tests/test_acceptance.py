"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v`` (the lines are repeated in the
terminal summary) or ``python tests/test_acceptance.py`` for the lines alone.
"""
import itertools
import random
import time

import numpy as np

from cliffrep import lattice as L
from cliffrep.algebra import CyclotomicScalar, Matrix
from cliffrep.clifford import (
    Form,
    Representation,
    clock_shift_form,
    construct_clock_shift,
    construct_tensor_diagonal,
    direct_sum,
    equivalent,
    generate_relations,
    intertwiners,
    irreducible,
    nondegenerate,
    split,
    transform_rep,
    verify,
    verify_via_relations,
)
from cliffrep.clifford.relations import align, pencil_determinant
from cliffrep.linearizer import SolverConfig, classify, run_starts

from acceptance_log import record
from fixtures import exact_fixtures

H = L.H


def _sums_of_cubics(r):
    out = set()
    for combo in itertools.combinations_with_replacement(L.twisted_cubics(), r):
        total = combo[0]
        for T in combo[1:]:
            total = total + T
        out.add(total)
    return out


def test_c01_catalog_counts():
    from cliffrep.cli import main

    t = time.perf_counter()
    L.lines.cache_clear()
    L.twisted_cubics.cache_clear()
    n_lines, n_cubics = len(L.lines()), len(L.twisted_cubics())
    elapsed = time.perf_counter() - t
    ok = n_lines == 27 and n_cubics == 72 and elapsed < 1.0
    ok &= main(["surface", "cubics", "--count"]) == 0
    assert record("C1 catalog counts", ok, f"lines={n_lines} cubics={n_cubics} in {elapsed:.3f}s")


def _criterion_agreement(r):
    sums = _sums_of_cubics(r)
    box = L.family_box(r)
    bad = [D for D in box if (D in sums) != L.satisfies_line_criterion(D, r)]
    return box, bad


def test_c02_decomposition_vs_line_criterion_r1():
    box, bad = _criterion_agreement(1)
    detail = f"box={len(box)} disagreements={[str(D) for D in bad]}"
    assert record("C2a r=1 decomposable <=> (deg 3r and 0<=D.L<=2r)", not bad, detail)


def test_c02_decomposition_vs_line_criterion_r2():
    t = time.perf_counter()
    box, bad = _criterion_agreement(2)
    elapsed = time.perf_counter() - t
    detail = f"box={len(box)} disagreements={len(bad)} in {elapsed:.1f}s"
    assert record("C2b r=2 decomposable <=> (deg 3r and 0<=D.L<=2r)", not bad and elapsed < 120, detail)


def test_c03_rH_family_r1():
    v = L.is_ulrich_class(H, 1)
    assert record("C3a is_ulrich_class(H, 1)", v.ok, f"degree={v.degree} violations={len(v.violations)} H^2={v.square}")


def test_c03_rH_family_r2_r3():
    ok = True
    details = []
    for r in (2, 3):
        u = L.is_ulrich_class(r * H, r)
        s = L.stable_exists(r * H, r)
        ok &= u.ok and s.line_ok and s.cubic_ok
        details.append(f"r={r}: ulrich={u.ok} line_ok={s.line_ok} cubic_ok={s.cubic_ok}")
    assert record("C3b rH for r=2,3 (Ulrich and both stable inequalities)", ok, "; ".join(details))


def test_c04_divisibility_and_determinant():
    sizes = set()
    failures = []
    for label, rep, f in exact_fixtures():
        assert verify(rep, f).ok and nondegenerate(f)
        sizes.add(rep.m)
        if rep.m % f.d:
            failures.append(f"{label}: d does not divide m")
            continue
        det = pencil_determinant(rep)
        if det != align(rep, f).poly ** (rep.m // f.d):
            failures.append(f"{label}: det = -f^{rep.m // f.d}" if det == -(align(rep, f).poly ** (rep.m // f.d))
                            else f"{label}: det != f^(m/d)")
    ok = not failures and {2, 3, 4, 6, 9} <= sizes
    assert record("C4 d | m and det = f^(m/d)", ok, f"m covered={sorted(sizes)} failures={failures}")


def test_c05_flagship_pipeline():
    t = time.perf_counter()
    f = Form.fermat(3, 3)
    rep = construct_tensor_diagonal(3, 3)
    ok = verify(rep, f).ok
    dim = irreducible(rep).algebra_dimension
    ok &= dim == 27
    parts = split(rep, seed=0).parts
    ok &= [p.m for p in parts] == [3, 3, 3]
    ok &= all(verify(p, f).ok and irreducible(p).algebra_dimension == 9 for p in parts)
    cross = [len(intertwiners(parts[i], parts[j])) for i in range(3) for j in range(i + 1, 3)]
    ok &= cross == [0, 0, 0]
    elapsed = time.perf_counter() - t
    ok &= elapsed < 60
    detail = f"algebra dim {dim}, parts {[p.m for p in parts]}, cross intertwiners {cross}, {elapsed:.2f}s"
    assert record("C5 Fermat tensor pipeline", ok, detail)


def test_c06_equivalence_semantics():
    rng = random.Random(6)
    R = split(construct_tensor_diagonal(3, 3), seed=0).parts[0]
    reps = [R, construct_clock_shift(3)]
    preserved = 0
    for k in range(20):
        base = reps[k % 2]
        while True:
            theta = Matrix([[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)], 3)
            if theta.det():
                break
        preserved += equivalent(base, base.conjugate(theta))[0]
    self_dim = len(intertwiners(R, R))
    _, space = equivalent(direct_sum(R, R), direct_sum(R, R))
    ok = preserved == 20 and self_dim == 1 and space.dimension == 4
    detail = f"conjugates equivalent {preserved}/20, dim End(R)={self_dim}, dim End(R+R)={space.dimension}"
    assert record("C6 equivalence semantics", ok, detail)


def _random_fixture(rng):
    choice = rng.randrange(5)
    if choice == 0:
        d = rng.choice([2, 3, 4])
        rep, f = construct_clock_shift(d), clock_shift_form(d)
    elif choice == 1:
        d, n = rng.choice([(2, 2), (2, 3), (3, 2), (3, 3)])
        rep, f = construct_tensor_diagonal(d, n), Form.fermat(n, d)
    elif choice == 2:
        d = rng.choice([2, 3])
        a = construct_clock_shift(d)
        rep, f = direct_sum(a, a), clock_shift_form(d)
    elif choice == 3:
        N = 3
        rep = construct_tensor_diagonal(3, 3, N)
        while True:
            M = Matrix([[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)], N)
            if M.det():
                break
        rep, f = transform_rep(rep, M), Form.fermat(3, 3, N).change_of_variables(M)
    else:
        rep = Representation(tuple(
            Matrix([[rng.randint(-1, 1) for _ in range(2)] for _ in range(2)], 1) for _ in range(2)
        ))
        f = Form.fermat(2, 2)
    if rng.random() < 0.5:
        mats = [[list(r) for r in A.rows] for A in rep.matrices]
        for _ in range(rng.randint(1, 3)):
            k, i, j = rng.randrange(rep.n), rng.randrange(rep.m), rng.randrange(rep.m)
            mats[k][i][j] = mats[k][i][j] + CyclotomicScalar.rational(rng.choice([-2, -1, 1, 3]), rep.N)
        rep = Representation(tuple(Matrix(m, rep.N) for m in mats))
    return rep, f


def test_c07_two_verification_routes():
    rng = random.Random(7)
    agree = accepted = 0
    for _ in range(100):
        rep, f = _random_fixture(rng)
        a = verify(rep, f)
        b = verify_via_relations(rep, generate_relations(f))
        agree += a.ok == b.ok and a.failure_keys() == b.failure_keys()
        accepted += a.ok
    ok = agree == 100 and 0 < accepted < 100
    assert record("C7 verify <=> verify_via_relations", ok, f"agree {agree}/100, accepted {accepted}, rejected {100 - accepted}")


def test_c08_genus_and_roots():
    cubics = L.twisted_cubics()
    ok = all(L.arithmetic_genus(T) == 0 for T in cubics)
    ok &= all(L.arithmetic_genus(x) == 0 for x in L.lines())
    ok &= L.arithmetic_genus(H) == 1
    image = {H - T for T in cubics}
    ok &= len(image) == 72 and image == set(L.roots()) and len(L.roots()) == 72
    assert record("C8 genus and root bijection", ok, f"|roots|={len(L.roots())}, |image|={len(image)}")


def test_c09_moduli_formulas():
    vals = (L.moduli_dimension(2 * H, 2), L.chern_c2(2 * H, 2), L.chern_c2(H, 1))
    shown = ", ".join(str(v) for v in vals)
    assert record("C9 moduli formulas", vals == (5, 5, 1), f"dim(2H,2), c2(2H,2), c2(H,1) = {shown}")


def test_c10_numeric_solver():
    f = Form.fermat(3, 3)
    cfg = SolverConfig(starts=200, seed=7)
    t = time.perf_counter()
    sols = run_starts(f, cfg)
    part = classify(sols, cfg.merge_tol, cfg.gap)
    elapsed = time.perf_counter() - t
    again = run_starts(f, cfg)
    part2 = classify(again, cfg.merge_tol, cfg.gap)
    same = part.classes == part2.classes and all(
        np.array_equal(a.fingerprint, b.fingerprint) for a, b in zip(sols, again)
    )
    worst = max(s.residual for s in sols)
    ok = 8 <= len(part) <= 72 and worst < 1e-9 and same and elapsed < 300
    detail = f"{len(sols)} accepted, {len(part)} classes, max residual {worst:.1e}, rerun identical={same}, {elapsed:.1f}s"
    assert record("C10 numeric solver", ok, detail)


def test_c11_family_count_matches_cubics():
    fam = L.count_families(1)
    ok = fam == list(L.twisted_cubics()) and len(fam) == 72
    assert record("C11 count_families(1) = twisted cubics", ok, f"{len(fam)} families")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_c") and callable(fn):
            try:
                fn()
            except AssertionError:
                pass
