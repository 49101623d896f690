"""Tables for the cubic-surface lattice: catalogs, families per rank, stable subsets.

    python3 scripts/lattice_tables.py
"""
from collections import Counter

from cliffrep import lattice as L


def main():
    print(f"lines: {len(L.lines())}, twisted cubics: {len(L.twisted_cubics())}, roots: {len(L.roots())}")
    by_a = Counter(T.a for T in L.twisted_cubics())
    print("cubic classes by a:", dict(sorted(by_a.items())))
    print()
    print(f"{'r':>2} {'ulrich':>7} {'stable':>7} {'dim(rH)':>8} {'c2(rH)':>7} {'#dec(rH)':>9}")
    for r in (1, 2, 3):
        fam = L.count_families(r)
        stable = len(L.count_families(r, stable=True).stable) if r >= 2 else "-"
        D = r * L.H
        dec = len(L.decompose_sum_of_cubics(D, r))
        print(f"{r:>2} {len(fam):>7} {stable:>7} {L.moduli_dimension(D, r):>8} {str(L.chern_c2(D, r)):>7} {dec:>9}")
    print()
    print("Hilbert values 3r(t+2)(t+1)/2 for t = 0..4:")
    for r in (1, 2, 3):
        print(f"  r={r}:", [L.hilbert_value(r, t) for t in range(5)])


if __name__ == "__main__":
    main()
