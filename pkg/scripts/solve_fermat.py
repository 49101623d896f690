"""Numeric search for 3x3 representations of a ternary cubic, class count vs starts.

    python3 scripts/solve_fermat.py --starts 200 --seed 7 [--out sols.json]
"""
import argparse
import time

from cliffrep.clifford import Form
from cliffrep.linearizer import SolverConfig, classify, dump_solutions, run_starts


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--starts", type=int, default=200)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--out")
    args = ap.parse_args()

    f = Form.fermat(3, 3)
    t0 = time.perf_counter()
    sols = run_starts(f, SolverConfig(starts=args.starts, seed=args.seed))
    elapsed = time.perf_counter() - t0
    print(f"{len(sols)}/{args.starts} starts converged in {elapsed:.1f}s")
    checkpoints = sorted({args.starts // 8, args.starts // 4, args.starts // 2, args.starts} - {0})
    for cut in checkpoints:
        part = classify([s for s in sols if s.start < cut])
        print(f"  starts <= {cut:4d}: {len(part)} classes, {len(part.flagged)} flagged pairs")
    part = classify(sols)
    sizes = sorted((len(c) for c in part.classes), reverse=True)
    print(f"class sizes: {sizes}")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dump_solutions(sols, f))
        print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
