"""Command-line entry point.

Exit status: 0 for ok / true verdicts, 1 for computed negative verdicts,
2 for errors (bad input, failed preconditions).  Payloads go to stdout as
JSON (or a plain table with ``--format table``); diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from . import lattice
from .algebra import Matrix, parse_scalar
from .clifford import (
    Form,
    Representation,
    construct_clock_shift,
    construct_tensor_diagonal,
    determinant_identity,
    direct_sum,
    equivalent,
    generate_relations,
    irreducible,
    nondegenerate,
    split,
    transform_rep,
    verify,
    verify_via_relations,
)
from .clifford.relations import pencil_determinant
from .linearizer import SolverConfig, classify, load_solutions, run_starts

OK, NEGATIVE, ERROR = 0, 1, 2


class CliError(Exception):
    pass


# ---------------------------------------------------------------------------
# input helpers


def _read_json(source: str):
    """Read ``FILE``, ``FILE#sel`` or ``-`` (stdin); inline JSON is accepted too.

    The selector is a dot-separated path of keys and list indices; an
    integer applied to an object with a ``parts`` list indexes the parts,
    so ``split.json#1`` is the second block of a split.
    """
    text = source.strip()
    if text.startswith(("{", "[")):
        return json.loads(text)
    path, _, selector = source.partition("#")
    if path == "-":
        data = json.load(sys.stdin)
    else:
        try:
            data = json.loads(Path(path).read_text())
        except FileNotFoundError:
            raise CliError(f"no such file: {path}") from None
    for token in filter(None, selector.split(".")):
        if isinstance(data, list):
            data = data[int(token)]
        elif token in data:
            data = data[token]
        elif token.lstrip("-").isdigit() and isinstance(data.get("parts"), list):
            data = data["parts"][int(token)]
        else:
            raise CliError(f"selector {token!r} not found in {path}")
    return data


def _rep(source: str) -> Representation:
    data = _read_json(source)
    if isinstance(data, dict) and "rep" in data and "matrices" not in data:
        data = data["rep"]
    return Representation.from_json(data)


def _form(source: str) -> Form:
    data = _read_json(source)
    if isinstance(data, dict) and "form" in data and "coeffs" not in data:
        data = data["form"]
    return Form.from_json(data)


def _matrix(source: str) -> Matrix:
    """A JSON matrix of scalars; the conductor is the lcm of the entries' unless given as N."""
    data = _read_json(source)
    N = None
    if isinstance(data, dict):
        N = data.get("N")
        data = data["matrix"]
    entries = [[parse_scalar(x) for x in row] for row in data]
    if N is None:
        N = math.lcm(*(x.N for row in entries for x in row))
    return Matrix([[x if x.N == N else x.embed(N) for x in row] for row in entries], int(N))


def _divisor(text: str | None) -> lattice.DivisorClass:
    if text is None:
        raise CliError("this query needs --D 'a;b1,...,b6'")
    return lattice.DivisorClass.parse(text)


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("GA_SEED")
    if env is None:
        raise CliError("this command is randomized: pass --seed or set GA_SEED")
    return int(env)


# ---------------------------------------------------------------------------
# commands; each returns (exit code, payload)


def cmd_relations(args):
    return OK, generate_relations(_form(args.form)).to_json()


def cmd_verify(args):
    rep, f = _rep(args.rep), _form(args.form)
    reports = []
    if args.method in ("expansion", "both"):
        reports.append(verify(rep, f))
    if args.method in ("relations", "both"):
        reports.append(verify_via_relations(rep, generate_relations(f)))
    ok = all(r.ok for r in reports)
    payload = {"ok": ok, "reports": [r.to_json() for r in reports]}
    if len(reports) == 2:
        agree = reports[0].failure_keys() == reports[1].failure_keys()
        payload["routes_agree"] = agree
        if not agree:
            raise CliError("expansion and relation routes disagree")
    return (OK if ok else NEGATIVE), payload


def cmd_irreducible(args):
    report = irreducible(_rep(args.rep))
    return (OK if report.irreducible else NEGATIVE), report.to_json()


def cmd_equivalent(args):
    verdict, space = equivalent(_rep(args.rep_a), _rep(args.rep_b))
    return (OK if verdict else NEGATIVE), {"equivalent": verdict, **space.to_json()}


def cmd_detid(args):
    rep, f = _rep(args.rep), _form(args.form)
    r, c = determinant_identity(rep, f)
    return OK, {"r": r, "unit": str(c), "det": pencil_determinant(rep).to_json(), "m": rep.m, "d": f.d}


def cmd_nondegenerate(args):
    verdict = nondegenerate(_form(args.form), seed=_seed(args))
    return (OK if verdict else NEGATIVE), {"nondegenerate": verdict}


def cmd_construct(args):
    if args.kind == "clock-shift":
        rep = construct_clock_shift(args.d, args.c1, args.c2, args.g1, args.g2, args.N)
    else:
        rep = construct_tensor_diagonal(args.d, args.n, args.N)
    return OK, rep.to_json()


def cmd_split(args):
    result = split(_rep(args.rep), seed=_seed(args))
    return (NEGATIVE if result.status == "reducible-unsplit" else OK), result.to_json()


def cmd_sum(args):
    return OK, direct_sum(_rep(args.rep_a), _rep(args.rep_b)).to_json()


def cmd_transform(args):
    M = _matrix(args.matrix)
    payload = {}
    if args.rep:
        payload["rep"] = transform_rep(_rep(args.rep), M).to_json()
    if args.form:
        payload["form"] = _form(args.form).change_of_variables(M).to_json()
    if not payload:
        raise CliError("transform needs --rep and/or --form")
    return OK, payload


def cmd_surface(args):
    what = args.what
    if what in ("lines", "cubics"):
        catalog = lattice.lines() if what == "lines" else lattice.twisted_cubics()
        if args.count:
            return OK, len(catalog)
        return OK, [str(D) for D in catalog]
    if what == "genus":
        D = _divisor(args.D)
        return OK, {"D": str(D), "genus": lattice.arithmetic_genus(D), "degree": lattice.degree(D),
                    "square": lattice.intersect(D, D)}
    if what == "hilbert":
        return OK, {"r": args.r, "t": args.t, "value": lattice.hilbert_value(args.r, args.t)}
    if what == "families":
        if args.stable:
            fam = lattice.count_families(args.r, stable=True)
            return OK, fam.to_json()
        found = lattice.count_families(args.r)
        return OK, {"r": args.r, "count": len(found), "ulrich": [str(D) for D in found]}
    D = _divisor(args.D)
    r = args.r
    if what == "ulrich":
        v = lattice.is_ulrich_class(D, r)
        payload = v.to_json()
        if args.cross_check:
            payload["decompositions"] = len(lattice.decompose_sum_of_cubics(D, r))
        return (OK if v.ok else NEGATIVE), payload
    if what == "stable":
        v = lattice.stable_exists(D, r)
        return (OK if v.conditions_met else NEGATIVE), v.to_json()
    if what == "decompose":
        parts = lattice.decompose_sum_of_cubics(D, r)
        return (OK if parts else NEGATIVE), {
            "D": str(D), "r": r, "count": len(parts), "decompositions": [[str(T) for T in p] for p in parts]
        }
    if what == "moduli":
        c2 = lattice.chern_c2(D, r)
        return OK, {"D": str(D), "r": r, "dimension": lattice.moduli_dimension(D, r), "c2": str(c2)}
    raise CliError(f"unknown surface query {what}")


def cmd_solve3(args):
    f = _form(args.form)
    cfg = SolverConfig(
        starts=args.starts, seed=_seed(args), max_iter=args.max_iter,
        accept=args.accept, merge_tol=args.merge_tol, gap=args.gap,
    )
    sols = run_starts(f, cfg)
    part = classify(sols, cfg.merge_tol, cfg.gap)
    payload = {
        "form": f.to_json(),
        "seed": cfg.seed,
        "starts": cfg.starts,
        "solutions": [s.to_json() for s in sols],
        "classification": part.to_json(),
    }
    return (OK if sols else NEGATIVE), payload


def cmd_classify(args):
    _, sols = load_solutions(_read_json(args.solutions))
    return OK, classify(sols, args.merge_tol, args.gap).to_json()


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")

    seeded = argparse.ArgumentParser(add_help=False)
    seeded.add_argument("--seed", type=int, default=None, help="random seed (default: $GA_SEED)")

    p = argparse.ArgumentParser(
        prog="cliffrep",
        description="Matrix representations of generalized Clifford algebras and the cubic-surface lattice.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, parents=(common,)):
        sp = sub.add_parser(name, help=help_text, description=help_text, parents=list(parents))
        sp.set_defaults(func=func)
        return sp

    sp = add("relations", cmd_relations,
             "List the finite relation family of C_f: for each exponent vector m with |m| = d, "
             "the sum of all words with letter content m equals the coefficient f_m.")
    sp.add_argument("--form", required=True)

    sp = add("verify", cmd_verify,
             "Check (x_1 A_1 + ... + x_n A_n)^d = f(x) I exactly, by symbolic expansion, "
             "by substitution into the relations, or both (which must agree).")
    sp.add_argument("--rep", required=True)
    sp.add_argument("--form", required=True)
    sp.add_argument("--method", choices=("expansion", "relations", "both"), default="both")

    sp = add("irreducible", cmd_irreducible,
             "Dimension of the algebra spanned by all words in the A_i; the representation is "
             "irreducible exactly when this is m^2.")
    sp.add_argument("--rep", required=True)

    sp = add("equivalent", cmd_equivalent,
             "Decide whether one invertible theta satisfies A_i theta = theta B_i for all i, "
             "and report the intertwiner space.")
    sp.add_argument("--rep-a", required=True)
    sp.add_argument("--rep-b", required=True)

    sp = add("detid", cmd_detid,
             "For a verified representation of size m of a degree d form: d divides m and "
             "det(sum x_i A_i) = c f^(m/d) with c a d-th root of unity.")
    sp.add_argument("--rep", required=True)
    sp.add_argument("--form", required=True)

    sp = add("nondegenerate", cmd_nondegenerate,
             "Whether the partial derivatives of f have no common projective zero "
             "(resultants; randomized coordinate change for three variables).", (common, seeded))
    sp.add_argument("--form", required=True)

    sp = add("construct", cmd_construct,
             "Explicit representations: clock-shift pair (g1 S, g2 D) for c1 x^d + c2 y^d, or the "
             "d^(n-1)-dimensional tensor construction for x_1^d + ... + x_n^d.")
    sp.add_argument("kind", choices=("clock-shift", "tensor"))
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--n", type=int, default=3)
    sp.add_argument("--N", type=int, default=None, help="conductor of the coefficient field Q(zeta_N)")
    for name in ("c1", "c2", "g1", "g2"):
        sp.add_argument(f"--{name}", default="1", help="scalar, 'p/q' or '[c0,c1,...]@N'")

    sp = add("split", cmd_split,
             "Decompose into blocks along invariant subspaces; every block is either certified "
             "irreducible or reported reducible-unsplit.", (common, seeded))
    sp.add_argument("--rep", required=True)

    sp = add("sum", cmd_sum, "Direct sum A_i (+) B_i.")
    sp.add_argument("--rep-a", required=True)
    sp.add_argument("--rep-b", required=True)

    sp = add("transform", cmd_transform,
             "Linear change of variables: f -> f(Mx) and B_j = sum_i M_ij A_i, which preserves "
             "being a representation.")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--rep")
    sp.add_argument("--form")

    sp = add("surface", cmd_surface,
             "Picard lattice of a smooth cubic surface, classes written 'a;b1,...,b6' for "
             "a e0 - sum b_i e_i.  lines / cubics: the 27 classes with L^2=-1, L.H=1 and the 72 "
             "with T^2=1, T.H=3.  ulrich: deg D = 3r and 0 <= D.L <= 2r on every line (plus "
             "D^2 = 1 when r = 1).  stable: additionally D.T >= 2r on every twisted cubic.  "
             "decompose: D as a sum of r twisted cubic classes.  moduli: D^2 - 2r^2 + 1 and "
             "c2 = (D^2 - r)/2.  genus: (D^2 - D.H)/2 + 1.  hilbert: 3r (t+2)(t+1)/2.")
    sp.add_argument("what", choices=("lines", "cubics", "ulrich", "stable", "decompose", "families",
                                     "moduli", "genus", "hilbert"))
    sp.add_argument("--D")
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--t", type=int, default=0)
    sp.add_argument("--count", action="store_true", help="print only the catalog size")
    sp.add_argument("--stable", action="store_true", help="families: also list the stable-inequality subset")
    sp.add_argument("--cross-check", action="store_true", help="ulrich: also count decompositions")

    sp = add("solve3", cmd_solve3,
             "Numerically search for 3x3 matrices with (x A1 + y A2 + z A3)^3 = f I for a "
             "nondegenerate ternary cubic, and group solutions by conjugation invariants.",
             (common, seeded))
    sp.add_argument("--form", required=True)
    sp.add_argument("--starts", type=int, default=200)
    sp.add_argument("--accept", type=float, default=1e-9)
    sp.add_argument("--merge-tol", type=float, default=1e-6)
    sp.add_argument("--gap", type=float, default=1e-4)
    sp.add_argument("--max-iter", type=int, default=80)

    sp = add("classify", cmd_classify,
             "Partition stored numeric solutions by conjugation invariants; near-ties are flagged.")
    sp.add_argument("--solutions", required=True)
    sp.add_argument("--merge-tol", type=float, default=1e-6)
    sp.add_argument("--gap", type=float, default=1e-4)
    return p


def _table(payload, indent: str = "") -> str:
    if isinstance(payload, dict):
        lines = []
        for k, v in payload.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{indent}{k}:")
                lines.append(_table(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {v}")
        return "\n".join(lines)
    if isinstance(payload, list):
        return "\n".join(
            _table(v, indent + "  ") if isinstance(v, (dict, list)) else f"{indent}{v}" for v in payload
        )
    return f"{indent}{payload}"


def _origin(exc: BaseException) -> str:
    tb = exc.__traceback__
    name = "cliffrep"
    while tb is not None:
        mod = tb.tb_frame.f_globals.get("__name__", "")
        if mod.startswith("cliffrep"):
            name = mod
        tb = tb.tb_next
    return name


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, payload = args.func(args)
    except (CliError, ValueError, KeyError, TypeError, IndexError, ArithmeticError, json.JSONDecodeError) as exc:
        print(f"{_origin(exc)}: {exc}", file=sys.stderr)
        return ERROR
    if args.format == "table":
        print(_table(payload))
    else:
        print(json.dumps(payload, indent=2, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
