"""Batch command-line front end.

Subcommands: ``dual``, ``apply``, ``product``, ``rank-table``, ``verify``.
Output is an aligned text table or canonical JSON (``--output json``; sorted
keys, fixed separators, one object per run, byte-stable for fixed inputs).
Exit status: 0 all good, 1 a verification failed, 2 usage or parse error.

``--threads`` (env ``MZV_THREADS``) is validated and recorded; all current
code paths are serial, the flag exists so batch drivers can pass it without
feature-detection.  ``--truncation`` falls back to ``MZV_TRUNCATION``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import lyndon
from .harmonic import seq_s, seq_s2
from .indices import (
    all_indices,
    as_combination,
    coarsen,
    coarsen_inv,
    dual,
    format_combination,
    format_index,
    parse_combination,
    parse_index,
    raise_last,
    refine,
    refine_inv,
    reverse,
    signed,
)
from .numeric import DEFAULT_TRUNCATION, verify_linear, verify_quadratic
from .ohno import verify_alternating_shift_sum, verify_shift_factorization
from .products import circ, circ_bar, stuffle, stuffle_bar
from .qlinalg import RelationMatrix
from .relations import (
    duality_relation,
    kawashima_basis,
    kawashima_relation,
    ohno_relations,
    quadratic_relation,
    verify_reversal_telescope,
)

HARD_WEIGHT_CAP = 20

OPS = {
    "tau": reverse,
    "reverse": reverse,
    "sigma": signed,
    "signed": signed,
    "u": refine,
    "refine": refine,
    "d": coarsen,
    "coarsen": coarsen,
    "uinv": refine_inv,
    "dinv": coarsen_inv,
    "dual": dual,
    "plus": raise_last,
}

PRODUCTS = {
    "*": stuffle,
    "stuffle": stuffle,
    "starbar": stuffle_bar,
    "circ": circ,
    "circbar": circ_bar,
}


@dataclass
class Config:
    max_weight: int = 14
    truncation: int = DEFAULT_TRUNCATION
    tolerance: float | None = None
    threads: int = 1
    output: str = "text"

    @classmethod
    def from_args(cls, args) -> "Config":
        cfg = cls(
            truncation=getattr(args, "truncation", DEFAULT_TRUNCATION),
            tolerance=getattr(args, "tol", None),
            threads=args.threads,
            output=args.output,
        )
        if cfg.max_weight > HARD_WEIGHT_CAP:
            raise SystemExit(2)
        return cfg


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        print("mzv: invalid %s=%r" % (name, raw), file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json"), default="text")
    common.add_argument(
        "--threads",
        type=int,
        default=_env_int("MZV_THREADS", 1),
        help="worker count accepted for batch drivers (execution is serial)",
    )

    p = argparse.ArgumentParser(
        prog="mzv", description="exact toolkit for harmonic-product zeta relations"
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("dual", parents=[common], help="dual of one index")
    sp.add_argument("index")

    sp = sub.add_parser("apply", parents=[common], help="apply an operator to an expression")
    sp.add_argument("op", choices=sorted(OPS))
    sp.add_argument("expr")

    sp = sub.add_parser("product", parents=[common], help="multiply two expressions")
    sp.add_argument("kind", choices=sorted(PRODUCTS))
    sp.add_argument("a")
    sp.add_argument("b")

    sp = sub.add_parser("rank-table", parents=[common], help="dimension table of the relation span")
    sp.add_argument("--k-min", type=int, default=2)
    sp.add_argument("--k-max", type=int, default=9)
    sp.add_argument("--exact-up-to", type=int, default=9)

    sp = sub.add_parser("verify", parents=[common], help="run a property suite")
    sp.add_argument(
        "suite", choices=("identities", "theorem310", "duality", "ohno", "numeric")
    )
    sp.add_argument("--weight", type=int, default=None)
    sp.add_argument("--grid", type=int, default=6)
    sp.add_argument("--pairs-up-to", type=int, default=5)
    sp.add_argument("--truncation", type=int, default=_env_int("MZV_TRUNCATION", DEFAULT_TRUNCATION))
    sp.add_argument("--tol", type=float, default=None)
    return p


def _emit(payload: dict, text_lines, output: str) -> None:
    if output == "json":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        for line in text_lines:
            print(line)


def _terms_json(comb) -> list:
    from fractions import Fraction

    return [
        {"index": list(mu), "num": Fraction(c).numerator, "den": Fraction(c).denominator}
        for mu, c in as_combination(comb).terms()
    ]


def cmd_dual(args) -> int:
    mu = parse_index(args.index)
    result = dual(mu)
    _emit(
        {"command": "dual", "input": format_index(mu), "result": format_index(result)},
        [format_index(result)],
        args.output,
    )
    return 0


def cmd_apply(args) -> int:
    x = parse_combination(args.expr)
    result = as_combination(OPS[args.op](x))
    _emit(
        {
            "command": "apply",
            "op": args.op,
            "input": format_combination(x),
            "result": format_combination(result),
            "terms": _terms_json(result),
        },
        [format_combination(result)],
        args.output,
    )
    return 0


def cmd_product(args) -> int:
    a = parse_combination(args.a)
    b = parse_combination(args.b)
    result = PRODUCTS[args.kind](a, b)
    _emit(
        {
            "command": "product",
            "kind": args.kind,
            "a": format_combination(a),
            "b": format_combination(b),
            "result": format_combination(result),
            "terms": _terms_json(result),
        },
        [format_combination(result)],
        args.output,
    )
    return 0


def cmd_rank_table(args) -> int:
    if not 2 <= args.k_min <= args.k_max <= HARD_WEIGHT_CAP:
        print("mzv: need 2 <= k-min <= k-max <= %d" % HARD_WEIGHT_CAP, file=sys.stderr)
        return 2
    rows = []
    for k in range(args.k_min, args.k_max + 1):
        exact = k <= args.exact_up_to
        span = RelationMatrix.from_relations(kawashima_basis(k))
        shift_span = RelationMatrix.from_relations(ohno_relations(k))
        rank = span.rank() if exact else span.modular_rank()
        shift_rank = shift_span.rank() if exact else shift_span.modular_rank()
        rows.append(
            {
                "k": k,
                "zagier": lyndon.zagier_dim(k),
                "formula": lyndon.dimension_formula(k),
                "rank": rank,
                "ohno_rank": shift_rank,
                "mode": "exact" if exact else "modular-lower-bound",
            }
        )
    header = "%3s %8s %8s %8s %10s  %s" % ("k", "d_Z", "formula", "rank", "ohno-rank", "mode")
    lines = [header] + [
        "%3d %8d %8d %8d %10d  %s"
        % (r["k"], r["zagier"], r["formula"], r["rank"], r["ohno_rank"], r["mode"])
        for r in rows
    ]
    _emit({"command": "rank-table", "rows": rows}, lines, args.output)
    return 0


def _check(name: str, ok: bool, details: dict | None = None) -> dict:
    entry = {"name": name, "pass": bool(ok)}
    if details:
        entry.update(details)
    return entry


def _suite_identities(args) -> list[dict]:
    from . import products
    from .indices import Combination

    cap = args.weight or 6
    checks = []
    ok_inv = ok_conj = True
    for w in range(1, cap + 1):
        for mu in all_indices(w):
            x = Combination.term(mu)
            ok_inv &= refine_inv(refine(x)) == x and coarsen_inv(coarsen(x)) == x
            ok_conj &= coarsen(dual(coarsen_inv(x))) == -refine(signed(x))
    checks.append(_check("refine/coarsen inverses (weight <= %d)" % cap, ok_inv))
    checks.append(_check("dual conjugation identity (weight <= %d)" % cap, ok_conj))
    ok_rec = True
    for wa in range(1, cap):
        for wb in range(1, cap - wa + 1):
            for mu in all_indices(wa):
                for nu in all_indices(wb):
                    ok_rec &= products.stuffle(mu, nu) == products.stuffle_via_matrices(mu, nu)
    checks.append(_check("stuffle recursion matches matrix sum (total <= %d)" % cap, ok_rec))
    ok_tel = all(
        verify_reversal_telescope(mu)
        for w in range(1, cap + 1)
        for mu in all_indices(w)
    )
    checks.append(_check("reversal telescope vanishes (weight <= %d)" % cap, ok_tel))
    return checks


def _suite_theorem310(args) -> list[dict]:
    cap = args.weight or 5
    grid = args.grid
    checks = []
    ok = True
    for w in range(1, cap + 1):
        for mu in all_indices(w):
            s = seq_s(mu, grid + grid)
            star = dual(mu)
            for k in range(grid + 1):
                d = s.delta(k)
                for n in range(grid + 1):
                    if d[n] != seq_s2(mu, star, n, k):
                        ok = False
    checks.append(_check("difference table matches two-chain sums (weight <= %d)" % cap, ok))
    ok = True
    for w in range(1, (args.weight or 5) + 2):
        for mu in all_indices(w):
            horizon = 12
            if seq_s(mu, horizon).nabla() != seq_s(dual(mu), horizon):
                ok = False
    checks.append(_check("binomial transform sends chains to dual chains", ok))
    return checks


def _suite_duality(args) -> list[dict]:
    cap = args.weight or 7
    checks = []
    for k in range(2, cap + 1):
        span = RelationMatrix.from_relations(kawashima_basis(k))
        good = all(span.member(duality_relation(mu).element) is not None for mu in all_indices(k))
        checks.append(_check("duality differences inside span at weight %d" % k, good))
    return checks


def _suite_ohno(args) -> list[dict]:
    cap = args.weight or 8
    checks = []
    for k in range(2, cap + 1):
        span = RelationMatrix.from_relations(kawashima_basis(k))
        good = all(
            span.member(rel.element) is not None
            for rel in ohno_relations(k, r_max=3)
        )
        checks.append(_check("shifted duality inside span at weight %d" % k, good))
    ok = all(
        verify_shift_factorization(r, mu) and verify_alternating_shift_sum(r, mu)
        for r in range(0, 4)
        for w in range(1, min(cap, 6) - 2 + 1)
        for mu in all_indices(w)
    )
    checks.append(_check("shift factorizations agree", ok))
    return checks


def _suite_numeric(args) -> list[dict]:
    cap = args.pairs_up_to or 5
    checks = []
    for wa in range(1, cap):
        for wb in range(wa, cap - wa + 1):
            for mu in all_indices(wa):
                for nu in all_indices(wb):
                    if wa == wb and nu < mu:
                        continue
                    rel = kawashima_relation(mu, nu)
                    rep = verify_linear(rel, N=args.truncation, tol=args.tol)
                    checks.append(
                        _check(
                            rel.provenance,
                            rep["pass"],
                            {"value": rep["value"], "err": rep["err"], "N": rep["N"]},
                        )
                    )
    # zeta((3)) = zeta((1,2)): the raised form of (2) - (1,1)
    euler = as_combination((2,)) - as_combination((1, 1))
    rep = verify_linear(euler, N=args.truncation, tol=args.tol if args.tol else 1e-6)
    checks.append(_check("euler:(3)=(1,2)", rep["pass"], {"value": rep["value"], "err": rep["err"]}))
    quad = quadratic_relation((1,), (1,), 2)
    rep = verify_quadratic(quad, N=args.truncation, tol=args.tol if args.tol else 1e-4)
    checks.append(_check(quad.provenance, rep["pass"], {"value": rep["value"], "err": rep["err"]}))
    return checks


SUITES = {
    "identities": _suite_identities,
    "theorem310": _suite_theorem310,
    "duality": _suite_duality,
    "ohno": _suite_ohno,
    "numeric": _suite_numeric,
}


def cmd_verify(args) -> int:
    checks = SUITES[args.suite](args)
    overall = all(c["pass"] for c in checks)
    lines = [
        "%s %s" % ("ok  " if c["pass"] else "FAIL", c["name"]) for c in checks
    ] + ["%d checks, %s" % (len(checks), "all passed" if overall else "FAILURES")]
    _emit(
        {"command": "verify", "suite": args.suite, "checks": checks, "pass": overall},
        lines,
        args.output,
    )
    return 0 if overall else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    Config.from_args(args)
    if args.threads < 1:
        print("mzv: --threads must be >= 1", file=sys.stderr)
        return 2
    if getattr(args, "truncation", DEFAULT_TRUNCATION) < 10**3:
        print("mzv: --truncation must be >= 1000", file=sys.stderr)
        return 2
    if getattr(args, "weight", None) is not None and args.weight > HARD_WEIGHT_CAP:
        print("mzv: --weight exceeds the hard cap %d" % HARD_WEIGHT_CAP, file=sys.stderr)
        return 2
    handlers = {
        "dual": cmd_dual,
        "apply": cmd_apply,
        "product": cmd_product,
        "rank-table": cmd_rank_table,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except ValueError as exc:
        print("mzv: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
