"""Command-line front end: statistics, evaluations, tables, verification.

Output is deterministic: byte-identical across runs and across worker
counts.  Exit codes: 0 success, 1 identity violation, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from math import factorial

from . import engine, identities, perm
from .qpoly import QPoly, Truncation, schur_principal_jt
from .tableaux import StandardTableau, hook_length_count, partition, partitions, standard_tableaux

SUITES = ("finite", "kronecker", "quasi", "row", "prop41", "reindex", "all")


def parse_partition_arg(text: str) -> tuple[int, ...]:
    try:
        return partition(int(x) for x in text.split(","))
    except ValueError as err:
        raise ValueError(f"bad partition {text!r}: {err}") from err


def parse_perm_token(token: str) -> tuple[int, ...]:
    if "," in token:
        word = [int(x) for x in token.split(",")]
    else:
        word = [int(ch) for ch in token]
    return perm.perm(word)


def parse_perms_arg(text: str) -> tuple[tuple[int, ...], ...]:
    """Comma-separated digit strings, or semicolon-separated comma lists."""
    if not text:
        return ()
    if ";" in text:
        tokens = text.split(";")
    else:
        tokens = text.split(",")
    return tuple(parse_perm_token(tok) for tok in tokens)


def parse_set_arg(text: str) -> frozenset[int]:
    if not text:
        return frozenset()
    return frozenset(int(x) for x in text.split(","))


def parse_tableau_arg(text: str) -> StandardTableau:
    rows = [[int(x) for x in row.split(",")] for row in text.split("/")]
    return StandardTableau(rows)


def _format_seq(seq: tuple[int, ...]) -> str:
    if len(seq) == 1:
        return str(seq[0])
    if all(0 <= x <= 9 for x in seq):
        return "".join(str(x) for x in seq)
    return "(" + ",".join(str(x) for x in seq) + ")"


def _format_perm(word: tuple[int, ...]) -> str:
    if len(word) <= 9:
        return "".join(str(v) for v in word)
    return ",".join(str(v) for v in word)


def _format_set(values) -> str:
    return "{" + ",".join(str(v) for v in sorted(values)) + "}"


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    sys.stdout.write(text)


def cmd_stat(args) -> int:
    shape = parse_partition_arg(args.shape)
    sigmas = parse_perms_arg(args.perms)
    if args.tableau:
        T = parse_tableau_arg(args.tableau)
        if T.shape != shape:
            raise ValueError(f"tableau shape {T.shape} does not match {shape}")
    else:
        candidates = standard_tableaux(shape)
        if len(candidates) != 1:
            raise ValueError(
                f"shape {args.shape} has {len(candidates)} standard tableaux; "
                "pass --tableau to pick one"
            )
        T = candidates[0]
    n = T.n
    R = T.descent_set()
    k = len(sigmas) + 1
    steps = []
    S = engine.empty_seqlist(n)
    for sigma in (*sigmas, perm.identity(n)):
        D = engine.descents(R, S, sigma)
        c = sum(n - i for i in D)
        S = engine.prepend_labels(R, sigma, S)
        steps.append({"sigma": sigma, "descents": D, "comaj": c, "chain": S})
    components = tuple(step["comaj"] for step in steps)
    weight = engine.seq_weight(S, k)
    if args.format == "json":
        obj = {
            "shape": list(shape),
            "tableau": [list(r) for r in T.rows],
            "descent_set": sorted(R),
            "steps": [
                {
                    "sigma": list(step["sigma"]),
                    "descents": sorted(step["descents"]),
                    "comaj": step["comaj"],
                    "chain": [list(s) for s in step["chain"]],
                }
                for step in steps
            ],
            "components": list(components),
            "weight": list(weight),
            "total": sum(components),
        }
        _emit(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n", args.output)
        return 0
    lines = [
        f"shape: {','.join(str(p) for p in shape)}",
        "tableau rows (bottom to top): " + " / ".join(
            ",".join(str(v) for v in row) for row in T.rows
        ),
        f"descent set R: {_format_set(R)}",
    ]
    for idx, step in enumerate(steps, start=1):
        lines.append(
            f"step {idx}: sigma = {_format_perm(step['sigma'])}  "
            f"descents = {_format_set(step['descents'])}  comaj = {step['comaj']}"
        )
        lines.append(
            f"  Z^{idx} = (" + ", ".join(_format_seq(s) for s in step["chain"]) + ")"
        )
    lines.append(
        "weight: " + " ".join(f"q{i + 1}^{e}" for i, e in enumerate(weight))
    )
    lines.append(f"total: {sum(components)}")
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _poly_csv(poly: QPoly) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([f"e{i + 1}" for i in range(poly.k)] + ["c"])
    for e, c in poly.graded_items():
        writer.writerow(list(e) + [str(c)])
    return buf.getvalue()


def cmd_evaluate(args) -> int:
    if args.target == "schur":
        lam = parse_partition_arg(args.lambda_)
        n = sum(lam)
        bound = identities.exact_degree_bound(n, args.k)
        poly = identities.schur_comaj_polynomial(lam, args.k)
        if args.D is not None:
            if args.D < bound:
                raise ValueError(f"D={args.D} is below the exact bound {bound}")
            poly = poly.rebound(args.D)
    elif args.target == "fundamental":
        R = parse_set_arg(args.r_set)
        n = args.n
        bound = identities.exact_degree_bound(n, args.k)
        poly = identities.fundamental_comaj_polynomial(R, n, args.k)
        if args.D is not None:
            if args.D < bound:
                raise ValueError(f"D={args.D} is below the exact bound {bound}")
            poly = poly.rebound(args.D)
    else:  # schur-jt
        lam = parse_partition_arg(args.lambda_)
        if args.D is None:
            raise ValueError("schur-jt is a truncated series; pass --D")
        poly = schur_principal_jt(lam, Truncation(args.k, args.D))
    if args.format == "csv":
        _emit(_poly_csv(poly), args.output)
    else:
        _emit(poly.to_json() + "\n", args.output)
    return 0


def cmd_multiplicity(args) -> int:
    n, k = args.n, args.k
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    bound = identities.exact_degree_bound(n, k)
    rows = []
    weighted_total = 0
    for lam in partitions(n):
        poly = identities.graded_multiplicity_comaj(lam, k)
        coeffs = [poly.coeff((d,)) for d in range(bound + 1)]
        rows.append((lam, coeffs))
        weighted_total += hook_length_count(lam) * sum(coeffs)
    expected = factorial(n) ** k
    if args.format == "json":
        obj = {
            "n": n,
            "k": k,
            "rows": [
                {"lambda": list(lam), "coeffs": coeffs} for lam, coeffs in rows
            ],
            "weighted_total_at_one": weighted_total,
            "expected_dimension": expected,
        }
        _emit(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n", args.output)
        return 0
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["lambda"] + [f"q^{d}" for d in range(bound + 1)])
    for lam, coeffs in rows:
        writer.writerow([",".join(str(p) for p in lam)] + coeffs)
    writer.writerow(
        ["TOTAL[q=1]", weighted_total, expected, "ok" if weighted_total == expected else "MISMATCH"]
    )
    _emit(buf.getvalue(), args.output)
    return 0


def _all_subsets(n: int):
    for size in range(n):
        for combo in itertools.combinations(range(1, n), size):
            yield frozenset(combo)


def _run_verify_task(task) -> str:
    kind, payload = task
    if kind == "finite":
        lam, k, D = payload
        trunc = None if D is None else Truncation(k, D)
        report = identities.verify_finite_evaluation(lam, k, trunc)
    elif kind == "kronecker":
        lam, k = payload
        report = identities.verify_kronecker_multiplicity(lam, k)
    elif kind == "quasi":
        R, n, k, D = payload
        report = identities.verify_fundamental_evaluation(R, n, k, Truncation(k, D))
    elif kind == "row":
        n, k = payload
        report = identities.verify_row_case(n, k)
    elif kind == "prop41":
        R, n, target, sigma, r, bound = payload
        report = identities.verify_injection_recursion(R, n, target, sigma, r, bound)
    elif kind == "reindex":
        lam, m = payload
        report = identities.verify_variable_reindex(lam, m)
    else:
        raise ValueError(f"unknown verification task {kind!r}")
    return report.to_json_line()


def _verify_tasks(args) -> list:
    suites = SUITES[:-1] if args.suite == "all" else (args.suite,)
    ns = [args.n] if args.n else list(range(1, args.max_n + 1))
    ks = [args.k] if args.k else list(range(1, args.max_k + 1))
    lams = None
    if args.lambda_:
        lams = [parse_partition_arg(args.lambda_)]
    tasks = []
    for suite in suites:
        if suite == "finite":
            for lam in lams or (lam for n in ns for lam in partitions(n)):
                for k in ks:
                    tasks.append(("finite", (lam, k, args.D)))
        elif suite == "kronecker":
            for lam in lams or (lam for n in ns for lam in partitions(n)):
                for k in ks:
                    tasks.append(("kronecker", (lam, k)))
        elif suite == "quasi":
            for n in ns:
                rsets = [parse_set_arg(args.r_set)] if args.r_set is not None else list(
                    _all_subsets(n)
                )
                for R in rsets:
                    for k in ks:
                        D = args.D if args.D is not None else identities.exact_degree_bound(n, k)
                        tasks.append(("quasi", (R, n, k, D)))
        elif suite == "row":
            for n in ns:
                for k in ks:
                    tasks.append(("row", (n, k)))
        elif suite == "prop41":
            for n in [x for x in ns if x >= 2]:
                rs = [args.r] if args.r else [1, 2]
                rsets = [parse_set_arg(args.r_set)] if args.r_set is not None else list(
                    _all_subsets(n)
                )
                for r in rs:
                    for R in rsets:
                        for target in _all_subsets(n):
                            for sigma in perm.symmetric_group(n):
                                tasks.append(
                                    ("prop41", (R, n, target, sigma, r, args.bound))
                                )
        elif suite == "reindex":
            ms = [args.m] if args.m else list(range(1, max(args.max_k, 2)))
            for lam in lams or (lam for n in ns for lam in partitions(n)):
                for m in ms:
                    tasks.append(("reindex", (lam, m)))
    return tasks


def cmd_verify(args) -> int:
    jobs = args.jobs or int(os.environ.get("COMAJ_JOBS", "1"))
    tasks = _verify_tasks(args)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunk = max(1, len(tasks) // (jobs * 4))
            lines = list(pool.map(_run_verify_task, tasks, chunksize=chunk))
    else:
        lines = [_run_verify_task(task) for task in tasks]
    text = "".join(line + "\n" for line in lines)
    _emit(text, args.output)
    failed = sum(1 for line in lines if '"status":"fail"' in line)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="comaj",
        description="Generalized comaj statistics and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_stat = sub.add_parser("stat", help="trace a label chain for one tableau")
    p_stat.add_argument("--shape", required=True, help="partition, e.g. 4,2,1")
    p_stat.add_argument(
        "--tableau",
        help="rows bottom to top separated by '/', entries by ',' (e.g. 1,2,4,5/3,6/7)",
    )
    p_stat.add_argument(
        "--perms",
        required=True,
        help="permutation vector; digit strings separated by ',' "
        "(or comma lists separated by ';' for n > 9); empty for none",
    )
    p_stat.add_argument("--format", choices=("text", "json"), default="text")
    p_stat.add_argument("-o", "--output")
    p_stat.set_defaults(handler=cmd_stat)

    p_eval = sub.add_parser("evaluate", help="write one polynomial")
    eval_sub = p_eval.add_subparsers(dest="target", required=True)
    for target in ("schur", "schur-jt"):
        p = eval_sub.add_parser(target)
        p.add_argument("--lambda", dest="lambda_", required=True)
        p.add_argument("--k", type=int, default=1)
        p.add_argument("--D", type=int)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("-o", "--output")
        p.set_defaults(handler=cmd_evaluate, target=target)
    p = eval_sub.add_parser("fundamental")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r-set", dest="r_set", default="")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--D", type=int)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_evaluate, target="fundamental")

    p_mult = sub.add_parser("multiplicity", help="graded multiplicity table")
    p_mult.add_argument("--n", type=int, required=True)
    p_mult.add_argument("--k", type=int, required=True)
    p_mult.add_argument("--format", choices=("csv", "json"), default="csv")
    p_mult.add_argument("-o", "--output")
    p_mult.set_defaults(handler=cmd_multiplicity)

    p_verify = sub.add_parser("verify", help="run identity suites")
    p_verify.add_argument("suite", choices=SUITES)
    p_verify.add_argument("--max-n", dest="max_n", type=int, default=3)
    p_verify.add_argument("--max-k", dest="max_k", type=int, default=2)
    p_verify.add_argument("--lambda", dest="lambda_")
    p_verify.add_argument("--n", type=int)
    p_verify.add_argument("--k", type=int)
    p_verify.add_argument("--m", type=int)
    p_verify.add_argument("--r", type=int)
    p_verify.add_argument("--r-set", dest="r_set")
    p_verify.add_argument("--bound", type=int, default=4)
    p_verify.add_argument("--D", type=int)
    p_verify.add_argument("--jobs", type=int)
    p_verify.add_argument("-o", "--output")
    p_verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, ArithmeticError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
