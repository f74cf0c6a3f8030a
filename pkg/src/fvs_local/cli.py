"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 a verification failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bench
from .division import audit_local_vs_global, r_division
from .exchange import ExchangeError, build_exchange_graph, contract_steiner_forest, verify_exchange_properties
from .graph import CycleBudgetExceeded
from .instances import gen_diagonal_grid, gen_grid, gen_k3n, gen_partial_ktree
from .io import ParseError, format_instance, format_solution, parse_instance, read_solution
from .oracle import FVS, OCT, SizeLimitExceeded, SubsetFVS, exact_min
from .solver import SearchParams, is_feasible, local_search

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_gen(args) -> int:
    fam = args.family
    sols, U, extra = [], None, {}
    if fam == "grid":
        rows = args.rows or args.k
        cols = args.cols or rows
        if not rows:
            raise ValueError("grid needs --k or --rows")
        g = gen_grid(rows, cols)
    elif fam == "k3n":
        g = gen_k3n(args.n)
    elif fam == "ktree":
        g = gen_partial_ktree(args.n, args.k or 2, args.keep, args.seed)
    else:
        variant = "OCT" if fam == "diag-oct" else "SFVS"
        inst = gen_diagonal_grid(args.k, None, variant, d=args.d)
        g = inst.graph
        U = inst.U if variant == "SFVS" else None
        extra = {"local": inst.planted_local, "opt": inst.planted_optimal}
    text = format_instance(g, sols, U, comment=f"generated by gen {fam}")
    if args.output is None:
        sys.stdout.write(text)
    else:
        out = Path(args.output)
        out.write_text(text)
        for tag, S in extra.items():
            Path(f"{out}.{tag}.sol").write_text(format_solution(S, f"planted {tag} solution"))
    return EXIT_OK


def cmd_solve(args) -> int:
    inst = parse_instance(args.file)
    params = SearchParams(c=args.c, max_iterations=args.max_iter, seed=args.seed)
    sol, rep = local_search(inst.graph, params, instance=str(args.file))
    out = rep.to_dict()
    out["solution"] = sorted(sol.members)
    _emit(out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    inst = parse_instance(args.file)
    if args.kind == "fvs":
        kind = FVS
    elif args.kind == "oct":
        kind = OCT
    else:
        if inst.U is None:
            raise ValueError("subset FVS needs a 'u' line in the instance")
        kind = SubsetFVS(inst.U)
    S = exact_min(inst.graph, kind, args.limit)
    _emit({"kind": kind.tag, "size": len(S), "certificate": sorted(S)})
    return EXIT_OK


def _load_pair(args):
    inst = parse_instance(args.file)
    O, L = read_solution(args.opt), read_solution(args.local)
    for name, S in (("--opt", O), ("--local", L)):
        if not S <= inst.graph.vertices:
            raise ValueError(f"{name} names vertices outside the graph")
        if not is_feasible(inst.graph, S):
            print(f"fvs_local: verification failed: {name} is not a feedback vertex set", file=sys.stderr)
            return None
    return inst, O, L


def cmd_exchange(args) -> int:
    loaded = _load_pair(args)
    if loaded is None:
        return EXIT_VERIFY
    inst, O, L = loaded
    ex = build_exchange_graph(inst.graph, O, L)
    rep = verify_exchange_properties(inst.graph, ex, args.cycle_budget)
    lemma_ok = True
    try:
        contract_steiner_forest(ex, strict=True)
    except ExchangeError:
        lemma_ok = False
    _emit({
        "n_K": rep.n_K,
        "labels": ex.histogram(),
        "c_ex_measured": rep.c_ex_measured,
        "clause_counts": rep.clause_counts,
        "violations": len(rep.violations),
        "lemma_checks": "pass" if lemma_ok else "fail",
    })
    return EXIT_OK if rep.ok and lemma_ok else EXIT_VERIFY


def cmd_divide(args) -> int:
    inst = parse_instance(args.file)
    g = inst.graph
    div = r_division(g, args.r)
    _emit({
        "r": args.r,
        "regions": [[list(g.edges[e]) for e in reg.edges] for reg in div.regions],
        "region_vertices": [sorted(reg.vertices) for reg in div.regions],
        "boundary_sizes": [len(b) for b in div.boundary],
        "c_div_measured": div.c_div_measured,
    })
    return EXIT_OK


def cmd_audit(args) -> int:
    loaded = _load_pair(args)
    if loaded is None:
        return EXIT_VERIFY
    inst, O, L = loaded
    rep = audit_local_vs_global(inst.graph, O, L, args.c)
    _emit(rep.to_dict())
    return EXIT_OK if rep.ok else EXIT_VERIFY


def cmd_bench(args) -> int:
    config = bench.load_config(args.config)
    rows = bench.run_bench(config)
    csv_path, json_path = bench.write_bench(rows, args.output)
    _emit({"rows": len(rows), "csv": str(csv_path), "json": str(json_path)})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="python -m fvs_local", description="Local search for feedback vertex set, with verifiers.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate an instance file")
    g.add_argument("family", choices=["grid", "k3n", "ktree", "diag-oct", "diag-sfvs"])
    g.add_argument("--k", type=int)
    g.add_argument("--rows", type=int)
    g.add_argument("--cols", type=int)
    g.add_argument("--d", type=int, default=2)
    g.add_argument("--n", type=int)
    g.add_argument("--keep", type=float, default=1.0)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="run local search")
    s.add_argument("file")
    s.add_argument("--c", type=int, required=True)
    s.add_argument("--max-iter", type=int)
    s.add_argument("--seed", type=int)
    s.set_defaults(func=cmd_solve)

    o = sub.add_parser("oracle", help="exact optimum")
    o.add_argument("file")
    o.add_argument("--kind", choices=["fvs", "oct", "sfvs"], default="fvs")
    o.add_argument("--limit", type=int, default=40)
    o.set_defaults(func=cmd_oracle)

    e = sub.add_parser("exchange", help="build and verify the exchange graph")
    e.add_argument("file")
    e.add_argument("--opt", required=True)
    e.add_argument("--local", required=True)
    e.add_argument("--cycle-budget", type=int, default=100_000)
    e.set_defaults(func=cmd_exchange)

    d = sub.add_parser("divide", help="compute an r-division")
    d.add_argument("file")
    d.add_argument("--r", type=int, required=True)
    d.set_defaults(func=cmd_divide)

    a = sub.add_parser("audit", help="replay the charging argument on (O, L)")
    a.add_argument("file")
    a.add_argument("--opt", required=True)
    a.add_argument("--local", required=True)
    a.add_argument("--c", type=int, required=True)
    a.set_defaults(func=cmd_audit)

    b = sub.add_parser("bench", help="run a sweep config")
    b.add_argument("config")
    b.add_argument("-o", "--output", required=True)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, bench.ConfigError, ValueError, OSError) as exc:
        print(f"fvs_local: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SizeLimitExceeded, CycleBudgetExceeded) as exc:
        print(f"fvs_local: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ExchangeError as exc:
        print(f"fvs_local: verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
