"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``[criterion N] PASS|FAIL ...`` line (visible with
``pytest -v``). Run directly with ``python3 tests/test_acceptance.py``.
"""

import random
import time

import pytest

from fvs_local import (
    OCT, SearchParams, audit_local_vs_global, build_exchange_graph,
    contract_steiner_forest, exact_fvs, exact_min, gen_diagonal_grid, gen_grid,
    gen_k3n, gen_partial_ktree, lift_solution, local_search, planarize_1planar,
    r_division, verify_exchange_properties, verify_local_optimality,
    verify_r_division, verify_structure_lemma,
)
from fvs_local.exchange import random_lemma_instance, structure_lemma_premises
from fvs_local.instances import convex_k5, crossings_per_edge, one_crossing_k5, random_drawing, random_minimal_fvs
from fvs_local.solver import is_feasible

from conftest import brute_fvs


def _report(capsys, n, ok, detail):
    with capsys.disabled():
        print(f"\n[criterion {n}] {'PASS' if ok else 'FAIL'} {detail}")


def test_criterion_1_oracle_equivalence(capsys):
    rng = random.Random(1)
    t0 = time.perf_counter()
    mismatches = []
    grids = [(r, c) for r in range(1, 5) for c in range(r, 13) if r * c <= 12]
    for i in range(200):
        fam = i % 3
        if fam == 0:
            k = rng.choice([1, 2, 3])
            g = gen_partial_ktree(rng.randint(k + 1, 12), k, rng.choice([0.6, 0.8, 1.0]), rng.randrange(10**6))
        elif fam == 1:
            g = gen_grid(*rng.choice(grids))
        else:
            g = gen_k3n(rng.randint(1, 9))
        if len(exact_fvs(g)) != brute_fvs(g):
            mismatches.append(i)
    dt = time.perf_counter() - t0
    ok = not mismatches and dt < 120
    _report(capsys, 1, ok, f"200 instances, {len(mismatches)} mismatches, {dt:.1f}s (limit 120s)")
    assert ok


def test_criterion_2_solver_soundness(capsys):
    t0 = time.perf_counter()
    rows, bad = [], []
    instances = [(f"grid{r}x{c}", gen_grid(r, c)) for r in range(2, 6) for c in range(r, 6)]
    for n in range(8, 23):
        for keep in (0.8, 1.0):
            for seed in range(3):
                instances.append((f"2tree n={n} keep={keep} seed={seed}", gen_partial_ktree(n, 2, keep, seed)))
    worst = 0.0
    for name, g in instances:
        opt = len(exact_fvs(g))
        starts = [None] + [random_minimal_fvs(g, s) for s in range(2)]
        for start in starts:
            sol, rep = local_search(g, SearchParams(c=3), start=start)
            if not (is_feasible(g, sol.members) and rep.certified_local_opt):
                bad.append(name)
            ratio = len(sol) / opt if opt else 1.0
            worst = max(worst, ratio)
            if start is None:
                rows.append((name, len(sol), opt, ratio))
    dt = time.perf_counter() - t0
    ok = not bad and worst <= 1.5 and dt < 300
    with capsys.disabled():
        print("\n  instance                     |L|  |O|  ratio")
        for name, L, O, ratio in rows:
            if name.startswith("grid") or name.endswith("seed=0"):
                print(f"  {name:<28} {L:>3}  {O:>3}  {ratio:.3f}")
    _report(capsys, 2, ok, f"{len(instances)} instances x 3 starts, {len(bad)} unsound, max ratio {worst:.3f} (limit 1.5), {dt:.1f}s")
    assert ok


def _exchange_runs(count):
    rng = random.Random(3)
    shapes = [(3, 3), (3, 4), (3, 5), (4, 4), (2, 8)]
    for i in range(count):
        fam = i % 4
        if fam == 0:
            g = gen_grid(*shapes[(i // 4) % len(shapes)])
        elif fam == 1:
            g = gen_partial_ktree(rng.randint(8, 16), 2, rng.choice([0.8, 1.0]), rng.randrange(10**6))
        elif fam == 2:
            g = gen_partial_ktree(rng.randint(6, 11), 3, 0.7, rng.randrange(10**6))
        else:
            g = gen_k3n(rng.randint(2, 10))
        O = exact_fvs(g) if rng.random() < 0.5 else random_minimal_fvs(g, rng.randrange(10**6))
        if rng.random() < 0.5:
            L = local_search(g, SearchParams(c=rng.choice([1, 2])), start=random_minimal_fvs(g, rng.randrange(10**6)))[0].members
        else:
            L = random_minimal_fvs(g, rng.randrange(10**6))
        yield g, O, L


def test_criterion_3_exchange_graph(capsys):
    runs = exceptions = cycles = steiner = 0
    for g, O, L in _exchange_runs(100):
        assert g.n <= 16
        runs += 1
        try:
            ex = build_exchange_graph(g, O, L)
            rep = verify_exchange_properties(g, ex, strict=True)
            stats = contract_steiner_forest(ex, strict=True)
        except Exception:
            exceptions += 1
            continue
        cycles += rep.n_cycles
        steiner += stats.steiner_count
        if not (rep.ok and stats.ok and all(ex.k.degree(v) >= 3 for v in ex.steiner)):
            exceptions += 1
    ok = runs == 100 and exceptions == 0
    _report(capsys, 3, ok, f"{runs} runs, {cycles} cycles checked, {steiner} Steiner vertices, {exceptions} exceptions")
    assert ok


def test_criterion_4_structure_lemma(capsys):
    rng = random.Random(4)
    t0 = time.perf_counter()
    held = 0
    for _ in range(500):
        g, A, B = random_lemma_instance(rng)
        assert g.n <= 20 and structure_lemma_premises(g, A, B) is None
        if verify_structure_lemma(g, A, B) and g.n <= 2 * (len(A) + len(B)):
            held += 1
    dt = time.perf_counter() - t0
    ok = held == 500 and dt < 60
    _report(capsys, 4, ok, f"bound held in {held}/500 premise-satisfying instances, {dt:.1f}s (limit 60s)")
    assert ok


def test_criterion_5_audit(capsys):
    rng = random.Random(5)
    graphs = [gen_grid(4, 4), gen_grid(5, 5), gen_grid(3, 6), gen_grid(4, 6), gen_grid(5, 6)]
    graphs += [gen_partial_ktree(rng.randint(15, 30), 2, rng.choice([0.8, 1.0]), rng.randrange(10**6)) for _ in range(5)]
    runs = exceptions = 0
    for i in range(20):
        g = graphs[i % len(graphs)]
        c = (2, 3, 4)[i % 3]
        assert g.n <= 30
        O = exact_fvs(g)
        sol, rep = local_search(g, SearchParams(c=c), start=random_minimal_fvs(g, i))
        assert rep.certified_local_opt
        audit = audit_local_vs_global(g, O, sol.members, c)
        runs += 1
        if not (audit.ok and all(audit.mi_feasible) and audit.eq2_holds):
            exceptions += 1
    ok = runs == 20 and exceptions == 0
    _report(capsys, 5, ok, f"{runs} audits with r = c in {{2,3,4}}, {exceptions} exceptions")
    assert ok


def test_criterion_6_r_division(capsys):
    families = {
        "grid": lambda s: gen_grid(4 + s, 4 + s),
        "2tree": lambda s: gen_partial_ktree(20 + 5 * s, 2, 0.8, s),
        "3tree": lambda s: gen_partial_ktree(16 + 3 * s, 3, 0.7, s),
        "k3n": lambda s: gen_k3n(4 + 3 * s),
    }
    failures, unstable = 0, 0
    summary = []
    for name, make in families.items():
        vals = []
        for seed in range(4):
            g = make(seed)
            for r in (4, 9, 16):
                div = r_division(g, r)
                rep = verify_r_division(g, div)
                failures += not rep.ok
                again = r_division(make(seed), r)
                unstable += again.c_div_measured != div.c_div_measured or again.regions != div.regions
                vals.append(div.c_div_measured)
        summary.append(f"{name} c_div max {max(vals):.2f}")
    ok = failures == 0 and unstable == 0
    _report(capsys, 6, ok, f"{failures} verifier failures, {unstable} nondeterministic; " + ", ".join(summary))
    assert ok


def test_criterion_7_negative_results(capsys):
    t0 = time.perf_counter()
    parts = []
    for k in (5, 6, 7, 8):
        inst = gen_diagonal_grid(k, variant="OCT", d=2)
        opt = len(exact_min(inst.graph, OCT))
        local = all(verify_local_optimality(inst, c) for c in (1, 2))
        parts.append((f"OCT k={k}", local and opt == 2 and len(inst.planted_local) / opt >= k / 2))
    for k in (5, 6):
        inst = gen_diagonal_grid(k, variant="SFVS", d=2)
        opt = len(exact_min(inst.graph, inst.kind))
        for c in (1, 2):
            ok_c = verify_local_optimality(inst, c)
            parts.append((f"SFVS k={k} c={c}", ok_c and opt == 2 and len(inst.planted_local) / opt >= k / 2))
    dt = time.perf_counter() - t0
    ok = all(p for _, p in parts) and dt < 300
    failed = [name for name, p in parts if not p]
    detail = f"{len(parts) - len(failed)}/{len(parts)} parts hold, {dt:.1f}s"
    if failed:
        detail += "; not locally optimal: " + ", ".join(failed)
    _report(capsys, 7, ok, detail)
    assert ok, detail


def test_criterion_8_planarization(capsys):
    drawings = [one_crossing_k5(), convex_k5()]
    seed = 0
    while len(drawings) < 10:
        rng = random.Random(seed)
        n = rng.randint(6, 9)
        dg = random_drawing(n, rng.randint(n, 2 * n), seed=seed)
        seed += 1
        if planarize_1planar(dg).graph.n <= 25:
            drawings.append(dg)
    bad = 0
    for dg in drawings:
        plan = planarize_1planar(dg)
        H = plan.graph
        if H.n > 25 or max(crossings_per_edge(H, plan.coords), default=0) > 1:
            bad += 1
            continue
        opt_g, opt_h = exact_fvs(dg.graph), exact_fvs(H)
        lifted = lift_solution(opt_h, plan)
        if not (len(opt_g) == len(opt_h) == len(lifted) and is_feasible(dg.graph, lifted)):
            bad += 1
    ok = bad == 0
    _report(capsys, 8, ok, f"{len(drawings)} drawings, max |V(H)| {max(planarize_1planar(d).graph.n for d in drawings)}, {bad} failures")
    assert ok


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
