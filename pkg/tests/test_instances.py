from fractions import Fraction

import pytest

from fvs_local import (
    OCT, DrawnGraph, build_graph, exact_fvs, exact_min, gen_diagonal_grid,
    gen_grid, gen_k3n, gen_partial_ktree, is_acyclic, lift_solution,
    planarize_1planar, verify_local_optimality,
)
from fvs_local.instances import (
    DegenerateDrawing, convex_k5, crossings_per_edge, default_cells,
    one_crossing_k5, random_drawing, random_minimal_fvs, segment_crossing,
)
from fvs_local.oracle import is_feasible_for, oct_feasible, subset_fvs_feasible
from fvs_local.solver import is_feasible

from conftest import brute_fvs


def test_grid_shapes():
    assert is_acyclic(gen_grid(1, 5))
    assert gen_grid(2, 2).m == 4
    g = gen_grid(3, 3)
    assert (g.n, g.m) == (9, 12)


def test_k3n():
    assert is_acyclic(gen_k3n(1))
    assert len(exact_fvs(gen_k3n(2))) == 1 == brute_fvs(gen_k3n(2))
    assert len(exact_fvs(gen_k3n(3))) == 2 == brute_fvs(gen_k3n(3))


def test_ktree_counts():
    assert len(exact_fvs(gen_partial_ktree(12, 1))) == 0
    for n, k in [(4, 2), (9, 2), (10, 3)]:
        assert gen_partial_ktree(n, k).m == k * n - k * (k + 1) // 2


def test_ktree_seeded():
    a = gen_partial_ktree(20, 2, 0.8, seed=7)
    assert a == gen_partial_ktree(20, 2, 0.8, seed=7)
    assert a.m < 2 * 20 - 3
    opt = exact_fvs(a)
    assert is_feasible(a, opt)


def test_minimal_fvs_is_minimal():
    g = gen_partial_ktree(14, 2, seed=2)
    S = random_minimal_fvs(g, 9)
    assert is_feasible(g, S)
    assert all(not is_feasible(g, S - {v}) for v in S)


def test_diag_oct_d1():
    inst = gen_diagonal_grid(4, variant="OCT", d=1)
    assert len(inst.planted_optimal) == 1
    assert oct_feasible(gen_grid(4, 4), set())


def test_diag_oct_ratio():
    inst = gen_diagonal_grid(4, variant="OCT", d=2)
    assert len(inst.planted_local) / len(exact_min(inst.graph, OCT)) >= 2


def test_diag_sfvs_d1():
    inst = gen_diagonal_grid(4, variant="SFVS", d=1)
    assert subset_fvs_feasible(inst.graph, inst.U, inst.planted_optimal)
    assert is_feasible_for(inst.graph, inst.kind, inst.planted_local)


def test_diag_bad_cells():
    with pytest.raises(ValueError):
        gen_diagonal_grid(5, diag_cells=(4,))
    with pytest.raises(ValueError):
        default_cells(4, 3)
    with pytest.raises(ValueError):
        gen_diagonal_grid(5, variant="VC")


def test_local_optimality_examples():
    inst = gen_diagonal_grid(6, variant="OCT", d=2)
    assert verify_local_optimality(inst, 0)
    assert verify_local_optimality(inst, 2)
    assert verify_local_optimality(inst, 1, solution=inst.planted_optimal)
    assert len(inst.planted_optimal) == len(exact_min(inst.graph, OCT))


def test_local_optimality_detects_improvement():
    inst = gen_diagonal_grid(5, variant="OCT", d=1)
    # diagonal plus a redundant extra vertex can drop that vertex
    padded = inst.planted_local | {1}
    assert not verify_local_optimality(inst, 1, solution=padded)


def test_segment_crossing():
    hit = segment_crossing((0, 0), (2, 2), (0, 2), (2, 0))
    assert hit == ((1, 1), Fraction(1, 2))
    assert segment_crossing((0, 0), (1, 0), (0, 1), (1, 1)) is None
    with pytest.raises(DegenerateDrawing):
        segment_crossing((0, 0), (2, 0), (1, 0), (3, 0))
    with pytest.raises(DegenerateDrawing):
        segment_crossing((0, 0), (2, 0), (1, 0), (1, 5))


def test_planar_drawing_identity():
    dg = DrawnGraph(gen_grid(2, 2), {0: (0, 0), 1: (1, 0), 2: (0, 1), 3: (1, 1)})
    plan = planarize_1planar(dg)
    assert plan.graph == dg.graph and plan.crossings == []


def test_single_crossing_identity():
    g = build_graph(4, [(0, 1), (2, 3)])
    dg = DrawnGraph(g, {0: (0, 0), 1: (2, 2), 2: (0, 2), 3: (2, 0)})
    plan = planarize_1planar(dg)
    assert plan.graph == g and len(plan.crossings) == 1


def test_one_crossing_k5():
    dg = one_crossing_k5()
    plan = planarize_1planar(dg)
    assert len(plan.crossings) == 1 and plan.graph == dg.graph
    assert len(exact_fvs(dg.graph)) == len(exact_fvs(plan.graph)) == 3


def test_convex_k5():
    dg = convex_k5()
    plan = planarize_1planar(dg)
    H = plan.graph
    assert (H.n, H.m) == (10, 15)
    assert max(crossings_per_edge(H, plan.coords)) <= 1
    opt_g, opt_h = exact_fvs(dg.graph), exact_fvs(H)
    assert len(opt_g) == len(opt_h)
    lifted = lift_solution(opt_h, plan)
    assert is_feasible(dg.graph, lifted) and len(lifted) == len(opt_g)


def test_lift_identity():
    plan = planarize_1planar(convex_k5())
    assert lift_solution({0, 1, 2}, plan) == {0, 1, 2}


def test_lift_replaces_subdivision():
    plan = planarize_1planar(convex_k5())
    w = min(plan.origin)
    assert lift_solution({w}, plan) == {min(plan.origin[w])}


def test_degenerate_drawings():
    with pytest.raises(DegenerateDrawing):
        DrawnGraph(build_graph(2, [(0, 1)]), {0: (0, 0), 1: (0, 0)})
    g = build_graph(3, [(0, 1)])
    with pytest.raises(DegenerateDrawing):
        planarize_1planar(DrawnGraph(g, {0: (0, 0), 1: (2, 0), 2: (1, 0)}))


def test_random_drawing_reproducible():
    a, b = random_drawing(7, 12, seed=3), random_drawing(7, 12, seed=3)
    assert a.graph == b.graph and a.coords == b.coords
