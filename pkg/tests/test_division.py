import random

import pytest
from hypothesis import given, settings, strategies as st

from fvs_local import (
    SearchParams, audit_local_vs_global, balanced_separator, build_graph,
    exact_fvs, local_search, r_division, verify_r_division,
)
from fvs_local.division import RDivision, Region, check_separator, implied_epsilon
from fvs_local.instances import gen_grid, gen_partial_ktree


def path(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def test_separator_path9():
    S, p1, p2 = balanced_separator(path(9))
    assert S == {4} and {len(p1), len(p2)} == {4}


def test_separator_star():
    g = build_graph(9, [(0, i) for i in range(1, 9)])
    S, p1, p2 = balanced_separator(g)
    assert S == {0} and len(p1) + len(p2) == 8


def test_separator_grid5():
    g = gen_grid(5, 5)
    S, p1, p2 = balanced_separator(g)
    assert len(S) <= 5 and check_separator(g, S, p1, p2) == []


def test_check_separator_flags():
    g = path(3)
    assert check_separator(g, set(), {0, 1}, {2})


def test_identity_division():
    g = gen_grid(2, 3)
    div = r_division(g, 6)
    assert len(div.regions) == 1 and div.boundary == [frozenset()]


def test_path10_r4():
    g = path(10)
    div = r_division(g, 4)
    assert len(div.regions) <= 4
    assert all(len(reg.vertices) <= 4 for reg in div.regions)
    assert div.boundary_total <= 4
    assert verify_r_division(g, div).ok


def test_grid6_r9():
    g = gen_grid(6, 6)
    div = r_division(g, 9)
    rep = verify_r_division(g, div)
    assert rep.ok and rep.c_div_measured == div.c_div_measured > 0


def test_single_region_report():
    g = gen_grid(2, 2)
    div = r_division(g, 4)
    rep = verify_r_division(g, div)
    assert rep.ok and rep.region_ratio == 1.0 and rep.boundary_ratio == 0.0


def test_oversized_region_flagged():
    g = path(6)
    div = RDivision([Region(frozenset(range(6)), tuple(range(5)))], [frozenset()], 3, 0.0)
    rep = verify_r_division(g, div)
    assert not rep.ok and any("property 1" in p for p in rep.problems)


def test_missing_edge_flagged():
    g = path(4)
    div = RDivision([Region(frozenset({0, 1, 2}), (0, 1)), Region(frozenset({3}), ())], [frozenset(), frozenset()], 3, 0.0)
    assert not verify_r_division(g, div).ok


def test_clique_needs_edge_split():
    k6 = build_graph(6, [(i, j) for i in range(6) for j in range(i + 1, 6)])
    div = r_division(k6, 3)
    assert verify_r_division(k6, div).ok


def test_rejects_small_r():
    with pytest.raises(ValueError):
        r_division(path(3), 1)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 14).flatmap(
    lambda n: st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=25)
    .map(lambda es: build_graph(n, es))), st.integers(2, 6))
def test_division_always_verifies(g, r):
    div = r_division(g, r)
    assert verify_r_division(g, div).ok


def test_division_deterministic():
    g = gen_partial_ktree(25, 2, 0.8, seed=3)
    a, b = r_division(g, 5), r_division(g, 5)
    assert a.regions == b.regions and a.c_div_measured == b.c_div_measured


def test_audit_trivial():
    g = path(5)
    rep = audit_local_vs_global(g, set(), set(), 2)
    assert rep.ok


def test_audit_c4(c4):
    rep = audit_local_vs_global(c4, {0}, {0}, 3)
    assert rep.ok and rep.regions == 1 and all(rep.mi_feasible)


def test_audit_grid5():
    g = gen_grid(5, 5)
    O = exact_fvs(g)
    L = local_search(g, SearchParams(c=4))[0].members
    rep = audit_local_vs_global(g, O, L, 4)
    assert rep.ok and all(rep.mi_feasible) and rep.eq2_holds
    assert rep.to_dict()["region_inequalities_hold"]


def test_implied_epsilon():
    assert implied_epsilon(1, 1, 4) is None
    eps = implied_epsilon(1, 1, 36)
    assert eps == pytest.approx(1.0)
