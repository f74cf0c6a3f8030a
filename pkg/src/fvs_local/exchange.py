"""Exchange graph for a pair of feedback vertex sets, and its verifiers.

``build_exchange_graph`` runs three steps on G:

1. drop every edge at a vertex of O & L, then drop components with no
   solution vertex;
2. remove degree-1 non-solution vertices and bypass degree-2 ones until none
   are left (each bypass is an edge contraction);
3. keep one edge out of every bundle of parallel edges.

The result K is checked against the exchange-graph conditions, the Steiner
degree bound, the tree-size bound, and the component bound of the contracted
graph K'.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from .graph import (
    Graph,
    connected_components,
    contract_edge,
    delete_edges,
    delete_vertices,
    enumerate_cycles,
    induced_subgraph,
    is_acyclic,
    is_simple,
    simplify,
)
from .solver import is_feasible

L_ONLY = "L-only"
O_ONLY = "O-only"
BOTH = "both"
STEINER = "Steiner"


class ExchangeError(RuntimeError):
    """A proved property failed; signals a construction bug."""


class LemmaViolation(ExchangeError):
    pass


@dataclass(frozen=True)
class ExchangeGraph:
    k: Graph
    label: dict
    origin_O: frozenset
    origin_L: frozenset

    @property
    def solution_vertices(self) -> frozenset:
        return self.origin_O | self.origin_L

    @property
    def steiner(self) -> frozenset:
        return frozenset(v for v, t in self.label.items() if t == STEINER)

    def histogram(self) -> dict:
        counts = Counter(self.label.values())
        return {t: counts.get(t, 0) for t in (L_ONLY, O_ONLY, BOTH, STEINER)}


def _label(v, O, L) -> str:
    if v in O and v in L:
        return BOTH
    if v in O:
        return O_ONLY
    if v in L:
        return L_ONLY
    return STEINER


def _peel(g: Graph, solution: frozenset, order: str = "ascending") -> Graph:
    reverse = order == "descending"
    while True:
        pick = None
        for v in sorted(g.vertices - solution, reverse=reverse):
            if g.degree(v) <= 2:
                pick = v
                break
        if pick is None:
            return g
        inc = g.incident(pick)
        if len(inc) <= 1:
            g = delete_vertices(g, {pick})
            continue
        e = inc[0]
        keep = g.other(e, pick)
        if keep == pick:
            raise ExchangeError(f"self-loop at non-solution vertex {pick}")
        g = contract_edge(g, e, keep=keep)
        loops = [u for u, v in g.edges if u == v]
        if loops:
            raise ExchangeError(f"self-loop created at {loops[0]} while suppressing degree-2 vertices")


def build_exchange_graph(g: Graph, O, L, order: str = "ascending") -> ExchangeGraph:
    O, L = frozenset(O), frozenset(L)
    if not is_feasible(g, O):
        raise ValueError("O is not a feedback vertex set of g")
    if not is_feasible(g, L):
        raise ValueError("L is not a feedback vertex set of g")
    sol = O | L
    both = O & L
    # cut edges at shared vertices, drop solution-free components
    h = delete_edges(g, [i for i, (u, v) in enumerate(g.edges) if u in both or v in both])
    dead = set()
    for comp in connected_components(h):
        if not comp & sol:
            dead |= comp
    h = delete_vertices(h, dead)
    # peel and suppress non-solution vertices of degree <= 2
    h = _peel(h, sol, order)
    # merge parallel edges
    k = simplify(h)
    label = {v: _label(v, O, L) for v in sorted(k.vertices)}
    ex = ExchangeGraph(k, label, O, L)
    _check_invariants(ex)
    return ex


def _check_invariants(ex: ExchangeGraph) -> None:
    k = ex.k
    if not ex.solution_vertices <= k.vertices:
        raise ExchangeError("a solution vertex was lost")
    if not is_simple(k):
        raise ExchangeError("K is not simple")
    for v, t in ex.label.items():
        if t == BOTH and k.degree(v) != 0:
            raise ExchangeError(f"vertex {v} in O & L is not isolated")
        if t == STEINER and k.degree(v) < 3:
            raise ExchangeError(f"Steiner vertex {v} has degree {k.degree(v)} < 3")


@dataclass
class ExchangeReport:
    n_cycles: int
    clause_counts: dict
    violations: list
    c_ex_measured: float
    n_K: int

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_exchange_properties(
    g: Graph, ex: ExchangeGraph, cycle_budget: int = 100_000, strict: bool = False
) -> ExchangeReport:
    """Check the three-way covering condition for every simple cycle of g.

    Each cycle is attributed to the first clause that holds: a vertex in O & L
    ("shared"), a K-edge between an L-vertex and an O-vertex of the cycle ("edge"),
    or a cycle of K inside V(C) with the same solution vertices ("cycle").
    """
    O, L = ex.origin_O, ex.origin_L
    sol = O | L
    k = ex.k
    kadj = k.adjacency()
    counts = {"shared": 0, "edge": 0, "cycle": 0}
    violations = []
    cycles = enumerate_cycles(g, cycle_budget)
    for cyc in cycles:
        vs = set(cyc.vertices)
        if vs & O & L:
            counts["shared"] += 1
            continue
        lc, oc = vs & L, vs & O
        if any(w in oc for u in lc for w in kadj.get(u, ())):
            counts["edge"] += 1
            continue
        trace = vs & sol
        inside = vs & k.vertices
        sub = induced_subgraph(k, inside)
        found = False
        if not is_acyclic(sub):
            for c2 in enumerate_cycles(sub, cycle_budget):
                if set(c2.vertices) & sol == trace:
                    found = True
                    break
        if found:
            counts["cycle"] += 1
        else:
            violations.append(cyc.vertices)
    denom = len(O) + len(L)
    report = ExchangeReport(
        n_cycles=len(cycles),
        clause_counts=counts,
        violations=violations,
        c_ex_measured=k.n / denom if denom else 0.0,
        n_K=k.n,
    )
    if strict and violations:
        raise ExchangeError(f"{len(violations)} cycles satisfy no clause, e.g. {violations[0]}")
    return report


@dataclass
class SteinerForestStats:
    trees: list  # (frozenset of tree vertices, deg_K(T))
    kprime: Graph
    tree_ids: dict  # contracted vertex id -> tree vertex set
    component_sizes: list  # (|V(Z)|, |Z & O|, |Z & L \ O|)
    steiner_count: int
    edges_kprime: int
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def contract_steiner_forest(ex: ExchangeGraph, strict: bool = True) -> SteinerForestStats:
    k = ex.k
    O, L = ex.origin_O, ex.origin_L
    sol = O | L
    forest = delete_vertices(k, sol & k.vertices)
    if not is_acyclic(forest):
        raise ExchangeError("K minus the solution vertices is not a forest")
    failures = []
    for v in forest.vertices:
        if k.degree(v) < 3:
            failures.append(f"Steiner vertex {v} has degree {k.degree(v)}")
    trees = []
    kp = k
    tree_ids = {}
    for T in connected_components(forest):
        deg = sum(1 for u, v in k.edges if (u in T) != (v in T))
        trees.append((T, deg))
        if len(T) > deg:
            failures.append(f"tree {sorted(T)} has {len(T)} vertices but degree {deg}")
        root = min(T)
        tree_ids[root] = T
        # contract the tree onto its smallest vertex
        while True:
            inner = [i for i, (u, v) in enumerate(kp.edges) if u in T and v in T and u != v]
            if not inner:
                break
            u, v = kp.edges[inner[0]]
            # root is never the vertex that disappears, so T ends up as root
            kp = contract_edge(kp, inner[0], keep=root if root in (u, v) else min(u, v))
    if not is_simple(kp):
        failures.append("K' is not simple")
    comps = []
    for Z in connected_components(kp):
        zo = len(Z & O)
        zl = len(Z & (L - O))
        comps.append((len(Z), zo, zl))
        if len(Z) > 2 * (zo + zl):
            failures.append(f"component {sorted(Z)} violates |Z| <= 2(|Z&O| + |Z&L\\O|)")
    steiner = k.n - len(sol & k.vertices)
    if steiner > kp.m:
        failures.append(f"Steiner count {steiner} exceeds |E(K')| = {kp.m}")
    if sum(d for _, d in trees) > kp.m:
        failures.append("sum of tree degrees exceeds |E(K')|")
    stats = SteinerForestStats(trees, kp, tree_ids, comps, steiner, kp.m, failures)
    if strict and failures:
        raise ExchangeError("; ".join(failures))
    return stats


def structure_lemma_premises(g: Graph, A, B) -> Optional[str]:
    """Name of the first violated premise, or ``None`` if all hold.

    The premise that every cycle meets both A and B is checked as "g - A and
    g - B are both forests", which is the same condition.
    """
    A, B = frozenset(A), frozenset(B)
    if not A or not B or A & B:
        return "A and B must be disjoint and nonempty"
    D = g.vertices - A - B
    for u, v in g.edges:
        if u in D and v in D:
            return "D is not independent"
    for v in sorted(D):
        if g.degree(v) < 3:
            return f"vertex {v} of D has degree {g.degree(v)} < 3"
    if not is_acyclic(delete_vertices(g, A)):
        return "some cycle avoids A"
    if not is_acyclic(delete_vertices(g, B)):
        return "some cycle avoids B"
    return None


def verify_structure_lemma(g: Graph, A, B) -> bool:
    """False if a premise fails; raises LemmaViolation if the bound fails."""
    if structure_lemma_premises(g, A, B) is not None:
        return False
    bound = 2 * (len(A) + len(B))
    if g.n > bound:
        raise LemmaViolation(f"|V| = {g.n} > 2(|A| + |B|) = {bound} with all premises holding")
    return True


def random_lemma_instance(rng, max_side: int = 6, max_d: int = 8, tries: int = 1000):
    """Rejection-sample (g, A, B) satisfying the lemma's premises.

    Each D-vertex gets two neighbours on one side plus a third neighbour
    anywhere in A | B; a few extra A-B edges are sprinkled in.
    """
    for _ in range(tries):
        na = rng.randint(1, max_side)
        nb = rng.randint(1, max_side)
        nd = rng.randint(0, max_d)
        A = list(range(na))
        B = list(range(na, na + nb))
        edges = set()
        for _ in range(rng.randint(0, na + nb)):
            edges.add((rng.choice(A), rng.choice(B)))
        n = na + nb + nd
        ok = True
        for d in range(na + nb, n):
            side = A if rng.random() < 0.5 else B
            if len(side) < 2:
                side = B if side is A else A
            if len(side) < 2:
                ok = False
                break
            x, y = rng.sample(side, 2)
            rest = [v for v in A + B if v not in (x, y)]
            if not rest:
                ok = False
                break
            z = rng.choice(rest)
            for w in (x, y, z):
                edges.add((min(w, d), max(w, d)))
        if not ok:
            continue
        g = Graph(range(n), sorted(edges))
        if structure_lemma_premises(g, A, B) is None:
            return g, frozenset(A), frozenset(B)
    raise RuntimeError("rejection sampling did not produce a premise-satisfying instance")
