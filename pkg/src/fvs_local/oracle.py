"""Exact solvers and feasibility predicates for FVS, OCT and subset FVS.

These are meant for desk-scale instances (a few dozen vertices) and serve as
ground truth for ratio measurements.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from . import _multi
from .graph import Graph, delete_vertices
from .solver import bounded_fvs, is_feasible


class SizeLimitExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class ProblemKind:
    tag: str
    U: frozenset = frozenset()

    def __post_init__(self):
        if self.tag not in ("FVS", "OCT", "SFVS"):
            raise ValueError(f"unknown problem kind {self.tag!r}")


FVS = ProblemKind("FVS")
OCT = ProblemKind("OCT")


def SubsetFVS(U) -> ProblemKind:
    return ProblemKind("SFVS", frozenset(U))


def exact_fvs(g: Graph, size_limit: int = 40) -> frozenset:
    F = bounded_fvs(g, size_limit)
    if F is None:
        raise SizeLimitExceeded(f"no feedback vertex set of size <= {size_limit}")
    return F


def oct_feasible(g: Graph, S) -> bool:
    h = delete_vertices(g, S)
    adj = {v: [] for v in h.vertices}
    for u, v in h.edges:
        if u == v:
            return False
        adj[u].append(v)
        adj[v].append(u)
    color = {}
    for s in adj:
        if s in color:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in color:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def vertices_on_cycles(g: Graph) -> frozenset:
    """Vertices lying on at least one cycle, via biconnected components.

    A vertex is on a cycle iff it carries a loop or belongs to a block with at
    least two edges (a parallel pair counts as such a block).
    """
    on = set(u for u, v in g.edges if u == v)
    adj = {v: [] for v in g.vertices}
    for i, (u, v) in enumerate(g.edges):
        if u != v:
            adj[u].append((v, i))
            adj[v].append((u, i))
    disc, low = {}, {}
    counter = 0
    edge_stack = []
    for root in sorted(g.vertices):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack = [(root, None, iter(adj[root]))]
        while stack:
            x, via, it = stack[-1]
            advanced = False
            for y, ei in it:
                if ei == via:
                    continue
                if y not in disc:
                    edge_stack.append((x, y))
                    disc[y] = low[y] = counter
                    counter += 1
                    stack.append((y, ei, iter(adj[y])))
                    advanced = True
                    break
                if disc[y] < disc[x]:
                    edge_stack.append((x, y))
                    low[x] = min(low[x], disc[y])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[x])
                if low[x] >= disc[p]:
                    block = []
                    while True:
                        e = edge_stack.pop()
                        block.append(e)
                        if e == (p, x):
                            break
                    if len(block) >= 2:
                        for a, b in block:
                            on.add(a)
                            on.add(b)
    return frozenset(on)


def subset_fvs_feasible(g: Graph, U, S) -> bool:
    h = delete_vertices(g, S)
    live = set(U) - set(S)
    return not (live & vertices_on_cycles(h))


def is_feasible_for(g: Graph, kind: ProblemKind, S) -> bool:
    if kind.tag == "FVS":
        return is_feasible(g, S)
    if kind.tag == "OCT":
        return oct_feasible(g, S)
    return subset_fvs_feasible(g, kind.U, S)


def _violation(adj, loops, kind: ProblemKind) -> list:
    """A structure every solution must hit, or ``[]`` if none remains."""
    if kind.tag == "FVS":
        if loops:
            return [min(loops)]
        return _multi.shortest_cycle(adj)
    if kind.tag == "OCT":
        if loops:
            return [min(loops)]
        return _multi.odd_cycle(adj)
    live = sorted(u for u in kind.U if u in adj)
    for u in live:
        if u in loops:
            return [u]
    best = []
    for u in live:
        cyc = _multi.cycle_through(adj, u)
        if cyc and (not best or len(cyc) < len(best)):
            best = cyc
    if best:
        return best
    # a loop elsewhere does not matter unless it sits on a U-vertex
    return []


def bounded_hitting(g: Graph, k: int, kind: ProblemKind, candidates=None) -> Optional[frozenset]:
    """Smallest S within ``candidates``, |S| <= k, feasible for ``kind``.

    Plain branching on a violating structure (cycle, odd cycle, or cycle
    through U) with iterative deepening; complete by exhaustion.
    """
    cand = set(g.vertices) if candidates is None else set(candidates)
    adj0, loops0 = _multi.from_graph(g)

    def search(adj, loops, cand, budget):
        viol = _violation(adj, loops, kind)
        if not viol:
            return []
        if budget == 0:
            return None
        excluded = set()
        for v in viol:
            if v not in cand or v in excluded:
                continue
            sub = _multi.copy(adj)
            _multi.remove(sub, v)
            res = search(sub, loops - {v}, cand - excluded - {v}, budget - 1)
            if res is not None:
                return [v] + res
            excluded.add(v)
        return None

    for budget in range(0, k + 1):
        res = search(_multi.copy(adj0), set(loops0), cand, budget)
        if res is not None:
            S = frozenset(res)
            assert is_feasible_for(g, kind, S)
            return S
    return None


def exact_min(g: Graph, kind: ProblemKind = FVS, size_limit: int = 40) -> frozenset:
    if kind.tag == "FVS":
        return exact_fvs(g, size_limit)
    S = bounded_hitting(g, size_limit, kind)
    if S is None:
        raise SizeLimitExceeded(f"no {kind.tag} solution of size <= {size_limit}")
    return S
