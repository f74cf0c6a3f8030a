"""Local search for feedback vertex set with bounded swap neighbourhoods.

The neighbourhood test "is there a feasible S' with |S \\ S'| <= c,
|S' \\ S| <= c and |S'| < |S|" is factored as: pick the removed part R of S
(1 <= |R| <= c), then ask the bounded branching search for a completion F of
size at most |R| - 1 such that (S \\ R) | F is feasible.
"""

from __future__ import annotations

import json
import math
import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

from . import _multi
from .graph import Graph, GraphError, delete_vertices, is_acyclic


@dataclass(frozen=True)
class Solution:
    members: frozenset
    problem: str = "FVS"
    feasible: bool = True

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class SearchParams:
    c: int = 2
    max_iterations: Optional[int] = None
    seed: Optional[int] = None

    def __post_init__(self):
        if self.c < 1:
            raise ValueError("neighbourhood size c must be >= 1")


@dataclass
class RunReport:
    instance: str
    n: int
    m: int
    c: int
    initial_size: int
    final_size: int
    iterations: int
    certified_local_opt: bool
    wall_ms: float
    sizes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        d = asdict(self)
        del d["sizes"]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


@dataclass(frozen=True)
class AnalysisConstants:
    epsilon: float
    c_div: float
    c_ex: float
    delta: float
    c: int
    sigma_H: Optional[float] = None


def is_feasible(g: Graph, S) -> bool:
    return is_acyclic(delete_vertices(g, S))


# -- reductions shared by the greedy start and the branching search ----------


class _Infeasible(Exception):
    pass


def _reduce(adj: dict, cand: set, forced: list) -> None:
    """Shrink ``adj`` in place with the degree-<=2 rules.

    Only vertices of ``cand`` may be moved into ``forced``. Raises
    ``_Infeasible`` when a cycle provably cannot be hit.
    """
    queue = sorted(adj)
    queued = set(queue)
    while queue:
        v = queue.pop()
        queued.discard(v)
        if v not in adj:
            continue
        nb = adj[v]
        deg = sum(nb.values())
        if deg <= 1:
            touched = list(nb)
            _multi.remove(adj, v)
        elif deg == 2:
            if len(nb) == 1:
                (a,) = nb
                # v and a form a 2-cycle and nothing else passes through v
                if a in cand:
                    pick = a
                elif v in cand:
                    pick = v
                else:
                    raise _Infeasible
                forced.append(pick)
                touched = list(adj[pick])
                _multi.remove(adj, pick)
                if pick == a and v in adj:
                    touched.append(v)
            else:
                a, b = sorted(nb)
                if v in cand and a not in cand and b not in cand:
                    continue
                _multi.remove(adj, v)
                _multi.add_edge(adj, a, b)
                touched = [a, b]
        else:
            continue
        for u in touched:
            if u in adj and u not in queued:
                queued.add(u)
                queue.append(u)
    # parallel edges towards a non-candidate force the other endpoint
    for u in sorted(adj):
        if u not in adj:
            continue
        for w, mult in list(adj[u].items()):
            if mult >= 2 and w not in cand:
                if u not in cand:
                    raise _Infeasible
                forced.append(u)
                _multi.remove(adj, u)
                _reduce(adj, cand, forced)
                return


def _lower_bound_ok(adj: dict, cand: set, budget: int) -> bool:
    mu = _multi.cyclomatic(adj)
    if mu == 0:
        return True
    gains = sorted((_multi.degree(adj, v) - 1 for v in adj if v in cand), reverse=True)
    return sum(gains[:budget]) >= mu


def _search(adj: dict, cand: set, budget: int) -> Optional[list]:
    forced: list = []
    try:
        _reduce(adj, cand, forced)
    except _Infeasible:
        return None
    budget -= len(forced)
    if budget < 0:
        return None
    if not adj:
        return forced
    if budget == 0:
        return None
    noncand = [v for v in adj if v not in cand]
    if noncand and _multi.has_cycle_within(adj, set(noncand)):
        return None
    if not _lower_bound_ok(adj, cand, budget):
        return None
    cycle = _multi.shortest_cycle(adj, weight=lambda cyc: sum(1 for x in cyc if x in cand))
    branch = sorted((v for v in cycle if v in cand), key=lambda v: (-_multi.degree(adj, v), v))
    excluded = set()
    for v in branch:
        sub = _multi.copy(adj)
        _multi.remove(sub, v)
        res = _search(sub, cand - excluded, budget - 1)
        if res is not None:
            return forced + [v] + res
        excluded.add(v)
    return None


def bounded_fvs(g: Graph, k: int, candidates=None) -> Optional[frozenset]:
    """Smallest F within ``candidates`` with |F| <= k and g - F acyclic.

    ``None`` is a proof that no such set exists. Iterative deepening on the
    budget, so the returned set has minimum size.
    """
    if k < 0:
        return None
    cand = set(g.vertices) if candidates is None else set(candidates)
    if not cand <= g.vertices:
        raise GraphError("candidates must be vertices of g")
    adj, loops = _multi.from_graph(g)
    if loops - cand:
        return None
    base = sorted(loops)
    for v in base:
        _multi.remove(adj, v)
    for budget in range(len(base), k + 1):
        res = _search(_multi.copy(adj), cand, budget - len(base))
        if res is not None:
            F = frozenset(base) | frozenset(res)
            assert is_feasible(g, F) and F <= cand
            return F
    return None


def greedy_initial(g: Graph, seed: Optional[int] = None) -> Solution:
    """Feasible start: reduce, then take a maximum-degree vertex, repeat.

    Vertices carrying a self-loop are taken first. Ties go to the smallest id
    unless ``seed`` is given, in which case they are broken at random.
    """
    rng = random.Random(seed) if seed is not None else None
    adj, loops = _multi.from_graph(g)
    chosen = sorted(loops)
    for v in chosen:
        _multi.remove(adj, v)
    everything = set(adj)
    while True:
        forced: list = []
        _reduce(adj, everything, forced)
        chosen.extend(forced)
        if not adj:
            break
        top = max(_multi.degree(adj, v) for v in adj)
        ties = sorted(v for v in adj if _multi.degree(adj, v) == top)
        pick = rng.choice(ties) if rng is not None else ties[0]
        chosen.append(pick)
        _multi.remove(adj, pick)
    S = frozenset(chosen)
    assert is_feasible(g, S)
    return Solution(S)


def improve_once(g: Graph, S, c: int) -> Optional[Solution]:
    """First improving swap in deterministic order, or ``None``.

    Removal sets R are scanned by increasing size, then lexicographically over
    the sorted members of S.
    """
    members = S.members if isinstance(S, Solution) else frozenset(S)
    order = sorted(members)
    for size in range(1, min(c, len(order)) + 1):
        for R in combinations(order, size):
            rest = members.difference(R)
            h = delete_vertices(g, rest)
            if size == 1:
                if is_acyclic(h):
                    return Solution(rest)
                continue
            F = bounded_fvs(h, size - 1)
            if F is not None:
                return Solution(rest | F)
    return None


def local_search(
    g: Graph,
    params: SearchParams = SearchParams(),
    start=None,
    instance: str = "",
) -> tuple[Solution, RunReport]:
    t0 = time.perf_counter()
    if start is None:
        current = greedy_initial(g, seed=params.seed)
    else:
        current = start if isinstance(start, Solution) else Solution(frozenset(start))
        if not is_feasible(g, current.members):
            raise ValueError("start solution is not a feedback vertex set")
    budget = g.n if params.max_iterations is None else params.max_iterations
    sizes = [len(current)]
    iterations = 0
    certified = False
    while True:
        if iterations >= budget:
            certified = improve_once(g, current, params.c) is None
            break
        nxt = improve_once(g, current, params.c)
        if nxt is None:
            certified = True
            break
        assert len(nxt) < len(current)
        current = nxt
        iterations += 1
        sizes.append(len(current))
    report = RunReport(
        instance=instance,
        n=g.n,
        m=g.m,
        c=params.c,
        initial_size=sizes[0],
        final_size=len(current),
        iterations=iterations,
        certified_local_opt=certified,
        wall_ms=round((time.perf_counter() - t0) * 1000.0, 3),
        sizes=sizes,
    )
    return current, report


def derive_constants(
    epsilon: float, c_div: float = 1.0, c_ex: float = 1.0, H_size: Optional[int] = None
) -> AnalysisConstants:
    """Neighbourhood size needed for a (1 + epsilon) guarantee.

    delta = epsilon / (2 c_div c_ex (2 + epsilon)) and c = ceil(1 / delta^2),
    evaluated in exact rational arithmetic so that e.g. epsilon = 1 gives 36
    rather than 37.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if c_div < 1 or c_ex < 1:
        raise ValueError("c_div and c_ex must be >= 1")
    eps, cd, ce = Fraction(epsilon), Fraction(c_div), Fraction(c_ex)
    delta = eps / (2 * cd * ce * (2 + eps))
    c = math.ceil(1 / (delta * delta))
    sigma = None
    if H_size is not None:
        sigma = H_size * math.sqrt(math.log(H_size)) if H_size > 1 else 0.0
    return AnalysisConstants(float(epsilon), float(c_div), float(c_ex), float(delta), c, sigma)
