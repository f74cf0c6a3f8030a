"""Balanced separators, r-divisions, and the local-vs-global audit."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .exchange import ExchangeGraph, build_exchange_graph
from .graph import Graph, connected_components, delete_vertices
from .solver import derive_constants, is_feasible


class SeparatorError(RuntimeError):
    pass


class AuditError(RuntimeError):
    pass


def _split_components(comps: list, n: int):
    """Pack components into two sides, largest first onto the lighter side."""
    p1, p2 = set(), set()
    for comp in sorted(comps, key=lambda c: (-len(c), min(c))):
        if len(p1) <= len(p2):
            p1 |= comp
        else:
            p2 |= comp
    return p1, p2


def _try(g: Graph, S: frozenset):
    comps = connected_components(delete_vertices(g, S))
    p1, p2 = _split_components(comps, g.n)
    return p1, p2


def _balanced(g: Graph, p1, p2) -> bool:
    return 3 * max(len(p1), len(p2)) <= 2 * g.n


def _bfs_levels(g: Graph, root) -> list:
    adj = g.adjacency()
    dist = {root: 0}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    levels = [set() for _ in range(max(dist.values()) + 1)]
    for v, d in dist.items():
        levels[d].add(v)
    return levels


def check_separator(g: Graph, S, p1, p2) -> list:
    problems = []
    S, p1, p2 = set(S), set(p1), set(p2)
    if S | p1 | p2 != set(g.vertices) or len(S) + len(p1) + len(p2) != g.n:
        problems.append("S, P1, P2 do not partition V")
    if any((u in p1 and v in p2) or (u in p2 and v in p1) for u, v in g.edges):
        problems.append("an edge joins P1 and P2")
    if 3 * max(len(p1), len(p2)) > 2 * g.n:
        problems.append("a side exceeds 2n/3")
    return problems


def balanced_separator(g: Graph, exhaustive_limit: int = 14, require_split: bool = False):
    """Return ``(S, P1, P2)`` with no P1-P2 edge and both sides <= 2n/3.

    Candidates are BFS levels from every root, ranked by (|S|, larger side,
    root); components left after removing S are packed onto two sides. Graphs
    with at most ``exhaustive_limit`` vertices fall back to trying every
    vertex subset by increasing size. ``require_split`` additionally demands
    that both sides are nonempty.
    """
    best = None
    for root in sorted(g.vertices):
        for level in _bfs_levels(g, root):
            S = frozenset(level)
            p1, p2 = _try(g, S)
            if not _balanced(g, p1, p2):
                continue
            if require_split and not (p1 and p2):
                continue
            key = (len(S), max(len(p1), len(p2)), root, sorted(S))
            if best is None or key < best[0]:
                best = (key, S, p1, p2)
    if best is None and g.n <= exhaustive_limit:
        order = sorted(g.vertices)
        for size in range(0, g.n + 1):
            for combo in combinations(order, size):
                S = frozenset(combo)
                p1, p2 = _try(g, S)
                if _balanced(g, p1, p2) and (not require_split or (p1 and p2)):
                    best = (None, S, p1, p2)
                    break
            if best is not None:
                break
    if best is None:
        raise SeparatorError("no balanced separator found")
    _, S, p1, p2 = best
    problems = check_separator(g, S, p1, p2)
    if problems:
        raise SeparatorError("; ".join(problems))
    return S, frozenset(p1), frozenset(p2)


@dataclass(frozen=True)
class Region:
    vertices: frozenset
    edges: tuple  # edge indices of the parent graph


@dataclass
class RDivision:
    regions: list
    boundary: list  # boundary vertex set per region, aligned with ``regions``
    r: int
    c_div_measured: float

    @property
    def boundary_total(self) -> int:
        return sum(len(b) for b in self.boundary)


@dataclass
class DivisionReport:
    problems: list
    region_count: int
    boundary_total: int
    region_ratio: float
    boundary_ratio: float

    @property
    def ok(self) -> bool:
        return not self.problems

    @property
    def c_div_measured(self) -> float:
        return max(self.region_ratio, self.boundary_ratio)


def _region_graph(g: Graph, reg: Region) -> Graph:
    return Graph(reg.vertices, [g.edges[i] for i in reg.edges])


def _boundaries(g: Graph, regions: list) -> list:
    owner = {}
    for idx, reg in enumerate(regions):
        for e in reg.edges:
            owner[e] = idx
    out = []
    for idx, reg in enumerate(regions):
        b = set()
        for v in reg.vertices:
            if any(owner[e] != idx for e in g.incident(v)):
                b.add(v)
        out.append(frozenset(b))
    return out


def _split(g: Graph, reg: Region, r: int) -> list:
    sub = _region_graph(g, reg)
    comps = connected_components(sub)
    if len(comps) > 1:
        out = []
        for comp in comps:
            es = tuple(e for e in reg.edges if g.edges[e][0] in comp)
            out.append(Region(comp, es))
        return out
    try:
        S, p1, p2 = balanced_separator(sub, require_split=True)
    except SeparatorError:
        return _split_edges(g, reg)
    left, right = [], []
    for e in reg.edges:
        u, v = g.edges[e]
        if u in p2 or v in p2:
            right.append(e)
        else:
            left.append(e)
    out = []
    for es, side in ((left, p1), (right, p2)):
        vs = set(side)
        for e in es:
            vs.update(g.edges[e])
        out.append(Region(frozenset(vs), tuple(es)))
    return out


def _split_edges(g: Graph, reg: Region) -> list:
    """Fallback when no vertex separator exists (e.g. a clique): halve the
    edge list in BFS order."""
    sub = _region_graph(g, reg)
    start = min(reg.vertices)
    order = {}
    queue = deque([start])
    order[start] = 0
    adj = sub.adjacency()
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if y not in order:
                order[y] = len(order)
                queue.append(y)
    es = sorted(reg.edges, key=lambda e: (min(order[v] for v in g.edges[e]), max(order[v] for v in g.edges[e]), e))
    half = len(es) // 2
    out = []
    for part in (es[:half], es[half:]):
        vs = set()
        for e in part:
            vs.update(g.edges[e])
        out.append(Region(frozenset(vs), tuple(sorted(part))))
    return out


def _recursive_regions(g: Graph, r: int) -> list:
    pending = []
    for comp in connected_components(g):
        es = tuple(i for i, (u, v) in enumerate(g.edges) if u in comp)
        pending.append(Region(comp, es))
    done = []
    while pending:
        reg = pending.pop(0)
        if len(reg.vertices) <= r:
            done.append(reg)
            continue
        pending.extend(_split(g, reg, r))
    return done


def _grown_regions(g: Graph, r: int) -> list:
    """Greedy alternative: grow each region from the first unused edge (in
    BFS order), absorbing the neighbour with the most unused edges into the
    region until it holds r vertices."""
    rank = {}
    for comp in connected_components(g):
        for level in _bfs_levels(g, min(comp)):
            for v in sorted(level):
                rank[v] = len(rank)
    order = sorted(range(g.m), key=lambda e: (sorted(rank[v] for v in g.edges[e]), e))
    free = set(range(g.m))
    out = []
    for seed in order:
        if seed not in free:
            continue
        vs = set(g.edges[seed])
        es = []
        while True:
            inner = [e for x in vs for e in g.incident(x) if e in free and g.other(e, x) in vs]
            for e in inner:
                if e in free:
                    free.discard(e)
                    es.append(e)
            if len(vs) >= r:
                break
            gain = {}
            for x in vs:
                for e in g.incident(x):
                    if e in free:
                        y = g.other(e, x)
                        gain[y] = gain.get(y, 0) + 1
            if not gain:
                break
            vs.add(min(gain, key=lambda y: (-gain[y], rank[y])))
        out.append(Region(frozenset(vs), tuple(sorted(es))))
    covered = set().union(*(reg.vertices for reg in out)) if out else set()
    for v in sorted(g.vertices - covered):
        out.append(Region(frozenset([v]), ()))
    return out


def r_division(g: Graph, r: int) -> RDivision:
    """Separator-based r-division.

    Regions larger than r are split recursively by balanced separators, with
    separator vertices copied into both children so regions stay
    edge-disjoint while sharing boundary vertices. A greedy region-growing
    division is computed too, and the one with the smaller boundary total
    (then fewer regions) is returned; both are verified.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    best = None
    for regions in (_recursive_regions(g, r), _grown_regions(g, r)):
        regions.sort(key=lambda reg: (min(reg.vertices), reg.edges))
        div = RDivision(regions, _boundaries(g, regions), r, 0.0)
        report = verify_r_division(g, div)
        if not report.ok:
            raise SeparatorError("; ".join(report.problems))
        div.c_div_measured = report.c_div_measured
        if best is None or (div.boundary_total, len(regions)) < (best.boundary_total, len(best.regions)):
            best = div
    return best


def verify_r_division(g: Graph, div: RDivision) -> DivisionReport:
    problems = []
    seen_edges = {}
    for idx, reg in enumerate(div.regions):
        if len(reg.vertices) > div.r:
            problems.append(f"property 1: region {idx} has {len(reg.vertices)} > r vertices")
        for e in reg.edges:
            if e in seen_edges:
                problems.append(f"edge {e} lies in regions {seen_edges[e]} and {idx}")
            seen_edges[e] = idx
            if not set(g.edges[e]) <= reg.vertices:
                problems.append(f"edge {e} has an endpoint outside region {idx}")
    if set(seen_edges) != set(range(g.m)):
        problems.append("regions do not cover every edge")
    covered = set()
    for reg in div.regions:
        covered |= reg.vertices
    if covered != set(g.vertices):
        problems.append("property 1: some vertex lies in no region")
    expected = _boundaries(g, div.regions) if not problems else div.boundary
    if list(expected) != list(div.boundary):
        problems.append("stored boundary sets do not match the regions")
    n = g.n
    count = len(div.regions)
    btotal = sum(len(b) for b in div.boundary)
    region_ratio = count / (n / div.r) if n else 0.0
    boundary_ratio = btotal / (n / math.sqrt(div.r)) if n else 0.0
    return DivisionReport(problems, count, btotal, region_ratio, boundary_ratio)


@dataclass
class AuditReport:
    n_L: int
    n_O: int
    r: int
    boundary_total: int
    regions: int
    mi_feasible: list
    region_inequalities: list  # (|L & R_i|, |O & int R_i|, |B_i|)
    eq2_holds: bool
    c_div_measured: float
    c_ex_measured: float
    implied_epsilon: Optional[float]
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "n_L": self.n_L,
            "n_O": self.n_O,
            "r": self.r,
            "regions": self.regions,
            "boundary_total": self.boundary_total,
            "all_M_feasible": all(self.mi_feasible),
            "region_inequalities_hold": all(a <= b + c for a, b, c in self.region_inequalities),
            "eq2_holds": self.eq2_holds,
            "c_div_measured": self.c_div_measured,
            "c_ex_measured": self.c_ex_measured,
            "implied_epsilon": self.implied_epsilon,
            "failures": list(self.failures),
        }


def implied_epsilon(c_div: float, c_ex: float, r: int) -> Optional[float]:
    """Epsilon for which a neighbourhood of size r suffices, given constants.

    Inverts delta = eps / (2 c_div c_ex (2 + eps)) with delta = 1/sqrt(r);
    ``None`` when no finite epsilon works.
    """
    a = 2 * c_div * c_ex / math.sqrt(r)
    if a >= 1:
        return None
    return 2 * a / (1 - a)


def audit_local_vs_global(g: Graph, O, L, c: int, strict: bool = False) -> AuditReport:
    """Replay the charging argument on a concrete (O, L) pair.

    L is expected to be c-locally optimal. For every region R_i of an
    r-division (r = c) of the exchange graph, M_i = (L - R_i) | (O & R_i) | B_i
    must be a feedback vertex set, |L & R_i| <= |O & int(R_i)| + |B_i| must
    hold, and summing gives |L| <= |O| + 2|B|.
    """
    O, L = frozenset(O), frozenset(L)
    ex: ExchangeGraph = build_exchange_graph(g, O, L)
    k = ex.k
    div = r_division(k, c)
    failures = []
    feas, ineqs = [], []
    for reg, B in zip(div.regions, div.boundary):
        Rv = reg.vertices
        M = (L - Rv) | (O & Rv) | B
        ok = is_feasible(g, M)
        feas.append(ok)
        if not ok:
            failures.append(f"M_i for region {sorted(Rv)} is not a feedback vertex set")
        interior = Rv - B
        lhs, o_int, b = len(L & Rv), len(O & interior), len(B)
        ineqs.append((lhs, o_int, b))
        if lhs > o_int + b:
            failures.append(f"region {sorted(Rv)}: |L & R| = {lhs} > {o_int} + {b}")
    btotal = div.boundary_total
    eq2 = len(L) <= len(O) + 2 * btotal
    if not eq2:
        failures.append(f"|L| = {len(L)} > |O| + 2|B| = {len(O) + 2 * btotal}")
    denom = len(O) + len(L)
    c_ex = k.n / denom if denom else 0.0
    eps = implied_epsilon(max(1.0, div.c_div_measured), max(1.0, c_ex), c)
    if eps is not None:
        # round-trip through the forward formula as a consistency check
        back = derive_constants(eps, max(1.0, div.c_div_measured), max(1.0, c_ex))
        assert abs(back.delta - 1 / math.sqrt(c)) < 1e-9
    report = AuditReport(
        n_L=len(L),
        n_O=len(O),
        r=c,
        boundary_total=btotal,
        regions=len(div.regions),
        mi_feasible=feas,
        region_inequalities=ineqs,
        eq2_holds=eq2,
        c_div_measured=div.c_div_measured,
        c_ex_measured=c_ex,
        implied_epsilon=eps,
        failures=failures,
    )
    if strict and failures:
        raise AuditError("; ".join(failures))
    return report
