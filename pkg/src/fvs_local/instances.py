"""Instance generators: grids, K_{3,n}, partial k-trees, the diagonal-grid
counterexamples for OCT and subset FVS, and the subdivision of a straight-line
drawing into a 1-planar graph."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .graph import Graph, build_graph, delete_vertices
from .oracle import FVS, OCT, ProblemKind, SubsetFVS, bounded_hitting, is_feasible_for


def gen_grid(rows: int, cols: int) -> Graph:
    """rows x cols grid; vertex (i, j) has id i * cols + j."""
    if rows < 1 or cols < 1:
        raise ValueError("grid dimensions must be positive")
    edges = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            if j + 1 < cols:
                edges.append((v, v + 1))
            if i + 1 < rows:
                edges.append((v, v + cols))
    return build_graph(rows * cols, edges)


def gen_k3n(n: int) -> Graph:
    """K_{3,n} with the 3-side on ids 0, 1, 2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return build_graph(n + 3, [(a, 3 + b) for a in range(3) for b in range(n)])


def gen_partial_ktree(n: int, k: int, keep_prob: float = 1.0, seed: int = 0) -> Graph:
    """Random k-tree on n vertices, then keep each edge with ``keep_prob``.

    Every new vertex is joined to a uniformly chosen existing k-clique.
    """
    if not (n > k >= 1):
        raise ValueError("need n > k >= 1")
    if not (0 < keep_prob <= 1):
        raise ValueError("keep_prob must lie in (0, 1]")
    rng = random.Random(seed)
    edges = set(combinations(range(k + 1), 2))
    cliques = [tuple(c) for c in combinations(range(k + 1), k)]
    for v in range(k + 1, n):
        base = cliques[rng.randrange(len(cliques))]
        for u in base:
            edges.add((u, v))
        for drop in range(k):
            cliques.append(tuple(sorted(base[:drop] + base[drop + 1:] + (v,))))
    kept = [e for e in sorted(edges) if keep_prob >= 1 or rng.random() < keep_prob]
    return build_graph(n, kept)


def random_minimal_fvs(g: Graph, seed: int = 0) -> frozenset:
    """An inclusion-minimal FVS: start from V, drop vertices in random order
    while the rest stays feasible."""
    rng = random.Random(seed)
    order = sorted(g.vertices)
    rng.shuffle(order)
    S = set(order)
    for v in order:
        S.discard(v)
        if not is_feasible_for(g, FVS, S):
            S.add(v)
    return frozenset(S)


# -- diagonal-grid counterexamples -------------------------------------------


@dataclass(frozen=True)
class CounterexampleInstance:
    graph: Graph
    kind: ProblemKind
    planted_local: frozenset
    planted_optimal: frozenset
    k: int
    cells: tuple
    U: frozenset = frozenset()


def default_cells(k: int, d: int) -> tuple:
    """d pairwise non-adjacent diagonal cells spread along the diagonal."""
    if not 1 <= d <= k - 1:
        raise ValueError("need 1 <= d <= k - 1")
    avail = k - 1
    if d == 1:
        return ((avail - 1) // 2,)
    cells = tuple(round(i * (avail - 1) / (d - 1)) for i in range(d))
    if any(b - a < 2 for a, b in zip(cells, cells[1:])):
        raise ValueError(f"cannot place {d} non-adjacent gadgets in a {k}x{k} grid")
    return cells


def gen_diagonal_grid(k: int, diag_cells=None, variant: str = "OCT", d: Optional[int] = None) -> CounterexampleInstance:
    """k x k grid with a gadget in each chosen diagonal cell (i, i).

    Cell (i, i) has corners (i, i), (i, i+1), (i+1, i), (i+1, i+1).

    OCT: add the anti-diagonal edge (i, i+1)-(i+1, i). Every odd cycle uses an
    odd number of these edges, so it crosses the main diagonal at a grid
    vertex; the main diagonal is the planted local solution, and the smaller
    endpoint of each added edge is the planted optimum.

    SFVS: add a new vertex u_i (in U) adjacent to (i, i+1) and (i+1, i). A
    cycle through a single u_i crosses the main diagonal, but a cycle through
    two of them need not, so the planted local solution is the main diagonal
    plus every gadget vertex except the first. The planted optimum is the
    gadget vertices.
    """
    if diag_cells is None:
        diag_cells = default_cells(k, 1 if d is None else d)
    cells = tuple(sorted(diag_cells))
    if len(set(cells)) != len(cells) or not 1 <= len(cells) <= k - 1:
        raise ValueError("need between 1 and k - 1 distinct cells")
    for i in cells:
        if not 0 <= i < k - 1:
            raise ValueError(f"cell index {i} is not a diagonal cell of a {k}x{k} grid")
    grid = gen_grid(k, k)
    vid = lambda i, j: i * k + j  # noqa: E731
    diagonal = frozenset(vid(i, i) for i in range(k))
    edges = list(grid.edges)
    if variant == "OCT":
        opt = []
        for i in cells:
            a, b = vid(i, i + 1), vid(i + 1, i)
            edges.append((a, b))
            opt.append(min(a, b))
        g = Graph(grid.vertices, edges)
        inst = CounterexampleInstance(g, OCT, diagonal, frozenset(opt), k, cells)
    elif variant in ("SFVS", "SubsetFVS"):
        apex = []
        for t, i in enumerate(cells):
            u = k * k + t
            apex.append(u)
            edges.append((vid(i, i + 1), u))
            edges.append((vid(i + 1, i), u))
        g = Graph(range(k * k + len(cells)), edges)
        U = frozenset(apex)
        inst = CounterexampleInstance(g, SubsetFVS(U), diagonal | frozenset(apex[1:]), U, k, cells, U)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    for label, S in (("planted_local", inst.planted_local), ("planted_optimal", inst.planted_optimal)):
        if not is_feasible_for(inst.graph, inst.kind, S):
            raise AssertionError(f"{label} is infeasible")
    assert len(inst.planted_local) >= len(inst.planted_optimal)
    return inst


def verify_local_optimality(inst: CounterexampleInstance, c: int, solution=None) -> bool:
    """True iff no feasible S' differs from S by at most c vertices each way
    and is strictly smaller. ``S`` defaults to the planted local solution."""
    S = frozenset(inst.planted_local if solution is None else solution)
    order = sorted(S)
    for size in range(1, min(c, len(order)) + 1):
        for R in combinations(order, size):
            rest = S.difference(R)
            h = delete_vertices(inst.graph, rest)
            kind = inst.kind
            if kind.tag == "SFVS":
                kind = SubsetFVS(kind.U - rest)
            if bounded_hitting(h, size - 1, kind) is not None:
                return False
    return True


# -- 1-planarization ----------------------------------------------------------


class DegenerateDrawing(ValueError):
    pass


@dataclass(frozen=True)
class DrawnGraph:
    graph: Graph
    coords: dict  # vertex -> (Fraction, Fraction)

    def __post_init__(self):
        pts = {v: (Fraction(x), Fraction(y)) for v, (x, y) in self.coords.items()}
        object.__setattr__(self, "coords", pts)
        if set(pts) != set(self.graph.vertices):
            raise DegenerateDrawing("every vertex needs coordinates")
        if len(set(pts.values())) != len(pts):
            raise DegenerateDrawing("coordinates must be distinct")


@dataclass
class Planarization:
    graph: Graph
    coords: dict
    paths: dict  # original edge index -> tuple of H vertices from u to v
    origin: dict  # subdivision vertex -> original edge (u, v)
    crossings: list = field(default_factory=list)  # (edge i, edge j, point)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _on_segment(p, a, b) -> bool:
    return _cross(a, b, p) == 0 and min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def segment_crossing(a, b, c, d):
    """Proper crossing point of segments ab and cd as exact fractions, or
    ``None``. Touching or overlapping configurations raise."""
    d1, d2 = _cross(a, b, c), _cross(a, b, d)
    d3, d4 = _cross(c, d, a), _cross(c, d, b)
    if d1 == 0 and d2 == 0:
        if _on_segment(c, a, b) or _on_segment(d, a, b) or _on_segment(a, c, d) or _on_segment(b, c, d):
            raise DegenerateDrawing("collinear overlapping segments")
        return None
    if (d1 == 0 and _on_segment(c, a, b)) or (d2 == 0 and _on_segment(d, a, b)):
        raise DegenerateDrawing("a segment passes through an endpoint of another")
    if (d3 == 0 and _on_segment(a, c, d)) or (d4 == 0 and _on_segment(b, c, d)):
        raise DegenerateDrawing("a segment passes through an endpoint of another")
    if (d1 > 0) != (d2 > 0) and (d3 > 0) != (d4 > 0) and d1 != 0 and d2 != 0 and d3 != 0 and d4 != 0:
        t = Fraction(d3) / (d3 - d4)
        return (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])), Fraction(t)
    return None


def _check_vertices_off_edges(g: Graph, pts: dict) -> None:
    for i, (u, v) in enumerate(g.edges):
        for w in g.vertices:
            if w in (u, v):
                continue
            if _on_segment(pts[w], pts[u], pts[v]):
                raise DegenerateDrawing(f"vertex {w} lies on edge {i}")


def planarize_1planar(dg: DrawnGraph) -> Planarization:
    """Subdivide crossed edges so that every piece carries one crossing.

    Vertex ids must be 0..n-1; subdivision vertices get ids n, n+1, ... in
    edge order.
    """
    g, pts = dg.graph, dg.coords
    if any(u == v for u, v in g.edges):
        raise DegenerateDrawing("self-loops cannot be drawn as segments")
    if len(set(g.edges)) != g.m:
        raise DegenerateDrawing("parallel edges cannot be drawn as distinct segments")
    _check_vertices_off_edges(g, pts)
    params = {i: [] for i in range(g.m)}
    crossings = []
    points_seen = {}
    for i, j in combinations(range(g.m), 2):
        (a, b), (c, d) = g.edges[i], g.edges[j]
        if {a, b} & {c, d}:
            continue
        hit = segment_crossing(pts[a], pts[b], pts[c], pts[d])
        if hit is None:
            continue
        point, t = hit
        if point in points_seen:
            raise DegenerateDrawing("three segments meet at one crossing point")
        points_seen[point] = (i, j)
        crossings.append((i, j, point))
        params[i].append(t)
        _, s = segment_crossing(pts[c], pts[d], pts[a], pts[b])
        params[j].append(s)
    next_id = g.n
    if set(g.vertices) != set(range(g.n)):
        raise DegenerateDrawing("vertex ids must be 0..n-1")
    new_edges = []
    coords = dict(pts)
    paths = {}
    origin = {}
    for i, (u, v) in enumerate(g.edges):
        ts = sorted(params[i])
        path = [u]
        pu, pv = pts[u], pts[v]
        for t1, t2 in zip(ts, ts[1:]):
            mid = (t1 + t2) / 2
            w = next_id
            next_id += 1
            coords[w] = (pu[0] + mid * (pv[0] - pu[0]), pu[1] + mid * (pv[1] - pu[1]))
            origin[w] = (u, v)
            path.append(w)
        path.append(v)
        paths[i] = tuple(path)
        new_edges.extend(zip(path, path[1:]))
    H = Graph(range(next_id), new_edges)
    return Planarization(H, coords, paths, origin, crossings)


def crossings_per_edge(g: Graph, coords: dict) -> list:
    """Number of proper crossings on every edge of a straight-line drawing."""
    counts = [0] * g.m
    for i, j in combinations(range(g.m), 2):
        (a, b), (c, d) = g.edges[i], g.edges[j]
        if {a, b} & {c, d}:
            continue
        if segment_crossing(coords[a], coords[b], coords[c], coords[d]) is not None:
            counts[i] += 1
            counts[j] += 1
    return counts


def lift_solution(H_solution, plan: Planarization) -> frozenset:
    """Swap each subdivision vertex for the smaller endpoint of its edge."""
    out = set()
    for v in H_solution:
        if v in plan.origin:
            out.add(min(plan.origin[v]))
        else:
            out.add(v)
    return frozenset(out)


def convex_k5() -> DrawnGraph:
    pts = {0: (0, 10), 1: (10, 3), 2: (6, -8), 3: (-6, -8), 4: (-10, 3)}
    return DrawnGraph(build_graph(5, list(combinations(range(5), 2))), pts)


def one_crossing_k5() -> DrawnGraph:
    """K5 drawn with straight lines and the minimum single crossing:
    a triangle with two interior points."""
    pts = {0: (0, 0), 1: (20, 0), 2: (10, 18), 3: (9, 5), 4: (11, 7)}
    return DrawnGraph(build_graph(5, list(combinations(range(5), 2))), pts)


def random_drawing(n: int, m: int, seed: int, span: int = 40, tries: int = 200) -> DrawnGraph:
    """Random straight-line drawing in general position."""
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    for _ in range(tries):
        pts = {}
        while len(pts) < n:
            p = (rng.randint(0, span), rng.randint(0, span))
            if p not in pts.values():
                pts[len(pts)] = p
        if any(_cross(pts[a], pts[b], pts[c]) == 0 for a, b, c in combinations(range(n), 3)):
            continue
        edges = sorted(rng.sample(pairs, min(m, len(pairs))))
        dg = DrawnGraph(build_graph(n, edges), pts)
        try:
            planarize_1planar(dg)
        except DegenerateDrawing:
            continue
        return dg
    raise RuntimeError("could not sample a drawing in general position")
