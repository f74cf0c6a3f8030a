"""Immutable undirected multigraph and the minor operations built on it.

Vertices are opaque hashable ids (ints in practice). Edges are stored as a
tuple of ``(u, v)`` pairs with ``u <= v``; an edge is addressed by its index
in that tuple. Parallel edges and self-loops are representable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional


class GraphError(ValueError):
    pass


class CycleBudgetExceeded(RuntimeError):
    pass


def _norm(u, v):
    return (u, v) if u <= v else (v, u)


class Graph:
    __slots__ = ("_vertices", "_edges", "_inc")

    def __init__(self, vertices: Iterable = (), edges: Iterable = ()):
        vs = frozenset(vertices)
        es = tuple(_norm(u, v) for u, v in edges)
        for u, v in es:
            if u not in vs or v not in vs:
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
        self._vertices = vs
        self._edges = es
        self._inc = None

    @property
    def vertices(self) -> frozenset:
        return self._vertices

    @property
    def edges(self) -> tuple:
        return self._edges

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def _incidence(self) -> dict:
        if self._inc is None:
            inc = {v: [] for v in self._vertices}
            for i, (u, v) in enumerate(self._edges):
                inc[u].append(i)
                if v != u:
                    inc[v].append(i)
                else:
                    inc[u].append(i)
            self._inc = inc
        return self._inc

    def incident(self, v) -> list[int]:
        """Edge indices at ``v``; a self-loop index appears twice."""
        try:
            return self._incidence()[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def degree(self, v) -> int:
        return len(self.incident(v))

    def neighbors(self, v) -> list:
        """Neighbour list with multiplicity, sorted."""
        out = []
        for i in self.incident(v):
            a, b = self._edges[i]
            out.append(b if a == v else a)
        out.sort()
        return out

    def other(self, edge: int, v):
        a, b = self._edges[edge]
        return b if a == v else a

    def has_edge(self, u, v) -> bool:
        e = _norm(u, v)
        if u not in self._vertices:
            return False
        return any(self._edges[i] == e for i in self.incident(u))

    def adjacency(self) -> dict:
        """``{v: set(neighbours)}`` without multiplicity (loops included)."""
        adj = {v: set() for v in self._vertices}
        for u, v in self._edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def edge_multiset(self) -> tuple:
        return tuple(sorted(self._edges))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self.edge_multiset() == other.edge_multiset()

    def __hash__(self):
        return hash((self._vertices, self.edge_multiset()))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Cycle:
    vertices: tuple
    edges: tuple

    def __len__(self):
        return len(self.vertices)


def build_graph(n: int, edge_list: Iterable) -> Graph:
    edges = []
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        edges.append((u, v))
    return Graph(range(n), edges)


def _check_known(g: Graph, S):
    bad = [v for v in S if v not in g.vertices]
    if bad:
        raise GraphError(f"unknown vertices {sorted(bad)!r}")


def delete_vertices(g: Graph, S) -> Graph:
    S = set(S)
    _check_known(g, S)
    if not S:
        return g
    return Graph(g.vertices - S, [e for e in g.edges if e[0] not in S and e[1] not in S])


def delete_edges(g: Graph, indices) -> Graph:
    drop = set(indices)
    return Graph(g.vertices, [e for i, e in enumerate(g.edges) if i not in drop])


def induced_subgraph(g: Graph, keep) -> Graph:
    keep = frozenset(keep)
    _check_known(g, keep)
    return Graph(keep, [e for e in g.edges if e[0] in keep and e[1] in keep])


def contract_edge(g: Graph, e, keep=None) -> Graph:
    """Merge the endpoints of edge ``e`` (an index or a ``(u, v)`` pair).

    The surviving id is ``keep`` when given (it must be an endpoint), else the
    smaller endpoint. Parallel edges and loops created by the merge are kept.
    """
    if isinstance(e, int):
        if not 0 <= e < g.m:
            raise GraphError(f"edge index {e} out of range")
        idx = e
    else:
        pair = _norm(*e)
        try:
            idx = g.edges.index(pair)
        except ValueError:
            raise GraphError(f"no edge {e!r}") from None
    u, v = g.edges[idx]
    if u == v:
        raise GraphError("cannot contract a self-loop")
    if keep is None:
        keep = u
    elif keep not in (u, v):
        raise GraphError(f"{keep!r} is not an endpoint of edge {g.edges[idx]!r}")
    gone = v if keep == u else u
    edges = []
    for i, (a, b) in enumerate(g.edges):
        if i == idx:
            continue
        edges.append((keep if a == gone else a, keep if b == gone else b))
    return Graph(g.vertices - {gone}, edges)


def simplify(g: Graph) -> Graph:
    return Graph(g.vertices, sorted({e for e in g.edges if e[0] != e[1]}))


def is_simple(g: Graph) -> bool:
    return all(u != v for u, v in g.edges) and len(set(g.edges)) == g.m


def is_acyclic(g: Graph) -> bool:
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def connected_components(g: Graph) -> list[frozenset]:
    adj = g.adjacency()
    seen = set()
    comps = []
    for s in sorted(g.vertices):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        comps.append(frozenset(comp))
    return comps


def _edge_between(g: Graph, u, v, exclude=()) -> int:
    pair = _norm(u, v)
    return min(i for i in g.incident(u) if g.edges[i] == pair and i not in exclude)


def _girth_simple(g: Graph, adj: dict) -> Optional[int]:
    best = None
    for r in adj:
        dist = {r: 0}
        parent = {r: None}
        queue = deque([r])
        while queue:
            x = queue.popleft()
            if best is not None and 2 * dist[x] + 1 >= best:
                break
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    length = dist[x] + dist[y] + 1
                    if best is None or length < best:
                        best = length
    return best


def _lexmin_cycle_of_length(adj: dict, length: int) -> tuple:
    """Lexicographically smallest vertex sequence of a simple cycle of the
    given length, starting at its minimum vertex."""
    for s in sorted(adj):
        allowed = {v for v in adj if v >= s}
        # distances back to s inside the allowed set, for pruning
        dist = {s: 0}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y in allowed and y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        path = [s]
        on_path = {s}

        def dfs(x):
            depth = len(path)
            for y in sorted(adj[x]):
                if y == s and depth == length:
                    return True
                if y in on_path or y not in allowed or y not in dist:
                    continue
                if depth + 1 > length or depth + dist[y] > length:
                    continue
                if depth + 1 == length and s not in adj[y]:
                    continue
                path.append(y)
                on_path.add(y)
                if dfs(y):
                    return True
                path.pop()
                on_path.discard(y)
            return False

        if dfs(s):
            return tuple(path)
    raise AssertionError("no cycle of the requested length")


def find_shortest_cycle(g: Graph) -> Optional[Cycle]:
    """A minimum-length cycle, or ``None`` when ``g`` is a forest.

    Self-loops are 1-cycles and parallel pairs are 2-cycles. Ties go to the
    lexicographically smallest vertex sequence (rotated to start at its
    minimum vertex).
    """
    loops = sorted((u, i) for i, (u, v) in enumerate(g.edges) if u == v)
    if loops:
        u, i = loops[0]
        return Cycle((u,), (i,))
    seen = {}
    pairs = []
    for i, e in enumerate(g.edges):
        if e in seen:
            pairs.append((e, seen[e], i))
        else:
            seen[e] = i
    if pairs:
        (u, v), i, j = min(pairs)
        return Cycle((u, v), (i, j))
    adj = g.adjacency()
    length = _girth_simple(g, adj)
    if length is None:
        return None
    seq = _lexmin_cycle_of_length(adj, length)
    edges = tuple(_edge_between(g, seq[k], seq[(k + 1) % length]) for k in range(length))
    return Cycle(seq, edges)


def enumerate_cycles(g: Graph, max_count: int = 100_000) -> list[Cycle]:
    """Every simple cycle of ``g`` exactly once.

    Cycles are distinguished by edge set, so each pair of parallel edges is its
    own 2-cycle. Raises :class:`CycleBudgetExceeded` past ``max_count``.
    """
    out = []

    def emit(c):
        out.append(c)
        if len(out) > max_count:
            raise CycleBudgetExceeded(f"more than {max_count} cycles")

    for i, (u, v) in enumerate(g.edges):
        if u == v:
            emit(Cycle((u,), (i,)))
    for s in sorted(g.vertices):
        vpath = [s]
        epath = []
        on_path = {s}

        def dfs(x):
            for ei in sorted(set(g.incident(x))):
                a, b = g.edges[ei]
                if a == b:
                    continue
                y = b if a == x else a
                if y == s:
                    k = len(vpath)
                    if k == 2 and epath and ei > epath[0]:
                        emit(Cycle(tuple(vpath), (*epath, ei)))
                    elif k >= 3 and vpath[1] < vpath[-1]:
                        emit(Cycle(tuple(vpath), (*epath, ei)))
                    continue
                if y < s or y in on_path:
                    continue
                vpath.append(y)
                epath.append(ei)
                on_path.add(y)
                dfs(y)
                on_path.discard(y)
                epath.pop()
                vpath.pop()

        dfs(s)
    return out
