"""Mutable adjacency-count multigraph used inside the branching searches.

``adj[v][u]`` is the number of parallel ``v``-``u`` edges. Self-loops are
never stored: whoever would create one must resolve it on the spot.
"""

from __future__ import annotations

from collections import deque


def from_graph(g) -> dict:
    adj = {v: {} for v in g.vertices}
    loops = set()
    for u, v in g.edges:
        if u == v:
            loops.add(u)
            continue
        adj[u][v] = adj[u].get(v, 0) + 1
        adj[v][u] = adj[v].get(u, 0) + 1
    return adj, loops


def copy(adj: dict) -> dict:
    return {v: dict(nb) for v, nb in adj.items()}


def degree(adj, v) -> int:
    return sum(adj[v].values())


def remove(adj, v) -> None:
    for u in adj.pop(v):
        del adj[u][v]


def add_edge(adj, u, v) -> None:
    adj[u][v] = adj[u].get(v, 0) + 1
    adj[v][u] = adj[v].get(u, 0) + 1


def cyclomatic(adj) -> int:
    """m - n + (number of components)."""
    m2 = 0
    seen = set()
    comps = 0
    for s in adj:
        m2 += sum(adj[s].values())
        if s in seen:
            continue
        comps += 1
        seen.add(s)
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return m2 // 2 - len(adj) + comps


def has_cycle_within(adj, keep) -> bool:
    """True iff the subgraph induced by ``keep`` contains a cycle."""
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in keep:
        if u not in adj:
            continue
        for v, mult in adj[u].items():
            if v not in keep or v < u:
                continue
            if mult >= 2:
                return True
            ru, rv = find(u), find(v)
            if ru == rv:
                return True
            parent[ru] = rv
    return False


def shortest_cycle(adj, weight=None) -> list:
    """Vertices of a shortest cycle (assumes no loops); ``[]`` if a forest.

    Among cycles of minimum length, the one minimising ``weight`` (a function
    of the vertex list) is preferred; ties go to the earliest root in sorted
    order.
    """
    best = None
    best_key = None
    for u in sorted(adj):
        for v, mult in adj[u].items():
            if mult >= 2 and u < v:
                cyc = [u, v]
                key = (2, weight(cyc) if weight else 0)
                if best_key is None or key < best_key:
                    best, best_key = cyc, key
    if best is not None:
        return best
    for r in sorted(adj):
        dist = {r: 0}
        parent = {r: None}
        queue = deque([r])
        while queue:
            x = queue.popleft()
            if best_key is not None and 2 * dist[x] + 1 > best_key[0]:
                break
            for y in sorted(adj[x]):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y and parent[y] != x:
                    length = dist[x] + dist[y] + 1
                    if best_key is not None and length > best_key[0]:
                        continue
                    cyc = _close(parent, x, y)
                    key = (len(cyc), weight(cyc) if weight else 0)
                    if best_key is None or key < best_key:
                        best, best_key = cyc, key
    return best or []


def _close(parent, x, y) -> list:
    px = [x]
    while parent[px[-1]] is not None:
        px.append(parent[px[-1]])
    py = [y]
    while parent[py[-1]] is not None:
        py.append(parent[py[-1]])
    sx = set(px)
    lca_idx_y = next(i for i, v in enumerate(py) if v in sx)
    lca = py[lca_idx_y]
    lca_idx_x = px.index(lca)
    return px[: lca_idx_x + 1][::-1] + py[:lca_idx_y]


def odd_cycle(adj) -> list:
    """Vertices of a short odd cycle (assumes no loops), ``[]`` if bipartite."""
    best = None
    for r in sorted(adj):
        dist = {r: 0}
        parent = {r: None}
        queue = deque([r])
        while queue:
            x = queue.popleft()
            if best is not None and 2 * dist[x] + 1 >= len(best):
                break
            for y in sorted(adj[x]):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif dist[y] == dist[x]:
                    cyc = _close(parent, x, y)
                    if best is None or len(cyc) < len(best):
                        best = cyc
    return best or []


def cycle_through(adj, u) -> list:
    """Vertices of a shortest cycle through ``u`` (no loops), ``[]`` if none."""
    for v in sorted(adj[u]):
        if adj[u][v] >= 2:
            return [u, v]
    dist = {u: 0}
    parent = {u: None}
    branch = {u: None}
    queue = deque()
    for v in sorted(adj[u]):
        dist[v] = 1
        parent[v] = u
        branch[v] = v
        queue.append(v)
    best = None
    while queue:
        x = queue.popleft()
        if best is not None and 2 * dist[x] + 1 >= best[0]:
            break
        for y in sorted(adj[x]):
            if y == u:
                continue
            if y not in dist:
                dist[y] = dist[x] + 1
                parent[y] = x
                branch[y] = branch[x]
                queue.append(y)
            elif branch[y] != branch[x]:
                length = dist[x] + dist[y] + 1
                if best is None or length < best[0]:
                    best = (length, x, y)
    if best is None:
        return []
    _, x, y = best
    px = [x]
    while parent[px[-1]] != u:
        px.append(parent[px[-1]])
    py = [y]
    while parent[py[-1]] != u:
        py.append(parent[py[-1]])
    return [u] + px[::-1] + py
