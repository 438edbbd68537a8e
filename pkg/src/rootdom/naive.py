"""Naive reference enumerators: the in-tree correctness referee.

Every routine scans its full search space with set arithmetic and explicit
definitions, no pruning and no early exit, independent of the bitmask
kernels.  Distances come from a local Floyd-Warshall rather than the graph's
BFS cache.  Only sensible at desk scale (n around 8, 3^n for Roman).
"""

from __future__ import annotations

from itertools import combinations, product

from .graph import Graph

_FAR = 1 << 30


def _all_subsets(n: int):
    for k in range(n + 1):
        yield from combinations(range(n), k)


def _floyd_warshall(graph: Graph) -> list[list[int]]:
    n = graph.n
    dist = [[0 if u == v else _FAR for v in range(n)] for u in range(n)]
    for u, v in graph.edges():
        dist[u][v] = dist[v][u] = 1
    for k in range(n):
        dk = dist[k]
        for u in range(n):
            du = dist[u]
            via = du[k]
            if via >= _FAR:
                continue
            for v in range(n):
                alt = via + dk[v]
                if alt < du[v]:
                    du[v] = alt
    return dist


def _dominating(graph: Graph, sub: set[int]) -> bool:
    return all(v in sub or (graph.neighbors(v) & sub) for v in range(graph.n))


def _independent(graph: Graph, sub: set[int]) -> bool:
    return all(not (graph.neighbors(v) & sub) for v in sub)


def _connected_sub(graph: Graph, sub: set[int]) -> bool:
    if not sub:
        return False
    start = next(iter(sub))
    seen = {start}
    todo = [start]
    while todo:
        u = todo.pop()
        for w in graph.neighbors(u):
            if w in sub and w not in seen:
                seen.add(w)
                todo.append(w)
    return seen == sub


def _convex(graph: Graph, sub: set[int], dist: list[list[int]]) -> bool:
    members = sorted(sub)
    for i, u in enumerate(members):
        for w in members[i + 1 :]:
            for x in range(graph.n):
                if x in sub:
                    continue
                if dist[u][x] + dist[x][w] == dist[u][w]:
                    return False
    return True


def _weakly_connected(graph: Graph, sub: set[int]) -> bool:
    closed = set(sub)
    for v in sub:
        closed |= graph.neighbors(v)
    if not closed:
        return False
    start = next(iter(sorted(closed)))
    seen = {start}
    todo = [start]
    while todo:
        u = todo.pop()
        for w in graph.neighbors(u):
            if (u in sub or w in sub) and w in closed and w not in seen:
                seen.add(w)
                todo.append(w)
    return seen == closed


def _super(graph: Graph, sub: set[int]) -> bool:
    for v in range(graph.n):
        if v in sub:
            continue
        allowed = sub | {v}
        if not any(
            graph.neighbors(u) <= allowed for u in graph.neighbors(v) & sub
        ):
            return False
    return True


def naive_value(graph: Graph, kind: str) -> int | None:
    """Exact parameter value by full unpruned enumeration; None if infeasible.

    ``kind`` is one of gamma, alpha, i, roman, connected, convex, weakly,
    super (the CLI parameter names).
    """
    n = graph.n
    if kind == "roman":
        return naive_roman(graph)
    if kind == "alpha":
        best = -1
        for sub in _all_subsets(n):
            s = set(sub)
            if _independent(graph, s) and len(s) > best:
                best = len(s)
        return best

    dist = None
    if kind == "convex":
        # Convexity is only defined on connected hosts.
        dist = _floyd_warshall(graph)
        if any(d >= _FAR for row in dist for d in row):
            return None
    best: int | None = None
    for sub in _all_subsets(n):
        s = set(sub)
        if kind == "gamma":
            ok = _dominating(graph, s)
        elif kind == "i":
            ok = _dominating(graph, s) and _independent(graph, s)
        elif kind == "connected":
            ok = _dominating(graph, s) and _connected_sub(graph, s)
        elif kind == "convex":
            ok = _dominating(graph, s) and _convex(graph, s, dist)
        elif kind == "weakly":
            ok = _dominating(graph, s) and bool(s) and _weakly_connected(graph, s)
        elif kind == "super":
            ok = _super(graph, s)
        else:
            raise ValueError(f"unknown parameter name {kind!r}")
        if ok and (best is None or len(s) < best):
            best = len(s)
    return best


def naive_roman(graph: Graph) -> int:
    """Minimum Roman weight by scanning all 3^n labelings."""
    n = graph.n
    best = None
    for labels in product((0, 1, 2), repeat=n):
        ok = all(
            labels[v] != 0 or any(labels[u] == 2 for u in graph.neighbors(v))
            for v in range(n)
        )
        if ok:
            weight = sum(labels)
            if best is None or weight < best:
                best = weight
    return best if best is not None else 0
