"""Shared generators for the test suite."""

from __future__ import annotations

import random

from rootdom.graph import Graph


def random_gnp(n: int, p: float, seed: int) -> Graph:
    """Seeded G(n, p), possibly disconnected."""
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def min_plus_distances(graph: Graph) -> list[list[int]]:
    """All-pairs distances by repeated min-plus squaring; -1 for unreachable."""
    n = graph.n
    big = 1 << 20
    dist = [[0 if u == v else big for v in range(n)] for u in range(n)]
    for u, v in graph.edges():
        dist[u][v] = dist[v][u] = 1
    length = 1
    while length < n:
        nxt = [[min(dist[u][k] + dist[k][v] for k in range(n)) for v in range(n)] for u in range(n)]
        dist = [[min(dist[u][v], nxt[u][v]) for v in range(n)] for u in range(n)]
        length *= 2
    return [[d if d < big else -1 for d in row] for row in dist]
