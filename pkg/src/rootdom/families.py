"""Seeded, deterministic generators for the graph families under study.

The same spec with the same seed always yields a bit-identical edge list.
Random labeled trees come from Pruefer-sequence decoding (uniform over
labeled trees); random connected graphs from rejection-sampled G(n, p).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .graph import Graph
from .product import RootedGraph

_MASK64 = (1 << 64) - 1


class Family(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    SUBDIVIDED_STAR = "subdivided-star"
    COMPLETE = "complete"
    EMPTY = "empty"
    RANDOM_TREE = "random-tree"
    RANDOM_CONNECTED = "random-connected"


@dataclass(frozen=True)
class FamilySpec:
    """Parameters for one generation: order ``n`` or leaf count ``m`` per family."""

    family: Family
    n: int | None = None
    m: int | None = None
    p: float = 0.5
    seed: int | None = None

    def describe(self) -> dict:
        out: dict = {"family": self.family.value}
        if self.n is not None:
            out["n"] = self.n
        if self.m is not None:
            out["m"] = self.m
        if self.family is Family.RANDOM_CONNECTED:
            out["p"] = self.p
        if self.seed is not None:
            out["seed"] = self.seed
        return out


def child_seed(seed: int, index: int) -> int:
    """Derive the ``index``-th child seed with a SplitMix64 step.

    This is the documented splitting rule for concurrent generation:
    workers use ``child_seed(campaign_seed, job_index)`` so streams never
    overlap while staying reproducible.
    """
    x = (seed + (index + 1) * 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def path_graph(n: int) -> Graph:
    if n < 2:
        raise ValueError(f"paths need order >= 2, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycles need order >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(m: int) -> RootedGraph:
    """Star with ``m`` leaves, rooted at the center (vertex 0)."""
    if m < 2:
        raise ValueError(f"stars need at least 2 leaves, got {m}")
    return RootedGraph(Graph(m + 1, [(0, i) for i in range(1, m + 1)]), root=0)


def subdivided_star_graph(m: int) -> RootedGraph:
    """Star with ``m`` leaves and one edge subdivided.

    Layout: center 0, untouched leaves ``1..m-1``, subdivision vertex ``m``,
    far end ``m+1``.  Rooted at the far end, the vertex at distance two from
    the center.
    """
    if m < 2:
        raise ValueError(f"subdivided stars need at least 2 leaves, got {m}")
    edges = [(0, i) for i in range(1, m)] + [(0, m), (m, m + 1)]
    return RootedGraph(Graph(m + 2, edges), root=m + 1)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graphs need order >= 1, got {n}")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"empty graphs need order >= 1, got {n}")
    return Graph(n, [])


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree via Pruefer decoding."""
    if n < 2:
        raise ValueError(f"random trees need order >= 2, got {n}")
    if n == 2:
        return Graph(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        for u in range(n):
            if degree[u] == 1:
                edges.append((u, v))
                degree[u] -= 1
                degree[v] -= 1
                break
    tail = [u for u in range(n) if degree[u] == 1]
    edges.append((tail[0], tail[1]))
    return Graph(n, edges)


def random_connected_graph(n: int, p: float, seed: int, max_attempts: int = 1000) -> Graph:
    """Rejection-sample G(n, p) until connected; errors out after the cap."""
    if n < 2:
        raise ValueError(f"random connected graphs need order >= 2, got {n}")
    if not (0.0 < p <= 1.0):
        raise ValueError(f"edge probability must be in (0, 1], got {p}")
    from .graph import is_connected

    rng = random.Random(seed)
    for _ in range(max_attempts):
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < p
        ]
        graph = Graph(n, edges)
        if is_connected(graph):
            return graph
    raise RuntimeError(
        f"no connected G({n}, {p}) sample after {max_attempts} attempts"
    )


def generate(spec: FamilySpec) -> Graph | RootedGraph:
    """Generate the graph for ``spec``; rooted families return a RootedGraph."""
    fam = spec.family
    if fam is Family.PATH:
        return path_graph(_require(spec.n, "n"))
    if fam is Family.CYCLE:
        return cycle_graph(_require(spec.n, "n"))
    if fam is Family.STAR:
        return star_graph(_require(spec.m, "m"))
    if fam is Family.SUBDIVIDED_STAR:
        return subdivided_star_graph(_require(spec.m, "m"))
    if fam is Family.COMPLETE:
        return complete_graph(_require(spec.n, "n"))
    if fam is Family.EMPTY:
        return empty_graph(_require(spec.n, "n"))
    if fam is Family.RANDOM_TREE:
        return random_tree(_require(spec.n, "n"), _require(spec.seed, "seed"))
    if fam is Family.RANDOM_CONNECTED:
        return random_connected_graph(
            _require(spec.n, "n"), spec.p, _require(spec.seed, "seed")
        )
    raise ValueError(f"unknown family {fam!r}")


def _require(value, name: str):
    if value is None:
        raise ValueError(f"family parameter {name!r} is required")
    return value


def all_roots(graph: Graph | RootedGraph) -> list[RootedGraph]:
    """One rooted variant per vertex."""
    g = graph.graph if isinstance(graph, RootedGraph) else graph
    return [RootedGraph(g, v) for v in range(g.n)]
