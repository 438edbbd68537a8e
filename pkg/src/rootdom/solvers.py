"""Exact solvers for the eight domination-type parameters.

Values come from cardinality-ordered subset scans over bitmasks (compiled
kernel when available), with two escape hatches:

* the Roman engine scans 2-label sets only, with the 1-labels forced onto
  the vertices left uncovered -- every minimum-weight assignment has that
  form, since a 1-label next to a 2 could be lowered to 0;
* tree instances past the scan budget fall back to the exact tree DP for
  the independent/connected/convex kinds (on trees convex and connected
  dominating sets coincide because geodesics are unique).

Witnesses from the scan path are the lexicographically smallest optima
under the fixed vertex numbering; the tree-DP path is deterministic but
makes no lexicographic promise.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Callable, Iterable

from . import kernels, tree_dp
from .graph import Graph, is_connected, is_tree
from .product import RootedGraph


class SolverError(Exception):
    """Base class for solver failures that are not plain input errors."""


class InfeasibleParameterError(SolverError):
    """No subset satisfies the parameter's predicate on this graph."""


class BudgetExceededError(SolverError):
    """The instance is larger than the configured search budget."""


class EnumerationCapError(BudgetExceededError):
    """Too many optimal witnesses; carries the partial count."""

    def __init__(self, message: str, partial_count: int):
        super().__init__(message)
        self.partial_count = partial_count


@dataclass(frozen=True)
class SolveBudget:
    """Resource limits: max order for 2^n scans and the witness-list cap."""

    max_scan_n: int = 22
    enumeration_cap: int = 1_000_000


def default_budget() -> SolveBudget:
    """Default budget, honoring the ROOTDOM_BUDGET environment override."""
    env = os.environ.get("ROOTDOM_BUDGET")
    if env:
        try:
            cap = int(env)
        except ValueError:
            raise ValueError(f"ROOTDOM_BUDGET must be an integer, got {env!r}") from None
        return SolveBudget(max_scan_n=min(cap, 62))
    return SolveBudget()


class ParameterKind(str, Enum):
    """The eight parameters; values double as the CLI names."""

    DOMINATION = "gamma"
    INDEPENDENCE = "alpha"
    INDEPENDENT_DOMINATION = "i"
    ROMAN = "roman"
    CONNECTED = "connected"
    CONVEX = "convex"
    WEAKLY_CONNECTED = "weakly"
    SUPER = "super"


PARAM_BY_NAME = {kind.value: kind for kind in ParameterKind}

_KIND_CODE = {
    ParameterKind.DOMINATION: kernels.KIND_DOMINATING,
    ParameterKind.INDEPENDENT_DOMINATION: kernels.KIND_INDEPENDENT_DOMINATING,
    ParameterKind.CONNECTED: kernels.KIND_CONNECTED_DOMINATING,
    ParameterKind.CONVEX: kernels.KIND_CONVEX_DOMINATING,
    ParameterKind.WEAKLY_CONNECTED: kernels.KIND_WEAKLY_CONNECTED_DOMINATING,
    ParameterKind.SUPER: kernels.KIND_SUPER_DOMINATING,
}

#: Kinds whose definition requires a connected host graph.
_CONNECTED_HOST = {
    ParameterKind.CONNECTED,
    ParameterKind.CONVEX,
    ParameterKind.WEAKLY_CONNECTED,
}

_TREE_DP_KINDS = {
    ParameterKind.INDEPENDENT_DOMINATION,
    ParameterKind.CONNECTED,
    ParameterKind.CONVEX,
}


@dataclass(frozen=True)
class RomanAssignment:
    """A 0/1/2 labeling stored as the 1-set and 2-set (0 implicit)."""

    b1: frozenset[int]
    b2: frozenset[int]

    def __post_init__(self) -> None:
        if self.b1 & self.b2:
            raise ValueError("label sets B1 and B2 must be disjoint")

    @property
    def weight(self) -> int:
        return 2 * len(self.b2) + len(self.b1)

    def label(self, v: int) -> int:
        if v in self.b2:
            return 2
        if v in self.b1:
            return 1
        return 0

    def is_valid(self, graph: Graph) -> bool:
        """Every 0-labeled vertex needs a 2-labeled neighbor."""
        for group in (self.b1, self.b2):
            for v in group:
                if not (0 <= v < graph.n):
                    return False
        positive = self.b1 | self.b2
        return all(
            v in positive or (graph.neighbors(v) & self.b2)
            for v in range(graph.n)
        )


@dataclass(frozen=True)
class SolveResult:
    kind: ParameterKind | None
    value: int
    witness: frozenset[int] | RomanAssignment
    optimal_count: int | None = None


class Membership(str, Enum):
    IN_ALL = "IN_ALL"
    IN_NONE = "IN_NONE"
    IN_SOME = "IN_SOME"


@dataclass(frozen=True)
class RootClassification:
    """How the root sits across all optimal witnesses of one parameter."""

    kind: ParameterKind
    membership: Membership
    roman_values: frozenset[int] | None = None


# -- predicates -------------------------------------------------------------


def is_dominating(graph: Graph, subset: frozenset[int] | set[int]) -> bool:
    """Every vertex outside the set has a neighbor inside it."""
    sub = set(subset)
    return all(v in sub or (graph.neighbors(v) & sub) for v in range(graph.n))


def is_independent(graph: Graph, subset: frozenset[int] | set[int]) -> bool:
    """The induced subgraph has no edges; empty sets and singletons qualify."""
    sub = set(subset)
    return all(not (graph.neighbors(v) & sub) for v in sub)


def is_super_dominating(graph: Graph, subset: frozenset[int] | set[int]) -> bool:
    """Each outside vertex has an inside neighbor whose whole neighborhood
    lies in the set plus that one vertex.  The full vertex set qualifies
    vacuously."""
    sub = set(subset)
    for v in range(graph.n):
        if v in sub:
            continue
        allowed = sub | {v}
        if not any(graph.neighbors(u) <= allowed for u in graph.neighbors(v) & sub):
            return False
    return True


# -- generic engine ----------------------------------------------------------


def minimum_set(
    graph: Graph,
    predicate: Callable[[Graph, frozenset[int]], bool],
    direction: str = "min",
    *,
    budget: SolveBudget | None = None,
) -> SolveResult:
    """Exact extremal subset for an arbitrary predicate.

    Cardinality-ordered scan (ascending for ``min``, descending for
    ``max``) with early exit at the first feasible size; within a size,
    subsets are tried in lexicographic order, so the witness is the
    lexicographically smallest optimum.
    """
    budget = budget or default_budget()
    if direction not in ("min", "max"):
        raise ValueError(f"direction must be 'min' or 'max', got {direction!r}")
    n = graph.n
    if n > budget.max_scan_n:
        raise BudgetExceededError(
            f"order {n} exceeds the subset-scan budget (n <= {budget.max_scan_n})"
        )
    sizes = range(0, n + 1) if direction == "min" else range(n, -1, -1)
    for k in sizes:
        for combo in combinations(range(n), k):
            candidate = frozenset(combo)
            if predicate(graph, candidate):
                return SolveResult(None, k, candidate)
    raise InfeasibleParameterError("no subset satisfies the predicate")


# -- per-kind solvers ---------------------------------------------------------


def _mask_to_set(mask: int) -> frozenset[int]:
    out = []
    while mask:
        bit = mask & (-mask)
        mask ^= bit
        out.append(bit.bit_length() - 1)
    return frozenset(out)


def _forced_ones(graph: Graph, b2_mask: int) -> int:
    covered = 0
    for v in range(graph.n):
        if b2_mask & (1 << v):
            covered |= graph.closed_masks()[v]
    return ((1 << graph.n) - 1) & ~covered


def _check_order(graph: Graph) -> None:
    if graph.n < 1:
        raise ValueError("parameters are undefined on the empty graph")


def _require_connected(graph: Graph, kind: ParameterKind) -> None:
    if kind in _CONNECTED_HOST and not is_connected(graph):
        raise InfeasibleParameterError(
            f"{kind.value} domination is infeasible on a disconnected graph"
        )


def solve(graph: Graph, kind: ParameterKind, *, budget: SolveBudget | None = None) -> SolveResult:
    """Exact value and witness for one parameter kind."""
    budget = budget or default_budget()
    _check_order(graph)
    _require_connected(graph, kind)

    if kind is ParameterKind.INDEPENDENCE:
        if graph.n > budget.max_scan_n:
            raise BudgetExceededError(
                f"order {graph.n} exceeds the subset-scan budget "
                f"(n <= {budget.max_scan_n}); set ROOTDOM_BUDGET to raise it"
            )
        size, mask = kernels.scan_max_independent(graph.n, graph.open_masks())
        return SolveResult(kind, size, _mask_to_set(mask))

    if kind is ParameterKind.ROMAN:
        if graph.n > budget.max_scan_n:
            raise BudgetExceededError(
                f"order {graph.n} exceeds the subset-scan budget "
                f"(n <= {budget.max_scan_n}); set ROOTDOM_BUDGET to raise it"
            )
        weight, b2_mask = kernels.roman_min(graph.n, graph.closed_masks())
        b1_mask = _forced_ones(graph, b2_mask)
        witness = RomanAssignment(_mask_to_set(b1_mask), _mask_to_set(b2_mask))
        return SolveResult(kind, weight, witness)

    if graph.n > budget.max_scan_n:
        if kind in _TREE_DP_KINDS and is_tree(graph):
            if kind is ParameterKind.INDEPENDENT_DOMINATION:
                value, witness = tree_dp.tree_independent_domination(graph)
            else:
                value, witness = tree_dp.tree_connected_domination(graph)
            return SolveResult(kind, value, witness)
        raise BudgetExceededError(
            f"order {graph.n} exceeds the subset-scan budget "
            f"(n <= {budget.max_scan_n}); set ROOTDOM_BUDGET to raise it"
        )

    intervals = graph.interval_masks() if kind is ParameterKind.CONVEX else None
    found = kernels.scan_min(
        _KIND_CODE[kind], graph.n, graph.open_masks(), graph.closed_masks(), intervals
    )
    if found is None:
        raise InfeasibleParameterError(f"no {kind.value} dominating set exists")
    size, mask = found
    return SolveResult(kind, size, _mask_to_set(mask))


def domination_number(graph: Graph, *, budget: SolveBudget | None = None) -> SolveResult:
    return solve(graph, ParameterKind.DOMINATION, budget=budget)


def independence_number(graph: Graph, *, budget: SolveBudget | None = None) -> SolveResult:
    return solve(graph, ParameterKind.INDEPENDENCE, budget=budget)


def independent_domination_number(graph: Graph, *, budget: SolveBudget | None = None) -> SolveResult:
    return solve(graph, ParameterKind.INDEPENDENT_DOMINATION, budget=budget)


def roman_domination_number(graph: Graph, *, budget: SolveBudget | None = None) -> SolveResult:
    return solve(graph, ParameterKind.ROMAN, budget=budget)


def connected_domination_number(graph: Graph, *, budget: SolveBudget | None = None) -> SolveResult:
    return solve(graph, ParameterKind.CONNECTED, budget=budget)


def convex_domination_number(graph: Graph, *, budget: SolveBudget | None = None) -> SolveResult:
    return solve(graph, ParameterKind.CONVEX, budget=budget)


def weakly_connected_domination_number(graph: Graph, *, budget: SolveBudget | None = None) -> SolveResult:
    return solve(graph, ParameterKind.WEAKLY_CONNECTED, budget=budget)


def super_domination_number(graph: Graph, *, budget: SolveBudget | None = None) -> SolveResult:
    return solve(graph, ParameterKind.SUPER, budget=budget)


# Conventional short aliases.
gamma = domination_number
alpha = independence_number
i_number = independent_domination_number
gamma_R = roman_domination_number
gamma_c = connected_domination_number
gamma_con = convex_domination_number
gamma_w = weakly_connected_domination_number
gamma_sp = super_domination_number


# -- enumeration and root classification --------------------------------------


def enumerate_optimal(
    graph: Graph, kind: ParameterKind, *, budget: SolveBudget | None = None
) -> list[frozenset[int]] | list[RomanAssignment]:
    """All optimal witnesses, in lexicographic order.

    For the Roman kind this is the complete family of forced-completion
    assignments, ordered by 2-set size then lexicographically.
    """
    budget = budget or default_budget()
    result = solve(graph, kind, budget=budget)
    if graph.n > budget.max_scan_n:
        raise BudgetExceededError(
            f"enumeration needs the scan engine; order {graph.n} exceeds "
            f"n <= {budget.max_scan_n}"
        )

    if kind is ParameterKind.ROMAN:
        b2_masks, hit_cap = kernels.roman_enumerate(
            graph.n, graph.closed_masks(), result.value, budget.enumeration_cap
        )
        if hit_cap:
            raise EnumerationCapError(
                f"more than {budget.enumeration_cap} optimal Roman assignments",
                partial_count=len(b2_masks),
            )
        return [
            RomanAssignment(_mask_to_set(_forced_ones(graph, mask)), _mask_to_set(mask))
            for mask in b2_masks
        ]

    if kind is ParameterKind.INDEPENDENCE:
        code = kernels.KIND_INDEPENDENT
    else:
        code = _KIND_CODE[kind]
    intervals = graph.interval_masks() if kind is ParameterKind.CONVEX else None
    masks, hit_cap = kernels.enumerate_size(
        code,
        graph.n,
        graph.open_masks(),
        graph.closed_masks(),
        intervals,
        result.value,
        budget.enumeration_cap,
    )
    if hit_cap:
        raise EnumerationCapError(
            f"more than {budget.enumeration_cap} optimal sets",
            partial_count=len(masks),
        )
    return [_mask_to_set(mask) for mask in masks]


def classify_root(
    rooted: RootedGraph, kind: ParameterKind, *, budget: SolveBudget | None = None
) -> RootClassification:
    """Scan all optimal witnesses and classify the root's membership.

    For the Roman kind, membership refers to carrying a positive label and
    ``roman_values`` collects the labels the root attains across all
    minimum-weight assignments.
    """
    witnesses = enumerate_optimal(rooted.graph, kind, budget=budget)
    root = rooted.root
    if kind is ParameterKind.ROMAN:
        values = frozenset(assignment.label(root) for assignment in witnesses)
        flags = [v > 0 for v in values]
        membership = _membership(flags)
        return RootClassification(kind, membership, roman_values=values)
    flags = [root in witness for witness in witnesses]
    return RootClassification(kind, _membership(flags))


def _membership(flags: Iterable[bool]) -> Membership:
    flags = list(flags)
    if all(flags):
        return Membership.IN_ALL
    if not any(flags):
        return Membership.IN_NONE
    return Membership.IN_SOME
