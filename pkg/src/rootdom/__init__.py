"""Exact domination-type solvers and theorem checks for rooted product graphs."""

__version__ = "0.1.0"

from .graph import (
    Graph,
    InducedSubgraph,
    UNREACHABLE,
    delete_vertices,
    is_connected,
    is_connected_subset,
    is_convex_set,
    is_tree,
    leaves,
    private_neighbor_set,
    support_vertices,
    weakly_induced_subgraph,
)
from .product import RootedGraph, RootedProduct, rooted_product
from .families import Family, FamilySpec, all_roots, child_seed, generate
from .solvers import (
    BudgetExceededError,
    EnumerationCapError,
    InfeasibleParameterError,
    Membership,
    ParameterKind,
    RomanAssignment,
    RootClassification,
    SolveBudget,
    SolveResult,
    classify_root,
    connected_domination_number,
    convex_domination_number,
    default_budget,
    domination_number,
    enumerate_optimal,
    independence_number,
    independent_domination_number,
    is_dominating,
    is_independent,
    is_super_dominating,
    minimum_set,
    roman_domination_number,
    solve,
    super_domination_number,
    weakly_connected_domination_number,
)
from .harness import (
    MUST_HOLD,
    CampaignConfig,
    Outcome,
    TheoremId,
    TheoremVerdict,
    check,
    check_witness,
    closed_form_check,
    run_campaign,
)

__all__ = [name for name in dir() if not name.startswith("_")]
