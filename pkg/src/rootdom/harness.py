"""Machine checks for the rooted-product domination theorems.

Each theorem id maps to one executable check that evaluates the claim's
hypothesis on a concrete instance, computes both sides exactly with the
solvers, and returns a verdict.  A FAIL verdict always carries a standalone
witness payload (edge lists plus every computed value) from which
``check_witness`` reproduces the verdict deterministically.

The campaign runner sweeps seeded instances per theorem.  The must-hold
theorems are the ones with airtight proofs; the remaining claims get
reported rather than asserted, and a failing instance is a first-class
finding, not a crash.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum

from . import solvers
from .families import (
    Family,
    FamilySpec,
    child_seed,
    generate,
    path_graph,
    random_tree,
    star_graph,
    subdivided_star_graph,
)
from .graph import Graph, is_tree, leaves, private_neighbor_set, support_vertices
from .product import RootedGraph, rooted_product
from .solvers import (
    BudgetExceededError,
    InfeasibleParameterError,
    Membership,
    ParameterKind,
    SolveBudget,
    classify_root,
    enumerate_optimal,
    solve,
)

PK = ParameterKind


class TheoremId(str, Enum):
    D1 = "D1"
    D2 = "D2"
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    R4 = "R4"
    R5 = "R5"
    R6 = "R6"
    I1 = "I1"
    I2 = "I2"
    I3 = "I3"
    I4 = "I4"
    I5 = "I5"
    I6 = "I6"
    I7 = "I7"
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C4 = "C4"
    X1 = "X1"
    X2 = "X2"
    W1 = "W1"
    W2 = "W2"
    W3 = "W3"
    S1 = "S1"
    S2 = "S2"
    S3 = "S3"


#: Theorems whose failure makes a campaign exit nonzero.
MUST_HOLD = frozenset(
    {
        TheoremId.D2,
        TheoremId.R1,
        TheoremId.R2,
        TheoremId.R3,
        TheoremId.R4,
        TheoremId.I1,
        TheoremId.I3,
        TheoremId.I4,
        TheoremId.I5,
        TheoremId.C2,
        TheoremId.C3,
    }
)


class Outcome(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    NOT_APPLICABLE = "NOT_APPLICABLE"
    INFEASIBLE = "INFEASIBLE"


@dataclass
class TheoremVerdict:
    theorem: TheoremId
    instance: dict
    applicable: bool
    outcome: Outcome
    values: dict
    witness: dict | None = None

    def to_json(self) -> dict:
        out = {
            "theorem": self.theorem.value,
            "instance": self.instance,
            "applicable": self.applicable,
            "outcome": self.outcome.value,
            "values": self.values,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _graph_payload(graph: Graph) -> dict:
    return {"n": graph.n, "edges": [list(e) for e in graph.edges()]}


def _witness_payload(theorem: TheoremId, G: Graph | None, H: RootedGraph | None, values: dict) -> dict:
    payload: dict = {"theorem": theorem.value, "values": values}
    if G is not None:
        payload["g"] = _graph_payload(G)
    if H is not None:
        payload["h"] = _graph_payload(H.graph)
        payload["root"] = H.root
    return payload


# -- per-theorem checkers ----------------------------------------------------
#
# Each returns (applicable, ok_or_none, values).  ``ok`` is None when the
# hypothesis does not hold.


def _value(graph: Graph, kind: PK, budget) -> int:
    return solve(graph, kind, budget=budget).value


def _check_D1(G, H, budget):
    cls = classify_root(H, PK.DOMINATION, budget=budget)
    values = {"root_membership": cls.membership.value}
    if cls.membership is Membership.IN_SOME:
        return False, None, values
    gamma_h = _value(H.graph, PK.DOMINATION, budget)
    product = rooted_product(G, H).product
    gamma_gh = _value(product, PK.DOMINATION, budget)
    values.update(
        {"gamma_h": gamma_h, "gamma_product": gamma_gh, "expected": G.n * gamma_h}
    )
    return True, gamma_gh == G.n * gamma_h, values


def _check_D2(G, H, budget):
    gamma_g = _value(G, PK.DOMINATION, budget)
    gamma_h = _value(H.graph, PK.DOMINATION, budget)
    product = rooted_product(G, H).product
    gamma_gh = _value(product, PK.DOMINATION, budget)
    allowed = {G.n * gamma_h, G.n * (gamma_h - 1) + gamma_g}
    values = {
        "gamma_g": gamma_g,
        "gamma_h": gamma_h,
        "gamma_product": gamma_gh,
        "allowed": sorted(allowed),
    }
    return True, gamma_gh in allowed, values


def _roman_chain(graph: Graph, budget) -> tuple[bool, dict]:
    g = _value(graph, PK.DOMINATION, budget)
    r = _value(graph, PK.ROMAN, budget)
    return g <= r <= 2 * g, {"gamma": g, "roman": r}


def _check_R1(G, H, budget):
    ok_g, vals_g = _roman_chain(G, budget)
    values = {"g": vals_g}
    ok = ok_g
    if H is not None:
        ok_h, vals_h = _roman_chain(H.graph, budget)
        product = rooted_product(G, H).product
        ok_p, vals_p = _roman_chain(product, budget)
        values.update({"h": vals_h, "product": vals_p})
        ok = ok and ok_h and ok_p
    return True, ok, values


def _check_R2(G, H, budget):
    if G.n < 2:
        return False, None, {"reason": "needs order >= 2"}
    from .graph import delete_vertices

    roman_g = _value(G, PK.ROMAN, budget)
    assignments = enumerate_optimal(G, PK.ROMAN, budget=budget)
    cases = []
    ok = True
    for v in range(G.n):
        roman_del = _value(delete_vertices(G, {v}).graph, PK.ROMAN, budget)
        for fn in assignments:
            label = fn.label(v)
            if label == 0:
                holds = roman_g - 1 <= roman_del <= roman_g
            elif label == 1:
                holds = roman_del == roman_g - 1
            else:
                holds = roman_g - 1 <= roman_del <= roman_g + G.degree(v) - 2
            if not holds:
                ok = False
                cases.append({"v": v, "label": label, "roman_deleted": roman_del})
    values = {
        "roman": roman_g,
        "assignments": len(assignments),
        "violations": cases,
    }
    return True, ok, values


def _root_label_sets(graph: Graph, budget) -> list[frozenset[int]]:
    assignments = enumerate_optimal(graph, PK.ROMAN, budget=budget)
    return [
        frozenset(fn.label(v) for fn in assignments) for v in range(graph.n)
    ]


def _check_R3(G, H, budget):
    from .graph import delete_vertices

    if G.n < 2:
        return False, None, {"reason": "needs order >= 2"}
    labels = _root_label_sets(G, budget)
    targets = [v for v in range(G.n) if labels[v] == frozenset({0})]
    if not targets:
        return False, None, {"reason": "no vertex is 0-labeled in every assignment"}
    roman_g = _value(G, PK.ROMAN, budget)
    bad = []
    for v in targets:
        roman_del = _value(delete_vertices(G, {v}).graph, PK.ROMAN, budget)
        if roman_del != roman_g:
            bad.append({"v": v, "roman_deleted": roman_del})
    values = {"roman": roman_g, "tested_vertices": targets, "violations": bad}
    return True, not bad, values


def _check_R4(G, H, budget):
    gamma_g = _value(G, PK.DOMINATION, budget)
    roman_h = _value(H.graph, PK.ROMAN, budget)
    product = rooted_product(G, H).product
    roman_gh = _value(product, PK.ROMAN, budget)
    lower = G.n * (roman_h - 1) + gamma_g
    upper = G.n * roman_h
    values = {
        "gamma_g": gamma_g,
        "roman_h": roman_h,
        "roman_product": roman_gh,
        "lower": lower,
        "upper": upper,
    }
    return True, lower <= roman_gh <= upper, values


def _check_R5(G, H, budget):
    cls = classify_root(H, PK.ROMAN, budget=budget)
    rv = cls.roman_values or frozenset()
    values = {"root_labels": sorted(rv)}
    branch_zero = rv == frozenset({0})
    branch_one_two = {1, 2} <= rv
    if not branch_zero and not branch_one_two:
        return False, None, values
    roman_h = _value(H.graph, PK.ROMAN, budget)
    product = rooted_product(G, H).product
    roman_gh = _value(product, PK.ROMAN, budget)
    if branch_zero:
        expected = G.n * roman_h
        values["branch"] = "always-zero"
    else:
        gamma_g = _value(G, PK.DOMINATION, budget)
        expected = G.n * (roman_h - 1) + gamma_g
        values["branch"] = "labels-one-and-two"
        values["gamma_g"] = gamma_g
    values.update({"roman_h": roman_h, "roman_product": roman_gh, "expected": expected})
    return True, roman_gh == expected, values


def _check_R6(G, H, budget):
    cls = classify_root(H, PK.ROMAN, budget=budget)
    rv = cls.roman_values or frozenset()
    values = {"root_labels": sorted(rv)}
    if rv != frozenset({1}):
        return False, None, values
    roman_h = _value(H.graph, PK.ROMAN, budget)
    roman_g = _value(G, PK.ROMAN, budget)
    product = rooted_product(G, H).product
    roman_gh = _value(product, PK.ROMAN, budget)
    expected = G.n * (roman_h - 1) + roman_g
    values.update(
        {"roman_h": roman_h, "roman_g": roman_g, "roman_product": roman_gh, "expected": expected}
    )
    return True, roman_gh == expected, values


def _check_I1(G, H, budget):
    from .graph import delete_vertices

    if G.n < 2:
        return False, None, {"reason": "needs order >= 2"}
    alpha_sets = enumerate_optimal(G, PK.INDEPENDENCE, budget=budget)
    in_all = sorted(set.intersection(*(set(s) for s in alpha_sets)))
    if not in_all:
        return False, None, {"reason": "no vertex lies in every maximum independent set"}
    alpha_g = _value(G, PK.INDEPENDENCE, budget)
    bad = []
    for v in in_all:
        alpha_del = _value(delete_vertices(G, {v}).graph, PK.INDEPENDENCE, budget)
        if not alpha_g >= alpha_del + 1:
            bad.append({"v": v, "alpha_deleted": alpha_del})
    values = {"alpha": alpha_g, "tested_vertices": in_all, "violations": bad}
    return True, not bad, values


def _check_I2(G, H, budget):
    cls = classify_root(H, PK.INDEPENDENCE, budget=budget)
    alpha_h = _value(H.graph, PK.INDEPENDENCE, budget)
    product = rooted_product(G, H).product
    alpha_gh = _value(product, PK.INDEPENDENCE, budget)
    values = {"root_membership": cls.membership.value, "alpha_h": alpha_h, "alpha_product": alpha_gh}
    if cls.membership is Membership.IN_ALL:
        alpha_g = _value(G, PK.INDEPENDENCE, budget)
        expected = G.n * (alpha_h - 1) + alpha_g
        values["alpha_g"] = alpha_g
    else:
        expected = G.n * alpha_h
    values["expected"] = expected
    return True, alpha_gh == expected, values


def _check_I3(G, H, budget):
    from itertools import combinations

    from .graph import delete_vertices

    if G.n < 2:
        return False, None, {"reason": "needs order >= 2"}
    i_g = _value(G, PK.INDEPENDENT_DOMINATION, budget)
    bad = []
    checked = 0
    for k in range(1, G.n):
        for combo in combinations(range(G.n), k):
            removed = frozenset(combo)
            i_del = _value(delete_vertices(G, removed).graph, PK.INDEPENDENT_DOMINATION, budget)
            checked += 1
            if not i_del >= i_g - k:
                bad.append({"removed": sorted(removed), "i_deleted": i_del})
    values = {"i": i_g, "subsets_checked": checked, "violations": bad}
    return True, not bad, values


def _check_I4(G, H, budget):
    from .graph import delete_vertices

    if G.n < 2:
        return False, None, {"reason": "needs order >= 2"}
    i_sets = enumerate_optimal(G, PK.INDEPENDENT_DOMINATION, budget=budget)
    member_union = set().union(*i_sets)
    never = [v for v in range(G.n) if v not in member_union]
    if not never:
        return False, None, {"reason": "every vertex lies in some minimum independent dominating set"}
    i_g = _value(G, PK.INDEPENDENT_DOMINATION, budget)
    bad = []
    for v in never:
        i_del = _value(delete_vertices(G, {v}).graph, PK.INDEPENDENT_DOMINATION, budget)
        if i_del != i_g:
            bad.append({"v": v, "i_deleted": i_del})
    values = {"i": i_g, "tested_vertices": never, "violations": bad}
    return True, not bad, values


def _check_I5(G, H, budget):
    from .graph import delete_vertices

    i_g = _value(G, PK.INDEPENDENT_DOMINATION, budget)
    i_h = _value(H.graph, PK.INDEPENDENT_DOMINATION, budget)
    alpha_g = _value(G, PK.INDEPENDENCE, budget)
    h_minus_root = delete_vertices(H.graph, {H.root}).graph
    i_h_del = _value(h_minus_root, PK.INDEPENDENT_DOMINATION, budget)
    product = rooted_product(G, H).product
    i_gh = _value(product, PK.INDEPENDENT_DOMINATION, budget)
    lower = G.n * (i_h - 1) + i_g
    upper = i_h * alpha_g + i_h_del * (G.n - alpha_g)
    values = {
        "i_g": i_g,
        "i_h": i_h,
        "alpha_g": alpha_g,
        "i_h_minus_root": i_h_del,
        "i_product": i_gh,
        "lower": lower,
        "upper": upper,
    }
    return True, lower <= i_gh <= upper, values


def _check_I7(G, H, budget):
    cls = classify_root(H, PK.INDEPENDENT_DOMINATION, budget=budget)
    values = {"root_membership": cls.membership.value}
    if cls.membership is Membership.IN_SOME:
        return False, None, values
    i_h = _value(H.graph, PK.INDEPENDENT_DOMINATION, budget)
    product = rooted_product(G, H).product
    i_gh = _value(product, PK.INDEPENDENT_DOMINATION, budget)
    values.update({"i_h": i_h, "i_product": i_gh})
    if cls.membership is Membership.IN_NONE:
        expected = G.n * i_h
        values.update({"branch": "root-in-no-set", "expected": expected})
        return True, i_gh == expected, values

    alpha_g = _value(G, PK.INDEPENDENCE, budget)
    i_sets = enumerate_optimal(H.graph, PK.INDEPENDENT_DOMINATION, budget=budget)
    open_sizes = [
        len(private_neighbor_set(H.graph, s, H.root)) for s in i_sets
    ]
    closed_sizes = [
        len(private_neighbor_set(H.graph, s, H.root, closed_subtrahend=True))
        for s in i_sets
    ]

    def bound(pn: int) -> int:
        return alpha_g * i_h + (G.n - alpha_g) * (pn + i_h - 1)

    values.update(
        {
            "branch": "root-in-every-set",
            "alpha_g": alpha_g,
            "bound_min": bound(min(open_sizes)),
            "bound_max": bound(max(open_sizes)),
            "bound_min_closed_variant": bound(min(closed_sizes)),
            "bound_max_closed_variant": bound(max(closed_sizes)),
        }
    )
    # Gate on the tightest reading of the stated bound (min over all
    # minimum independent dominating sets); the other readings are recorded.
    return True, i_gh <= values["bound_min"], values


def _two_value_check(G, H, budget, kind: PK, offsets: tuple[str, str]):
    param_h = _value(H.graph, kind, budget)
    product = rooted_product(G, H).product
    param_gh = _value(product, kind, budget)
    if offsets == ("n*h", "n*(h+1)"):
        allowed = {G.n * param_h, G.n * (param_h + 1)}
    else:
        param_g = _value(G, kind, budget)
        allowed = {G.n * param_h, G.n * param_h + param_g}
    values = {
        f"{kind.value}_h": param_h,
        f"{kind.value}_product": param_gh,
        "allowed": sorted(allowed),
    }
    return True, param_gh in allowed, values


def _check_C1(G, H, budget):
    return _two_value_check(G, H, budget, PK.CONNECTED, ("n*h", "n*(h+1)"))


def _check_X1(G, H, budget):
    return _two_value_check(G, H, budget, PK.CONVEX, ("n*h", "n*(h+1)"))


def _check_W1(G, H, budget):
    return _two_value_check(G, H, budget, PK.WEAKLY_CONNECTED, ("n*h", "n*h+g"))


def _check_C2(G, H, budget):
    if not (is_tree(G) and G.n >= 3):
        return False, None, {"reason": "needs a tree of order >= 3"}
    n1 = len(leaves(G))
    value = _value(G, PK.CONNECTED, budget)
    values = {"connected": value, "n": G.n, "leaf_count": n1, "expected": G.n - n1}
    return True, value == G.n - n1, values


def _tree_pair_applicable(G, H) -> bool:
    return is_tree(G) and G.n >= 3 and is_tree(H.graph) and H.graph.n >= 3


def _check_C3(G, H, budget):
    if not _tree_pair_applicable(G, H):
        return False, None, {"reason": "needs two trees of order >= 3"}
    product = rooted_product(G, H).product
    root_is_leaf = H.root in leaves(H.graph)
    n1_h = len(leaves(H.graph))
    expected_leaves = G.n * (n1_h - 1) if root_is_leaf else G.n * n1_h
    values = {
        "product_is_tree": is_tree(product),
        "product_order": product.n,
        "expected_order": G.n * H.graph.n,
        "product_leaves": len(leaves(product)),
        "expected_leaves": expected_leaves,
        "root_is_leaf": root_is_leaf,
    }
    ok = (
        values["product_is_tree"]
        and values["product_order"] == values["expected_order"]
        and values["product_leaves"] == expected_leaves
    )
    return True, ok, values


def _iff_tree_check(G, H, budget, kind: PK):
    if not _tree_pair_applicable(G, H):
        return False, None, {"reason": "needs two trees of order >= 3"}
    param_h = _value(H.graph, kind, budget)
    product = rooted_product(G, H).product
    param_gh = _value(product, kind, budget)
    root_is_leaf = H.root in leaves(H.graph)
    eq_plain = param_gh == G.n * param_h
    eq_plus = param_gh == G.n * (param_h + 1)
    values = {
        f"{kind.value}_h": param_h,
        f"{kind.value}_product": param_gh,
        "root_is_leaf": root_is_leaf,
        "matches_plain_form": eq_plain,
        "matches_plus_one_form": eq_plus,
    }
    ok = (eq_plain == (not root_is_leaf)) and (eq_plus == root_is_leaf)
    return True, ok, values


def _check_C4(G, H, budget):
    return _iff_tree_check(G, H, budget, PK.CONNECTED)


def _check_X2(G, H, budget):
    return _iff_tree_check(G, H, budget, PK.CONVEX)


def _check_W2(G, H, budget):
    if not (is_tree(G) and G.n >= 3):
        return False, None, {"reason": "needs a tree of order >= 3"}
    n1 = len(leaves(G))
    value = _value(G, PK.WEAKLY_CONNECTED, budget)
    values = {"weakly": value, "n": G.n, "leaf_count": n1}
    ok = (2 * value >= G.n - n1 + 1) and (value <= G.n - n1)
    return True, ok, values


def _check_W3(G, H, budget):
    if not (is_tree(G) and is_tree(H.graph)):
        return False, None, {"reason": "needs two trees"}
    if H.root in leaves(H.graph):
        return False, None, {"reason": "root must not be an end vertex"}
    w_h = _value(H.graph, PK.WEAKLY_CONNECTED, budget)
    product = rooted_product(G, H).product
    w_gh = _value(product, PK.WEAKLY_CONNECTED, budget)
    n1_g = len(leaves(G))
    # First claimed bound pair (leaf-count coefficients), second (order
    # coefficients); both are evaluated exactly as stated.
    a_lower = 2 * w_gh >= n1_g * w_h + 1
    a_upper = w_gh <= n1_g * (2 * w_h - 1)
    b_lower = 2 * w_gh >= w_h * G.n + 1
    b_upper = w_gh <= 2 * G.n * w_h
    values = {
        "weakly_h": w_h,
        "weakly_product": w_gh,
        "leaf_count_g": n1_g,
        "n_g": G.n,
        "leaf_coefficient_lower_holds": a_lower,
        "leaf_coefficient_upper_holds": a_upper,
        "order_coefficient_lower_holds": b_lower,
        "order_coefficient_upper_holds": b_upper,
    }
    return True, a_lower and a_upper and b_lower and b_upper, values


def _check_S1(G, H, budget):
    sp_h = _value(H.graph, PK.SUPER, budget)
    product = rooted_product(G, H).product
    sp_gh = _value(product, PK.SUPER, budget)
    expected = G.n * sp_h
    values = {"super_h": sp_h, "super_product": sp_gh, "expected": expected}
    return True, sp_gh == expected, values


def _check_S2(G, H, budget):
    if not (is_tree(G) and G.n >= 3):
        return False, None, {"reason": "needs a tree of order >= 3"}
    value = _value(G, PK.SUPER, budget)
    s = len(support_vertices(G))
    values = {"super": value, "n": G.n, "support_count": s}
    ok = (2 * value >= G.n) and (value <= G.n - s)
    return True, ok, values


def _check_S3(G, H, budget):
    if not _tree_pair_applicable(G, H):
        return False, None, {"reason": "needs two trees of order >= 3"}
    s_h = len(support_vertices(H.graph))
    product = rooted_product(G, H).product
    sp_gh = _value(product, PK.SUPER, budget)
    lower = G.n * s_h
    upper = G.n * (H.graph.n - s_h)
    values = {
        "support_count_h": s_h,
        "super_product": sp_gh,
        "lower": lower,
        "upper": upper,
    }
    return True, lower <= sp_gh <= upper, values


_PRODUCT_CHECKERS = {
    TheoremId.D1: _check_D1,
    TheoremId.D2: _check_D2,
    TheoremId.R1: _check_R1,
    TheoremId.R4: _check_R4,
    TheoremId.R5: _check_R5,
    TheoremId.R6: _check_R6,
    TheoremId.I2: _check_I2,
    TheoremId.I5: _check_I5,
    TheoremId.I7: _check_I7,
    TheoremId.C1: _check_C1,
    TheoremId.C3: _check_C3,
    TheoremId.C4: _check_C4,
    TheoremId.X1: _check_X1,
    TheoremId.X2: _check_X2,
    TheoremId.W1: _check_W1,
    TheoremId.W3: _check_W3,
    TheoremId.S1: _check_S1,
    TheoremId.S3: _check_S3,
}

_SINGLE_CHECKERS = {
    TheoremId.R2: _check_R2,
    TheoremId.R3: _check_R3,
    TheoremId.I1: _check_I1,
    TheoremId.I3: _check_I3,
    TheoremId.I4: _check_I4,
    TheoremId.C2: _check_C2,
    TheoremId.W2: _check_W2,
    TheoremId.S2: _check_S2,
}

#: Default product-order cap; the tree-pair theorems may go higher because
#: their large instances are trees handled by the exact tree DP.
DEFAULT_PRODUCT_CAP = 20
TREE_PAIR_PRODUCT_CAP = 40
_TREE_PAIR_THEOREMS = {TheoremId.C3, TheoremId.C4, TheoremId.X2}


def check(
    theorem: TheoremId,
    G: Graph | None = None,
    H: RootedGraph | None = None,
    *,
    budget: SolveBudget | None = None,
    product_cap: int | None = None,
    instance: dict | None = None,
) -> TheoremVerdict:
    """Evaluate one theorem on one instance and return the verdict."""
    budget = budget or solvers.default_budget()
    if theorem is TheoremId.I6:
        raise ValueError("the closed-form theorem is checked via closed_form_check(family, n, m)")
    descriptor = dict(instance or {})
    if G is not None:
        descriptor.setdefault("g_order", G.n)
    if H is not None:
        descriptor.setdefault("h_order", H.graph.n)
        descriptor.setdefault("root", H.root)

    if theorem in _PRODUCT_CHECKERS:
        if G is None or H is None:
            raise ValueError(f"theorem {theorem.value} needs a base graph and a rooted graph")
        cap = product_cap
        if cap is None:
            cap = TREE_PAIR_PRODUCT_CAP if theorem in _TREE_PAIR_THEOREMS else DEFAULT_PRODUCT_CAP
        if G.n * H.graph.n > cap:
            raise BudgetExceededError(
                f"product order {G.n * H.graph.n} exceeds the cap {cap}"
            )
        checker = _PRODUCT_CHECKERS[theorem]
    else:
        if G is None:
            raise ValueError(f"theorem {theorem.value} needs a graph")
        checker = _SINGLE_CHECKERS[theorem]

    try:
        applicable, ok, values = checker(G, H, budget)
    except InfeasibleParameterError as exc:
        return TheoremVerdict(
            theorem, descriptor, applicable=False, outcome=Outcome.INFEASIBLE,
            values={"reason": str(exc)},
        )
    if not applicable:
        return TheoremVerdict(theorem, descriptor, False, Outcome.NOT_APPLICABLE, values)
    outcome = Outcome.PASS if ok else Outcome.FAIL
    witness = None
    if outcome is Outcome.FAIL:
        witness = _witness_payload(theorem, G, H, values)
    return TheoremVerdict(theorem, descriptor, True, outcome, values, witness)


def closed_form_check(
    family: str, n: int, m: int, *, budget: SolveBudget | None = None
) -> TheoremVerdict:
    """Exact check of the two independent-domination closed forms.

    ``caterpillar``: path (order n) composed with a star (m leaves) rooted at
    the center -> ``m*n - ceil(n/2)*(m-1)``.
    ``subdivided-star-product``: path composed with a subdivided star rooted
    at the vertex at distance two from the center -> ``n + ceil(n/3)``.
    """
    budget = budget or solvers.default_budget()
    if n < 2 or m < 2:
        raise ValueError("closed forms need n >= 2 and m >= 2")
    base = path_graph(n)
    if family == "caterpillar":
        rooted = star_graph(m)
        expected = m * n - _ceil_div(n, 2) * (m - 1)
    elif family == "subdivided-star-product":
        rooted = subdivided_star_graph(m)
        expected = n + _ceil_div(n, 3)
    else:
        raise ValueError(f"unknown closed form family {family!r}")
    product = rooted_product(base, rooted).product
    i_value = solve(product, PK.INDEPENDENT_DOMINATION, budget=budget).value
    values = {"i_product": i_value, "expected": expected, "product_order": product.n}
    descriptor = {"family": family, "n": n, "m": m}
    ok = i_value == expected
    witness = None
    if not ok:
        witness = {"theorem": TheoremId.I6.value, "closed_form": descriptor, "values": values}
    return TheoremVerdict(
        TheoremId.I6, descriptor, True,
        Outcome.PASS if ok else Outcome.FAIL, values, witness,
    )


def check_witness(payload: dict, *, budget: SolveBudget | None = None) -> TheoremVerdict:
    """Re-run the check recorded in a witness payload."""
    theorem = TheoremId(payload["theorem"])
    if theorem is TheoremId.I6:
        cf = payload["closed_form"]
        return closed_form_check(cf["family"], cf["n"], cf["m"], budget=budget)
    G = None
    H = None
    if "g" in payload:
        G = Graph(payload["g"]["n"], [tuple(e) for e in payload["g"]["edges"]])
    if "h" in payload:
        H = RootedGraph(
            Graph(payload["h"]["n"], [tuple(e) for e in payload["h"]["edges"]]),
            payload["root"],
        )
    return check(theorem, G, H, budget=budget, product_cap=1 << 30)


# -- campaign ----------------------------------------------------------------


@dataclass
class CampaignConfig:
    theorems: list[TheoremId] = field(default_factory=lambda: list(TheoremId))
    trials: int = 200
    seed: int = 42
    max_g: int = 5
    max_h: int = 4
    product_cap: int = DEFAULT_PRODUCT_CAP
    deletion_n: int = 8
    tree_min: int = 3
    tree_max: int = 6
    tree_single_max: int = 10
    tree_product_cap: int = TREE_PAIR_PRODUCT_CAP

    @classmethod
    def from_dict(cls, raw: dict) -> "CampaignConfig":
        kwargs = dict(raw)
        if "theorems" in kwargs:
            kwargs["theorems"] = [TheoremId(t) for t in kwargs["theorems"]]
        unknown = set(kwargs) - {f for f in cls.__dataclass_fields__}
        if unknown:
            raise ValueError(f"unknown campaign config keys: {sorted(unknown)}")
        return cls(**kwargs)

    def to_dict(self) -> dict:
        out = {
            "theorems": [t.value for t in self.theorems],
            "trials": self.trials,
            "seed": self.seed,
            "max_g": self.max_g,
            "max_h": self.max_h,
            "product_cap": self.product_cap,
            "deletion_n": self.deletion_n,
            "tree_min": self.tree_min,
            "tree_max": self.tree_max,
            "tree_single_max": self.tree_single_max,
            "tree_product_cap": self.tree_product_cap,
        }
        return out


_BASE_FAMILIES = ("path", "cycle", "complete", "star", "random-tree", "random-connected")


def _sample_factor(rng: random.Random, max_n: int) -> tuple[Graph, dict]:
    """One connected factor graph of order 2..max_n plus its descriptor."""
    while True:
        family = rng.choice(_BASE_FAMILIES)
        if family == "path":
            n = rng.randint(2, max_n)
            return path_graph(n), {"family": family, "n": n}
        if family == "cycle":
            if max_n < 3:
                continue
            n = rng.randint(3, max_n)
            return generate(FamilySpec(Family.CYCLE, n=n)), {"family": family, "n": n}
        if family == "complete":
            n = rng.randint(2, max_n)
            return generate(FamilySpec(Family.COMPLETE, n=n)), {"family": family, "n": n}
        if family == "star":
            if max_n < 3:
                continue
            m = rng.randint(2, max_n - 1)
            return star_graph(m).graph, {"family": family, "m": m}
        if family == "random-tree":
            n = rng.randint(2, max_n)
            seed = rng.randrange(1 << 48)
            return random_tree(n, seed), {"family": family, "n": n, "seed": seed}
        n = rng.randint(2, max_n)
        seed = rng.randrange(1 << 48)
        p = rng.choice((0.3, 0.5, 0.8))
        graph = generate(FamilySpec(Family.RANDOM_CONNECTED, n=n, p=p, seed=seed))
        return graph, {"family": family, "n": n, "p": p, "seed": seed}


def _special_roman_factors(max_h: int) -> list[tuple[Graph, int, dict]]:
    """Rooted factors guaranteeing coverage of every Roman root-label branch."""
    specials: list[tuple[Graph, int, dict]] = []
    k2 = path_graph(2)
    specials.append((k2, 0, {"family": "path", "n": 2, "root": 0}))
    p3 = path_graph(3)
    specials.append((p3, 0, {"family": "path", "n": 3, "root": 0}))
    specials.append((p3, 1, {"family": "path", "n": 3, "root": 1}))
    if max_h >= 3:
        star2 = star_graph(2)
        specials.append((star2.graph, 0, {"family": "star", "m": 2, "root": 0}))
        specials.append((star2.graph, 1, {"family": "star", "m": 2, "root": 1}))
    if max_h >= 4:
        star3 = star_graph(3)
        specials.append((star3.graph, 0, {"family": "star", "m": 3, "root": 0}))
        specials.append((star3.graph, 1, {"family": "star", "m": 3, "root": 1}))
        sub2 = subdivided_star_graph(2)
        specials.append((sub2.graph, sub2.root, {"family": "subdivided-star", "m": 2, "root": sub2.root}))
    if max_h >= 5:
        sub3 = subdivided_star_graph(3)
        specials.append((sub3.graph, sub3.root, {"family": "subdivided-star", "m": 3, "root": sub3.root}))
    for k in (2, 3):
        if k <= max_h:
            specials.append(
                (generate(FamilySpec(Family.EMPTY, n=k)), 0, {"family": "empty", "n": k, "root": 0})
            )
    return specials


def _product_instance(
    rng: random.Random, config: CampaignConfig, theorem: TheoremId
) -> tuple[Graph, RootedGraph, dict]:
    specials = None
    max_h = config.max_h
    if theorem in (TheoremId.R4, TheoremId.R5, TheoremId.R6):
        max_h = max(config.max_h, 5)
        specials = _special_roman_factors(max_h)
    if theorem is TheoremId.I7:
        specials = [
            (star_graph(2).graph, 0, {"family": "star", "m": 2, "root": 0}),
            (star_graph(2).graph, 1, {"family": "star", "m": 2, "root": 1}),
            (star_graph(3).graph, 0, {"family": "star", "m": 3, "root": 0}),
            (star_graph(3).graph, 1, {"family": "star", "m": 3, "root": 1}),
            (subdivided_star_graph(2).graph, 3, {"family": "subdivided-star", "m": 2, "root": 3}),
        ]
    for _ in range(200):
        g, g_desc = _sample_factor(rng, config.max_g)
        if specials is not None and rng.random() < 0.5:
            h_graph, root, h_desc = specials[rng.randrange(len(specials))]
        else:
            h_graph, h_desc = _sample_factor(rng, max_h)
            root = rng.randrange(h_graph.n)
            h_desc = dict(h_desc)
            h_desc["root"] = root
        if g.n * h_graph.n <= config.product_cap:
            return g, RootedGraph(h_graph, root), {"g": g_desc, "h": h_desc}
    raise RuntimeError("could not sample a product instance under the cap")


def _gnp_instance(rng: random.Random, config: CampaignConfig) -> tuple[Graph, dict]:
    n = rng.randint(2, config.deletion_n)
    p = rng.choice((0.3, 0.5, 0.7))
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges), {"family": "gnp", "n": n, "p": p}


class _TreePairStream:
    """Deterministic stream of (T1, rooted T2) covering every root per pair."""

    def __init__(self, rng: random.Random, config: CampaignConfig, cap: int):
        self.rng = rng
        self.config = config
        self.cap = cap
        self.queue: list[tuple[Graph, RootedGraph, dict]] = []

    def next(self) -> tuple[Graph, RootedGraph, dict]:
        while not self.queue:
            cfg = self.config
            n1 = self.rng.randint(cfg.tree_min, cfg.tree_max)
            n2 = self.rng.randint(cfg.tree_min, cfg.tree_max)
            if n1 * n2 > self.cap:
                continue
            seed1 = self.rng.randrange(1 << 48)
            seed2 = self.rng.randrange(1 << 48)
            t1 = random_tree(n1, seed1)
            t2 = random_tree(n2, seed2)
            for root in range(n2):
                self.queue.append(
                    (
                        t1,
                        RootedGraph(t2, root),
                        {
                            "g": {"family": "random-tree", "n": n1, "seed": seed1},
                            "h": {"family": "random-tree", "n": n2, "seed": seed2, "root": root},
                        },
                    )
                )
        return self.queue.pop(0)


_THEOREM_SHAPE: dict[TheoremId, str] = {}
for _t in _PRODUCT_CHECKERS:
    _THEOREM_SHAPE[_t] = "product"
for _t in _SINGLE_CHECKERS:
    _THEOREM_SHAPE[_t] = "single"
for _t in (TheoremId.C2, TheoremId.W2, TheoremId.S2):
    _THEOREM_SHAPE[_t] = "tree-single"
for _t in (TheoremId.C3, TheoremId.C4, TheoremId.X2):
    _THEOREM_SHAPE[_t] = "tree-pair-dp"
for _t in (TheoremId.W3, TheoremId.S3):
    _THEOREM_SHAPE[_t] = "tree-pair-scan"
_THEOREM_SHAPE[TheoremId.I6] = "grid"


def run_theorem(
    theorem: TheoremId, config: CampaignConfig, *, budget: SolveBudget | None = None
) -> dict:
    """All trials for one theorem; deterministic given the config."""
    budget = budget or solvers.default_budget()
    shape = _THEOREM_SHAPE[theorem]
    theorem_seed = child_seed(config.seed, list(TheoremId).index(theorem))
    counts = {o: 0 for o in Outcome}
    errors = 0
    failures: list[dict] = []
    verdicts = 0

    if shape == "grid":
        jobs = [
            (family, n, m)
            for family in ("caterpillar", "subdivided-star-product")
            for n in range(2, 7)
            for m in range(2, 5)
        ]
        for family, n, m in jobs:
            verdict = closed_form_check(family, n, m, budget=budget)
            counts[verdict.outcome] += 1
            verdicts += 1
            if verdict.outcome is Outcome.FAIL:
                failures.append(verdict.to_json())
        return _theorem_report(theorem, verdicts, counts, errors, failures)

    tree_stream = None
    if shape == "tree-pair-dp":
        tree_stream = _TreePairStream(
            random.Random(child_seed(theorem_seed, 0)), config, config.tree_product_cap
        )
    elif shape == "tree-pair-scan":
        tree_stream = _TreePairStream(
            random.Random(child_seed(theorem_seed, 0)), config, config.product_cap
        )

    for trial in range(config.trials):
        rng = random.Random(child_seed(theorem_seed, trial + 1))
        try:
            if shape == "product":
                G, H, desc = _product_instance(rng, config, theorem)
                verdict = check(theorem, G, H, budget=budget,
                                product_cap=config.product_cap, instance=desc)
            elif shape == "single":
                G, desc = _gnp_instance(rng, config)
                verdict = check(theorem, G, budget=budget, instance=desc)
            elif shape == "tree-single":
                n = rng.randint(max(3, config.tree_min), config.tree_single_max)
                seed = rng.randrange(1 << 48)
                G = random_tree(n, seed)
                desc = {"family": "random-tree", "n": n, "seed": seed}
                verdict = check(theorem, G, budget=budget, instance=desc)
            else:
                G, H, desc = tree_stream.next()
                cap = config.tree_product_cap if shape == "tree-pair-dp" else config.product_cap
                verdict = check(theorem, G, H, budget=budget, product_cap=cap, instance=desc)
        except BudgetExceededError:
            errors += 1
            continue
        counts[verdict.outcome] += 1
        verdicts += 1
        if verdict.outcome is Outcome.FAIL:
            failures.append(verdict.to_json())
    return _theorem_report(theorem, verdicts, counts, errors, failures)


def _theorem_report(theorem, verdicts, counts, errors, failures) -> dict:
    return {
        "theorem": theorem.value,
        "trials": verdicts,
        "pass": counts[Outcome.PASS],
        "fail": counts[Outcome.FAIL],
        "not_applicable": counts[Outcome.NOT_APPLICABLE],
        "infeasible": counts[Outcome.INFEASIBLE],
        "errors": errors,
        "must_hold": theorem in MUST_HOLD,
        "failures": failures,
    }


def _run_theorem_job(args: tuple[dict, str]) -> dict:
    raw_config, theorem_value = args
    return run_theorem(TheoremId(theorem_value), CampaignConfig.from_dict(raw_config))


def run_campaign(config: CampaignConfig, *, jobs: int = 1) -> dict:
    """Run every configured theorem; deterministic given the config seed."""
    ordered = [t for t in TheoremId if t in set(config.theorems)]
    if jobs > 1 and len(ordered) > 1:
        from concurrent.futures import ProcessPoolExecutor

        payload = [(config.to_dict(), t.value) for t in ordered]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_theorem_job, payload))
    else:
        results = [run_theorem(t, config) for t in ordered]
    must_hold_failures = sum(r["fail"] for r in results if r["must_hold"])
    return {
        "config": config.to_dict(),
        "results": results,
        "must_hold_failures": must_hold_failures,
    }
