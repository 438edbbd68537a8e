import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_gnp
from rootdom.families import (
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    random_connected_graph,
    random_tree,
    star_graph,
    subdivided_star_graph,
)
from rootdom.graph import Graph, is_connected, is_connected_subset, is_convex_set
from rootdom.naive import naive_value
from rootdom.product import RootedGraph, rooted_product
from rootdom.solvers import (
    BudgetExceededError,
    EnumerationCapError,
    InfeasibleParameterError,
    Membership,
    ParameterKind,
    RomanAssignment,
    SolveBudget,
    classify_root,
    enumerate_optimal,
    is_dominating,
    is_independent,
    is_super_dominating,
    minimum_set,
    solve,
)

PK = ParameterKind


class TestPredicates:
    def test_dominating(self):
        c3 = cycle_graph(3)
        assert is_dominating(c3, {1})
        p4 = path_graph(4)
        assert is_dominating(p4, {0, 3})
        assert not is_dominating(p4, {0})

    def test_independent(self):
        assert is_independent(cycle_graph(6), {0, 2, 4})
        assert not is_independent(path_graph(4), {1, 2})
        assert is_independent(path_graph(4), set())

    def test_super(self):
        p4 = path_graph(4)
        assert is_super_dominating(p4, {1, 2})
        k4 = complete_graph(4)
        assert not is_super_dominating(k4, {0, 1})
        assert is_super_dominating(k4, {0, 1, 2, 3})


class TestNamedValues:
    def test_domination(self):
        res = solve(path_graph(4), PK.DOMINATION)
        assert res.value == 2
        assert res.witness == {0, 2}  # lexicographically first optimum

    def test_independence(self):
        res = solve(cycle_graph(6), PK.INDEPENDENCE)
        assert res.value == 3 and res.witness == {0, 2, 4}

    def test_star_values(self):
        g = star_graph(4).graph
        assert solve(g, PK.INDEPENDENCE).value == 4
        assert solve(g, PK.INDEPENDENT_DOMINATION).value == 1

    def test_connected(self):
        res = solve(path_graph(4), PK.CONNECTED)
        assert res.value == 2 and res.witness == {1, 2}
        assert solve(path_graph(6), PK.CONNECTED).value == 4

    def test_convex(self):
        assert solve(cycle_graph(6), PK.CONVEX).value == 6
        assert solve(path_graph(6), PK.CONVEX).value == 4

    def test_weakly(self):
        res = solve(path_graph(6), PK.WEAKLY_CONNECTED)
        assert res.value == 3 and res.witness == {0, 2, 4}

    def test_super(self):
        assert solve(path_graph(4), PK.SUPER).value == 2
        assert solve(path_graph(6), PK.SUPER).value == 3
        for n in (3, 4, 5):
            assert solve(complete_graph(n), PK.SUPER).value == n - 1

    def test_roman(self):
        for n in (2, 3, 5):
            assert solve(complete_graph(n), PK.ROMAN).value == 2
        res = solve(path_graph(4), PK.ROMAN)
        assert res.value == 3
        assert res.witness == RomanAssignment(b1=frozenset({3}), b2=frozenset({1}))

    def test_roman_comb(self):
        comb = rooted_product(path_graph(4), RootedGraph(path_graph(2), 0)).product
        assert solve(comb, PK.ROMAN).value == 6

    def test_empty_graph_values(self):
        e3 = empty_graph(3)
        assert solve(e3, PK.DOMINATION).value == 3
        assert solve(e3, PK.ROMAN).value == 3
        assert solve(e3, PK.SUPER).value == 3


class TestInfeasibility:
    def test_disconnected_hosts(self):
        two_k2 = Graph(4, [(0, 1), (2, 3)])
        for kind in (PK.CONNECTED, PK.CONVEX, PK.WEAKLY_CONNECTED):
            with pytest.raises(InfeasibleParameterError):
                solve(two_k2, kind)

    def test_disconnected_fine_for_others(self):
        two_k2 = Graph(4, [(0, 1), (2, 3)])
        assert solve(two_k2, PK.DOMINATION).value == 2
        assert solve(two_k2, PK.SUPER).value == 2


class TestGenericEngine:
    def test_min_dominating(self):
        res = minimum_set(path_graph(4), is_dominating, "min")
        assert res.value == 2 and res.witness == {0, 2}

    def test_max_independent(self):
        res = minimum_set(cycle_graph(6), is_independent, "max")
        assert res.value == 3 and res.witness == {0, 2, 4}

    def test_infeasible_predicate(self):
        never = lambda g, s: False
        with pytest.raises(InfeasibleParameterError):
            minimum_set(path_graph(3), never, "min")

    def test_composite_predicate_matches_kind(self):
        pred = lambda g, s: bool(s) and is_dominating(g, s) and is_connected_subset(g, s)
        g = random_connected_graph(7, 0.4, seed=2)
        assert minimum_set(g, pred, "min").value == solve(g, PK.CONNECTED).value


class TestEnumeration:
    def test_triangle_domination(self):
        sets = enumerate_optimal(cycle_graph(3), PK.DOMINATION)
        assert sets == [frozenset({0}), frozenset({1}), frozenset({2})]

    def test_star_unique_ids(self):
        sets = enumerate_optimal(star_graph(3).graph, PK.INDEPENDENT_DOMINATION)
        assert sets == [frozenset({0})]

    def test_p3_roman_unique(self):
        fns = enumerate_optimal(path_graph(3), PK.ROMAN)
        assert fns == [RomanAssignment(b1=frozenset(), b2=frozenset({1}))]

    def test_c3_roman_three(self):
        fns = enumerate_optimal(cycle_graph(3), PK.ROMAN)
        assert [sorted(f.b2) for f in fns] == [[0], [1], [2]]

    def test_enumeration_cap(self):
        with pytest.raises(EnumerationCapError) as info:
            enumerate_optimal(
                complete_graph(5), PK.DOMINATION, budget=SolveBudget(enumeration_cap=2)
            )
        assert info.value.partial_count == 3

    def test_forced_ones_structure(self):
        for seed in range(10):
            g = random_gnp(7, 0.4, seed=seed)
            for fn in enumerate_optimal(g, PK.ROMAN):
                assert fn.is_valid(g)
                covered = set()
                for v in fn.b2:
                    covered |= g.closed_neighborhood(v)
                assert fn.b1 == frozenset(range(g.n)) - covered


class TestRootClassification:
    def test_triangle_in_some(self):
        cls = classify_root(RootedGraph(cycle_graph(3), 0), PK.DOMINATION)
        assert cls.membership is Membership.IN_SOME

    def test_star_center_in_all(self):
        cls = classify_root(star_graph(3), PK.INDEPENDENT_DOMINATION)
        assert cls.membership is Membership.IN_ALL

    def test_roman_label_sets(self):
        end_of_p3 = RootedGraph(path_graph(3), 0)
        assert classify_root(end_of_p3, PK.ROMAN).roman_values == {0}
        k2 = RootedGraph(path_graph(2), 0)
        assert classify_root(k2, PK.ROMAN).roman_values == {0, 1, 2}
        center = star_graph(3)
        assert classify_root(center, PK.ROMAN).roman_values == {2}
        sub3 = subdivided_star_graph(3)
        assert classify_root(sub3, PK.ROMAN).roman_values == {1}

    def test_star_leaf_not_in_i_sets(self):
        leaf_root = RootedGraph(star_graph(3).graph, 1)
        assert classify_root(leaf_root, PK.INDEPENDENT_DOMINATION).membership is Membership.IN_NONE


class TestBudgets:
    def test_budget_error_names_cap(self):
        with pytest.raises(BudgetExceededError, match="n <= 4"):
            solve(path_graph(6), PK.DOMINATION, budget=SolveBudget(max_scan_n=4))

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("ROOTDOM_BUDGET", "3")
        with pytest.raises(BudgetExceededError):
            solve(path_graph(5), PK.DOMINATION)
        monkeypatch.setenv("ROOTDOM_BUDGET", "10")
        assert solve(path_graph(5), PK.DOMINATION).value == 2

    def test_tree_fallback_past_budget(self):
        t = random_tree(12, seed=4)
        small = SolveBudget(max_scan_n=8)
        from rootdom.graph import leaves

        res = solve(t, PK.CONNECTED, budget=small)
        assert res.value == 12 - len(leaves(t))
        assert solve(t, PK.CONVEX, budget=small).value == res.value
        i_res = solve(t, PK.INDEPENDENT_DOMINATION, budget=small)
        assert i_res.value == solve(t, PK.INDEPENDENT_DOMINATION).value
        with pytest.raises(BudgetExceededError):
            solve(t, PK.DOMINATION, budget=small)

    def test_non_tree_past_budget(self):
        g = cycle_graph(9)
        with pytest.raises(BudgetExceededError):
            solve(g, PK.CONNECTED, budget=SolveBudget(max_scan_n=5))


class TestTreeDP:
    def test_matches_scan_on_random_trees(self):
        from rootdom.tree_dp import tree_connected_domination, tree_independent_domination

        for trial in range(40):
            t = random_tree(2 + trial % 11, seed=500 + trial)
            vi, wi = tree_independent_domination(t)
            assert vi == solve(t, PK.INDEPENDENT_DOMINATION).value
            assert is_dominating(t, wi) and is_independent(t, wi)
            vc, wc = tree_connected_domination(t)
            assert vc == solve(t, PK.CONNECTED).value
            assert is_dominating(t, wc) and is_connected_subset(t, wc)
            assert vc == solve(t, PK.CONVEX).value

    def test_rejects_non_trees(self):
        from rootdom.tree_dp import tree_connected_domination

        with pytest.raises(ValueError):
            tree_connected_domination(cycle_graph(4))


class TestWitnessValidity:
    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=2, max_value=7), st.integers(min_value=0, max_value=10_000))
    def test_witnesses_satisfy_their_predicates(self, n, seed):
        g = random_gnp(n, 0.5, seed=seed)
        res = solve(g, PK.DOMINATION)
        assert is_dominating(g, res.witness) and len(res.witness) == res.value
        res = solve(g, PK.INDEPENDENCE)
        assert is_independent(g, res.witness)
        res = solve(g, PK.INDEPENDENT_DOMINATION)
        assert is_dominating(g, res.witness) and is_independent(g, res.witness)
        res = solve(g, PK.SUPER)
        assert is_super_dominating(g, res.witness)
        fn = solve(g, PK.ROMAN).witness
        assert fn.is_valid(g) and fn.weight == solve(g, PK.ROMAN).value
        if is_connected(g):
            res = solve(g, PK.CONNECTED)
            assert is_dominating(g, res.witness) and is_connected_subset(g, res.witness)
            res = solve(g, PK.CONVEX)
            assert is_dominating(g, res.witness) and is_convex_set(g, res.witness)


class TestInvariantChains:
    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=1, max_value=7), st.integers(min_value=0, max_value=10_000))
    def test_parameter_chains(self, n, seed):
        g = random_gnp(n, 0.45, seed=seed)
        gamma = solve(g, PK.DOMINATION).value
        assert solve(g, PK.INDEPENDENT_DOMINATION).value >= gamma
        roman = solve(g, PK.ROMAN).value
        assert gamma <= roman <= 2 * gamma
        if is_connected(g):
            gc = solve(g, PK.CONNECTED).value
            assert gamma <= gc <= solve(g, PK.CONVEX).value
            assert solve(g, PK.WEAKLY_CONNECTED).value <= gc


class TestOracleAgreement:
    @settings(max_examples=25, deadline=None)
    @given(st.integers(min_value=1, max_value=7), st.integers(min_value=0, max_value=10_000))
    def test_matches_naive(self, n, seed):
        g = random_gnp(n, 0.5, seed=seed)
        for kind in PK:
            expected = naive_value(g, kind.value)
            try:
                got = solve(g, kind).value
            except InfeasibleParameterError:
                got = None
            assert got == expected, kind
