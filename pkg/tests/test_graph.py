import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import min_plus_distances, random_gnp
from rootdom.families import cycle_graph, path_graph, star_graph
from rootdom.graph import (
    Graph,
    UNREACHABLE,
    delete_vertices,
    format_edge_list,
    is_connected,
    is_connected_subset,
    is_convex_set,
    is_tree,
    leaves,
    parse_edge_list,
    private_neighbor_set,
    support_vertices,
    weakly_induced_subgraph,
)


@st.composite
def small_graphs(draw, max_n=7):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    picks = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)) if pairs else st.just([]))
    return Graph(n, picks)


class TestConstruction:
    def test_path(self):
        g = Graph.from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
        assert (g.n, g.m) == (4, 3)
        assert g.degree(0) == 1 and g.degree(1) == 2

    def test_triangle_degrees(self):
        g = Graph.from_edge_list(3, [(0, 1), (1, 2), (2, 0)])
        assert all(g.degree(v) == 2 for v in g.vertices)

    def test_duplicate_edges_merge(self):
        g = Graph.from_edge_list(2, [(0, 1), (1, 0)])
        assert g.m == 1

    def test_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            Graph.from_edge_list(3, [(0, 3)])

    def test_loop_rejected(self):
        with pytest.raises(ValueError, match="loop"):
            Graph.from_edge_list(3, [(1, 1)])

    def test_degree_sum(self):
        g = random_gnp(7, 0.5, seed=3)
        assert sum(g.degree(v) for v in g.vertices) == 2 * g.m


class TestDeletion:
    def test_path_minus_end(self):
        res = delete_vertices(path_graph(4), {3})
        assert (res.graph.n, res.graph.m) == (3, 2)
        assert res.old_to_new == {0: 0, 1: 1, 2: 2}

    def test_triangle_minus_vertex(self):
        res = delete_vertices(cycle_graph(3), {0})
        assert (res.graph.n, res.graph.m) == (2, 1)

    def test_star_minus_center(self):
        res = delete_vertices(star_graph(3).graph, {0})
        assert (res.graph.n, res.graph.m) == (3, 0)

    def test_delete_all_rejected(self):
        with pytest.raises(ValueError, match="empty graph"):
            delete_vertices(path_graph(2), {0, 1})

    @settings(max_examples=50, deadline=None)
    @given(small_graphs())
    def test_single_deletion_counts(self, g):
        for v in range(g.n):
            if g.n == 1:
                continue
            res = delete_vertices(g, {v})
            assert res.graph.n == g.n - 1
            assert res.graph.m == g.m - g.degree(v)


class TestDistances:
    def test_path_span(self):
        assert path_graph(4).distance(0, 3) == 3

    def test_cycle_antipodal(self):
        assert cycle_graph(6).distance(0, 3) == 3

    def test_disconnected_sentinel(self):
        g = Graph(4, [(0, 1), (2, 3)])
        assert g.distance(0, 2) == UNREACHABLE

    @settings(max_examples=40, deadline=None)
    @given(small_graphs())
    def test_bfs_matches_min_plus_squaring(self, g):
        assert [list(row) for row in g.distances()] == min_plus_distances(g)


class TestSubsets:
    def test_connected_subset(self):
        p4 = path_graph(4)
        assert is_connected_subset(p4, {1, 2})
        assert not is_connected_subset(p4, {0, 3})
        assert not is_connected_subset(cycle_graph(6), {0, 2, 4})

    def test_connected_subset_empty_rejected(self):
        with pytest.raises(ValueError):
            is_connected_subset(path_graph(2), frozenset())

    def test_convex_arc(self):
        c6 = cycle_graph(6)
        assert is_convex_set(c6, {0, 1, 2})
        # both 0-3 geodesics must lie inside, and one runs through 5, 4
        assert not is_convex_set(c6, {0, 1, 2, 3})
        assert is_convex_set(c6, {2})
        assert is_convex_set(c6, set())

    def test_convex_needs_connected_host(self):
        with pytest.raises(ValueError, match="connected"):
            is_convex_set(Graph(4, [(0, 1), (2, 3)]), {0})

    @settings(max_examples=40, deadline=None)
    @given(small_graphs(max_n=6), st.data())
    def test_convex_implies_connected(self, g, data):
        if not is_connected(g):
            return
        members = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1, max_size=g.n))
        if is_convex_set(g, members):
            assert is_connected_subset(g, members)


class TestWeaklyInduced:
    def test_path_six(self):
        # P6 with dominators at positions 1 and 4 keeps only their incident edges
        p6 = path_graph(6)
        res = weakly_induced_subgraph(p6, {1, 4})
        assert res.graph.n == 6
        back = {new: old for old, new in res.old_to_new.items()}
        kept = {tuple(sorted((back[u], back[v]))) for u, v in res.graph.edges()}
        assert kept == {(0, 1), (1, 2), (3, 4), (4, 5)}
        assert not is_connected(res.graph)

    def test_clique_single_dominator(self):
        k4 = Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
        res = weakly_induced_subgraph(k4, {0})
        assert (res.graph.n, res.graph.m) == (4, 3)
        assert sorted(res.graph.degree(v) for v in res.graph.vertices) == [1, 1, 1, 3]

    def test_full_set_is_identity(self):
        g = random_gnp(6, 0.5, seed=11)
        res = weakly_induced_subgraph(g, set(range(6)))
        assert res.graph == g

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            weakly_induced_subgraph(path_graph(3), set())

    @settings(max_examples=40, deadline=None)
    @given(small_graphs(max_n=6), st.data())
    def test_edge_count_formula(self, g, data):
        if g.n < 1:
            return
        dom = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1, max_size=g.n))
        res = weakly_induced_subgraph(g, dom)
        expected = sum(1 for u, v in g.edges() if u in dom or v in dom)
        assert res.graph.m == expected


class TestTreeStatistics:
    def test_path(self):
        p4 = path_graph(4)
        assert leaves(p4) == {0, 3}
        assert support_vertices(p4) == {1, 2}
        assert is_tree(p4)

    def test_star(self):
        s = star_graph(4).graph
        assert leaves(s) == {1, 2, 3, 4}
        assert support_vertices(s) == {0}

    def test_cycle(self):
        c5 = cycle_graph(5)
        assert leaves(c5) == frozenset()
        assert support_vertices(c5) == frozenset()
        assert not is_tree(c5)

    def test_trees_have_two_leaves(self):
        from rootdom.families import random_tree

        for seed in range(20):
            t = random_tree(2 + seed % 9, seed=seed)
            assert len(leaves(t)) >= 2 if t.n >= 2 else True
            assert all(leaves(t) & t.neighbors(s) for s in support_vertices(t))


class TestPrivateNeighbors:
    def test_star_center_alone(self):
        s = star_graph(3).graph
        assert private_neighbor_set(s, {0}, 0) == {0, 1, 2, 3}

    def test_path_literal_evaluation(self):
        # N[1] = {0,1,2}; open subtrahend N(2) = {1,3} leaves {0,2}
        p4 = path_graph(4)
        assert private_neighbor_set(p4, {1, 2}, 1) == {0, 2}

    def test_path_closed_variant(self):
        p4 = path_graph(4)
        assert private_neighbor_set(p4, {1, 2}, 1, closed_subtrahend=True) == {0}

    def test_triangle_everything_shared(self):
        k3 = cycle_graph(3)
        assert private_neighbor_set(k3, {0, 1, 2}, 0) == frozenset()

    def test_member_required(self):
        with pytest.raises(ValueError):
            private_neighbor_set(path_graph(3), {0}, 2)

    def test_closed_variant_matches_definition(self):
        for seed in range(15):
            g = random_gnp(6, 0.5, seed=seed)
            dom = {0, 3, 5}
            for v in dom:
                expected = frozenset(
                    x
                    for x in g.closed_neighborhood(v)
                    if (g.closed_neighborhood(x) & dom) == {v}
                )
                assert private_neighbor_set(g, dom, v, closed_subtrahend=True) == expected


class TestEdgeListFormat:
    def test_round_trip(self):
        g = random_gnp(7, 0.4, seed=21)
        parsed, root = parse_edge_list(format_edge_list(g))
        assert parsed == g and root is None

    def test_root_comment_round_trip(self):
        text = format_edge_list(star_graph(2).graph, root=0)
        parsed, root = parse_edge_list(text)
        assert root == 0 and parsed.n == 3

    def test_comments_and_blanks(self):
        text = "3 2\n# a comment\n\n0 1\n1 2  # trailing\n"
        parsed, _ = parse_edge_list(text)
        assert (parsed.n, parsed.m) == (3, 2)

    def test_bad_line_reports_position(self):
        with pytest.raises(ValueError, match="myfile:2"):
            parse_edge_list("2 1\n0 x\n", source="myfile")

    def test_edge_count_mismatch(self):
        with pytest.raises(ValueError, match="declares"):
            parse_edge_list("3 2\n0 1\n")
