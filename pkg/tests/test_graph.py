import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from chordalkit.errors import EmptyInputError, ParseError, SelfLoopError
from chordalkit.fixtures import fixture, graph
from chordalkit.graph import (
    ComplementView,
    Graph,
    Ordering,
    complement_view,
    from_edge_list,
    from_vertices,
    higher_neighborhood,
    induced_subgraph,
    is_connected,
    materialize_complement,
    ordering_from_names,
    parse_edge_list,
)


def small_graphs(max_n=8):
    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=1, max_value=max_n))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
        edges = [p for p, keep in zip(pairs, mask) if keep]
        return Graph([f"v{i}" for i in range(n)], edges)

    return build()


class TestConstruction:
    def test_single_edge(self):
        g = from_edge_list([("a", "b")])
        assert g.n == 2 and g.m == 1

    def test_fig1_counts(self):
        g = graph("fig1_h")
        assert g.n == 6 and g.m == 7

    def test_self_loop_rejected(self):
        with pytest.raises(SelfLoopError):
            from_edge_list([("a", "a")])

    def test_empty_rejected(self):
        with pytest.raises(EmptyInputError):
            from_edge_list([])

    def test_duplicate_edges_collapse(self):
        g = from_edge_list([("a", "b"), ("b", "a"), ("a", "b")])
        assert g.m == 1

    def test_first_appearance_fixes_indices(self):
        g = from_edge_list([("f", "a"), ("a", "b")])
        assert g.names == ("f", "a", "b")

    def test_unknown_name(self):
        g = from_edge_list([("a", "b")])
        with pytest.raises(ParseError):
            g.index("z")


class TestEdgeListFormat:
    def test_comments_and_blanks(self):
        text = "# header\n\na b  # inline\nb c\n"
        g = parse_edge_list(text)
        assert g.n == 3 and g.m == 2

    def test_bad_token_count(self):
        with pytest.raises(ParseError):
            parse_edge_list("a b c\n")


class TestConnectivity:
    def test_fig1_connected(self):
        assert is_connected(graph("fig1_h"))

    def test_two_isolated(self):
        assert not is_connected(from_vertices(["a", "b"]))

    def test_single_vertex(self):
        assert is_connected(from_vertices(["a"]))


class TestHigherNeighborhood:
    def test_fig1_open(self):
        g = graph("fig1_h")
        alpha = ordering_from_names(g, list("abcdef"))
        assert higher_neighborhood(g, alpha, g.index("d"), 4) == {g.index("e")}

    def test_last_vertex_empty(self):
        g = graph("fig1_h")
        alpha = ordering_from_names(g, list("abcdef"))
        assert higher_neighborhood(g, alpha, g.index("f"), 6) == frozenset()

    def test_fig1_closed(self):
        g = graph("fig1_h")
        alpha = ordering_from_names(g, list("abcdef"))
        got = higher_neighborhood(g, alpha, g.index("b"), 2, closed=True)
        assert got == {g.index("b"), g.index("f")}

    @settings(max_examples=60)
    @given(small_graphs())
    def test_contained_in_neighborhood(self, g):
        alpha = Ordering(list(range(g.n)))
        for y in range(g.n):
            i = alpha.position_of(y)
            hood = higher_neighborhood(g, alpha, y, i)
            assert hood <= g.neighbors(y)
            assert all(alpha.position_of(z) > i for z in hood)


class TestComplement:
    def test_fig1_ac_flips(self):
        g = graph("fig1_h")
        v = complement_view(g)
        a, c = g.index("a"), g.index("c")
        assert not g.adjacent(a, c) and v.adjacent(a, c)

    def test_no_self_adjacency(self):
        v = complement_view(graph("fig1_h"))
        assert not v.adjacent(2, 2)

    def test_fig3_is_materialized_complement(self):
        h = graph("fig1_h")
        g3 = graph("fig3_g")
        comp = materialize_complement(h)
        for a in g3.names:
            for b in g3.names:
                if a != b:
                    assert g3.adjacent(g3.index(a), g3.index(b)) == comp.adjacent(
                        comp.index(a), comp.index(b)
                    )

    def test_degree_identity(self):
        g = graph("fig1_h")
        v = complement_view(g)
        for x in range(g.n):
            assert v.degree(x) == g.n - 1 - g.degree(x)

    @settings(max_examples=60)
    @given(small_graphs())
    def test_involution(self, g):
        twice = materialize_complement(materialize_complement(g))
        assert twice == g

    @settings(max_examples=60)
    @given(small_graphs())
    def test_view_agrees_with_materialization(self, g):
        v = ComplementView(g)
        comp = materialize_complement(g)
        for a in range(g.n):
            for b in range(g.n):
                assert v.adjacent(a, b) == comp.adjacent(a, b)


class TestInducedSubgraph:
    def test_identity(self):
        g = graph("fig1_h")
        sub = induced_subgraph(g, range(g.n))
        assert sub.m == g.m and set(sub.names) == set(g.names)

    def test_fig1_triangle(self):
        g = graph("fig1_h")
        sub = induced_subgraph(g, [g.index(x) for x in "cde"])
        assert sub.n == 3 and sub.m == 3

    def test_empty(self):
        sub = induced_subgraph(graph("fig1_h"), [])
        assert sub.n == 0 and sub.m == 0

    @settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(small_graphs(), st.data())
    def test_edge_partition(self, g, data):
        keep = data.draw(st.sets(st.integers(min_value=0, max_value=g.n - 1)))
        inside = induced_subgraph(g, keep).m
        outside = induced_subgraph(g, set(range(g.n)) - keep).m
        crossing = sum(1 for u, v in g.edges() if (u in keep) != (v in keep))
        assert inside + crossing + outside == g.m


class TestOrdering:
    def test_bijection(self):
        o = Ordering([2, 0, 1])
        assert o.vertex_at(1) == 2 and o.position_of(2) == 1
        assert o.vertex_at(3) == 1 and o.position_of(1) == 3

    def test_rejects_non_bijection(self):
        with pytest.raises(ParseError):
            Ordering([0, 0, 1])

    def test_from_names_rejects_wrong_length(self):
        g = graph("fig1_h")
        with pytest.raises(ParseError):
            ordering_from_names(g, ["a", "b"])

    @settings(max_examples=40)
    @given(st.permutations(list(range(6))))
    def test_mutually_inverse(self, perm):
        o = Ordering(perm)
        assert all(o.vertex_at(o.position_of(v)) == v for v in range(6))
        assert all(o.position_of(o.vertex_at(i)) == i for i in range(1, 7))
