import pytest
from hypothesis import given, strategies as st
from itertools import combinations

from genconn.graphs import (
    Graph,
    GraphError,
    SteinerTree,
    is_connected,
    line_graph,
    vertex_set,
)


def graphs(max_n: int = 8):
    """Hypothesis strategy for arbitrary labeled simple graphs."""

    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=0, max_value=max_n))
        slots = list(combinations(range(n), 2))
        picked = draw(st.sets(st.sampled_from(slots)) if slots else st.just(set()))
        return Graph(n, tuple(sorted(picked)))

    return build()


class TestGraphInvariants:
    def test_basic_construction(self):
        g = Graph.from_edges(3, [(1, 0), (1, 2)])
        assert g.edges == ((0, 1), (1, 2))
        assert g.m == 2
        assert g.degree(1) == 2

    def test_self_loop_rejected(self):
        with pytest.raises(GraphError, match="self-loop"):
            Graph.from_edges(2, [(0, 0)])

    def test_duplicate_edge_rejected(self):
        with pytest.raises(GraphError, match="duplicate"):
            Graph.from_edges(3, [(0, 1), (1, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(GraphError, match="out of range"):
            Graph(2, ((0, 2),))

    def test_unnormalized_pair_rejected(self):
        with pytest.raises(GraphError):
            Graph(3, ((2, 1),))

    def test_part_tag_must_cover_all_vertices(self):
        with pytest.raises(GraphError, match="cover"):
            Graph(3, (), (0, 1))

    def test_part_tag_edge_within_part_rejected(self):
        with pytest.raises(GraphError, match="part"):
            Graph(2, ((0, 1),), (1, 1))

    def test_parts(self):
        g = Graph(3, ((0, 1), (0, 2), (1, 2)), (0, 1, 2))
        assert g.parts() == ((0,), (1,), (2,))


class TestIsConnected:
    def test_single_vertex(self):
        assert is_connected(Graph(1))

    def test_empty_graph_convention(self):
        assert is_connected(Graph(0))

    def test_two_isolated_vertices(self):
        assert not is_connected(Graph(2))

    def test_path(self):
        assert is_connected(Graph(3, ((0, 1), (1, 2))))

    def test_within_nonadjacent_ends_of_p4(self):
        p4 = Graph(4, ((0, 1), (1, 2), (2, 3)))
        assert not is_connected(p4, within=(0, 3))
        assert is_connected(p4, within=(0, 1, 2, 3))

    def test_within_out_of_range(self):
        with pytest.raises(GraphError, match="outside"):
            is_connected(Graph(2), within=(0, 5))


class TestLineGraph:
    def test_p3(self):
        lg = line_graph(Graph(3, ((0, 1), (1, 2))))
        assert lg.n == 2 and lg.edges == ((0, 1),)

    def test_triangle_fixed_point(self):
        k3 = Graph(3, ((0, 1), (0, 2), (1, 2)))
        lg = line_graph(k3)
        assert (lg.n, lg.edges) == (k3.n, k3.edges)
        lg2 = line_graph(lg)
        assert (lg2.n, lg2.edges) == (k3.n, k3.edges)

    def test_star_is_triangle(self):
        star = Graph(4, ((0, 1), (0, 2), (0, 3)))
        lg = line_graph(star)
        # oracle: pairwise incidence over all edge pairs
        expect = tuple(
            (i, j)
            for i in range(3)
            for j in range(i + 1, 3)
            if set(star.edges[i]) & set(star.edges[j])
        )
        assert lg.edges == expect
        assert lg.m == 3

    def test_empty(self):
        lg = line_graph(Graph(4))
        assert lg.n == 0 and lg.m == 0

    @given(graphs())
    def test_size_identities(self, g):
        lg = line_graph(g)
        assert lg.n == g.m
        assert lg.m == sum(
            g.degree(v) * (g.degree(v) - 1) // 2 for v in range(g.n)
        )


class TestSteinerTreeType:
    def test_from_masks(self):
        g = Graph(3, ((0, 1), (1, 2)))
        t = SteinerTree.from_masks(g, 0b111, 0b11)
        assert t.vertices == (0, 1, 2)
        assert t.edges == ((0, 1), (1, 2))
        assert t.vertex_mask == 0b111


def test_vertex_set_normalizes():
    assert vertex_set([2, 0, 2, 1]) == (0, 1, 2)


class TestInstanceTypes:
    def test_3dm_duplicate_triple_rejected(self):
        from genconn.graphs import ThreeDMInstance

        with pytest.raises(GraphError, match="duplicate"):
            ThreeDMInstance(1, ((0, 0, 0), (0, 0, 0)))

    def test_3dm_range(self):
        from genconn.graphs import ThreeDMInstance

        with pytest.raises(GraphError, match="out of range"):
            ThreeDMInstance(1, ((0, 1, 0),))

    def test_cnf_duplicate_literals_permitted(self):
        from genconn.graphs import CnfFormula

        phi = CnfFormula(1, ((1, 1, -1),))
        assert phi.num_clauses == 1

    def test_cnf_literal_range(self):
        from genconn.graphs import CnfFormula

        with pytest.raises(GraphError, match="out of range"):
            CnfFormula(1, ((1, 2, 1),))

    def test_reduction_output_roles_injective(self):
        from genconn.graphs import ReductionOutput

        with pytest.raises(GraphError, match="injective"):
            ReductionOutput(Graph(2), (), None, {0: "a", 1: "a"})
