"""
Tests for framed 4-graphs

Tests graph construction, unicursal components and the intersection graph.
"""

import pytest

from knot_parity.codes import LinkCode
from knot_parity.graph import (
    FramedGraph,
    cycle_space_dimension,
    graph_components,
    intersection_graph,
    mixed_crossings,
    self_crossings,
    to_framed_graph,
    unicursal_components,
    vertex_components,
    vertex_pieces,
)


class TestToFramedGraph:
    """Test graph construction from codes"""

    @pytest.mark.parametrize(
        "word, vertices, edges",
        [([1, 1], 1, 2), ([1, 2, 1, 2], 2, 4), ([1, 2, 3, 1, 2, 3], 3, 6)],
    )
    def test_counts(self, word, vertices, edges):
        """Test V and E come from the positions"""
        graph = to_framed_graph(LinkCode.free(word))

        assert graph.vertex_count == vertices
        assert graph.edge_count == edges

    def test_passage_halves_are_opposite(self, two_chords):
        """Test the in and out halves of one passage form an opposite pair"""
        graph = to_framed_graph(two_chords)

        for position in range(4):
            assert graph.opposite[2 * position] == 2 * position + 1
            assert graph.is_transversal(2 * position, 2 * position + 1)

    def test_free_loops_counted(self):
        """Test empty circles become free loops"""
        graph = to_framed_graph(LinkCode.free([1, 1], []))

        assert graph.free_loops == 1
        assert graph.vertex_count == 1

    def test_opposite_pairs(self, kink):
        """Test the first opposite pair holds the lowest half"""
        graph = to_framed_graph(kink)

        assert graph.opposite_pairs(1) == ((0, 1), (2, 3))

    def test_rejects_bad_opposite(self):
        """Test the opposite map must be an involution at one vertex"""
        with pytest.raises(ValueError):
            FramedGraph(half_vertex=(0, 0, 0, 0), opposite=(1, 2, 3, 0), edges=((0, 1), (2, 3)))

    def test_rejects_partial_matching(self):
        """Test edges must cover every half"""
        with pytest.raises(ValueError):
            FramedGraph(half_vertex=(0, 0, 0, 0), opposite=(2, 3, 0, 1), edges=((0, 1),))


class TestUnicursalComponents:
    """Test the component partition"""

    def test_knot(self, two_chords):
        """Test one circle gives one component"""
        assert unicursal_components(to_framed_graph(two_chords)).count == 1

    def test_two_circles(self, hopf):
        """Test two circles give two components"""
        partition = unicursal_components(to_framed_graph(hopf))

        assert partition.count == 2
        assert partition.free_loops == 0

    def test_hand_built_graph(self):
        """Test a one-vertex graph traced through its opposite pairs"""
        graph = FramedGraph(half_vertex=(0, 0, 0, 0), opposite=(2, 3, 0, 1), edges=((0, 1), (2, 3)))

        assert unicursal_components(graph).count == 1

    def test_ids_follow_circles(self, hopf):
        """Test component ids equal circle indices for code-built graphs"""
        graph = to_framed_graph(hopf)
        partition = unicursal_components(graph)

        assert [partition.component_of_half(2 * p) for p in range(4)] == [0, 0, 1, 1]

    def test_free_loop_in_count(self):
        """Test free loops count as components"""
        assert unicursal_components(to_framed_graph(LinkCode.free([1, 1], []))).count == 2


class TestCrossingClasses:
    """Test self and mixed crossings"""

    def test_mixed_and_self(self):
        """Test each label is classified by its circles"""
        graph = to_framed_graph(LinkCode.free([1, 2, 2], [1]))

        assert self_crossings(graph) == [2]
        assert mixed_crossings(graph) == [1]
        assert vertex_components(graph) == {1: (0, 1), 2: (0, 0)}


class TestIntersectionGraph:
    """Test the intersection graph of components"""

    def test_single_edge(self, hopf):
        """Test two circles meeting twice share one edge"""
        igraph = intersection_graph(to_framed_graph(hopf))

        assert sorted(igraph.edges) == [(0, 1)]
        assert sorted(igraph.edges[0, 1]["crossings"]) == [1, 2]

    def test_knot(self, three_chords):
        """Test a knot gives one node and no edges"""
        igraph = intersection_graph(to_framed_graph(three_chords))

        assert igraph.number_of_nodes() == 1
        assert igraph.number_of_edges() == 0

    def test_triangle(self, triangle_link):
        """Test three circles meeting pairwise form a triangle"""
        igraph = intersection_graph(to_framed_graph(triangle_link))

        assert igraph.number_of_nodes() == 3
        assert sorted(igraph.edges) == [(0, 1), (0, 2), (1, 2)]


class TestCycleSpace:
    """Test graph components and the cycle space dimension"""

    def test_connected_knot(self, three_chords):
        """Test E - V + c for a knot"""
        graph = to_framed_graph(three_chords)

        assert graph_components(graph) == 1
        assert cycle_space_dimension(graph) == 4

    def test_split_link(self):
        """Test two separate kinks give two graph components"""
        graph = to_framed_graph(LinkCode.free([1, 1], [2, 2]))

        assert graph_components(graph) == 2
        assert cycle_space_dimension(graph) == 4

    def test_vertex_pieces(self):
        """Test pieces are numbered by their lowest vertex"""
        graph = to_framed_graph(LinkCode.free([3, 3], [1, 2, 1, 2]))

        assert vertex_pieces(graph) == {1: 0, 2: 0, 3: 1}
