"""Tests for vertex sets, the graph model and named families."""
import networkx as nx
import pytest
from hypothesis import given, settings
from pydantic import ValidationError

from src.graphs.bits import bits_tuple, full_mask, lowest_bit, mask_of, proper_submasks
from src.graphs.families import (
    build_complete_bipartite,
    build_cycle,
    build_family,
    build_path,
    complete_minus_perfect_matching,
    corona,
    disjoint_union,
)
from src.graphs.schemas import Graph, VertexSet
from tests.strategies import graphs


# ---------------------------------------------------------------------------
# Bitmask helpers
# ---------------------------------------------------------------------------

class TestBits:
    def test_mask_round_trip(self):
        assert bits_tuple(mask_of([4, 0, 2])) == (0, 2, 4)

    def test_full_mask(self):
        assert full_mask(0) == 0
        assert full_mask(3) == 0b111

    def test_lowest_bit(self):
        assert lowest_bit(0b10100) == 2

    def test_proper_submasks_exclude_the_mask(self):
        subs = list(proper_submasks(0b101))
        assert sorted(subs) == [0, 0b001, 0b100]

    def test_proper_submasks_of_empty(self):
        assert list(proper_submasks(0)) == []


# ---------------------------------------------------------------------------
# VertexSet
# ---------------------------------------------------------------------------

class TestVertexSet:
    def test_accepts_member_lists(self):
        s = VertexSet.model_validate([3, 1])
        assert s.vertices() == (1, 3)
        assert 3 in s and 2 not in s

    def test_serializes_as_sorted_list(self):
        assert VertexSet.of([5, 0, 2]).model_dump() == [0, 2, 5]

    def test_json_validates_back(self):
        s = VertexSet.of([0, 4])
        assert VertexSet.model_validate_json(s.model_dump_json()) == s

    def test_rejects_negative_members(self):
        with pytest.raises(ValidationError):
            VertexSet.model_validate([1, -2])

    def test_set_operations(self):
        a, b = VertexSet.of([0, 1]), VertexSet.of([1, 2])
        assert (a | b).vertices() == (0, 1, 2)
        assert (a & b).vertices() == (1,)
        assert a.intersection_size(b) == 1
        assert not a.isdisjoint(b)
        assert VertexSet.of([1]).issubset(a)

    def test_empty_set_is_falsy(self):
        assert not VertexSet()
        with pytest.raises(ValueError):
            VertexSet().min_vertex()


# ---------------------------------------------------------------------------
# Graph model
# ---------------------------------------------------------------------------

class TestGraph:
    def test_from_edges(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2)])
        assert g.degrees() == (1, 2, 1)
        assert g.edges() == [(0, 1), (1, 2)]
        assert g.has_edge(1, 0)
        assert g.min_degree == 1 and g.max_degree == 2

    def test_rejects_self_loops(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(1, 1)])

    def test_rejects_out_of_range_edges(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 2)])

    def test_rejects_asymmetric_adjacency(self):
        with pytest.raises(ValidationError):
            Graph(n=2, adjacency=(0b10, 0))

    def test_rejects_wrong_adjacency_length(self):
        with pytest.raises(ValidationError):
            Graph(n=3, adjacency=(0, 0))

    def test_empty_graph_predicates(self):
        g = Graph.from_edges(0, [])
        assert not g.is_connected()
        assert not g.is_tree()
        assert g.max_degree == 0

    @given(graphs(max_order=7))
    @settings(max_examples=40, deadline=None)
    def test_networkx_adapter_preserves_edges(self, g):
        back = Graph.from_networkx(g.to_networkx())
        assert back == g

    def test_from_networkx_relabels_sorted_nodes(self):
        h = nx.Graph([("b", "c")])
        h.add_node("a")
        g = Graph.from_networkx(h)
        assert g.n == 3
        assert g.edges() == [(1, 2)]


class TestStructure:
    def test_regular(self):
        assert build_cycle(5).is_regular(2)
        assert not build_path(4).is_regular()

    def test_tree_and_connectivity(self):
        assert build_path(6).is_tree()
        assert not build_cycle(4).is_tree()
        assert not disjoint_union(build_path(2), build_path(2)).is_connected()

    def test_bipartite_and_triangles(self, prism, utility):
        assert prism.triangle_count() == 2
        assert not prism.is_bipartite()
        assert utility.is_bipartite()
        assert utility.triangle_count() == 0

    def test_corona_recognition(self):
        assert corona(build_path(3), 1).is_corona_k1()
        assert corona(build_cycle(4), 1).is_corona_k1()
        assert build_path(2).is_corona_k1()
        assert build_path(4).is_corona_k1()
        assert not build_path(6).is_corona_k1()
        assert not build_cycle(4).is_corona_k1()


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------

class TestFamilies:
    def test_cycle_edges_wrap(self):
        assert build_cycle(4).has_edge(3, 0)

    def test_complete_bipartite_sides(self):
        g = build_complete_bipartite(2, 3)
        assert g.n == 5
        assert g.degrees() == (3, 3, 2, 2, 2)
        assert not g.has_edge(0, 1)

    def test_corona_labels(self):
        g = corona(build_path(3), 2)
        assert g.n == 9
        # the K_2 copy of vertex 1 sits at 3 + 1*2 and 3 + 1*2 + 1
        assert g.has_edge(1, 5) and g.has_edge(1, 6) and g.has_edge(5, 6)
        assert g.degree(5) == 2

    def test_complete_minus_matching_is_regular(self):
        g = complete_minus_perfect_matching(6)
        assert g.is_regular(4)
        assert not g.has_edge(0, 1)

    def test_complete_minus_matching_needs_even_order(self):
        with pytest.raises(ValueError):
            complete_minus_perfect_matching(5)

    def test_g1_and_g2_are_cubic_and_distinct(self, prism, utility):
        assert prism.is_regular(3) and utility.is_regular(3)
        assert prism.triangle_count() == 2
        assert utility.triangle_count() == 0

    def test_build_family_by_name(self):
        assert build_family("path_corona", n=4).n == 8
        assert build_family("star", n=4).max_degree == 3
        assert build_family("g1").n == 6

    def test_build_family_rejects_unknown_names(self):
        with pytest.raises(ValueError, match="unknown family"):
            build_family("petersen")

    def test_build_family_rejects_bad_parameters(self):
        with pytest.raises(ValueError, match="bad parameters"):
            build_family("path", s=3)
