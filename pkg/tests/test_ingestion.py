"""Tests for graph6, edge-list, corpus and partition-file ingestion."""
import pytest
from hypothesis import given, settings

from src.exceptions import GraphParseError
from src.graphs.families import build_complete, build_path
from src.ingestion.service import (
    IngestionService,
    encode_graph6,
    format_partition,
    parse_edge_list,
    parse_graph6,
    parse_partition,
    read_corpus,
)
from tests.strategies import graphs

files = IngestionService()


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

class TestGraph6:
    def test_known_strings(self):
        assert parse_graph6("@").n == 1
        assert parse_graph6("A_").edges() == [(0, 1)]
        assert parse_graph6("Bw") == build_complete(3)

    def test_edgeless_five(self, edgeless5):
        assert parse_graph6("D??") == edgeless5

    def test_header_and_newline_are_stripped(self):
        assert parse_graph6(">>graph6<<A_\n").edges() == [(0, 1)]

    def test_bytes_input(self):
        assert parse_graph6(b"Bw").edge_count == 3

    def test_encode(self):
        assert encode_graph6(build_complete(3)) == "Bw"

    @given(graphs(max_order=9))
    @settings(max_examples=30, deadline=None)
    def test_encoded_graph_parses_back(self, g):
        assert parse_graph6(encode_graph6(g)) == g

    def test_empty_string(self):
        with pytest.raises(GraphParseError, match="empty"):
            parse_graph6("")

    def test_byte_out_of_range_reports_offset(self):
        with pytest.raises(GraphParseError) as info:
            parse_graph6("D? ")
        assert info.value.offset == 2

    def test_short_string_reports_offset(self):
        with pytest.raises(GraphParseError) as info:
            parse_graph6("D?")
        assert info.value.offset == 2
        assert "needs 3 bytes" in str(info.value)

    def test_long_string(self):
        with pytest.raises(GraphParseError):
            parse_graph6("A__")

    def test_padding_bits_must_be_zero(self):
        with pytest.raises(GraphParseError, match="padding") as info:
            parse_graph6("A`")
        assert info.value.offset == 1

    def test_long_form_orders_are_rejected(self):
        with pytest.raises(GraphParseError, match="long form"):
            parse_graph6("~??~")

    def test_offset_counts_the_header(self):
        with pytest.raises(GraphParseError) as info:
            parse_graph6(">>graph6<<D? ")
        assert info.value.offset == 12


# ---------------------------------------------------------------------------
# Edge lists and files
# ---------------------------------------------------------------------------

class TestEdgeList:
    def test_parses_pairs(self):
        g = parse_edge_list("3\n0 1\n1 2\n")
        assert g == build_path(3)

    def test_isolated_vertices(self):
        g = parse_edge_list("4\n0 1")
        assert g.n == 4 and g.edge_count == 1

    def test_missing_count(self):
        with pytest.raises(GraphParseError, match="missing"):
            parse_edge_list("  \n")

    def test_dangling_vertex(self):
        with pytest.raises(GraphParseError, match="dangling") as info:
            parse_edge_list("3\n0 1\n2")
        assert info.value.offset == 6

    def test_out_of_range_vertex(self):
        with pytest.raises(GraphParseError, match="out of range") as info:
            parse_edge_list("2 0 5")
        assert info.value.offset == 4

    def test_self_loop(self):
        with pytest.raises(GraphParseError, match="self-loop"):
            parse_edge_list("2 1 1")

    def test_non_integer_token(self):
        with pytest.raises(GraphParseError, match="integer") as info:
            parse_edge_list("2 0 x")
        assert info.value.offset == 4

    def test_load_graph_by_suffix(self, tmp_path):
        g6 = tmp_path / "k3.g6"
        g6.write_text("Bw\n")
        edges = tmp_path / "p3.txt"
        edges.write_text("3\n0 1\n1 2\n")
        assert files.load_graph(g6).edge_count == 3
        assert files.load_graph(edges) == build_path(3)

    def test_load_graph_rejects_multi_line_graph6(self, tmp_path):
        path = tmp_path / "two.g6"
        path.write_text("Bw\nA_\n")
        with pytest.raises(GraphParseError, match="exactly one"):
            files.load_graph(path)


# ---------------------------------------------------------------------------
# Corpora
# ---------------------------------------------------------------------------

class TestCorpus:
    def test_skips_blank_lines_and_headers(self):
        lines = list(read_corpus([">>graph6<<", "", "A_", "Bw"]))
        assert [line.number for line in lines] == [3, 4]
        assert all(line.error is None for line in lines)

    def test_malformed_lines_carry_their_position(self):
        lines = list(read_corpus(["A_", "D?", "Bw"]))
        bad = lines[1]
        assert bad.graph is None
        assert bad.error.line == 2
        assert bad.error.offset == 2
        assert str(bad.error).startswith("line 2, byte 2:")
        assert lines[2].graph.edge_count == 3

    def test_load_corpus(self, tmp_path):
        path = tmp_path / "corpus.g6"
        path.write_text("A_\nBw\n")
        assert [line.graph.n for line in files.load_corpus(path)] == [2, 3]


# ---------------------------------------------------------------------------
# Partition files
# ---------------------------------------------------------------------------

class TestPartitionFile:
    def test_one_block_per_line(self):
        p = parse_partition("0 3 4\n1\n2\n")
        assert p.as_lists() == [[0, 3, 4], [1], [2]]

    def test_slash_separated_blocks(self):
        p = parse_partition("0 3 4 / 1 / 2")
        assert p.as_lists() == [[0, 3, 4], [1], [2]]

    def test_comments_are_ignored(self):
        p = parse_partition("# witness\n0 2  # first\n1 3\n")
        assert p.as_lists() == [[0, 2], [1, 3]]

    def test_block_order_is_kept(self):
        assert parse_partition("2\n0 1\n").as_lists() == [[2], [0, 1]]

    def test_bad_token_offset(self):
        with pytest.raises(GraphParseError) as info:
            parse_partition("0 1\n2 z\n")
        assert info.value.offset == 6

    def test_repeated_vertex_in_a_block(self):
        with pytest.raises(GraphParseError, match="repeated") as info:
            parse_partition("2\n0 0 1\n")
        assert info.value.offset == 4

    def test_same_vertex_in_two_blocks_is_left_to_validation(self):
        assert parse_partition("0 1 / 1 2").as_lists() == [[0, 1], [1, 2]]

    def test_no_blocks(self):
        with pytest.raises(GraphParseError, match="no blocks"):
            parse_partition("# nothing\n\n")

    def test_load_partition(self, tmp_path):
        path = tmp_path / "witness.txt"
        path.write_text("0 3 4\n1\n2\n")
        assert files.load_partition(path).as_lists() == [[0, 3, 4], [1], [2]]

    def test_format_partition(self):
        assert format_partition(parse_partition("0 3 / 1 2")) == "0 3\n1 2\n"
