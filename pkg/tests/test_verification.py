"""Tests for the closed-form table, census checks, extremal scan and replay."""
from itertools import combinations
from pathlib import Path

import networkx as nx
import pytest

from src.coalitions.schemas import Partition
from src.ingestion.service import encode_graph6, read_corpus
from src.graphs.families import build_complete, build_cycle, build_path, build_star
from src.graphs.schemas import Graph
from src.verification.closed_forms import closed_form_table, lookup, order_of
from src.verification.corpus import as_corpus, atlas_graphs, corpus_from_file, tree_graphs
from src.verification.schemas import (
    ALL_CENSUS_CHECKS,
    CensusReport,
    CheckRecord,
    ExactValue,
    KnownDiscrepancy,
    ReplayWitness,
    UpperBoundOnly,
)
from src.verification.service import VerificationService

FIXTURES = Path(__file__).parent / "fixtures"

service = VerificationService()


def statuses(records, check):
    return {r.status for r in records if r.check == check}


# ---------------------------------------------------------------------------
# Closed-form table
# ---------------------------------------------------------------------------

class TestClosedForms:
    def test_complete_graph_row(self):
        form = lookup("complete", 3, n=7)
        assert form.expected == ExactValue(value=6)
        assert form.label == "complete(n=7), k=3"

    def test_complete_graph_needs_k_below_n(self):
        assert lookup("complete", 7, n=7) is None

    def test_single_vertex_path_is_a_known_discrepancy(self):
        assert lookup("path", 2, n=1).expected == KnownDiscrepancy(published_value=1, strict_value=None)

    def test_bipartite_regimes(self):
        assert lookup("complete_bipartite", 3, s=3, t=3).expected == ExactValue(value=4)
        assert lookup("complete_bipartite", 2, s=2, t=5).expected == ExactValue(value=2)
        assert lookup("complete_bipartite", 4, s=2, t=5).expected == ExactValue(value=2)
        assert lookup("complete_bipartite", 2, s=3, t=4).expected == UpperBoundOnly(bound=5)
        assert lookup("complete_bipartite", 1, s=2, t=3).expected == UpperBoundOnly(bound=5)

    def test_disputed_corona_rows(self):
        assert lookup("path_corona_k1", 2, n=2).disputed
        assert lookup("path_corona_k1", 2, n=5).disputed
        assert not lookup("path_corona_k1", 2, n=4).disputed

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            lookup("petersen", 2, n=10)

    def test_table_respects_the_order_limit(self):
        rows = closed_form_table(6)
        plain = [r for r in rows if not r.family.endswith("corona_k1")]
        assert all(order_of(r.family, r.params) <= 6 for r in plain)
        assert any(r.family == "cubic_order6_g1" for r in rows)
        # corona rows are listed up to base order 6 regardless
        assert any(r.family == "path_corona_k1" and r.params["n"] == 6 for r in rows)

    def test_small_table_has_no_cubic_rows(self):
        assert not any(r.family.startswith("cubic") for r in closed_form_table(5))


class TestClosedFormSuite:
    def test_cycle_row_passes(self):
        records = service.evaluate_closed_form(lookup("cycle", 2, n=6), max_order=10)
        assert statuses(records, "closed_form") == {"pass"}
        assert statuses(records, "construction") == {"pass"}

    def test_path_of_one_vertex_is_reported_not_failed(self):
        records = service.evaluate_closed_form(lookup("path", 2, n=1), max_order=10)
        assert statuses(records, "closed_form") == {"discrepancy"}

    def test_disputed_row_is_cross_checked(self):
        records = service.evaluate_closed_form(lookup("path_corona_k1", 2, n=2), max_order=10)
        assert statuses(records, "closed_form") == {"discrepancy"}
        assert statuses(records, "oracle_cross_check") == {"pass"}
        (record,) = [r for r in records if r.check == "closed_form"]
        assert record.observed == 3
        assert record.subject == "path_corona_k1(n=2), k=2"

    def test_rows_above_the_limit_are_skipped(self):
        records = service.evaluate_closed_form(lookup("cycle_corona_k1", 2, n=6), max_order=10)
        assert [r.status for r in records] == ["skipped"]

    def test_cubic_rows(self):
        for family in ("cubic_order6_g1", "cubic_order6_g2"):
            records = service.evaluate_closed_form(lookup(family, 2), max_order=6)
            assert statuses(records, "closed_form") == {"pass"}
            assert statuses(records, "construction") == {"pass"}

    def test_suite_up_to_order_five_passes(self):
        report = service.run_theorem_suite(max_order=5)
        assert report.passed
        assert not report.failures()
        assert report.with_status("discrepancy")

    def test_suite_up_to_order_ten_passes(self):
        report = service.run_theorem_suite(max_order=10)
        assert report.passed
        assert not report.with_status("inconclusive")

    def test_suite_rejects_orders_above_the_cap(self):
        with pytest.raises(ValueError, match="solver cap"):
            service.run_theorem_suite(max_order=40)


# ---------------------------------------------------------------------------
# Census
# ---------------------------------------------------------------------------

class TestCensus:
    def test_definitional_checks_hold_on_small_graphs(self):
        report = service.run_census(
            as_corpus(atlas_graphs(1, 5)),
            k_values=(1, 2, 3),
            checks=("oracle_agreement", "singleton_split", "domination_chain"),
            source="atlas",
        )
        assert report.passed
        assert report.corpus.graphs == 52
        assert report.corpus.max_order == 5
        assert {s.check for s in report.summary} == {"oracle_agreement", "singleton_split", "domination_chain"}

    def test_records_are_sorted(self):
        report = service.run_census(as_corpus([build_path(4), build_cycle(4)]), k_values=(2, 1), checks=("domination_chain",))
        keys = [(r.graph6, r.k, r.check) for r in report.records]
        assert keys == sorted(keys)
        assert report.k_values == [2, 1]

    def test_parse_errors_fail_the_run(self):
        corpus = list(read_corpus(["A_", "D?"]))
        report = service.run_census(corpus, checks=("domination_chain",))
        assert not report.passed
        assert report.parse_errors[0].line == 2
        assert report.parse_errors[0].offset == 2
        assert not report.parse_errors[0].message.startswith("line")

    def test_cubic_graphs(self):
        report = service.run_census(
            as_corpus(atlas_graphs(1, 7)),
            k_values=(2, 3),
            checks=("fair_set_size", "regular_range"),
            regular=3,
        )
        assert report.passed
        assert report.corpus.graphs == 3
        assert not report.with_status("discrepancy")
        assert statuses(report.records, "regular_range") == {"skipped", "pass"}

    def test_regular_filter(self):
        report = service.run_census(as_corpus(atlas_graphs(1, 5)), checks=("domination_chain",), regular=2)
        # C_3, C_4, C_5
        assert report.corpus.graphs == 3

    def test_unknown_checks_are_rejected(self):
        with pytest.raises(ValueError, match="unknown checks"):
            service.run_census(as_corpus([build_path(3)]), checks=("made_up",))

    def test_rejects_non_positive_k(self):
        with pytest.raises(ValueError):
            service.run_census(as_corpus([build_path(3)]), k_values=(0,))

    def test_every_check_runs(self):
        records = service.evaluate_graph(encode_graph6(build_cycle(6)), 2, ALL_CENSUS_CHECKS)
        assert [r.check for r in records] == list(ALL_CENSUS_CHECKS)
        assert all(r.status != "inconclusive" for r in records)

    def test_workers_do_not_change_the_report(self):
        corpus = as_corpus(atlas_graphs(4, 4))
        checks = ("oracle_agreement", "partner_limit")
        single = VerificationService(workers=1).run_census(corpus, k_values=(2,), checks=checks)
        pooled = VerificationService(workers=2).run_census(corpus, k_values=(2,), checks=checks)
        assert single.model_dump_json() == pooled.model_dump_json()

    def test_report_json_validates_back(self):
        report = service.run_census(as_corpus([build_path(5)]), checks=("domination_chain", "max_degree_bound"))
        assert CensusReport.model_validate_json(report.model_dump_json()) == report


class TestChecks:
    def check(self, g, k, name):
        (record,) = service.evaluate_graph(encode_graph6(g), k, (name,))
        return record

    def test_hypotheses_gate_the_checks(self):
        assert self.check(build_path(4), 1, "half_domatic").status == "skipped"
        assert self.check(build_cycle(5), 2, "fair_set_size").status == "skipped"
        assert self.check(build_cycle(5), 2, "tree_half_order").status == "skipped"
        assert self.check(build_complete(4), 2, "max_degree_bound").status == "skipped"

    def test_large_k_against_the_published_degree_bound(self):
        # K_2 with k = 4: Δ - k + 3 = 0 yet the two singletons form a partition
        record = self.check(build_path(2), 4, "max_degree_bound")
        assert record.status == "discrepancy"
        assert record.observed == 2
        assert record.bound == 0
        assert service.witness_holds(record.witness)

    def test_single_vertex_domatic_bound(self):
        record = self.check(Graph.from_edges(1, []), 2, "domatic_lower_bound")
        assert record.status == "discrepancy"

    def test_cubic_fair_set_size(self, prism):
        record = self.check(prism, 2, "fair_set_size")
        assert record.status == "pass"
        assert record.bound == 3

    def test_tree_checks(self):
        assert self.check(build_path(6), 2, "tree_half_order").status == "pass"
        assert self.check(build_path(6), 2, "tree_fair_domination").status == "pass"

    def test_oracle_skipped_above_its_cap(self):
        assert self.check(build_path(12), 2, "oracle_agreement").status == "skipped"

    def test_solver_cap_skips(self):
        (record,) = VerificationService(order_cap=5).evaluate_graph(encode_graph6(build_path(6)), 2, ("tree_half_order",))
        assert record.status == "skipped"

    def test_budget_exhaustion_is_inconclusive(self, k5):
        starved = VerificationService(budget=1)
        (record,) = starved.evaluate_graph(encode_graph6(k5), 2, ("singleton_split",))
        assert record.status == "skipped"  # δ = n - 1, so the split is not excluded
        (record,) = starved.evaluate_graph(encode_graph6(k5), 2, ("partner_limit",))
        assert record.status == "inconclusive"

    def test_tree_max_degree(self):
        record = self.check(build_path(8), 2, "tree_max_degree")
        assert record.status == "pass"
        assert record.bound == 3
        assert self.check(build_star(5), 2, "tree_max_degree").bound == 5
        assert self.check(build_cycle(6), 2, "tree_max_degree").status == "skipped"
        assert self.check(build_path(8), 3, "tree_max_degree").status == "skipped"

    def test_min_degree_fairness(self, p5):
        # δ = 1, Δ = 2
        record = self.check(p5, 1, "min_degree_fairness")
        assert record.status == "pass"
        assert record.bound == 6
        assert self.check(p5, 2, "min_degree_fairness").status == "skipped"
        assert self.check(build_cycle(6), 2, "min_degree_fairness").status == "skipped"

    def test_domatic_lower_bound_on_a_cycle(self):
        record = self.check(build_cycle(6), 2, "domatic_lower_bound")
        assert record.status == "pass"
        assert record.bound == 4


class TestPublishedBounds:
    def test_bounds_hold_on_every_graph_up_to_order_seven(self):
        report = service.run_census(
            as_corpus(atlas_graphs(1, 7)),
            k_values=(2, 3),
            checks=("domatic_lower_bound", "max_degree_bound", "partner_limit", "tree_half_order"),
            source="atlas",
        )
        assert report.corpus.graphs == 1252
        assert not report.failures()
        assert not report.with_status("inconclusive")
        assert report.passed
        assert "pass" in statuses(report.records, "domatic_lower_bound")

    def test_tree_fair_domination_on_every_tree_up_to_order_nine(self):
        report = service.run_census(
            as_corpus(tree_graphs(2, 9)), checks=("tree_fair_domination", "tree_max_degree"), source="trees",
        )
        assert statuses(report.records, "tree_fair_domination") == {"pass"}
        assert statuses(report.records, "tree_max_degree") == {"pass"}
        coronas = [r for r in report.records if r.check == "tree_fair_domination" and 2 * r.observed == r.n]
        # P_2, P_4, then the coronas of the trees of order 3 and 4
        assert len(coronas) == 5


class TestCubicCorpora:
    @pytest.mark.parametrize("name,order,connected", [("cubic8.g6", 8, 5), ("cubic10.g6", 10, 19)])
    def test_files_hold_every_cubic_graph_of_their_order(self, name, order, connected):
        lines = corpus_from_file(FIXTURES / name)
        assert all(line.error is None for line in lines)
        cubic = [line.graph for line in lines]
        assert all(g.n == order and g.is_regular(3) for g in cubic)
        assert sum(1 for g in cubic if g.is_connected()) == connected
        # K_4 plus each cubic graph of order n - 4
        assert len(cubic) - connected == {8: 1, 10: 2}[order]
        for a, b in combinations(cubic, 2):
            assert not nx.is_isomorphic(a.to_networkx(), b.to_networkx())

    def test_fair_sets_of_cubic_graphs_up_to_order_ten(self):
        corpus = as_corpus(atlas_graphs(1, 7, regular=3))
        corpus += corpus_from_file(FIXTURES / "cubic8.g6") + corpus_from_file(FIXTURES / "cubic10.g6")
        report = service.run_census(corpus, k_values=(2,), checks=("fair_set_size",), regular=3)
        assert report.corpus.graphs == 30
        assert statuses(report.records, "fair_set_size") == {"pass"}

    def test_regular_range_on_cubic_graphs_up_to_order_eight(self):
        corpus = as_corpus(atlas_graphs(1, 7, regular=3)) + corpus_from_file(FIXTURES / "cubic8.g6")
        report = service.run_census(corpus, k_values=(2, 3), checks=("fair_set_size", "regular_range"))
        assert report.passed
        assert not report.with_status("discrepancy")
        in_range = [r for r in report.records if r.check == "regular_range" and r.k == 3]
        assert len(in_range) == 9
        assert {r.status for r in in_range} == {"pass"}
        assert all(3 <= r.observed <= 4 for r in in_range)


# ---------------------------------------------------------------------------
# Replay
# ---------------------------------------------------------------------------

class TestReplay:
    def test_size_above_witness(self, p5):
        witness = ReplayWitness(
            graph6=encode_graph6(p5), k=2, comparison="size_above",
            partition=Partition.from_blocks([[0, 3, 4], [1], [2]]), limit=2,
        )
        assert service.witness_holds(witness)
        assert not service.witness_holds(witness.model_copy(update={"limit": 3}))

    def test_invalid_partition_never_holds(self, p5):
        witness = ReplayWitness(
            graph6=encode_graph6(p5), k=2, comparison="size_above",
            partition=Partition.from_blocks([[v] for v in range(5)]), limit=1,
        )
        assert not service.witness_holds(witness)

    def test_size_below_witness(self, prism):
        witness = ReplayWitness(
            graph6=encode_graph6(prism), k=2, comparison="size_below",
            vertex_set=[0, 1, 2], limit=4,
        )
        # every vertex of the other triangle sees one vertex of {0, 1, 2}
        assert not service.witness_holds(witness)

    def test_precedes_witness(self, p5):
        first = Partition.from_blocks([[0, 1, 4], [2], [3]])
        second = Partition.from_blocks([[0, 3, 4], [1], [2]])
        witness = ReplayWitness(
            graph6=encode_graph6(p5), k=2, comparison="precedes", partition=first, reference=second,
        )
        assert service.witness_holds(witness)

    def test_replay_confirms_a_reported_discrepancy(self):
        (record,) = service.evaluate_graph(encode_graph6(build_path(2)), 4, ("max_degree_bound",))
        assert service.replay_record(record)

    def test_record_without_witness_does_not_replay(self):
        record = CheckRecord(graph6="A_", n=2, k=2, check="domination_chain", status="fail")
        assert not service.replay_record(record)


# ---------------------------------------------------------------------------
# Extremal scan and corpora
# ---------------------------------------------------------------------------

class TestExtremal:
    def test_scan_up_to_order_eight(self):
        report = service.run_extremal_scan(max_order=8)
        assert report.passed
        regular = [r for r in report.records if r.check == "regular_extremal"]
        assert {r.n for r in regular} == {2, 4, 6, 8}
        assert all(r.observed == r.n for r in regular)
        trees = {r.subject: r.observed for r in report.records if r.check == "tree_extremal" and r.subject}
        assert trees["P_2"] == 2
        assert trees["P_3"] == 2
        assert trees["P_4"] == 3


class TestCorpora:
    def test_atlas_counts(self):
        assert sum(1 for _ in atlas_graphs(4, 4)) == 11
        assert sum(1 for _ in atlas_graphs(1, 7, regular=3)) == 3

    def test_atlas_stops_at_seven(self):
        with pytest.raises(ValueError):
            list(atlas_graphs(1, 8))

    def test_tree_counts(self):
        assert [sum(1 for _ in tree_graphs(n, n)) for n in range(1, 9)] == [1, 1, 1, 2, 3, 6, 11, 23]

    def test_as_corpus_numbers_lines(self):
        lines = as_corpus([build_path(2), build_path(3)])
        assert [line.number for line in lines] == [1, 2]
        assert lines[0].text == "A_"
