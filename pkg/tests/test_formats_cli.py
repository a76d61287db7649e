"""File formats, the command-line interface, and fixture integrity."""

import json
import subprocess
import sys

import pytest

from edge_ideal_lab.claims import CLAIMS, run_claims
from edge_ideal_lab.errors import ParseError
from edge_ideal_lab.fixtures import (
    ASSCE_GENERATORS,
    FIG9_EDGES,
    assce,
    fig9,
    graph_catalog,
)
from edge_ideal_lab.formats import (
    looks_like_ideal,
    parse_graph,
    parse_ideal,
    serialize_graph,
    serialize_ideal,
)
from edge_ideal_lab.graphs import Graph
from edge_ideal_lab.stability import ChainReport


class TestGraphFormat:
    def test_basic_parse(self):
        g = parse_graph("x1 x2\nx2 x3\n")
        assert g.labels == ("x1", "x2", "x3")
        assert g.edges == ((0, 1), (1, 2))

    def test_header_fixes_order_and_allows_isolated(self):
        g = parse_graph("vars: a b c\nc a\n")
        assert g.labels == ("a", "b", "c")
        assert g.degrees == (1, 0, 1)

    def test_comments_ignored(self):
        g = parse_graph("# a comment\nx1 x2  # trailing\n\n")
        assert len(g.edges) == 1

    def test_errors_carry_line_numbers(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_graph("x1 x2\nx1 x2 x3\n")
        with pytest.raises(ParseError, match="line 1.*loop"):
            parse_graph("x1 x1\n")
        with pytest.raises(ParseError, match="line 3.*duplicate"):
            parse_graph("x1 x2\nx2 x3\nx2 x1\n")
        with pytest.raises(ParseError, match="not in vars"):
            parse_graph("vars: x1 x2\nx1 x3\n")

    def test_round_trip(self):
        g = fig9()
        assert parse_graph(serialize_graph(g)) == g


class TestIdealFormat:
    def test_parse_with_exponents_and_repeats(self):
        i = parse_ideal("vars: x1 x2\nx1^2*x2\nx1*x1*x2\n")
        assert len(i) == 1 and i.gens[0].exps == (2, 1)

    def test_header_required(self):
        with pytest.raises(ParseError, match="vars"):
            parse_ideal("x1*x2\n")

    def test_unknown_variable(self):
        with pytest.raises(ParseError, match="line 2.*unknown"):
            parse_ideal("vars: x1 x2\nx1*x3\n")

    def test_unused_variable_flagged_unless_allowed(self):
        text = "vars: x1 x2 x3\nx1*x2\n"
        with pytest.raises(ParseError, match="never used"):
            parse_ideal(text)
        i = parse_ideal(text, allow_unused_vars=True)
        assert i.vset.n == 3

    def test_unit_ideal(self):
        assert parse_ideal("vars: x1\n1\n", allow_unused_vars=True).is_unit

    def test_round_trip(self):
        i = assce()
        assert parse_ideal(serialize_ideal(i)) == i

    def test_detection_heuristic(self):
        assert looks_like_ideal("vars: x1 x2\nx1*x2\n")
        assert not looks_like_ideal("x1 x2\n")


class TestFixtureIntegrity:
    def test_fig9_edges_byte_exact(self):
        expected = (
            "vars: x1 x2 x3 x4 x5 x6 x7 x8 x9\n"
            "x1 x2\nx1 x3\nx2 x3\nx3 x4\nx4 x5\nx5 x6\nx5 x9\nx6 x7\nx7 x8\nx8 x9\n"
        )
        assert serialize_graph(fig9()) == expected
        assert sorted(tuple(sorted(e)) for e in FIG9_EDGES) == [
            tuple(sorted((fig9().labels[u], fig9().labels[v]))) for u, v in fig9().edges
        ]

    def test_assce_generators_byte_exact(self):
        expected = (
            "vars: x1 x2 x3 x4 x5 x6\n"
            "x4*x5*x6\nx3*x5*x6\nx2*x4*x6\nx2*x3*x5\nx2*x3*x4\n"
            "x1*x4*x5\nx1*x3*x6\nx1*x3*x4\nx1*x2*x6\nx1*x2*x5\n"
        )
        assert serialize_ideal(assce()) == expected
        assert len(ASSCE_GENERATORS) == 10
        assert {tuple(sorted(t)) for t in ASSCE_GENERATORS} == {
            tuple(i + 1 for i in g.support) for g in assce().gens
        }

    def test_catalog_names(self):
        catalog = graph_catalog()
        for name in ("E1", "STAR31", "K33", "FIG7", "FIG8", "FIG9", "C3", "C4", "C5"):
            assert name in catalog


def run_cli(*args: str, files: dict[str, str] | None = None, tmp_path=None):
    cwd = None
    if files:
        for name, content in files.items():
            (tmp_path / name).write_text(content)
        cwd = tmp_path
    proc = subprocess.run(
        [sys.executable, "-m", "edge_ideal_lab", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
    )
    return proc


C4_GRAPH = "x1 x2\nx2 x3\nx3 x4\nx1 x4\n"


class TestCli:
    def test_graph_deficiency(self, tmp_path):
        proc = run_cli(
            "graph", "fig7.graph", "deficiency",
            files={"fig7.graph": "x1 x3\nx2 x3\nx3 x4\nx4 x5\nx4 x6\n"},
            tmp_path=tmp_path,
        )
        assert proc.returncode == 0
        assert "value: 2" in proc.stdout

    def test_graph_parallelize_then_matching(self, tmp_path):
        proc = run_cli(
            "graph", "e1.graph", "parallelize", "--mult", "3,3", "--then", "matching",
            files={"e1.graph": "x1 x2\n"},
            tmp_path=tmp_path,
        )
        assert proc.returncode == 0
        assert "'value': 3" in proc.stdout

    def test_graph_parallelize_mult_uses_header_order(self, tmp_path):
        # the vars: header pins the order the multiplicity vector refers to
        content = "vars: x1 x2 x3 x4 x5 x6\nx1 x3\nx2 x3\nx3 x4\nx4 x5\nx4 x6\n"
        proc = run_cli(
            "graph", "fig7.graph", "parallelize", "--mult", "1,1,2,2,1,1",
            "--then", "deficiency",
            files={"fig7.graph": content},
            tmp_path=tmp_path,
        )
        assert proc.returncode == 0
        assert "'value': 0" in proc.stdout

    def test_graph_duplicate_then_deficiency(self, tmp_path):
        proc = run_cli(
            "graph", "fig7.graph", "duplicate", "--edge", "x3 x4",
            "--then", "deficiency", "--format", "json",
            files={"fig7.graph": "x1 x3\nx2 x3\nx3 x4\nx4 x5\nx4 x6\n"},
            tmp_path=tmp_path,
        )
        assert proc.returncode == 0
        doc = json.loads(proc.stdout)
        assert doc["then"]["value"] == 0 and doc["vertices"] == 8

    def test_analyze_json_round_trips(self, tmp_path):
        proc = run_cli(
            "analyze", "c4.graph", "--max-power", "2", "--format", "json",
            files={"c4.graph": C4_GRAPH},
            tmp_path=tmp_path,
        )
        assert proc.returncode == 0
        doc = json.loads(proc.stdout)
        assert doc["schema"] == "edge-ideal-lab/1"
        report = ChainReport.from_json_dict(doc)
        assert report.to_json_dict() == doc
        assert doc["verdicts"]["n1_observed"] == 1

    def test_parse_error_exit_code(self, tmp_path):
        proc = run_cli(
            "analyze", "bad.graph",
            files={"bad.graph": "x1 x2 x3\n"},
            tmp_path=tmp_path,
        )
        assert proc.returncode == 2
        assert "line 1" in proc.stderr

    def test_missing_file_exit_code(self, tmp_path):
        proc = run_cli("analyze", "nope.graph", tmp_path=tmp_path, files={"d.txt": ""})
        assert proc.returncode == 2

    def test_budget_exit_code(self, tmp_path):
        proc = run_cli(
            "analyze", "fig9.graph", "--max-power", "5", "--closure-cap", "1000",
            files={"fig9.graph": serialize_graph(fig9())},
            tmp_path=tmp_path,
        )
        assert proc.returncode == 3
        assert "refused" in proc.stderr
        assert proc.stdout == ""  # no partial JSON on failure

    def test_verify_filtered(self, tmp_path):
        proc = run_cli("verify-paper", "--only", "spread", tmp_path=tmp_path, files={})
        assert proc.returncode == 0
        assert "PASS" in proc.stdout and "spread.values" in proc.stdout

    def test_battery_small(self, tmp_path):
        proc = run_cli(
            "property-battery", "--max-vertices", "3", "--max-power", "2",
            "--samples", "2", "--format", "json",
            tmp_path=tmp_path, files={},
        )
        assert proc.returncode == 0
        doc = json.loads(proc.stdout)
        assert all(c["passed"] for c in doc["checks"])


class TestClaims:
    def test_ids_unique(self):
        ids = [c.claim_id for c in CLAIMS]
        assert len(ids) == len(set(ids))

    def test_filter_selects_subset(self):
        results = run_claims(only="ass.c3")
        assert {r.claim_id for r in results} == {"ass.c3", "ass.c3sq"}
        assert all(r.passed for r in results)

    def test_tampered_fixture_fails_closure_claim(self):
        # negative control: drop one five-cycle edge and rerun the closure claim
        from edge_ideal_lab.claims import _claim_fig9_closure4
        from edge_ideal_lab.fixtures import graph_catalog, ideal_catalog

        graphs = graph_catalog()
        broken = Graph.from_edges(
            graphs["FIG9"].labels,
            [e for e in graphs["FIG9"].edges if e != (4, 8)] + [(3, 8)],
        )
        graphs["FIG9"] = broken
        ok, _ = _claim_fig9_closure4(graphs, ideal_catalog())
        assert not ok
