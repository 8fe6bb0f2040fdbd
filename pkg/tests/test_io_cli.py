import json

import pytest

from cutplanar import cli
from cutplanar import io as cio
from cutplanar.errors import ParseError
from cutplanar.gadgets import gjs_is_gadget, CrossoverGadget
from cutplanar.graph import Graph, LinearLayout


def complete(n):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


class TestGraphFormat:
    def test_round_trip(self):
        g = complete(4)
        assert cio.parse_graph(cio.write_graph(g)).edges == g.edges

    def test_comments_and_blank_lines(self):
        text = "c a comment\n\np 3 2\ne 1 2\nc another\ne 2 3\n"
        g = cio.parse_graph(text)
        assert g.n == 3 and g.m == 2

    def test_malformed_e_line_reports_line_number(self):
        with pytest.raises(ParseError) as ei:
            cio.parse_graph("p 3 1\ne 1\n")
        assert ei.value.line == 2

    def test_out_of_range_endpoint(self):
        with pytest.raises(ParseError):
            cio.parse_graph("p 2 1\ne 1 3\n")

    def test_edge_count_checked(self):
        with pytest.raises(ParseError):
            cio.parse_graph("p 3 2\ne 1 2\n")

    def test_layout_round_trip(self):
        g = complete(3)
        layout = LinearLayout((2, 0, 1))
        assert cio.parse_layout(cio.write_layout(layout), g) == layout

    def test_json_round_trip(self):
        g = Graph.from_edges(3, [(0, 1)], {0: "root"})
        g2 = cio.graph_from_json(cio.graph_to_json(g))
        assert g2.edges == g.edges and g2.labels == g.labels


class TestDot:
    def test_round_trip(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3), (1, 2)], {0: "a"})
        g2 = cio.parse_dot(cio.write_dot(g))
        assert g2.n == g.n and g2.edges == g.edges and g2.labels == g.labels


class TestGadgetJson:
    def test_round_trip(self):
        gadget = gjs_is_gadget()
        obj = cio.gadget_to_json(gadget)
        back = cio.gadget_from_json(json.loads(json.dumps(obj)))
        assert back.graph.edges == gadget.graph.edges
        assert back.terminals == gadget.terminals
        assert back.shift == gadget.shift
        assert back.layout == gadget.layout


@pytest.fixture
def k4_files(tmp_path):
    gpath = tmp_path / "k4.gr"
    lpath = tmp_path / "k4.layout"
    gpath.write_text(cio.write_graph(complete(4)))
    lpath.write_text("1 2 3 4\n")
    return str(gpath), str(lpath)


def run_cli(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestCli:
    def test_cutwidth_layout(self, capsys, k4_files):
        gpath, lpath = k4_files
        code, rep = run_cli(capsys, ["cutwidth", gpath, lpath])
        assert code == 0
        assert rep["results"]["width"] == 4
        assert rep["schema"] == 1

    def test_cutwidth_exact(self, capsys, k4_files):
        gpath, _ = k4_files
        code, rep = run_cli(capsys, ["cutwidth", gpath, "--exact"])
        assert code == 0
        assert rep["results"]["width"] == 4

    def test_parse_error_exit_code(self, capsys, tmp_path):
        bad = tmp_path / "bad.gr"
        bad.write_text("p 3 1\ne 1\n")
        code, rep = run_cli(capsys, ["cutwidth", str(bad)])
        assert code == cli.EXIT_PARSE
        assert "parse error" in rep["error"]

    def test_oracle_limit_exit_code(self, capsys, tmp_path):
        big = tmp_path / "big.gr"
        big.write_text(cio.write_graph(Graph.from_edges(19, [])))
        code, rep = run_cli(capsys, ["cutwidth", str(big), "--exact"])
        assert code == cli.EXIT_RESOURCE

    def test_planarize_k4_is(self, capsys, k4_files, tmp_path):
        gpath, lpath = k4_files
        prefix = str(tmp_path / "out")
        code, rep = run_cli(capsys, [
            "planarize", gpath, lpath, "--problem", "is", "--t", "1",
            "--out-prefix", prefix])
        assert code == 0
        r = rep["results"]
        assert r["t_prime"] == 10
        assert r["crossings_replaced"] == 1
        assert r["width_out"] <= r["width_in"] + r["gadget_width"] + 4
        out_graph = cio.parse_graph(open(r["files"]["graph"]).read())
        assert out_graph.n == 26

    def test_planarize_k4_verify(self, capsys, k4_files, tmp_path):
        gpath, lpath = k4_files
        code, rep = run_cli(capsys, [
            "planarize", gpath, lpath, "--problem", "is", "--t", "1",
            "--verify", "--out-prefix", str(tmp_path / "v")])
        assert code == 0
        assert rep["results"]["verified"] is True

    def test_planarize_k5_ds(self, capsys, tmp_path):
        g = complete(5)
        gpath = tmp_path / "k5.gr"
        lpath = tmp_path / "k5.layout"
        gpath.write_text(cio.write_graph(g))
        lpath.write_text("1 2 3 4 5\n")
        code, rep = run_cli(capsys, [
            "planarize", str(gpath), str(lpath), "--problem", "ds",
            "--t", "1", "--out-prefix", str(tmp_path / "k5")])
        assert code == 0
        r = rep["results"]
        assert r["crossings_replaced"] == 5
        assert r["t_prime"] == 1 + 5 * 48 == 241

    def test_solve_brute_and_dp_agree(self, capsys, tmp_path):
        g = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
        gpath = tmp_path / "c5.gr"
        gpath.write_text(cio.write_graph(g))
        code1, rep1 = run_cli(capsys, ["solve", str(gpath), "--problem", "ds",
                                       "--algo", "brute"])
        code2, rep2 = run_cli(capsys, ["solve", str(gpath), "--problem", "ds",
                                       "--algo", "dp"])
        assert code1 == code2 == 0
        assert rep1["results"]["optimum"] == rep2["results"]["optimum"] == 2

    def test_certify_builtin_is_gadget(self, capsys, tmp_path):
        gpath = tmp_path / "gadget.json"
        gpath.write_text(json.dumps(cio.gadget_to_json(gjs_is_gadget())))
        code, rep = run_cli(capsys, ["certify", str(gpath), "--hosts", "4"])
        assert code == 0
        assert rep["results"]["verdict"] == "PASS"
        assert rep["results"]["conditions"]["C1_legal_patterns"]

    def test_certify_bad_gadget_fails(self, capsys, tmp_path):
        bad = CrossoverGadget("is", Graph.from_edges(4, []), (0, 1, 2, 3),
                              LinearLayout.identity(4), 4)
        gpath = tmp_path / "bad.json"
        gpath.write_text(json.dumps(cio.gadget_to_json(bad)))
        code, rep = run_cli(capsys, ["certify", str(gpath), "--hosts", "2"])
        assert code == cli.EXIT_VERIFY

    def test_export_svg(self, capsys, tmp_path, k4_files):
        gpath, lpath = k4_files
        out = str(tmp_path / "k4.svg")
        code, rep = run_cli(capsys, ["export", gpath, lpath,
                                     "--format", "svg", "-o", out])
        assert code == 0
        content = open(out).read()
        assert content.count("r=\"3\"") == 1  # one crossing marker

    def test_export_dot_round_trip(self, capsys, tmp_path, k4_files):
        gpath, _ = k4_files
        out = str(tmp_path / "k4.dot")
        code, _ = run_cli(capsys, ["export", gpath, "--format", "dot",
                                   "-o", out])
        assert code == 0
        g = cio.parse_dot(open(out).read())
        assert g.edges == complete(4).edges
