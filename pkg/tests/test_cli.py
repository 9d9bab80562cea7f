"""Command-line surface: golden reports, schema conformance, exit codes."""

import json
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from zecap.cli import main, parse_graph, run
from zecap import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    edgeless_graph,
    strong_product,
)

GOLDEN = Path(__file__).parent / "golden"

PENTAGON_CSV = (
    "1/2,1/2,0,0,0\n"
    "0,1/2,1/2,0,0\n"
    "0,0,1/2,1/2,0\n"
    "0,0,0,1/2,1/2\n"
    "1/2,0,0,0,1/2\n"
)
PENTAGON_JSON = json.dumps(
    {
        "x_size": 5,
        "y_size": 5,
        "rows": [
            ["1/2", "1/2", "0", "0", "0"],
            ["0", "1/2", "1/2", "0", "0"],
            ["0", "0", "1/2", "1/2", "0"],
            ["0", "0", "0", "1/2", "1/2"],
            ["1/2", "0", "0", "0", "1/2"],
        ],
    }
)


@pytest.fixture(scope="module")
def schema():
    ref = resources.files("zecap") / "schema" / "report.schema.json"
    return json.loads(ref.read_text())


@pytest.fixture
def pentagon_csv_file(tmp_path):
    path = tmp_path / "pentagon.csv"
    path.write_text(PENTAGON_CSV)
    return str(path)


@pytest.fixture
def pentagon_json_file(tmp_path):
    path = tmp_path / "pentagon.json"
    path.write_text(PENTAGON_JSON)
    return str(path)


class TestGolden:
    def run_against(self, name: str, argv: list[str]):
        code, report = run(argv)
        assert code == 0
        report["wall_time_s"] = 0.0
        expected = json.loads((GOLDEN / name).read_text())
        assert report == expected

    def test_decode(self):
        self.run_against("decode2.json", ["decode", "2"])

    def test_bounds(self):
        self.run_against(
            "bounds_c5.json", ["bounds", "--graph", "C5", "--m", "1", "--tol", "1e-4"]
        )

    def test_decide(self):
        self.run_against(
            "decide_c5.json",
            ["decide-gt", "--graph", "C5", "--lambda", "2", "--budget", "100"],
        )


class TestSchemaConformance:
    def run_valid(self, schema, argv, expect_code=0):
        code, report = run(argv)
        assert code == expect_code, report
        jsonschema.validate(report, schema)
        json.dumps(report)  # everything must serialize
        return report

    def test_encode(self, schema):
        r = self.run_valid(schema, ["encode", "C5"])
        assert r["results"]["index"] == 689

    def test_decode(self, schema):
        r = self.run_valid(schema, ["decode", "689"])
        assert r["results"]["graph"]["vertices"] == 5

    def test_alpha(self, schema):
        r = self.run_valid(schema, ["alpha", "--graph", "C5^2"])
        assert r["results"]["alpha"] == 5

    def test_ladder(self, schema):
        r = self.run_valid(schema, ["ladder", "--graph", "C5", "--m", "1"])
        assert [lv["alpha"] for lv in r["results"]["levels"]] == [2, 5]

    def test_bounds(self, schema):
        r = self.run_valid(schema, ["bounds", "--graph", "K3"])
        assert r["results"]["lower"] == "1/1" and r["results"]["upper"] == "1/1"

    def test_theta_sdp(self, schema):
        r = self.run_valid(schema, ["theta-sdp", "--graph", "C5", "--tol", "1/1000"])
        assert r["results"]["hi_decimal"].startswith("2.236")

    def test_chif(self, schema):
        r = self.run_valid(schema, ["chif", "--graph", "C5"])
        assert r["results"]["value"] == "5/2"

    def test_decide_gt(self, schema):
        r = self.run_valid(
            schema, ["decide-gt", "--graph", "E3", "--lambda", "2", "--budget", "50"]
        )
        assert r["results"]["status"] == "Halted"

    def test_enumerate(self, schema):
        r = self.run_valid(
            schema,
            ["enumerate", "--lambda", "3/2", "--horizon", "10", "--stages", "12"],
        )
        assert [e["graph_index"] for e in r["results"]["emitted"]] == [4, 2, 5, 6, 7, 8, 9]
        assert r["results"]["pending_slots"] == [1, 2, 4]

    def test_preorder(self, schema):
        r = self.run_valid(schema, ["preorder", "C5", "E3"])
        assert r["results"]["established"] is True

    def test_asym_preorder(self, schema):
        r = self.run_valid(
            schema, ["asym-preorder", "C5", "C5", "--m", "1", "--budget", "4"]
        )
        assert r["results"]["status"] == "Established"
        assert (r["results"]["n"], r["results"]["k"]) == (1, 0)

    def test_channel_graph(self, schema, pentagon_csv_file):
        r = self.run_valid(schema, ["channel-graph", "--channel", pentagon_csv_file])
        assert r["results"]["graph"]["index"] == 689

    def test_capacity(self, schema, pentagon_json_file):
        r = self.run_valid(schema, ["capacity", "--channel", pentagon_json_file])
        assert r["results"]["log2_scale"]["lower"] == pytest.approx(1.1609, abs=1e-3)

    def test_locate(self, schema):
        r = self.run_valid(schema, ["locate", "--graph", "C5", "--M", "3"])
        assert r["results"]["cells"] == [17]
        assert r["results"]["singleton"] is True
        assert r["results"]["cell_intervals"] == [["17/8", "9/4"]]  # reduced form

    def test_squeeze(self, schema):
        r = self.run_valid(schema, ["squeeze", "--graph", "C5", "--K", "8"])
        assert r["results"]["status"] == "Value"

    def test_error_reports_also_conform(self, schema):
        code, report = run(["encode", "Q5"])
        assert code == 2
        jsonschema.validate(report, schema)
        assert report["results"]["kind"] == "input"


class TestExitCodes:
    def test_input_errors(self):
        assert run(["encode", "Q5"])[0] == 2
        assert run(["decode", "-1"])[0] == 2
        assert run(["locate", "--graph", "E3", "--M", "1"])[0] == 2
        assert run(["bounds", "--graph", "C5", "--tol", "0"])[0] == 2
        assert run(["theta-sdp", "--graph", "C5", "--tol", "nope"])[0] == 2
        assert run(["channel-graph", "--channel", "/does/not/exist.csv"])[0] == 2

    def test_budget_errors(self):
        code, report = run(["alpha", "--graph", "C5^2", "--node-budget", "1"])
        assert code == 3
        assert report["results"]["kind"] == "budget"

    def test_decide_exhausted_is_exit_three(self):
        code, report = run(
            ["decide-gt", "--graph", "C5", "--lambda", "sqrt(5)", "--budget", "30"]
        )
        assert code == 3
        assert report["results"]["status"] == "BudgetExhausted"

    def test_asym_inconclusive_is_exit_three(self):
        code, report = run(
            ["asym-preorder", "E5", "E4", "--m", "2", "--budget", "2"]
        )
        assert code == 3
        assert report["results"]["status"] == "Inconclusive"

    def test_squeeze_exhausted_is_exit_three(self):
        code, report = run(["squeeze", "--graph", "C5", "--K", "30", "--budget", "1"])
        assert code == 3
        assert report["results"]["status"] == "BudgetExhausted"

    def test_partial_ladder_is_exit_three(self):
        code, report = run(
            ["ladder", "--graph", "C5", "--m", "3", "--power-cap", "100"]
        )
        assert code == 3
        assert [lv["alpha"] for lv in report["results"]["levels"]] == [2, 5]
        assert "error" in report["results"]

    def test_version_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(["--version"])
        assert exc.value.code == 0
        assert "zecap" in capsys.readouterr().out

    def test_unknown_subcommand(self):
        with pytest.raises(SystemExit) as exc:
            run(["frobnicate"])
        assert exc.value.code == 2


class TestExpressionParser:
    def test_named_graphs(self):
        assert parse_graph("C5") == cycle_graph(5)
        assert parse_graph("K4") == complete_graph(4)
        assert parse_graph("E3") == edgeless_graph(3)
        assert parse_graph("S") == edgeless_graph(1)
        assert parse_graph("K1") == edgeless_graph(1)

    def test_numeric_index(self):
        assert parse_graph("689") == cycle_graph(5)
        assert parse_graph("0").n == 0

    def test_bitstring_and_edgetext(self):
        assert parse_graph("5:1001100101") == cycle_graph(5)
        assert parse_graph("5; 0-1,1-2,2-3,3-4,0-4") == cycle_graph(5)

    def test_union_product_precedence(self):
        got = parse_graph("S+C3*E2")
        expected = disjoint_union(
            edgeless_graph(1), strong_product(cycle_graph(3), edgeless_graph(2))
        )
        assert got == expected

    def test_power_binds_tightest(self):
        assert parse_graph("C3*E2^2") == strong_product(
            cycle_graph(3), edgeless_graph(4)
        )

    def test_power_is_left_associative(self):
        # (C3^2)^2 = C3^4 on 81 vertices
        assert parse_graph("C3^2^2").n == 81

    def test_parentheses(self):
        got = parse_graph("(S+C3)*E2")
        expected = strong_product(
            disjoint_union(edgeless_graph(1), cycle_graph(3)), edgeless_graph(2)
        )
        assert got == expected

    def test_whitespace(self):
        assert parse_graph(" C5 + S ") == disjoint_union(
            cycle_graph(5), edgeless_graph(1)
        )

    def test_rejects_malformed(self):
        from zecap import InputError

        for bad in ("", "C5+", "C2", "K0", "E0", "C5^0", "(C5", "C5)", "C5^S", "Q1"):
            with pytest.raises(InputError):
                parse_graph(bad)


class TestSideOutputs:
    def test_ladder_csv(self, tmp_path):
        out = tmp_path / "ladder.csv"
        code, _ = run(["ladder", "--graph", "C5", "--m", "1", "--csv", str(out)])
        assert code == 0
        lines = out.read_text().strip().splitlines()
        assert lines[0] == "m,alpha,value"
        assert lines[1] == "0,2,2"
        assert lines[2].startswith("1,5,2.2360679")

    def test_bounds_csv(self, tmp_path):
        out = tmp_path / "bounds.csv"
        code, _ = run(["bounds", "--graph", "C5", "--csv", str(out)])
        assert code == 0
        rows = {line.split(",")[0] for line in out.read_text().strip().splitlines()[1:]}
        assert {"ladder", "clique_cover", "theta_lo", "theta_hi", "lower", "upper"} <= rows

    def test_channel_json_auto_detection(self, schema, pentagon_json_file):
        code, report = run(["channel-graph", "--channel", pentagon_json_file])
        assert code == 0
        assert report["results"]["graph"]["index"] == 689


class TestDeterminism:
    def test_same_command_same_report(self):
        argv = ["bounds", "--graph", "S+C5", "--m", "1", "--tol", "1e-4"]
        _, first = run(argv)
        _, second = run(argv)
        first["wall_time_s"] = second["wall_time_s"] = 0.0
        assert first == second

    def test_main_prints_sorted_json(self, capsys):
        code = main(["decode", "2"])
        assert code == 0
        out = capsys.readouterr().out
        parsed = json.loads(out)
        assert list(parsed) == sorted(parsed)
        assert parsed["command"] == "decode"
