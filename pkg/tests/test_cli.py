import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from stringlift.cli import main

P3 = {"nodes": 3, "edges": [[0, 1, 1], [1, 2, 1]], "source": 0, "target": 2, "uniform_length": 1}
TRI_W = {"nodes": 3, "edges": [[0, 1, 1], [1, 2, 1], [0, 2, 3]], "source": 0, "target": 2}


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def p3_file(tmp_path) -> str:
    path = tmp_path / "p3.json"
    path.write_text(json.dumps(P3))
    return str(path)


@pytest.fixture
def tri_w_file(tmp_path) -> str:
    path = tmp_path / "tri.json"
    path.write_text(json.dumps(TRI_W))
    return str(path)


class TestGenerate:
    def test_writes_network_file(self, runner, tmp_path):
        out = tmp_path / "net.json"
        result = runner.invoke(main, ["generate", "--kind", "path", "--size", "3",
                                      "--out", str(out)])
        assert result.exit_code == 0, result.output
        assert json.loads(out.read_text()) == P3

    def test_seed_from_environment(self, runner, tmp_path):
        out_env = tmp_path / "env.json"
        out_flag = tmp_path / "flag.json"
        args = ["generate", "--kind", "erdos_renyi", "--size", "15", "--p", "1/3"]
        result = runner.invoke(main, args + ["--out", str(out_env)],
                               env={"STRINGLIFT_SEED": "5"})
        assert result.exit_code == 0, result.output
        result = runner.invoke(main, args + ["--seed", "5", "--out", str(out_flag)])
        assert result.exit_code == 0, result.output
        assert json.loads(out_env.read_text()) == json.loads(out_flag.read_text())

    def test_flag_overrides_environment(self, runner, tmp_path):
        out_a = tmp_path / "a.json"
        out_b = tmp_path / "b.json"
        args = ["generate", "--kind", "erdos_renyi", "--size", "15", "--p", "1/3"]
        runner.invoke(main, args + ["--seed", "7", "--out", str(out_a)],
                      env={"STRINGLIFT_SEED": "5"})
        runner.invoke(main, args + ["--seed", "7", "--out", str(out_b)])
        assert json.loads(out_a.read_text()) == json.loads(out_b.read_text())

    def test_bad_spec_is_input_error(self, runner, tmp_path):
        result = runner.invoke(main, ["generate", "--kind", "erdos_renyi", "--size", "10",
                                      "--out", str(tmp_path / "x.json")])
        assert result.exit_code == 2


class TestLift:
    def test_summary_output(self, runner, p3_file):
        result = runner.invoke(main, ["lift", "--net", p3_file])
        assert result.exit_code == 0, result.output
        assert "n = 2" in result.output
        assert "work (node-weight model) = 6" in result.output
        assert "work (string-weight model) = 4" in result.output
        assert "path: 0 -> 1 -> 2" in result.output

    def test_trace_file(self, runner, p3_file, tmp_path):
        trace = tmp_path / "trace.jsonl"
        result = runner.invoke(main, ["lift", "--net", p3_file, "--trace", str(trace)])
        assert result.exit_code == 0, result.output
        records = [json.loads(line) for line in trace.read_text().splitlines()]
        assert records[-1]["record"] == "lift_summary"
        assert records[-1]["work_node"] == 6

    def test_non_uniform_is_input_error(self, runner, tri_w_file):
        result = runner.invoke(main, ["lift", "--net", tri_w_file])
        assert result.exit_code == 2

    def test_bad_json_is_input_error(self, runner, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{nope")
        result = runner.invoke(main, ["lift", "--net", str(bad)])
        assert result.exit_code == 2


class TestBfs:
    @pytest.mark.parametrize("variant,expected", [
        ("naive-set", "time_units = 6"),
        ("enumerating", "time_units = 4"),
    ])
    def test_costed_variants(self, runner, p3_file, variant, expected):
        result = runner.invoke(main, ["bfs", "--net", p3_file, "--variant", variant])
        assert result.exit_code == 0, result.output
        assert expected in result.output

    def test_marked_prints_path(self, runner, p3_file):
        result = runner.invoke(main, ["bfs", "--net", p3_file, "--variant", "marked"])
        assert result.exit_code == 0, result.output
        assert "path: 0 -> 1 -> 2" in result.output

    def test_trace_tagged_with_variant(self, runner, p3_file, tmp_path):
        trace = tmp_path / "bfs.jsonl"
        result = runner.invoke(main, ["bfs", "--net", p3_file, "--variant", "naive-set",
                                      "--trace", str(trace)])
        assert result.exit_code == 0, result.output
        records = [json.loads(line) for line in trace.read_text().splitlines()]
        assert all(r["algorithm"] == "naive-set" for r in records)


class TestWeightedCommands:
    def test_dijkstra(self, runner, tri_w_file):
        result = runner.invoke(main, ["dijkstra", "--net", tri_w_file])
        assert result.exit_code == 0, result.output
        assert "distance = 2" in result.output
        assert "settle order: [0, 1, 2]" in result.output

    def test_liftoff(self, runner, tri_w_file):
        result = runner.invoke(main, ["liftoff", "--net", tri_w_file])
        assert result.exit_code == 0, result.output
        assert "node 2 lifts off at height 2" in result.output

    def test_pull_apart(self, runner, tri_w_file, tmp_path):
        out = tmp_path / "pull.jsonl"
        result = runner.invoke(main, ["pull-apart", "--net", tri_w_file, "--out", str(out)])
        assert result.exit_code == 0, result.output
        assert "separation = 2" in result.output
        assert "(0, 1) length 1" in result.output
        records = [json.loads(line) for line in out.read_text().splitlines()]
        assert records[-1]["record"] == "pull_apart_summary"


class TestVerify:
    def test_single_network_table(self, runner, p3_file):
        result = runner.invoke(main, ["verify", "--net", p3_file])
        assert result.exit_code == 0, result.output
        assert "correspondence: OK" in result.output
        assert "node-model work" in result.output

    def test_batch_passes(self, runner, tmp_path):
        batch = tmp_path / "batch.jsonl"
        batch.write_text(
            '{"kind": "path", "size": 5}\n'
            '{"kind": "erdos_renyi", "size": 12, "edge_probability": "1/3", "seed": 2}\n'
        )
        result = runner.invoke(main, ["verify", "--batch", str(batch), "--workers", "2"])
        assert result.exit_code == 0, result.output
        assert "passed 2/2" in result.output

    def test_batch_failure_exit_code(self, runner, tmp_path):
        batch = tmp_path / "batch.jsonl"
        batch.write_text(
            '{"kind": "path", "size": 5}\n'
            '{"kind": "erdos_renyi", "size": 30, "edge_probability": "1/1000000", "seed": 0}\n'
        )
        result = runner.invoke(main, ["verify", "--batch", str(batch)])
        assert result.exit_code == 1, result.output
        assert "generation_failed" in result.output
        assert "passed 1/2" in result.output

    def test_batch_and_net_together_rejected(self, runner, p3_file, tmp_path):
        batch = tmp_path / "batch.jsonl"
        batch.write_text('{"kind": "path", "size": 5}\n')
        result = runner.invoke(main, ["verify", "--batch", str(batch), "--net", p3_file])
        assert result.exit_code == 2


def test_round_trip_through_cli(runner, tmp_path):
    """generate writes a file every other subcommand accepts unchanged."""
    out = tmp_path / "grid.json"
    result = runner.invoke(main, ["generate", "--kind", "grid", "--size", "3", "--out", str(out)])
    assert result.exit_code == 0, result.output
    for command in (["lift"], ["bfs", "--variant", "marked"], ["dijkstra"],
                    ["liftoff"], ["pull-apart"], ["verify"]):
        result = runner.invoke(main, command + ["--net", str(out)])
        assert result.exit_code == 0, (command, result.output)
