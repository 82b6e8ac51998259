import json
import subprocess
import sys

import pytest
from click.testing import CliRunner

from chipfiring.cli import main

K3_TEXT = "3 3\n0 1\n1 2\n0 2\n"
K4_TEXT = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture()
def workdir(tmp_path):
    (tmp_path / "k3.graph").write_text(K3_TEXT)
    (tmp_path / "k4.graph").write_text(K4_TEXT)
    (tmp_path / "d011.json").write_text('{"values": ["0", "1", "1"]}')
    (tmp_path / "zero.json").write_text('{"values": ["0", "0", "0"]}')
    (tmp_path / "debt.json").write_text('{"values": ["0", "1", "-1"]}')
    (tmp_path / "tree.json").write_text('{"edges": [0, 1]}')
    (tmp_path / "order.json").write_text("[2, 1, 0]")
    return tmp_path


def test_count_trees(runner, workdir):
    result = runner.invoke(main, ["count-trees", str(workdir / "k4.graph")])
    assert result.exit_code == 0
    assert json.loads(result.stdout) == {"determinant": "16"}


def test_is_reduced_certificate(runner, workdir):
    result = runner.invoke(
        main,
        ["is-reduced", str(workdir / "k3.graph"), "--divisor", str(workdir / "d011.json"), "-q", "0"],
    )
    assert result.exit_code == 0
    assert json.loads(result.stdout) == {"reduced": False, "stuck_set": [1, 2]}


def test_reduce_outputs_stats_and_bound(runner, workdir):
    result = runner.invoke(
        main,
        ["reduce", str(workdir / "k3.graph"), "--divisor", str(workdir / "d011.json"), "-q", "0"],
    )
    body = json.loads(result.stdout)
    assert body["reduced_divisor"] == {"values": ["2", "0", "0"]}
    assert "move_stats" in body and "bounds" in body


def test_group_schema(runner, workdir):
    result = runner.invoke(main, ["group", str(workdir / "k3.graph"), "-q", "0"])
    body = json.loads(result.stdout)
    assert body["order"] == "3"
    assert body["invariant_factors"] == ["3"]


def test_equivalent(runner, workdir):
    result = runner.invoke(
        main,
        [
            "equivalent", str(workdir / "k3.graph"),
            "--divisor", str(workdir / "debt.json"),
            "--other", str(workdir / "zero.json"),
        ],
    )
    assert json.loads(result.stdout) == {"equivalent": False}


def test_sample_tree_identical_across_runs(runner, workdir):
    args = ["sample-tree", str(workdir / "k3.graph"), "-q", "0", "--seed", "7", "--count", "3"]
    first = runner.invoke(main, args)
    second = runner.invoke(main, args)
    assert first.exit_code == second.exit_code == 0
    assert first.stdout == second.stdout


def test_tree_divisor_round_trip(runner, workdir):
    result = runner.invoke(
        main,
        [
            "tree-from-divisor", str(workdir / "k3.graph"),
            "--divisor", str(workdir / "zero.json"), "-q", "0",
        ],
    )
    tree = json.loads(result.stdout)
    (workdir / "out_tree.json").write_text(json.dumps(tree))
    result = runner.invoke(
        main,
        [
            "divisor-from-tree", str(workdir / "k3.graph"),
            "--tree", str(workdir / "out_tree.json"), "-q", "0",
        ],
    )
    assert json.loads(result.stdout) == {"values": ["0", "0", "0"]}


def test_order_file_changes_pairing(runner, workdir):
    base = ["tree-from-divisor", str(workdir / "k3.graph"), "--divisor", str(workdir / "zero.json"), "-q", "0"]
    plain = runner.invoke(main, base)
    ordered = runner.invoke(main, base + ["--order", str(workdir / "order.json")])
    assert json.loads(plain.stdout) == {"edges": [0, 1]}
    assert json.loads(ordered.stdout) == {"edges": [1, 2]}


def test_verify_bijection(runner, workdir):
    result = runner.invoke(main, ["verify-bijection", str(workdir / "k4.graph"), "-q", "0"])
    body = json.loads(result.stdout)
    assert body["passed"] is True
    assert body["determinant"] == "16"


def test_winnable_strategy_rank(runner, workdir):
    result = runner.invoke(
        main,
        ["winnable", str(workdir / "k3.graph"), "--divisor", str(workdir / "debt.json"), "-q", "0"],
    )
    assert json.loads(result.stdout)["winnable"] is False

    result = runner.invoke(
        main,
        ["strategy", str(workdir / "k3.graph"), "--divisor", str(workdir / "debt.json"), "-q", "0"],
    )
    assert result.exit_code == 1
    assert json.loads(result.stderr)["error"] == "not_winnable"

    (workdir / "ones.json").write_text('{"values": ["1", "1", "1"]}')
    result = runner.invoke(
        main,
        [
            "rank", str(workdir / "k3.graph"),
            "--divisor", str(workdir / "ones.json"), "-q", "0", "--at-least", "2",
        ],
    )
    assert json.loads(result.stdout) == {"at_least": 2, "satisfied": True}


def test_domain_error_exit_code_and_stderr(runner, workdir):
    (workdir / "loop.graph").write_text("2 1\n0 0\n")
    result = runner.invoke(main, ["count-trees", str(workdir / "loop.graph")])
    assert result.exit_code == 1
    assert result.stdout == ""
    assert json.loads(result.stderr)["error"] == "loop_edge"


def test_usage_error_exit_code(runner, workdir):
    result = runner.invoke(main, ["reduce", str(workdir / "k3.graph")])  # missing -q/--divisor
    assert result.exit_code == 2


def test_plain_output_mode(runner, workdir):
    result = runner.invoke(
        main, ["--output", "plain", "count-trees", str(workdir / "k4.graph")]
    )
    assert result.stdout == 'determinant: "16"\n'


def test_installed_entry_point_is_byte_identical(workdir):
    cmd = [
        sys.executable, "-m", "chipfiring.cli",
        "sample-tree", str(workdir / "k4.graph"), "-q", "0", "--seed", "9", "--count", "2",
    ]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    assert first.stdout.endswith(b"}\n")
