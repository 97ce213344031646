"""Command-line interface: subcommands, JSON schemas, exit codes, piping."""

from __future__ import annotations

import io
import json

import pytest

from trt.cli import main
from trt.graph import decode_graph6


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_ex_human_and_json(capsys):
    code, out, _ = run(capsys, "ex", "--family", "t1", "--n", "10", "--p", "13")
    assert code == 0 and "42" in out and "clique_union" in out
    code, out, _ = run(capsys, "ex", "--family", "t1", "--n", "10", "--p", "13", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["value"] == 42 and data["k"] == 1 and data["r"] == 4
    assert list(data)[:7] == ["family", "n", "p", "k", "r", "value", "branch"]


def test_ex_witness_flag_emits_graph6(capsys):
    code, out, _ = run(
        capsys, "ex", "--family", "t1", "--n", "10", "--p", "13", "--witness", "--json"
    )
    data = json.loads(out)
    g = decode_graph6(data["witness_graph6"])
    assert g.n == 13 and g.edge_count() == 42


def test_ramsey_exact_and_json(capsys):
    code, out, _ = run(capsys, "ramsey", "--left", "t1:12", "--right", "t2:12")
    assert code == 0 and "= 18" in out
    code, out, _ = run(capsys, "ramsey", "--left", "t1:12", "--right", "t2:12", "--json")
    data = json.loads(out)
    assert data["kind"] == "exact" and data["value"] == 18
    assert data["rule"] == "t12-t12-equal-order"
    assert all(c["passed"] for c in data["trace"] if c["rule"] == data["rule"])


def test_ramsey_range_annotation(capsys):
    code, out, _ = run(capsys, "ramsey", "--left", "star:5", "--right", "t1:9", "--json")
    data = json.loads(out)
    assert code == 0 and data["kind"] == "range" and [data["lo"], data["hi"]] == [9, 10]
    assert data["notes"]


def test_ramsey_witness_flag(capsys):
    code, out, _ = run(
        capsys, "ramsey", "--left", "t1:8", "--right", "tprime:8", "--witness", "--json"
    )
    data = json.loads(out)
    g = decode_graph6(data["witness_graph6"])
    assert g.n == 10


def test_construct_check_round_trip(capsys, monkeypatch):
    code, out, _ = run(capsys, "construct", "extremal", "--family", "t2", "--n", "9", "--p", "20")
    assert code == 0
    line = out.strip()
    monkeypatch.setattr("sys.stdin", io.StringIO(line + "\n"))
    code, out, _ = run(capsys, "check", "--avoid", "t2:9")
    assert code == 0 and "free of t2:9" in out


def test_check_finds_forbidden_tree(capsys, monkeypatch):
    code, out, _ = run(capsys, "construct", "near-regular", "--p", "9", "--d", "5")
    monkeypatch.setattr("sys.stdin", io.StringIO(out))
    code, out, _ = run(capsys, "check", "--avoid", "star:6")
    assert code == 1 and "contains star:6" in out and "->" in out


def test_check_bad_input_exit_2(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("not graph6 at all\n"))
    code, _, err = run(capsys, "check", "--avoid", "t1:5")
    assert code == 2 and "byte offset" in err
    monkeypatch.setattr("sys.stdin", io.StringIO(""))
    code, _, err = run(capsys, "check", "--avoid", "t1:5")
    assert code == 2


def test_construct_ramsey_witness_json_descriptor(capsys, monkeypatch):
    code, out, err = run(
        capsys, "construct", "ramsey-witness", "--left", "t1:12", "--right", "t2:12", "--json"
    )
    assert code == 0
    g = decode_graph6(out.strip())
    assert g.n == 17
    meta = json.loads(err)
    assert meta["order"] == 17 and meta["descriptor"]["parts"][0]["kind"] == "degree_seq"
    # the emitted witness pipes through the checker clean on the left side
    monkeypatch.setattr("sys.stdin", io.StringIO(out))
    code, out, _ = run(capsys, "check", "--avoid", "t1:12")
    assert code == 0


def test_oracle_ex_cli(capsys):
    code, out, _ = run(capsys, "oracle", "ex", "--family", "t1", "--n", "6", "--p", "7", "--json")
    data = json.loads(out)
    assert code == 0 and data["value"] == 11
    g = decode_graph6(data["witness"])
    assert g.n == 7 and g.edge_count() == 11


def test_oracle_ramsey_cli(capsys):
    code, out, _ = run(
        capsys, "oracle", "ramsey", "--left", "star:4", "--right", "star:4", "--order", "6",
        "--json",
    )
    data = json.loads(out)
    assert code == 0 and data["arrows"] is True and data["counterexample"] is None
    code, out, _ = run(
        capsys, "oracle", "ramsey", "--left", "star:4", "--right", "star:4", "--order", "5",
    )
    assert code == 0 and "does not arrow" in out


def test_oracle_lemmas_cli(capsys):
    code, out, _ = run(capsys, "oracle", "lemmas", "--max-p", "7", "--json")
    data = json.loads(out)
    assert code == 0 and data["ok"] is True


def test_budget_exit_code_3(capsys):
    code, _, err = run(capsys, "oracle", "ex", "--family", "t1", "--n", "6", "--p", "11")
    assert code == 3 and "budget exceeded" in err
    code, _, err = run(
        capsys, "oracle", "ex", "--family", "t1", "--n", "6", "--p", "8",
        "--time-limit", "0.001",
    )
    assert code == 3


def test_max_order_env_override(capsys, monkeypatch):
    monkeypatch.setenv("TRT_MAX_ORDER", "7")
    code, _, err = run(capsys, "oracle", "ex", "--family", "t1", "--n", "6", "--p", "8")
    assert code == 3
    code, out, _ = run(
        capsys, "oracle", "ex", "--family", "t1", "--n", "6", "--p", "8", "--max-order", "8"
    )
    assert code == 0


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["ex", "--family", "wheel", "--n", "5", "--p", "9"])
    assert exc.value.code == 2
    code, _, err = run(capsys, "ramsey", "--left", "t1", "--right", "t2:12")
    assert code == 2 and "FAMILY:N" in err
    code, _, err = run(capsys, "ex", "--family", "tstar", "--n", "8", "--p", "12")
    assert code == 2 and "unsupported family" in err


def test_selftest_subset(capsys):
    code, out, _ = run(capsys, "selftest", "--only", "6,8")
    assert code == 0
    assert "criterion 6 [PASS]" in out and "criterion 8 [PASS]" in out


def test_cross_process_byte_determinism():
    # witness bytes must not depend on the interpreter's hash seed
    import os
    import subprocess
    import sys

    cmd = [
        sys.executable, "-m", "trt.cli",
        "construct", "extremal", "--family", "t2", "--n", "9", "--p", "20",
    ]
    outs = set()
    for seed in ("0", "314159"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        res = subprocess.run(cmd, capture_output=True, text=True, env=env, check=True)
        outs.add(res.stdout)
    assert len(outs) == 1
