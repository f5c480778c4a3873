"""Command-line behavior: formats, exit codes, cache handling."""

import io
import json
import subprocess
import sys

import pytest

from expocolor import winding
from expocolor.cli import main
from expocolor.graphs import graph_from_json_dict


def run_cli(argv, stdin_text=None, monkeypatch=None):
    if stdin_text is not None:
        assert monkeypatch is not None
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    return main(argv)


def test_gen_cycle_stdout(capsys):
    assert main(["gen", "cycle", "--len", "5"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["n"] == 5
    assert len(d["edges"]) == 5
    graph_from_json_dict(d)


def test_gen_even_cycle_is_usage_error(capsys):
    assert main(["gen", "cycle", "--len", "4"]) == 2
    assert "error" in capsys.readouterr().err


def test_gen_complete_and_mycielski(tmp_path, capsys):
    c5 = tmp_path / "c5.json"
    assert main(["gen", "cycle", "--len", "5", "--out", str(c5)]) == 0
    assert main(["gen", "mycielski", "--of", str(c5)]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["n"] == 11 and len(d["edges"]) == 20
    assert main(["gen", "complete", "--k", "4"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["n"] == 4 and len(d["edges"]) == 6


def test_gen_dot_format(capsys):
    assert main(["gen", "cycle", "--len", "5", "--format", "dot"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("graph")
    assert "--" in out


def test_gen_missing_params(capsys):
    assert main(["gen", "cycle"]) == 2
    assert main(["gen", "mycielski"]) == 2
    assert main(["gen", "complete"]) == 2
    capsys.readouterr()


def test_color_single_cycle_stdin(capsys, monkeypatch):
    code = run_cli(["color", "--len", "5"], "[2,1,1,1,1]", monkeypatch)
    assert code == 0
    verdict = json.loads(capsys.readouterr().out)
    assert verdict == {"color": 2, "branch": "BelowHalf", "ell2": 0, "p2": -2}


def test_color_accepts_array_of_arrays_and_jsonl(capsys, monkeypatch):
    code = run_cli(["color", "--len", "5"], "[[1,1,1,1,1],[1,1,1,1,2]]", monkeypatch)
    assert code == 0
    lines = capsys.readouterr().out.splitlines()
    assert [json.loads(x)["color"] for x in lines] == [1, 2]

    code = run_cli(
        ["color", "--n", "2"], "[1,1,1,1,1]\n[1,1,1,1,2]\n", monkeypatch
    )
    assert code == 0
    lines = capsys.readouterr().out.splitlines()
    assert [json.loads(x)["color"] for x in lines] == [1, 2]


def test_color_input_file(tmp_path, capsys):
    src = tmp_path / "rows.json"
    src.write_text("[1,1,1,1,1]")
    assert main(["color", "--len", "5", "--input", str(src)]) == 0
    assert json.loads(capsys.readouterr().out)["branch"] == "EqualEndpoints"


def test_color_odd_parity_exits_3(capsys, monkeypatch):
    code = run_cli(["color", "--len", "5"], "[1,2,1,2,3]", monkeypatch)
    assert code == 3
    assert "fixed points" in capsys.readouterr().err


def test_color_isolated_ck_exits_4(capsys, monkeypatch):
    code = run_cli(["color", "--len", "5", "--k", "5"], "[1,4,2,5,3]", monkeypatch)
    assert code == 4
    capsys.readouterr()


def test_color_usage_errors(capsys, monkeypatch):
    # no host at all
    assert run_cli(["color"], "[1,1,1]", monkeypatch) == 2
    capsys.readouterr()
    # both kinds of host
    monkeypatch.setattr(sys, "stdin", io.StringIO("[1,1,1]"))
    assert main(["color", "--len", "3", "--graph", "whatever.json"]) == 2
    capsys.readouterr()
    # malformed assignment payload
    monkeypatch.setattr(sys, "stdin", io.StringIO('{"not": "rows"}'))
    assert main(["color", "--len", "3"]) == 2
    capsys.readouterr()


def test_color_explicit_edge(capsys, monkeypatch):
    # edge 2,3 orients to (3,2); (1,1,2,2,1) keeps endpoints 2,1 distinct
    code = run_cli(["color", "--len", "5", "--edge", "2,3"], "[1,1,2,2,1]", monkeypatch)
    assert code == 0
    verdict = json.loads(capsys.readouterr().out)
    assert verdict["color"] in (1, 2)


def test_color_general_host_with_cache_env(tmp_path, capsys, monkeypatch):
    k4 = tmp_path / "k4.json"
    assert main(["gen", "complete", "--k", "4", "--out", str(k4)]) == 0
    cache_path = tmp_path / "cache.json"
    monkeypatch.setenv("EXPO_CACHE", str(cache_path))
    code = run_cli(["color", "--graph", str(k4)], "[[1,1,1,1],[2,2,1,1]]", monkeypatch)
    assert code == 0
    lines = [json.loads(x) for x in capsys.readouterr().out.splitlines()]
    assert len(lines) == 2
    cached = json.loads(cache_path.read_text())
    assert cached["cycles"] == [[0, 1, 2]]
    # second run reuses the cache file
    code = run_cli(["color", "--graph", str(k4)], "[3,3,2,2]", monkeypatch)
    assert code == 0
    assert json.loads(cache_path.read_text())["cycles"] == [[0, 1, 2]]
    capsys.readouterr()


def test_color_general_host_isolated_exits_4(tmp_path, capsys, monkeypatch):
    k4 = tmp_path / "k4.json"
    main(["gen", "complete", "--k", "4", "--out", str(k4)])
    code = run_cli(["color", "--graph", str(k4)], "[1,2,3,1]", monkeypatch)
    assert code == 4
    capsys.readouterr()


def test_verify_single_suite_jsonl(capsys):
    assert main(["verify", "label-congruence", "--n", "1"]) == 0
    out, err = capsys.readouterr()
    rep = json.loads(out.strip())
    assert rep["statement"] == "label congruences"
    assert rep["passed"] is True
    assert "[PASS]" in err


def test_verify_cycle_len_flag(capsys):
    assert main(["verify", "little-path", "--cycle-len", "5", "--k", "5"]) == 0
    rep = json.loads(capsys.readouterr().out.strip())
    assert rep["params"] == {"n": 2, "k": 5}


def test_verify_all_quick(capsys):
    assert main(["verify", "all", "--n-max", "1"]) == 0
    out, err = capsys.readouterr()
    reports = [json.loads(x) for x in out.splitlines()]
    statements = {r["statement"] for r in reports}
    assert "end-to-end pipeline" in statements
    assert all(r["passed"] for r in reports)
    assert err.count("[PASS]") == len(reports)


def test_verify_all_with_threads(capsys):
    assert main(["verify", "all", "--n-max", "1", "--threads", "2"]) == 0
    reports = [json.loads(x) for x in capsys.readouterr().out.splitlines()]
    assert all(r["passed"] for r in reports)


def test_verify_capacity_exits_5(capsys):
    assert main(["verify", "proper-k3", "--n", "10"]) == 5
    assert "cap" in capsys.readouterr().err


def test_verify_violations_exit_1(capsys, monkeypatch):
    real = winding.delta3

    def bad(i, j):
        if (i, j) == (1, 2):
            return 0
        return real(i, j)

    monkeypatch.setattr(winding, "delta3", bad)
    assert main(["verify", "chord-step", "--n", "1"]) == 1
    out, err = capsys.readouterr()
    rep = json.loads(out.strip())
    assert rep["passed"] is False and rep["violations"]
    assert "[FAIL]" in err


def test_verify_out_file(tmp_path, capsys):
    out = tmp_path / "reports.jsonl"
    assert main(["verify", "hitting-set", "--n", "1", "--out", str(out)]) == 0
    rep = json.loads(out.read_text().strip())
    assert rep["statement"] == "hitting set / bipartite remainder"
    capsys.readouterr()


def test_verify_end_to_end_sampled_graph(tmp_path, capsys):
    g = tmp_path / "grotzsch.json"
    c5 = tmp_path / "c5.json"
    main(["gen", "cycle", "--len", "5", "--out", str(c5)])
    main(["gen", "mycielski", "--of", str(c5), "--out", str(g)])
    assert (
        main(
            [
                "verify", "end-to-end", "--graph", str(g),
                "--samples", "50", "--seed", "3",
            ]
        )
        == 0
    )
    rep = json.loads(capsys.readouterr().out.strip())
    assert rep["checked"] == 50
    assert rep["params"]["mode"] == "sampled"


def test_verify_proper_ck_needs_big_k(capsys):
    assert main(["verify", "proper-ck", "--n", "1"]) == 2
    capsys.readouterr()


def test_bench_json_output(capsys):
    assert main(["bench", "--mode", "explicit", "--n", "5", "--reps", "3",
                 "--format", "json"]) == 0
    rows = [json.loads(x) for x in capsys.readouterr().out.splitlines()]
    assert rows[0]["mode"] == "explicit"
    assert rows[0]["reps"] == 3
    assert len(rows[0]["rep_seconds"]) == 3


def test_bench_baseline_table(capsys):
    assert main(["bench", "--mode", "baseline", "--n", "1", "--reps", "2"]) == 0
    out = capsys.readouterr().out
    assert "baseline" in out
    assert "assignments=27" in out


def test_unknown_subcommand_exits_2(capsys):
    assert main(["frobnicate"]) == 2
    assert main([]) == 2
    capsys.readouterr()


def test_console_script_wiring():
    proc = subprocess.run(
        [sys.executable, "-m", "expocolor.cli", "gen", "cycle", "--len", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["n"] == 3
