"""CLI contract: payload on stdout, manifest on stderr, stable exit codes."""

import hashlib
import json
import os
import subprocess
import sys

import pytest

from chromabound import core


def run_cli(args, stdin_text=None, env_extra=None):
    env = dict(os.environ)
    env.pop("CHROMABOUND_SEED", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "chromabound", *args],
        input=stdin_text,
        capture_output=True,
        text=True,
        env=env,
        timeout=120,
    )


def manifest_of(proc):
    return json.loads(proc.stderr.strip().splitlines()[-1])


def test_gen_fano_payload_and_manifest():
    proc = run_cli(["gen", "--kind", "fano"])
    assert proc.returncode == 0
    H = core.Hypergraph.from_json(proc.stdout)
    assert H == core.fano()
    manifest = manifest_of(proc)
    assert manifest["command"] == "gen"
    assert manifest["seed"] == 271828
    digest = hashlib.sha256(proc.stdout.encode()).hexdigest()
    assert manifest["stdout_sha256"] == digest


def test_gen_random_is_seed_deterministic():
    args = ["--seed", "7", "gen", "--kind", "random", "--num-vertices", "12",
            "--num-edges", "8"]
    a = run_cli(args)
    b = run_cli(args)
    c = run_cli(["--seed", "8", *args[2:]])
    assert a.stdout == b.stdout
    assert a.stdout != c.stdout


def test_env_seed_is_honored():
    via_env = run_cli(
        ["gen", "--kind", "random", "--num-vertices", "10", "--num-edges", "5"],
        env_extra={"CHROMABOUND_SEED": "31"},
    )
    via_flag = run_cli(
        ["--seed", "31", "gen", "--kind", "random", "--num-vertices", "10",
         "--num-edges", "5"],
    )
    assert via_env.stdout == via_flag.stdout
    assert manifest_of(via_env)["seed"] == 31


def test_exact_chromatic_number_pipeline():
    gen = run_cli(["gen", "--kind", "fano"])
    proc = run_cli(["exact"], stdin_text=gen.stdout)
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"chromatic_number": 3}


def test_exact_r_decision():
    gen = run_cli(["gen", "--kind", "fano"])
    proc = run_cli(["exact", "--r", "2"], stdin_text=gen.stdout)
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["status"] == "no"
    assert payload["coloring"] is None


def test_exact_r_max_exceeded_is_reported():
    gen = run_cli(["gen", "--kind", "fano"])
    proc = run_cli(["exact", "--r-max", "2"], stdin_text=gen.stdout)
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"chromatic_number": None, "exceeds": 2}


def test_exact_budget_exhaustion_exits_one():
    gen = run_cli(["gen", "--kind", "fano"])
    proc = run_cli(["exact", "--r", "3", "--max-nodes", "2"], stdin_text=gen.stdout)
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["status"] == "budget_exceeded"


def test_color_alon_produces_proper_coloring():
    gen = run_cli(["--seed", "3", "gen", "--kind", "random", "--num-vertices",
                   "10", "--num-edges", "6"])
    proc = run_cli(["--seed", "4", "color", "--algorithm", "alon", "--r", "3"],
                   stdin_text=gen.stdout)
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    H = core.Hypergraph.from_json(gen.stdout)
    coloring = core.Coloring(tuple(payload["coloring"]["colors"]), 3)
    ok, _ = core.is_proper(H, coloring)
    assert ok


def test_color_peel_over_budget_exits_two():
    gen = run_cli(["gen", "--kind", "complete", "--num-vertices", "6"])
    proc = run_cli(["color", "--algorithm", "peel", "--r", "6"],
                   stdin_text=gen.stdout)
    assert proc.returncode == 2
    assert proc.stdout == ""
    assert "error:" in proc.stderr


def test_color_exhausted_restarts_exits_one():
    gen = run_cli(["gen", "--kind", "fano"])
    proc = run_cli(["color", "--algorithm", "alon", "--r", "2",
                    "--max-restarts", "3"], stdin_text=gen.stdout)
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["attempts"] == 3


def test_chains_probability():
    proc = run_cli(["chains", "--probability", "3", "2"])
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["probability"] == "1/30"


def test_chains_longest_with_palette():
    gen = run_cli(["gen", "--kind", "fano"])
    proc = run_cli(["chains", "--palette", "3"], stdin_text=gen.stdout)
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["longest"] == 2
    assert payload["rank_coloring"]["succeeded"] is True


def test_bounds_report_certified_constant():
    proc = run_cli(["bounds", "--n", "3", "--n-max", "1500", "--r-max", "4"])
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["window"]["c_lower"] == "27/64"
    assert payload["window"]["M"] == 12


def test_bad_instance_exits_two(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 3, "num_vertices": 2, "edges": [[0, 1, 5]]}')
    proc = run_cli(["exact", "--input", str(bad)])
    assert proc.returncode == 2
    assert "error:" in proc.stderr


def test_unknown_verify_key_exits_two():
    proc = run_cli(["verify", "--key", "c99_not_real"])
    assert proc.returncode == 2


def test_verify_single_group_passes():
    proc = run_cli(["verify", "--group", "fano"])
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["failed"] == 0
    keys = [c["key"] for c in payload["criteria"]]
    assert keys == ["c03_fano_chromatic"]
    assert "[PASS] c03_fano_chromatic" in proc.stderr
    assert not any(
        k.startswith("elapsed") for c in payload["criteria"] for k in c["details"]
    )
