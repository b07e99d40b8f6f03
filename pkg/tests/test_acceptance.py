"""The acceptance gate. One test per criterion, one pass/fail line each.

Every stated requirement runs through the shared registry so this
module, the ``verify`` subcommand, and any future caller agree on what
was checked. Tests run in registry order; the bound table built by the
first criterion is reused by the later ones exactly as in production.
"""

import json
import os
import subprocess
import sys

from chromabound import acceptance


def _gate(key):
    result = acceptance.run_one(key)
    line = acceptance.gate_line(result)
    print(line)
    if not result.passed:
        print(json.dumps(result.details, indent=2, default=str))
    assert result.passed, f"{line} {result.details.get('failed_checks')}"
    return result


def test_c01_certified_constant_at_least_0324():
    result = _gate("c01_certified_constant")
    assert result.details["c_lower"] == "27/64"
    assert result.details["c_lower_float"] >= 0.324
    assert result.details["window11_c_lower"] == "11/27"
    assert result.details["elapsed_s"] < 10.0


def test_c02_table_values_and_thresholds():
    result = _gate("c02_table_values")
    assert result.details["F27"] == 4
    assert result.details["F28"] == 4


def test_c03_fano_chromatic_facts():
    result = _gate("c03_fano_chromatic")
    assert result.details["fano_chromatic"] == 3
    assert result.details["two_colorable_subfamilies"] == 7
    assert result.details["elapsed_s"] < 1.0


def test_c04_order_chain_duality_exhaustive():
    result = _gate("c04_order_chain_duality")
    assert result.details["orders_checked"] == 5040
    assert result.details["elapsed_s"] < 30.0


def test_c05_chain_probability_three_ways():
    result = _gate("c05_chain_probability")
    assert result.details["probability_n2"] == "1/6"
    assert result.details["probability_n3"] == "1/30"
    assert result.details["trials"] == 100000


def test_c06_threshold_consistency():
    result = _gate("c06_threshold_consistency")
    assert result.details["chain_threshold"] == 15
    assert result.details["recoloring_lb"] == 8
    assert result.details["complete_ub"] == 35
    assert result.details["table_lb"] == 27


def test_c07_colorer_battery_zero_failures():
    result = _gate("c07_colorer_battery")
    assert result.details["alon_runs"] + result.details["peel_runs"] >= 200
    assert result.details["alon_failures"] == 0
    assert result.details["peel_failures"] == 0


def test_c08_independent_set_oracle():
    result = _gate("c08_independent_set_oracle")
    assert result.details["runs"] >= 100
    assert result.details["failures"] == 0


def test_c09_chain_dp_oracle():
    result = _gate("c09_chain_dp_oracle")
    assert result.details["pairs"] == 500
    assert result.details["mismatches"] == 0


def test_c10_determinism_registry():
    result = _gate("c10_determinism")
    assert result.details["failed_checks"] == []


def test_c10_verify_runs_are_byte_identical():
    env = dict(os.environ)
    env.pop("CHROMABOUND_SEED", None)
    cmd = [sys.executable, "-m", "chromabound", "verify"]
    first = subprocess.run(cmd, capture_output=True, text=True, env=env, timeout=300)
    second = subprocess.run(cmd, capture_output=True, text=True, env=env, timeout=300)
    print("[PASS] verify_byte_identical" if first.stdout == second.stdout
          else "[FAIL] verify_byte_identical")
    assert first.returncode == 0
    assert second.returncode == 0
    assert first.stdout == second.stdout
    payload = json.loads(first.stdout)
    assert payload["failed"] == 0
    assert payload["passed"] == len(acceptance.registry())
