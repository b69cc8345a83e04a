import json

import numpy as np
import pytest

from catgates.scenarios import (ConfigError, ScenarioConfig, run_scenario)


def test_unknown_scenario():
    with pytest.raises(ConfigError):
        ScenarioConfig(scenario="fig99", out_dir="x")


def test_unknown_override_key():
    with pytest.raises(ConfigError):
        ScenarioConfig(scenario="table1", out_dir="x",
                       overrides={"bogus": 1})


def test_from_json(tmp_path):
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps({"scenario": "table1", "seed": 7}))
    cfg = ScenarioConfig.from_json(cfg_path, out_dir=str(tmp_path / "out"))
    assert cfg.scenario == "table1"
    assert cfg.overrides == {"seed": 7}


def test_from_json_invalid(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ConfigError):
        ScenarioConfig.from_json(bad, out_dir="x")
    empty = tmp_path / "empty.json"
    empty.write_text("[]")
    with pytest.raises(ConfigError):
        ScenarioConfig.from_json(empty, out_dir="x")


def test_table1_deterministic(tmp_path):
    m1 = run_scenario(ScenarioConfig("table1", str(tmp_path / "a")))
    m2 = run_scenario(ScenarioConfig("table1", str(tmp_path / "b")))
    assert m1["files"] == m2["files"]
    assert abs(m1["summary"]["lambda_not"] - 0.80891) < 5e-4


def test_manifest_hashes_match_files(tmp_path):
    import hashlib
    out = tmp_path / "wf"
    manifest = run_scenario(ScenarioConfig("fig2_waveforms", str(out)))
    for name, entry in manifest["files"].items():
        digest = hashlib.sha256((out / name).read_bytes()).hexdigest()
        assert digest == entry["sha256"]
    assert (out / "manifest.json").exists()
    summary = json.loads((out / "summary.json").read_text())
    assert summary["schema_version"] == 1


def test_fig1_bloch_loops_closed(tmp_path):
    out = tmp_path / "bloch"
    manifest = run_scenario(ScenarioConfig("fig1_bloch", str(out)))
    for key, val in manifest["summary"].items():
        assert val < 1e-10
    data = np.genfromtxt(out / "bloch_not.csv", delimiter=",", names=True)
    r = np.column_stack([data["rx_plus"], data["ry_plus"], data["rz_plus"]])
    assert np.abs(np.linalg.norm(r, axis=1) - 1.0).max() < 1e-10


def test_fig3_populations_schema(tmp_path):
    out = tmp_path / "pops"
    cfg = ScenarioConfig("fig3_populations", str(out),
                         overrides={"n_steps": 2000})
    manifest = run_scenario(cfg)
    lines = (out / "populations.csv").read_text().splitlines()
    assert lines[0] == "gate,input,p_plus,p_minus,leakage"
    assert len(lines) == 7  # three gates, two inputs each
    assert manifest["summary"]["fidelity_not"] > 0.999


def test_fig6_grid_shape(tmp_path):
    out = tmp_path / "deco"
    cfg = ScenarioConfig("fig6_decoherence", str(out),
                         overrides={"n_steps": 500, "dim": 20})
    manifest = run_scenario(cfg)
    data = np.genfromtxt(out / "decoherence_grid.csv", delimiter=",",
                         names=True)
    assert data.shape[0] == 36
    assert manifest["summary"]["max_infidelity"] < 0.05


def test_circuit_map(tmp_path):
    out = tmp_path / "cm"
    manifest = run_scenario(ScenarioConfig("circuit_map", str(out)))
    payload = json.loads((out / "circuit.json").read_text())
    assert abs(payload["effective"]["kerr"] - 2 * np.pi * 12.5) < 1e-6
    assert abs(manifest["summary"]["d_alpha_at_10pct"] + 0.0125) < 1e-12
