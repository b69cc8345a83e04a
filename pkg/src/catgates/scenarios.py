"""Canned end-to-end experiments producing CSV/JSON artifacts.

Each scenario embeds the reference parameter set (K = 2 pi x 12.5 rad/us,
alpha = 0.5, T = 1 us unless stated) so a bare invocation reproduces the
headline numbers; overrides are explicit and validated. Every run writes
a manifest.json with a sha256 per output file and a summary.json with the
scenario's headline scalars.
"""

from dataclasses import dataclass, field
import hashlib
import json
import os

import numpy as np

from . import circuit, fock, gates, metrics, noise, propagate, synth
from .squeeze import SqueezeSpec, amplified_gate_pipeline

SCHEMA_VERSION = 1

SCENARIO_IDS = (
    "table1", "fig1_bloch", "fig2_sweep", "fig2_waveforms",
    "fig3_populations", "fig4_cnot", "fig5_noise", "fig6_decoherence",
    "squeeze_pipeline", "circuit_map",
)

_GLOBAL_DEFAULTS = {
    "alpha": gates.DEFAULT_ALPHA,
    "kerr": gates.DEFAULT_KERR,
    "total_time": gates.DEFAULT_TIME,
    "dim": gates.DEFAULT_DIM,
    "n_steps": gates.DEFAULT_STEPS,
    "seed": 12345,
    "kappa": 0.05,
    "kappa_phi": 0.05,
    "snr_db": 10.0,
    "n_runs": 50,
}

_SCENARIO_DEFAULTS = {
    "fig4_cnot": {"dim": gates.DEFAULT_DIM_TWO_MODE,
                  "n_steps": gates.DEFAULT_STEPS_TWO_MODE},
    "fig5_noise": {"n_steps": 10000},
    "fig6_decoherence": {"n_steps": 4000},
    "squeeze_pipeline": {"dim": 60, "n_steps": 10000},
}


class ConfigError(ValueError):
    """Raised for malformed or unknown scenario configuration."""


@dataclass
class ScenarioConfig:
    scenario: str
    out_dir: str
    overrides: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.scenario not in SCENARIO_IDS:
            raise ConfigError(f"unknown scenario '{self.scenario}'")
        unknown = set(self.overrides) - set(_GLOBAL_DEFAULTS)
        if unknown:
            raise ConfigError(f"unknown override keys: {sorted(unknown)}")

    @classmethod
    def from_json(cls, path, out_dir=None):
        with open(path) as fh:
            try:
                raw = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"invalid JSON in {path}: {exc}") from exc
        if not isinstance(raw, dict) or "scenario" not in raw:
            raise ConfigError("config must be an object with a 'scenario' key")
        scenario = raw.pop("scenario")
        out = raw.pop("out_dir", out_dir)
        if out is None:
            raise ConfigError("out_dir must be given in config or flag")
        return cls(scenario=scenario, out_dir=out, overrides=raw)

    def params(self):
        p = dict(_GLOBAL_DEFAULTS)
        p.update(_SCENARIO_DEFAULTS.get(self.scenario, {}))
        p.update(self.overrides)
        return p


def _write_csv(path, header, rows, fmt="%.14e"):
    np.savetxt(path, np.asarray(rows), delimiter=",", fmt=fmt,
               header=header, comments="")


def _write_json(path, payload):
    payload = dict(payload)
    payload["schema_version"] = SCHEMA_VERSION
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _sha256(path):
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        h.update(fh.read())
    return h.hexdigest()


# --------------------------------------------------------------------------
# individual scenarios (each returns summary dict, writes files, and
# appends written paths to `made`)


def _scn_table1(p, out, made):
    rows = []
    for name, (mu0, eta0, theta, _) in gates.GATE_TABLE.items():
        lam = synth.solve_lambda(mu0, theta, p["total_time"])
        rows.append({"gate": name, "mu0": mu0, "eta0": eta0,
                     "theta": theta, "lambda": lam})
    path = os.path.join(out, "table1.json")
    _write_json(path, {"rows": rows})
    made.append(path)
    return {"lambda_not": rows[0]["lambda"],
            "lambda_hadamard": rows[1]["lambda"],
            "lambda_phase": rows[2]["lambda"]}


def _scn_fig1_bloch(p, out, made):
    summary = {}
    for name in gates.GATE_TABLE:
        spec = gates.gate_path_spec(name, p["total_time"])
        t = np.linspace(0.0, p["total_time"], 501)
        zeta = synth.invariant_vector(spec, t)   # (3, n)
        rows = np.column_stack([t, zeta.T, -zeta.T])
        path = os.path.join(out, f"bloch_{name}.csv")
        _write_csv(path, "t,rx_plus,ry_plus,rz_plus,rx_minus,ry_minus,rz_minus",
                   rows)
        made.append(path)
        summary[f"closure_{name}"] = float(np.abs(zeta[:, -1] - zeta[:, 0]).max())
    return summary


def _scn_fig2_waveforms(p, out, made):
    frame = fock.cat_frame(p["alpha"], 0.0, fock.FockSpace(p["dim"]))
    spec = gates.gate_path_spec("not", p["total_time"])
    sched = synth.single_qubit_controls(spec, frame, n_samples=2001)
    path = os.path.join(out, "waveforms_not.csv")
    sched.to_csv(path)
    made.append(path)
    return {"peak_chi": float(np.abs(sched.chi).max()),
            "peak_eps": float(np.abs(sched.eps).max()),
            "gap_margin": synth.gap_margin(sched, frame, p["kerr"])}


def _scn_fig2_sweep(p, out, made):
    alphas = (0.3, 0.5, 0.8, 1.1)
    kerrs = (2.0 * np.pi * 5.0, 2.0 * np.pi * 12.5)
    rows = []
    for kerr in kerrs:
        for alpha in alphas:
            run = gates.run_gate("not", alpha=alpha, kerr=kerr,
                                 total_time=p["total_time"], dim=p["dim"],
                                 n_steps=p["n_steps"])
            rows.append([alpha, kerr, 1.0 - run.fidelity])
    path = os.path.join(out, "sweep_not.csv")
    _write_csv(path, "alpha,kerr,infidelity", rows)
    made.append(path)
    return {"min_infidelity": float(min(r[2] for r in rows)),
            "max_infidelity": float(max(r[2] for r in rows))}


def _scn_fig3_populations(p, out, made):
    rows = []
    fidelities = {}
    frame = None
    for name in gates.GATE_TABLE:
        run = gates.run_gate(name, alpha=p["alpha"], kerr=p["kerr"],
                             total_time=p["total_time"], dim=p["dim"],
                             n_steps=p["n_steps"])
        frame = run.frame
        fidelities[name] = run.fidelity
        for label, ket in (("plus", frame.c_plus), ("minus", frame.c_minus)):
            pp, pm, leak = metrics.populations(run.unitary @ ket, frame)
            rows.append((name, label, pp, pm, leak))
    path = os.path.join(out, "populations.csv")
    with open(path, "w") as fh:
        fh.write("gate,input,p_plus,p_minus,leakage\n")
        for name, label, pp, pm, leak in rows:
            fh.write(f"{name},{label},{pp:.14e},{pm:.14e},{leak:.14e}\n")
    made.append(path)
    return {f"fidelity_{k}": v for k, v in fidelities.items()}


def _scn_fig4_cnot(p, out, made):
    run = gates.run_cnot(alpha=p["alpha"], kerr=p["kerr"],
                         total_time=p["total_time"], dim=p["dim"],
                         n_steps=p["n_steps"])
    cp, cm = run.frame.c_plus, run.frame.c_minus
    basis = [np.kron(s1, s2) for s1 in (cp, cm) for s2 in (cp, cm)]
    labels = ["pp", "pm", "mp", "mm"]
    path = os.path.join(out, "cnot_populations.csv")
    with open(path, "w") as fh:
        fh.write("input,p_pp,p_pm,p_mp,p_mm,leakage\n")
        for lab, ket in zip(labels, basis):
            outk = run.unitary @ ket
            probs = [abs(np.vdot(bk, outk)) ** 2 for bk in basis]
            leak = 1.0 - sum(probs)
            fh.write(lab + "," + ",".join(f"{v:.14e}" for v in probs)
                     + f",{leak:.14e}\n")
    made.append(path)
    return {"fidelity_cnot": run.fidelity}


def _scn_fig5_noise(p, out, made):
    spec = gates.gate_path_spec("hadamard", p["total_time"])
    frame = fock.cat_frame(p["alpha"], 0.0, fock.FockSpace(p["dim"]))
    target = gates.gate_target("hadamard", frame)
    deltas = np.linspace(-0.1, 0.1, 5)
    rows = []
    for k, chan in enumerate(noise.CHANNELS):
        for d in deltas:
            vec = [0.0, 0.0, 0.0]
            vec[k] = d
            drive = noise.apply_systematic(spec, vec)
            ham = gates.single_qubit_hamiltonian(spec, frame, p["kerr"],
                                                 drive_fn=drive)
            u = propagate.evolution_operator(ham, p["total_time"],
                                             p["n_steps"])
            fid = metrics.average_gate_fidelity(u, target)
            rows.append((chan, d, fid))
    sys_path = os.path.join(out, "systematic.csv")
    with open(sys_path, "w") as fh:
        fh.write("channel,delta,fidelity\n")
        for chan, d, fid in rows:
            fh.write(f"{chan},{d:.14e},{fid:.14e}\n")
    made.append(sys_path)

    summary = {}
    for chan in noise.CHANNELS:
        summary[f"min_fidelity_delta_{chan}"] = min(
            fid for c, _, fid in rows if c == chan)

    for kind in ("awgn", "pink"):
        cfg = noise.NoiseConfig(kind=kind, snr_db=p["snr_db"],
                                seed=p["seed"])
        stats = noise.monte_carlo("hadamard", cfg, p["n_runs"],
                                  alpha=p["alpha"], kerr=p["kerr"],
                                  total_time=p["total_time"], dim=p["dim"],
                                  n_steps=p["n_steps"])
        path = os.path.join(out, f"{kind}.csv")
        stats.to_csv(path)
        made.append(path)
        summary[f"mean_infidelity_{kind}"] = stats.mean
        summary[f"max_infidelity_{kind}"] = stats.max
    return summary


def _scn_fig6_decoherence(p, out, made):
    spec = gates.gate_path_spec("hadamard", p["total_time"])
    frame = fock.cat_frame(p["alpha"], 0.0, fock.FockSpace(p["dim"]))
    ham = gates.single_qubit_hamiltonian(spec, frame, p["kerr"])
    psi_t = (frame.c_plus + frame.c_minus) / np.sqrt(2.0)
    rho0 = np.outer(frame.c_plus, frame.c_plus.conj())
    kappas = np.linspace(0.0, p["kappa"], 6)
    kphis = np.linspace(0.0, p["kappa_phi"], 6)
    rows = []
    for ka in kappas:
        for kp in kphis:
            res = propagate.lindblad_evolve(ham, rho0, p["total_time"],
                                            ka, kp, frame.space,
                                            n_steps=p["n_steps"],
                                            n_store=2)
            fid = metrics.state_fidelity(res.final_state, psi_t)
            rows.append([ka, kp, 1.0 - fid])
    path = os.path.join(out, "decoherence_grid.csv")
    _write_csv(path, "kappa,kappa_phi,infidelity", rows)
    made.append(path)
    return {"max_infidelity": float(max(r[2] for r in rows))}


def _scn_squeeze_pipeline(p, out, made):
    sq = SqueezeSpec(r=1.2, eps2=2.0 * np.pi * 3.125)
    res = amplified_gate_pipeline(
        "hadamard", sq, alpha=p["alpha"], kerr=p["kerr"],
        kappa=p["kappa"], kappa_phi=p["kappa_phi"],
        total_time=p["total_time"], dim=p["dim"],
        n_steps_gate=p["n_steps"])
    path = os.path.join(out, "photon_trace.csv")
    _write_csv(path, "t,n_p", np.column_stack([res.times, res.photon_number]))
    made.append(path)
    return {"t_s_us": res.t_s, "fidelity": res.fidelity,
            "n_p_final": float(res.photon_number[-1])}


def _scn_circuit_map(p, out, made):
    omega_c = 2.0 * np.pi * 6000.0   # representative 6 GHz cavity
    e_c, e_j, e_j_mod = circuit.invert_effective_params(
        p["kerr"], p["kerr"] * p["alpha"] ** 2, 1, omega_c)
    cp = circuit.CircuitParams(e_c=e_c, e_j=e_j, e_j_mod=e_j_mod,
                               n_squids=1, v_p=1.0, c_p=1.0,
                               omega_p=omega_c, phi_p=0.0)
    eff = circuit.effective_params(cp)
    budget = circuit.error_propagation(cp, 0.1, 0.1, 0.1, alpha=p["alpha"])
    path = os.path.join(out, "circuit.json")
    _write_json(path, {
        "inputs": {"e_c": e_c, "e_j": e_j, "e_j_mod": e_j_mod,
                   "n_squids": 1},
        "effective": {"omega_c": eff.omega_c, "kerr": eff.kerr,
                      "eps2": eff.eps2, "chi": eff.chi,
                      "eps_re": eff.eps.real, "eps_im": eff.eps.imag},
        "error_budget_at_10pct": {
            "d_omega_c": budget.d_omega_c, "d_kerr": budget.d_kerr,
            "d_eps2": budget.d_eps2,
            "d_eps_fraction": budget.d_eps_fraction,
            "d_alpha": budget.d_alpha,
        },
    })
    made.append(path)
    return {"kerr": eff.kerr, "eps2": eff.eps2,
            "d_alpha_at_10pct": budget.d_alpha}


_RUNNERS = {
    "table1": _scn_table1,
    "fig1_bloch": _scn_fig1_bloch,
    "fig2_sweep": _scn_fig2_sweep,
    "fig2_waveforms": _scn_fig2_waveforms,
    "fig3_populations": _scn_fig3_populations,
    "fig4_cnot": _scn_fig4_cnot,
    "fig5_noise": _scn_fig5_noise,
    "fig6_decoherence": _scn_fig6_decoherence,
    "squeeze_pipeline": _scn_squeeze_pipeline,
    "circuit_map": _scn_circuit_map,
}


def run_scenario(config: ScenarioConfig) -> dict:
    """Run a scenario; returns the manifest (also written to disk)."""
    os.makedirs(config.out_dir, exist_ok=True)
    params = config.params()
    made = []
    try:
        summary = _RUNNERS[config.scenario](params, config.out_dir, made)
    except Exception:
        for path in made:
            if os.path.exists(path):
                os.remove(path)
        raise
    summary_path = os.path.join(config.out_dir, "summary.json")
    _write_json(summary_path, {"scenario": config.scenario,
                               "params": params, "summary": summary})
    made.append(summary_path)
    manifest = {
        "schema_version": SCHEMA_VERSION,
        "scenario": config.scenario,
        "files": {os.path.basename(p): {"sha256": _sha256(p)} for p in made},
        "summary": summary,
    }
    with open(os.path.join(config.out_dir, "manifest.json"), "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return manifest
