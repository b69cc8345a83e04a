"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 numeric/convergence failure,
3 configuration error. Frequencies are given with an explicit unit via
paired flags (--k-mhz for 2 pi x MHz, --k-radus for rad/us); supplying
both is a usage error.
"""

import argparse
import json
import sys

import numpy as np

from . import __version__, circuit, fock, gates, metrics, noise, propagate, synth
from .noise import NoiseConfig, ZeroPowerError
from .propagate import IntegrationError
from .scenarios import SCENARIO_IDS, ConfigError, ScenarioConfig, run_scenario
from .squeeze import SqueezeSpec, amplified_gate_pipeline
from .synth import NoSolutionError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERIC = 2
EXIT_CONFIG = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _resolve_rate(args, mhz_attr, radus_attr, default):
    """Pick one of the paired unit flags; both set is a usage error."""
    mhz = getattr(args, mhz_attr)
    radus = getattr(args, radus_attr)
    if mhz is not None and radus is not None:
        print(f"error: give only one of --{mhz_attr.replace('_', '-')} and "
              f"--{radus_attr.replace('_', '-')}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    if mhz is not None:
        return 2.0 * np.pi * mhz
    if radus is not None:
        return radus
    return default


def _add_gate_flags(sub):
    sub.add_argument("--alpha", type=float, default=gates.DEFAULT_ALPHA)
    sub.add_argument("--k-mhz", type=float, default=None,
                     help="Kerr nonlinearity as 2 pi x MHz")
    sub.add_argument("--k-radus", type=float, default=None,
                     help="Kerr nonlinearity in rad/us")
    sub.add_argument("--t-us", type=float, default=gates.DEFAULT_TIME)
    sub.add_argument("--dim", type=int, default=None)
    sub.add_argument("--steps", type=int, default=None)


def build_parser():
    p = _Parser(prog="catgates",
                description="Geometric gates on Kerr-cat qubits: synthesis, "
                            "simulation and scoring.")
    p.add_argument("--version", action="version",
                   version=f"catgates {__version__}")
    p.add_argument("--threads", type=int, default=None,
                   help="cap BLAS thread count")
    sp = p.add_subparsers(dest="command", required=True)

    s = sp.add_parser("synth", help="write control waveforms to CSV")
    s.add_argument("--name", required=True,
                   choices=sorted(gates.GATE_TABLE) + ["cnot"])
    s.add_argument("--out", required=True)
    s.add_argument("--samples", type=int, default=20001)
    _add_gate_flags(s)

    s = sp.add_parser("gate", help="propagate a single-qubit gate, print fidelity")
    s.add_argument("--name", required=True, choices=sorted(gates.GATE_TABLE))
    s.add_argument("--out", default=None, help="trajectory CSV path")
    _add_gate_flags(s)

    s = sp.add_parser("cnot", help="propagate the two-qubit gate, print fidelity")
    _add_gate_flags(s)

    s = sp.add_parser("noise", help="noisy-gate ensemble statistics")
    s.add_argument("--kind", required=True,
                   choices=["systematic", "awgn", "pink"])
    s.add_argument("--name", default="hadamard", choices=sorted(gates.GATE_TABLE))
    s.add_argument("--snr-db", type=float, default=10.0)
    s.add_argument("--delta", type=float, nargs=3, default=[0.0, 0.0, 0.0],
                   metavar=("DX", "DY", "DZ"))
    s.add_argument("--runs", type=int, default=50)
    s.add_argument("--seed", type=int, default=12345)
    s.add_argument("--out", default=None, help="per-run CSV path")
    _add_gate_flags(s)

    s = sp.add_parser("decoherence", help="open-system gate run")
    s.add_argument("--name", default="hadamard", choices=sorted(gates.GATE_TABLE))
    s.add_argument("--kappa-per-us", type=float, default=0.05)
    s.add_argument("--kappa-phi-per-us", type=float, default=0.05)
    _add_gate_flags(s)

    s = sp.add_parser("squeeze", help="amplified-gate pipeline")
    s.add_argument("--name", default="hadamard", choices=sorted(gates.GATE_TABLE))
    s.add_argument("--r", type=float, default=1.2)
    s.add_argument("--eps2-mhz", type=float, default=None)
    s.add_argument("--eps2-radus", type=float, default=None)
    s.add_argument("--kappa-per-us", type=float, default=0.05)
    s.add_argument("--kappa-phi-per-us", type=float, default=0.05)
    s.add_argument("--out", default=None, help="photon-number trace CSV")
    _add_gate_flags(s)

    s = sp.add_parser("circuit", help="circuit-to-gate parameter map")
    s.add_argument("--config", required=True,
                   help="JSON with e_c/e_j/e_j_mod entries, each "
                        '{"value": x, "unit": "rad_per_us"|"two_pi_mhz"}')
    s.add_argument("--d-ec", type=float, default=0.0)
    s.add_argument("--d-ej", type=float, default=0.0)
    s.add_argument("--d-vp", type=float, default=0.0)
    s.add_argument("--alpha", type=float, default=gates.DEFAULT_ALPHA)

    s = sp.add_parser("scenario", help="run a canned experiment")
    s.add_argument("--id", choices=SCENARIO_IDS)
    s.add_argument("--config", default=None, help="JSON config with overrides")
    s.add_argument("--out-dir", default=None)

    sp.add_parser("selftest", help="run quick consistency checks")
    return p


def _gate_params(args):
    kerr = _resolve_rate(args, "k_mhz", "k_radus", gates.DEFAULT_KERR)
    return kerr


def _cmd_synth(args):
    kerr = _gate_params(args)
    dim = args.dim or (gates.DEFAULT_DIM if args.name != "cnot"
                       else gates.DEFAULT_DIM_TWO_MODE)
    frame = fock.cat_frame(args.alpha, 0.0, fock.FockSpace(dim))
    if args.name == "cnot":
        spec = gates.cnot_path_spec(args.t_us)
        sched = synth.two_qubit_controls(spec, frame, n_samples=args.samples)
    else:
        spec = gates.gate_path_spec(args.name, args.t_us)
        sched = synth.single_qubit_controls(spec, frame, n_samples=args.samples)
    synth.gap_margin(sched, frame, kerr)
    sched.to_csv(args.out)
    print(f"wrote {args.out} ({args.samples} samples)")
    return EXIT_OK


def _cmd_gate(args):
    kerr = _gate_params(args)
    run = gates.run_gate(args.name, alpha=args.alpha, kerr=kerr,
                         total_time=args.t_us,
                         dim=args.dim or gates.DEFAULT_DIM,
                         n_steps=args.steps or gates.DEFAULT_STEPS)
    print(f"F_bar({args.name}) = {run.fidelity:.6f}")
    if args.out:
        _write_trajectory(run, args)
    return EXIT_OK


def _write_trajectory(run, args):
    ham = gates.single_qubit_hamiltonian(run.spec, run.frame,
                                         _gate_params(args))
    res = propagate.evolve_state(ham, run.frame.c_plus, args.t_us,
                                 n_steps=args.steps or gates.DEFAULT_STEPS)
    n_op = fock.create(run.frame.space) @ fock.destroy(run.frame.space)
    with open(args.out, "w") as fh:
        fh.write("t,p_plus,p_minus,leakage,photon_number\n")
        for t, st in zip(res.times, res.states):
            pp, pm, leak = metrics.populations(st, run.frame)
            np_mean = metrics.mean_photon_number(st, n_op)
            fh.write(f"{t:.14e},{pp:.14e},{pm:.14e},{leak:.14e},{np_mean:.14e}\n")
    print(f"wrote {args.out}")


def _cmd_cnot(args):
    kerr = _gate_params(args)
    run = gates.run_cnot(alpha=args.alpha, kerr=kerr, total_time=args.t_us,
                         dim=args.dim or gates.DEFAULT_DIM_TWO_MODE,
                         n_steps=args.steps or gates.DEFAULT_STEPS_TWO_MODE)
    print(f"F_bar(cnot) = {run.fidelity:.6f}")
    return EXIT_OK


def _cmd_noise(args):
    kerr = _gate_params(args)
    cfg = NoiseConfig(kind=args.kind, delta=tuple(args.delta),
                      snr_db=args.snr_db, seed=args.seed)
    stats = noise.monte_carlo(args.name, cfg, args.runs, alpha=args.alpha,
                              kerr=kerr, total_time=args.t_us,
                              dim=args.dim or gates.DEFAULT_DIM,
                              n_steps=args.steps or 10000)
    print(f"runs={stats.count} failed={stats.n_failed} "
          f"mean(1-F)={stats.mean:.3e} min={stats.min:.3e} max={stats.max:.3e}")
    if args.out:
        stats.to_csv(args.out)
        print(f"wrote {args.out}")
    return EXIT_OK


def _cmd_decoherence(args):
    kerr = _gate_params(args)
    dim = args.dim or gates.DEFAULT_DIM
    frame = fock.cat_frame(args.alpha, 0.0, fock.FockSpace(dim))
    spec = gates.gate_path_spec(args.name, args.t_us)
    ham = gates.single_qubit_hamiltonian(spec, frame, kerr)
    rho0 = np.outer(frame.c_plus, frame.c_plus.conj())
    res = propagate.lindblad_evolve(ham, rho0, args.t_us,
                                    args.kappa_per_us, args.kappa_phi_per_us,
                                    frame.space,
                                    n_steps=args.steps or gates.DEFAULT_STEPS)
    ideal = gates.gate_target(args.name, frame)
    psi_t = ideal.basis @ (ideal.matrix @ np.array([1.0, 0.0]))
    fid = metrics.state_fidelity(res.final_state, psi_t)
    p_sub = float(np.trace(frame.projector @ res.final_state).real)
    print(f"1-F({args.name}) = {1.0 - fid:.4f}  subspace population = {p_sub:.4f}")
    return EXIT_OK


def _cmd_squeeze(args):
    kerr = _gate_params(args)
    eps2 = _resolve_rate(args, "eps2_mhz", "eps2_radus", 2.0 * np.pi * 3.125)
    sq = SqueezeSpec(r=args.r, eps2=eps2)
    res = amplified_gate_pipeline(args.name, sq, alpha=args.alpha, kerr=kerr,
                                  kappa=args.kappa_per_us,
                                  kappa_phi=args.kappa_phi_per_us,
                                  total_time=args.t_us,
                                  dim=args.dim or 60,
                                  n_steps_gate=args.steps or 10000)
    print(f"t_s = {res.t_s:.5f} us  F = {res.fidelity:.4f}  "
          f"n_p(final) = {res.photon_number[-1]:.4f}")
    if args.out:
        np.savetxt(args.out,
                   np.column_stack([res.times, res.photon_number]),
                   delimiter=",", fmt="%.14e", header="t,n_p", comments="")
        print(f"wrote {args.out}")
    return EXIT_OK


def _load_energy(entry, key):
    if not isinstance(entry, dict) or "value" not in entry or "unit" not in entry:
        raise ConfigError(f"'{key}' must be {{'value':..., 'unit':...}}")
    unit = entry["unit"]
    if unit == "rad_per_us":
        return float(entry["value"])
    if unit == "two_pi_mhz":
        return 2.0 * np.pi * float(entry["value"])
    raise ConfigError(f"'{key}' has unknown unit '{unit}'")


def _cmd_circuit(args):
    try:
        with open(args.config) as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read {args.config}: {exc}") from exc
    kwargs = {}
    for key in ("e_c", "e_j", "e_j_mod"):
        if key not in raw:
            raise ConfigError(f"missing '{key}' in circuit config")
        kwargs[key] = _load_energy(raw[key], key)
    for key in ("n_squids", "v_p", "c_p", "phi_p"):
        if key in raw:
            kwargs[key] = raw[key]
    if "omega_p" in raw:
        kwargs["omega_p"] = _load_energy(raw["omega_p"], "omega_p")
    cp = circuit.CircuitParams(**kwargs)
    eff = circuit.effective_params(cp)
    print(f"omega_c = {eff.omega_c:.6g} rad/us")
    print(f"K = {eff.kerr:.6g} rad/us   eps2 = {eff.eps2:.6g} rad/us")
    print(f"chi = {eff.chi:.6g} rad/us  eps = {eff.eps:.6g} rad/us")
    if args.d_ec or args.d_ej or args.d_vp:
        b = circuit.error_propagation(cp, args.d_ec, args.d_ej, args.d_vp,
                                      alpha=args.alpha)
        print(f"d_omega_c = {b.d_omega_c:.6g}  d_K = {b.d_kerr:.6g}  "
              f"d_eps2 = {b.d_eps2:.6g}")
        print(f"d_eps/eps = {b.d_eps_fraction:.6g}  d_alpha = {b.d_alpha:.6g}")
    return EXIT_OK


def _cmd_scenario(args):
    if args.config:
        cfg = ScenarioConfig.from_json(args.config, out_dir=args.out_dir)
    else:
        if not args.id:
            print("error: give --id or --config", file=sys.stderr)
            return EXIT_USAGE
        cfg = ScenarioConfig(scenario=args.id,
                             out_dir=args.out_dir or f"out_{args.id}")
    manifest = run_scenario(cfg)
    print(f"scenario {cfg.scenario}: wrote {len(manifest['files'])} files "
          f"to {cfg.out_dir}")
    for key, val in manifest["summary"].items():
        print(f"  {key} = {val:.6g}" if isinstance(val, float)
              else f"  {key} = {val}")
    return EXIT_OK


def _cmd_selftest(args):
    checks = []
    spec = gates.gate_path_spec("not")
    t = np.linspace(0.0, spec.total_time, 2001)
    zeta = synth.invariant_vector(spec, t)
    checks.append(("unit invariant vector",
                   float(np.abs(np.linalg.norm(zeta, axis=0) - 1.0).max()),
                   1e-10))

    dyn = max(abs(float(synth.effective_drive(spec, tt)
                        @ synth.invariant_vector(spec, tt)))
              for tt in np.linspace(0, 1, 101))
    checks.append(("zero dynamical phase integrand", dyn, 1e-12))

    frame = fock.cat_frame(0.5, 0.0, fock.FockSpace(30))
    a = fock.destroy(frame.space)
    n_op = a.conj().T @ a
    sx, sy, sz = frame.paulis()
    resid = 0.0
    for tt in np.linspace(0.05, 0.95, 19):
        om = synth.effective_drive(spec, tt)
        chi, eps = synth.single_qubit_controls_at(om, frame)
        hc = chi * n_op + eps * a.conj().T + np.conj(eps) * a
        lhs = frame.projector @ hc @ frame.projector
        tgt = om[0] * sx + om[1] * sy + om[2] * sz
        c = np.trace(frame.projector @ (lhs - tgt)) / 2.0
        resid = max(resid, float(np.abs(lhs - tgt - c * frame.projector).max()))
    checks.append(("projection identity", resid, 1e-8))

    checks.append(("invariant equation residual",
                   synth.verify_invariant(spec, frame, gates.DEFAULT_KERR,
                                          n_grid=10001), 1e-5))

    ham = gates.single_qubit_hamiltonian(spec, frame, gates.DEFAULT_KERR)
    rho0 = np.outer(frame.c_plus, frame.c_plus.conj())
    res = propagate.lindblad_evolve(ham, rho0, 0.1, 0.05, 0.05, frame.space,
                                    n_steps=200, n_store=2)
    checks.append(("lindblad trace drift",
                   abs(float(np.trace(res.final_state).real) - 1.0), 1e-7))

    ok = True
    for name, value, tol in checks:
        passed = value < tol
        ok = ok and passed
        print(f"[{'PASS' if passed else 'FAIL'}] {name}: {value:.3e} "
              f"(tol {tol:.0e})")
    return EXIT_OK if ok else EXIT_NUMERIC


_COMMANDS = {
    "synth": _cmd_synth,
    "gate": _cmd_gate,
    "cnot": _cmd_cnot,
    "noise": _cmd_noise,
    "decoherence": _cmd_decoherence,
    "squeeze": _cmd_squeeze,
    "circuit": _cmd_circuit,
    "scenario": _cmd_scenario,
    "selftest": _cmd_selftest,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads is not None:
        try:
            from threadpoolctl import threadpool_limits
            threadpool_limits(args.threads)
        except ImportError:
            print("warning: threadpoolctl unavailable, --threads ignored",
                  file=sys.stderr)
    try:
        return _COMMANDS[args.command](args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (IntegrationError, NoSolutionError, ZeroPowerError) as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except FileNotFoundError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
