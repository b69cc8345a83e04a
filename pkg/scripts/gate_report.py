"""Quick single-gate report: fidelity, output populations, phase data.

Usage:
    python scripts/gate_report.py not
    python scripts/gate_report.py hadamard --steps 4000 --dim 20
"""

import argparse

import numpy as np

from catgates import gates, metrics, synth


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("name", choices=sorted(gates.GATE_TABLE))
    ap.add_argument("--steps", type=int, default=gates.DEFAULT_STEPS)
    ap.add_argument("--dim", type=int, default=gates.DEFAULT_DIM)
    args = ap.parse_args()

    run = gates.run_gate(args.name, dim=args.dim, n_steps=args.steps)
    ph = synth.phases(run.spec)
    print(f"gate {args.name}: Lambda = {run.spec.lambda_amp:.5f}, "
          f"Theta_+ = {ph.theta_plus:.6f} "
          f"(dynamical residual {ph.dynamical_plus:.2e})")
    print(f"F_bar = {run.fidelity:.6f}")
    for label, ket in (("C+", run.frame.c_plus), ("C-", run.frame.c_minus)):
        pp, pm, leak = metrics.populations(run.unitary @ ket, run.frame)
        print(f"input {label}: P+ = {pp:.4f}  P- = {pm:.4f}  "
              f"leakage = {leak:.2e}")
    if args.name == "hadamard":
        for sign, tag in ((+1, "+"), (-1, "-")):
            f = metrics.superposition_fidelity(run.unitary, run.frame, sign)
            print(f"1 - F_H^{tag} = {1.0 - f:.4e}")
    resid = synth.verify_invariant(run.spec, run.frame, gates.DEFAULT_KERR)
    print(f"invariant residual = {resid:.2e}")
    t = np.linspace(0.0, run.spec.total_time, 4001)
    area = metrics.solid_angle(synth.invariant_vector(run.spec, t).T)
    print(f"solid angle = {area:.6f} (Theta_+ from loop = {-area / 2:.6f})")


if __name__ == "__main__":
    main()
