"""Render scenario artifacts into figures.

Every job takes the scenario output directory and returns a matplotlib
Figure; `save` writes it (SVG by default). The numeric content of each
plot is a direct passthrough of the CSV columns: no rescaling beyond
axis units, so tests can compare artist data against the files.
"""

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from . import io  # noqa: E402

GATE_LABELS = {"not": "NOT", "hadamard": "Hadamard", "phase": "phase"}


def bloch_loops(data_dir, gates=("not", "hadamard", "phase")):
    """Invariant-eigenvector loops on the Bloch sphere (3D, one per gate)."""
    fig = plt.figure(figsize=(4 * len(gates), 4))
    for i, gate in enumerate(gates):
        t, plus, minus = io.read_bloch(
            os.path.join(data_dir, f"bloch_{gate}.csv"))
        ax = fig.add_subplot(1, len(gates), i + 1, projection="3d")
        u = np.linspace(0, 2 * np.pi, 40)
        v = np.linspace(0, np.pi, 20)
        ax.plot_wireframe(np.outer(np.cos(u), np.sin(v)),
                          np.outer(np.sin(u), np.sin(v)),
                          np.outer(np.ones_like(u), np.cos(v)),
                          color="0.85", linewidth=0.3)
        ax.plot(plus[:, 0], plus[:, 1], plus[:, 2], color="C0",
                label=r"$r_+$")
        ax.plot(minus[:, 0], minus[:, 1], minus[:, 2], color="C3",
                label=r"$r_-$")
        ax.scatter(*plus[0], color="C0", s=20)
        ax.scatter(*minus[0], color="C3", s=20)
        ax.set_title(GATE_LABELS.get(gate, gate))
        ax.set_box_aspect((1, 1, 1))
        ax.legend(loc="upper left")
    fig.tight_layout()
    return fig


def waveforms(data_dir, name="waveforms_not.csv"):
    """Physical control waveforms chi(t) and eps(t) for one gate."""
    t, chi, eps = io.read_waveforms(os.path.join(data_dir, name))
    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(6, 5), sharex=True)
    ax1.plot(t, chi, color="C0", label=r"$\chi$")
    ax1.set_ylabel(r"$\chi$ (rad/$\mu$s)")
    ax1.legend()
    ax2.plot(t, eps.real, color="C1", label=r"Re $\epsilon$")
    ax2.plot(t, eps.imag, color="C2", label=r"Im $\epsilon$")
    ax2.set_ylabel(r"$\epsilon$ (rad/$\mu$s)")
    ax2.set_xlabel(r"$t$ ($\mu$s)")
    ax2.legend()
    fig.tight_layout()
    return fig


def sweep(data_dir, name="sweep_not.csv"):
    """Gate infidelity against cat amplitude, one line per Kerr value."""
    alpha, kerr, infid = io.read_sweep(os.path.join(data_dir, name))
    fig, ax = plt.subplots(figsize=(5, 4))
    for i, k in enumerate(np.unique(kerr)):
        sel = kerr == k
        ax.semilogy(alpha[sel], infid[sel], "o-", color=f"C{i}",
                    label=rf"$K = {k / (2 * np.pi):.1f} \times 2\pi$ MHz")
    ax.set_xlabel(r"$\alpha$")
    ax.set_ylabel(r"$1 - \bar{F}$")
    ax.legend()
    fig.tight_layout()
    return fig


def populations(data_dir, name="populations.csv"):
    """Output cat-state populations per gate and input, grouped bars."""
    rows = io.read_populations(os.path.join(data_dir, name))
    fig, ax = plt.subplots(figsize=(7, 4))
    width = 0.35
    labels = [f"{GATE_LABELS.get(r['gate'], r['gate'])}\n"
              rf"$|C_{r['input'][0]}\rangle$" for r in rows]
    x = np.arange(len(rows))
    ax.bar(x - width / 2, [r["p_plus"] for r in rows], width,
           color="C0", label=r"$P_+$")
    ax.bar(x + width / 2, [r["p_minus"] for r in rows], width,
           color="C3", label=r"$P_-$")
    ax.set_xticks(x)
    ax.set_xticklabels(labels)
    ax.set_ylabel("population")
    ax.legend()
    fig.tight_layout()
    return fig


def cnot_populations(data_dir, name="cnot_populations.csv"):
    """Two-qubit output populations, one bar group per input state."""
    rows = io.read_cnot_populations(os.path.join(data_dir, name))
    out_labels = [r"$++$", r"$+-$", r"$-+$", r"$--$"]
    fig, ax = plt.subplots(figsize=(7, 4))
    width = 0.2
    x = np.arange(len(rows))
    for j in range(4):
        ax.bar(x + (j - 1.5) * width, [r["probs"][j] for r in rows], width,
               color=f"C{j}", label=out_labels[j])
    ax.set_xticks(x)
    ax.set_xticklabels([rf"$|{r['input']}\rangle$" for r in rows])
    ax.set_ylabel("population")
    ax.legend(title="output")
    fig.tight_layout()
    return fig


def noise(data_dir):
    """Systematic miscalibration curves plus stochastic ensembles."""
    sysmap = io.read_systematic(os.path.join(data_dir, "systematic.csv"))
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 4))
    for i, chan in enumerate(sorted(sysmap)):
        delta, fid = sysmap[chan]
        order = np.argsort(delta)
        ax1.plot(delta[order], fid[order], "o-", color=f"C{i}",
                 label=rf"$\delta_{chan}$")
    ax1.set_xlabel(r"relative miscalibration $\delta$")
    ax1.set_ylabel(r"$\bar{F}$")
    ax1.legend()
    for i, kind in enumerate(("awgn", "pink")):
        runs, infid = io.read_ensemble(os.path.join(data_dir, f"{kind}.csv"))
        ax2.semilogy(runs, infid, "o", color=f"C{i}", markersize=4,
                     label=kind)
    ax2.set_xlabel("run")
    ax2.set_ylabel(r"$1 - \bar{F}$")
    ax2.legend()
    fig.tight_layout()
    return fig


def decoherence_heatmap(data_dir, name="decoherence_grid.csv"):
    """Infidelity over the (kappa, kappa_phi) grid."""
    kappa, kphi, infid = io.read_decoherence_grid(
        os.path.join(data_dir, name))
    ka = np.unique(kappa)
    kp = np.unique(kphi)
    grid = np.full((ka.size, kp.size), np.nan)
    for a, p, v in zip(kappa, kphi, infid):
        grid[np.searchsorted(ka, a), np.searchsorted(kp, p)] = v
    fig, ax = plt.subplots(figsize=(5, 4))
    im = ax.imshow(grid, origin="lower", aspect="auto",
                   extent=(kp[0], kp[-1], ka[0], ka[-1]))
    fig.colorbar(im, ax=ax, label=r"$1 - F$")
    ax.set_xlabel(r"$\kappa_\phi$ (1/$\mu$s)")
    ax.set_ylabel(r"$\kappa$ (1/$\mu$s)")
    fig.tight_layout()
    return fig


def photon_trace(data_dir, name="photon_trace.csv"):
    """Mean photon number through the squeezed-frame gate pipeline."""
    t, n_p = io.read_photon_trace(os.path.join(data_dir, name))
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(t, n_p, color="C0")
    ax.set_xlabel(r"$t$ ($\mu$s)")
    ax.set_ylabel(r"$\langle n \rangle$")
    fig.tight_layout()
    return fig


JOBS = {
    "bloch": ("fig1_bloch", bloch_loops),
    "waveforms": ("fig2_waveforms", waveforms),
    "sweep": ("fig2_sweep", sweep),
    "populations": ("fig3_populations", populations),
    "cnot": ("fig4_cnot", cnot_populations),
    "noise": ("fig5_noise", noise),
    "decoherence": ("fig6_decoherence", decoherence_heatmap),
    "photon_trace": ("squeeze_pipeline", photon_trace),
}


def save(fig, path):
    fig.savefig(path)
    plt.close(fig)
