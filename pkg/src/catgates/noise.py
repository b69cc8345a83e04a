"""Control-channel error models and the Monte Carlo ensemble harness.

Noise acts on the effective drive components (Omega_x, Omega_y, Omega_z)
and is then pushed through the full control synthesis, so a perturbation
of one logical channel reshapes both physical waveforms (chi, eps). Three
models: systematic scaling (1 + delta_k), additive white Gaussian noise
at a dB power SNR, and 1/f noise shaped in the frequency domain.
"""

from dataclasses import dataclass, field

import numpy as np

from . import gates, metrics, propagate, synth
from .fock import FockSpace, cat_frame

CHANNELS = ("x", "y", "z")
SNR_CAP_DB = 300.0


class ZeroPowerError(ValueError):
    """SNR is undefined for an identically zero signal."""


@dataclass(frozen=True)
class NoiseConfig:
    kind: str                                  # systematic | awgn | pink
    delta: tuple = (0.0, 0.0, 0.0)             # per-channel fractions
    snr_db: float = 10.0
    channels: tuple = CHANNELS
    seed: int = 12345

    def __post_init__(self):
        if self.kind not in ("systematic", "awgn", "pink"):
            raise ValueError(f"unknown noise kind '{self.kind}'")
        if not self.channels:
            raise ValueError("channels must be nonempty")
        for c in self.channels:
            if c not in CHANNELS:
                raise ValueError(f"unknown channel '{c}'")
        if not np.isfinite(self.snr_db):
            raise ValueError("snr_db must be finite")


def apply_systematic(spec: synth.PathSpec, delta):
    """Drive callback with Omega_k -> (1 + delta_k) Omega_k."""
    scale = 1.0 + np.asarray(delta, dtype=float)

    def drive(t):
        return synth.effective_drive(spec, t) * scale

    return drive


def _noise_power(signal, snr_db):
    p_sig = float(np.mean(np.asarray(signal) ** 2))
    if p_sig == 0.0:
        raise ZeroPowerError("signal has zero power; SNR undefined")
    return p_sig * 10.0 ** (-min(snr_db, SNR_CAP_DB) / 10.0)


def add_awgn(signal, snr_db, seed):
    """Signal plus white Gaussian noise at the requested power SNR (dB)."""
    signal = np.asarray(signal, dtype=float)
    p_noise = _noise_power(signal, snr_db)
    if snr_db >= SNR_CAP_DB:
        return signal.copy()
    rng = np.random.default_rng(seed)
    return signal + rng.normal(0.0, np.sqrt(p_noise), signal.shape)


def pink_noise(n, dt, power, seed):
    """Zero-mean 1/f noise trace with the requested mean-square power.

    White Gaussian noise is shaped in the frequency domain with amplitude
    proportional to f^(-1/2) over [1/duration, Nyquist]; the DC bin is
    zeroed (a finite record carries no information below 1/duration).
    """
    rng = np.random.default_rng(seed)
    white = rng.normal(size=n)
    spec = np.fft.rfft(white)
    f = np.fft.rfftfreq(n, dt)
    shape = np.zeros_like(f)
    shape[1:] = f[1:] ** -0.5
    trace = np.fft.irfft(spec * shape, n)
    p = np.mean(trace ** 2)
    return trace * np.sqrt(power / p)


def add_pink(signal, snr_db, seed, dt=1.0):
    """Signal plus 1/f noise at the requested power SNR (dB)."""
    signal = np.asarray(signal, dtype=float)
    p_noise = _noise_power(signal, snr_db)
    if snr_db >= SNR_CAP_DB:
        return signal.copy()
    return signal + pink_noise(signal.size, dt, p_noise, seed)


def perturbed_drive(spec: synth.PathSpec, config: NoiseConfig,
                    n_steps: int, run_seed: int | None = None):
    """Drive callback with the configured noise on the midpoint grid.

    Stochastic noise is sampled once on the propagation midpoints and
    looked up by step, so a given (config, n_steps, seed) is reproducible
    bit for bit.
    """
    if config.kind == "systematic":
        return apply_systematic(spec, config.delta)
    seed = config.seed if run_seed is None else run_seed
    dt = spec.total_time / n_steps
    mids = (np.arange(n_steps) + 0.5) * dt
    omega = np.array([synth.effective_drive(spec, t) for t in mids]).T  # (3, n)
    for k, name in enumerate(CHANNELS):
        if name not in config.channels:
            continue
        chan_seed = [int(seed), k]
        if config.kind == "awgn":
            omega[k] = add_awgn(omega[k], config.snr_db, chan_seed)
        else:
            omega[k] = add_pink(omega[k], config.snr_db, chan_seed, dt)

    def drive(t):
        i = min(int(t / dt), n_steps - 1)
        return omega[:, i]

    return drive


@dataclass
class EnsembleStats:
    infidelities: np.ndarray
    seeds: np.ndarray
    n_failed: int = 0
    failures: list = field(default_factory=list)

    @property
    def mean(self):
        return float(np.mean(self.infidelities))

    @property
    def min(self):
        return float(np.min(self.infidelities))

    @property
    def max(self):
        return float(np.max(self.infidelities))

    @property
    def count(self):
        return int(self.infidelities.size)

    def to_csv(self, path):
        data = np.column_stack([np.arange(self.count), self.seeds,
                                self.infidelities])
        np.savetxt(path, data, delimiter=",", fmt=["%d", "%d", "%.14e"],
                   header="run,seed,infidelity", comments="")


def monte_carlo(gate_name: str, config: NoiseConfig, n_runs: int,
                alpha: float = gates.DEFAULT_ALPHA,
                kerr: float = gates.DEFAULT_KERR,
                total_time: float = gates.DEFAULT_TIME,
                dim: int = gates.DEFAULT_DIM,
                n_steps: int = 10000) -> EnsembleStats:
    """Noisy gate ensemble: run i uses seed config.seed + i.

    Failed propagations are recorded and excluded from the statistics
    rather than aborting the ensemble.
    """
    if n_runs < 1:
        raise ValueError("n_runs must be >= 1")
    spec = gates.gate_path_spec(gate_name, total_time)
    frame = cat_frame(alpha, 0.0, FockSpace(dim))
    target = gates.gate_target(gate_name, frame)
    infids, seeds, failures = [], [], []
    for i in range(n_runs):
        run_seed = config.seed + i
        drive = perturbed_drive(spec, config, n_steps, run_seed)
        ham = gates.single_qubit_hamiltonian(spec, frame, kerr, drive_fn=drive)
        try:
            u = propagate.evolution_operator(ham, total_time, n_steps)
        except propagate.IntegrationError as exc:
            failures.append((run_seed, str(exc)))
            continue
        infids.append(1.0 - metrics.average_gate_fidelity(u, target))
        seeds.append(run_seed)
    if not infids:
        raise propagate.IntegrationError("every ensemble run failed")
    return EnsembleStats(infidelities=np.array(infids),
                         seeds=np.array(seeds, dtype=int),
                         n_failed=len(failures), failures=failures)
