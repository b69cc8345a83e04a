"""Time evolution in truncated Fock space.

Unitary runs use a piecewise-constant midpoint Hamiltonian per step with
the exact matrix exponential (via eigendecomposition; all matrices here
are small and Hermitian). Open-system runs use Strang splitting: an RK4
half-step of the dissipator, the exact unitary step, another dissipative
half-step. Splitting keeps the stiff Hamiltonian part exact, so the step
count is set by the smooth dissipative scale rather than ||H||.
"""

from dataclasses import dataclass, field

import numpy as np

from .fock import FockSpace, destroy, embed


class IntegrationError(RuntimeError):
    """Raised when a propagation violates its conservation contracts."""


@dataclass
class SimResult:
    """Trajectory record with decimated snapshots.

    states holds kets or density matrices depending on the run type;
    snapshot decimation always keeps both endpoints.
    """

    times: np.ndarray
    states: list
    final_state: np.ndarray
    final_unitary: np.ndarray | None = None
    diagnostics: dict = field(default_factory=dict)


def _store_indices(n_steps: int, n_store: int) -> np.ndarray:
    idx = np.unique(np.linspace(0, n_steps, min(n_store, n_steps + 1)).astype(int))
    return idx


def _step_unitary(ham, t_mid, dt):
    h = ham(t_mid)
    w, v = np.linalg.eigh(h)
    return (v * np.exp(-1j * w * dt)) @ v.conj().T


def evolve_state(ham, psi0: np.ndarray, duration: float,
                 n_steps: int = 20000, n_store: int = 501) -> SimResult:
    """Propagate a ket under a time-dependent Hamiltonian callback."""
    if duration <= 0:
        raise ValueError("duration must be positive")
    psi = np.asarray(psi0, dtype=complex).copy()
    if abs(np.linalg.norm(psi) - 1.0) > 1e-10:
        raise ValueError("psi0 must be unit norm")
    dt = duration / n_steps
    keep = set(_store_indices(n_steps, n_store).tolist())
    times, states = [], []
    if 0 in keep:
        times.append(0.0)
        states.append(psi.copy())
    for i in range(n_steps):
        psi = _step_unitary(ham, (i + 0.5) * dt, dt) @ psi
        if (i + 1) in keep:
            times.append((i + 1) * dt)
            states.append(psi.copy())
    drift = abs(np.linalg.norm(psi) - 1.0)
    if drift > 1e-6:
        raise IntegrationError(f"norm drift {drift:.3e} exceeds tolerance")
    return SimResult(times=np.array(times), states=states, final_state=psi,
                     diagnostics={"n_steps": n_steps, "norm_drift": drift})


def evolution_operator(ham, duration: float, n_steps: int = 20000) -> np.ndarray:
    """Full evolution operator U(duration, 0)."""
    if duration <= 0:
        raise ValueError("duration must be positive")
    dt = duration / n_steps
    h0 = ham(0.5 * dt)
    u = np.eye(h0.shape[0], dtype=complex)
    for i in range(n_steps):
        u = _step_unitary(ham, (i + 0.5) * dt, dt) @ u
    defect = np.abs(u.conj().T @ u - np.eye(u.shape[0])).max()
    if defect > 1e-6:
        raise IntegrationError(f"unitarity defect {defect:.3e}")
    return u


def dissipator(space: FockSpace, kappa: float, kappa_phi: float):
    """Lindblad dissipator callback for photon loss and dephasing.

    Implements kappa/2 L[a] + kappa_phi/2 L[a+a] per mode with
    L[o] rho = 2 o rho o+ - o+ o rho - rho o+ o, i.e. the standard
    dissipator at rates kappa, kappa_phi. For a two-mode space both modes
    see identical rates.
    """
    ops = []
    if space.n_modes == 1:
        ops.append(destroy(space))
    else:
        single = FockSpace(space.dim)
        a = destroy(single)
        ops.extend([embed(a, space, 0), embed(a, space, 1)])

    terms = []
    for a in ops:
        ad = a.conj().T
        n = ad @ a
        nsq = n @ n
        terms.append((a, ad, n, nsq))

    def diss(rho):
        out = np.zeros_like(rho)
        for a, ad, n, nsq in terms:
            if kappa:
                out += kappa * (a @ rho @ ad - 0.5 * (n @ rho + rho @ n))
            if kappa_phi:
                out += kappa_phi * (n @ rho @ n - 0.5 * (nsq @ rho + rho @ nsq))
        return out

    return diss


def _rk4(f, y, h):
    k1 = f(y)
    k2 = f(y + 0.5 * h * k1)
    k3 = f(y + 0.5 * h * k2)
    k4 = f(y + h * k3)
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def lindblad_evolve(ham, rho0: np.ndarray, duration: float,
                    kappa: float, kappa_phi: float, space: FockSpace,
                    n_steps: int = 20000, n_store: int = 501) -> SimResult:
    """Strang-split master-equation propagation of a density matrix."""
    if duration <= 0:
        raise ValueError("duration must be positive")
    if kappa < 0 or kappa_phi < 0:
        raise ValueError("rates must be nonnegative")
    rho = np.asarray(rho0, dtype=complex).copy()
    if abs(np.trace(rho).real - 1.0) > 1e-8:
        raise ValueError("rho0 must have unit trace")
    diss = dissipator(space, kappa, kappa_phi) if (kappa or kappa_phi) else None
    dt = duration / n_steps
    keep = set(_store_indices(n_steps, n_store).tolist())
    times, states = [], []
    if 0 in keep:
        times.append(0.0)
        states.append(rho.copy())
    for i in range(n_steps):
        if diss is not None:
            rho = _rk4(diss, rho, 0.5 * dt)
        u = _step_unitary(ham, (i + 0.5) * dt, dt)
        rho = u @ rho @ u.conj().T
        if diss is not None:
            rho = _rk4(diss, rho, 0.5 * dt)
        if (i + 1) in keep:
            times.append((i + 1) * dt)
            states.append(rho.copy())
    trace_drift = abs(np.trace(rho).real - 1.0)
    herm_drift = np.abs(rho - rho.conj().T).max()
    if trace_drift > 1e-6:
        raise IntegrationError(f"trace drift {trace_drift:.3e}")
    if herm_drift > 1e-8:
        raise IntegrationError(f"hermiticity drift {herm_drift:.3e}")
    min_eig = float(np.linalg.eigvalsh(rho).min())
    if min_eig < -1e-6:
        raise IntegrationError(f"negativity {min_eig:.3e}")
    return SimResult(times=np.array(times), states=states, final_state=rho,
                     diagnostics={"n_steps": n_steps,
                                  "trace_drift": trace_drift,
                                  "min_eigenvalue": min_eig})
