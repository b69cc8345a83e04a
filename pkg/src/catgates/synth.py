"""Invariant-based reverse engineering of geometric cat-qubit gates.

The dynamical invariant is I = zeta . sigma with the unit vector

    zeta = (sin eta sin mu, cos eta sin mu, cos mu)

steered along the trigonometric path

    mu(t)  = mu0 + Lambda sin^2(pi t / T)
    eta(t) = eta0 + pi [1 - cos(pi t / T)]

which is cyclic over [0, T] (eta advances by exactly 2 pi). Solving
zeta' = 2 Omega x zeta together with the zero-dynamical-phase condition
<phi+-| Omega.sigma |phi+-> = 0 fixes the effective SU(2) drive

    Omega_x = (1/4) eta' sin(eta) sin(2 mu) - (1/2) mu' cos(eta)
    Omega_y = (1/4) eta' cos(eta) sin(2 mu) + (1/2) mu' sin(eta)
    Omega_z = -(1/2) eta' sin^2(mu)

(both conditions hold to machine precision; see tests). The physical
single-qubit controls (chi, eps) and the five two-qubit channels are then
obtained by exactly inverting the projection of the control Hamiltonian
onto the cat subspace.
"""

from dataclasses import dataclass
import warnings

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from .fock import CatFrame, cat_pair_gap

PI = np.pi


class NoSolutionError(ValueError):
    """Raised when no path amplitude Lambda realizes the requested phase."""


@dataclass(frozen=True)
class PathSpec:
    """Invariant-path parameters; fully determines a gate.

    mu0, eta0 in radians, lambda_amp dimensionless, total_time in us,
    theta_target the intended geometric phase in radians.
    """

    mu0: float
    eta0: float
    lambda_amp: float
    total_time: float
    theta_target: float

    def __post_init__(self):
        if self.total_time <= 0:
            raise ValueError("total_time must be positive")
        if not (0.0 <= self.mu0 <= PI):
            raise ValueError("mu0 must lie in [0, pi]")
        lo = min(self.mu0, self.mu0 + self.lambda_amp)
        hi = max(self.mu0, self.mu0 + self.lambda_amp)
        if lo < -1e-12 or hi > PI + 1e-12:
            raise ValueError("lambda_amp drives mu(t) outside [0, pi]")


def path_eval(spec: PathSpec, t):
    """Return (mu, eta, mu_dot, eta_dot) at time t (scalar or array)."""
    t = np.asarray(t, dtype=float)
    if np.any(t < -1e-12) or np.any(t > spec.total_time + 1e-12):
        raise ValueError("t outside [0, total_time]")
    s = PI * t / spec.total_time
    mu = spec.mu0 + spec.lambda_amp * np.sin(s) ** 2
    eta = spec.eta0 + PI * (1.0 - np.cos(s))
    mud = spec.lambda_amp * (PI / spec.total_time) * np.sin(2.0 * s)
    etad = (PI ** 2 / spec.total_time) * np.sin(s)
    return mu, eta, mud, etad


def invariant_vector(spec: PathSpec, t):
    """Unit vector zeta(t) = (sin eta sin mu, cos eta sin mu, cos mu)."""
    mu, eta, _, _ = path_eval(spec, t)
    return np.array([np.sin(eta) * np.sin(mu),
                     np.cos(eta) * np.sin(mu),
                     np.cos(mu)])


def invariant_eigenvectors(spec: PathSpec, t):
    """Eigenvectors (phi_plus, phi_minus) of zeta.sigma in the cat basis."""
    mu, eta, _, _ = path_eval(spec, t)
    c, s = np.cos(mu / 2.0), np.sin(mu / 2.0)
    phi_plus = np.array([c, 1j * np.exp(-1j * eta) * s])
    phi_minus = np.array([1j * np.exp(1j * eta) * s, c])
    return phi_plus, phi_minus


def effective_drive(spec: PathSpec, t):
    """Effective SU(2) amplitudes (Omega_x, Omega_y, Omega_z) in rad/us."""
    mu, eta, mud, etad = path_eval(spec, t)
    ox = 0.25 * etad * np.sin(eta) * np.sin(2.0 * mu) - 0.5 * mud * np.cos(eta)
    oy = 0.25 * etad * np.cos(eta) * np.sin(2.0 * mu) + 0.5 * mud * np.sin(eta)
    oz = -0.5 * etad * np.sin(mu) ** 2
    return np.array([ox, oy, oz])


@dataclass(frozen=True)
class PhaseResult:
    theta_plus: float
    theta_minus: float
    dynamical_plus: float
    dynamical_minus: float


def geometric_phase(mu0: float, lambda_amp: float, total_time: float = 1.0) -> float:
    """Theta_plus = int_0^T eta' sin^2(mu/2) dt by adaptive quadrature."""
    def integrand(t):
        s = PI * t / total_time
        mu = mu0 + lambda_amp * np.sin(s) ** 2
        etad = (PI ** 2 / total_time) * np.sin(s)
        return etad * np.sin(mu / 2.0) ** 2
    val, _ = quad(integrand, 0.0, total_time, epsabs=1e-12, limit=200)
    return val


def phases(spec: PathSpec) -> PhaseResult:
    """Geometric phases Theta_+-(T) and residual dynamical phases.

    The dynamical integrand <phi+|Omega.sigma|phi+> = Omega . zeta vanishes
    by construction; its quadrature is returned as a diagnostic residual.
    """
    theta_p = geometric_phase(spec.mu0, spec.lambda_amp, spec.total_time)

    def dyn_integrand(t):
        return float(effective_drive(spec, t) @ invariant_vector(spec, t))

    dyn, _ = quad(dyn_integrand, 0.0, spec.total_time, epsabs=1e-12, limit=200)
    return PhaseResult(theta_plus=theta_p, theta_minus=-theta_p,
                       dynamical_plus=dyn, dynamical_minus=-dyn)


def solve_lambda(mu0: float, theta_target: float, total_time: float = 1.0,
                 exact: bool = False) -> float:
    """Solve for the path amplitude Lambda realizing a geometric phase.

    Default mode matches single-qubit gate construction: it returns the
    smallest positive Lambda with Theta_+(Lambda) = theta_target modulo pi
    (a pi offset only flips the global sign of exp[i theta zeta.sigma]).

    With exact=True the equation Theta_+(Lambda) = theta_target is solved
    without the modulo-pi freedom, allowing negative Lambda. Controlled
    gates need this: there the phase difference between invariant branches
    is physical, not global.
    """
    if not (0.0 < theta_target < 2.0 * PI):
        raise NoSolutionError("theta_target must lie in (0, 2 pi)")
    candidates = []
    offsets = [0.0] if exact else [k * PI for k in range(4)]
    hi = PI - mu0 - 1e-6
    lo_neg = -mu0 + 1e-6
    for off in offsets:
        tgt = theta_target + off
        def g(lam, tgt=tgt):
            return geometric_phase(mu0, lam, total_time) - tgt
        if hi > 1e-6 and g(1e-9) * g(hi) < 0:
            candidates.append(brentq(g, 1e-9, hi, xtol=1e-12, rtol=8.9e-16))
        if exact and lo_neg < -1e-6 and g(lo_neg) * g(-1e-9) < 0:
            candidates.append(brentq(g, lo_neg, -1e-9, xtol=1e-12, rtol=8.9e-16))
        if candidates:
            break
    if not candidates:
        raise NoSolutionError(
            f"no Lambda in range realizes theta={theta_target} at mu0={mu0}")
    return min(candidates, key=abs)


def ideal_unitary(spec: PathSpec) -> np.ndarray:
    """Cyclic-evolution unitary U_s = exp[i theta zeta(0).sigma], 2x2.

    theta is the realized geometric phase of the spec (from phases()).
    """
    theta = phases(spec).theta_plus
    z = invariant_vector(spec, 0.0)
    sig = np.array([[[0, 1], [1, 0]],
                    [[0, -1j], [1j, 0]],
                    [[1, 0], [0, -1]]], dtype=complex)
    zs = np.tensordot(z, sig, axes=1)
    return np.cos(theta) * np.eye(2) + 1j * np.sin(theta) * zs


# ---------------------------------------------------------------------------
# physical control channels


def single_qubit_controls_at(omega, frame: CatFrame):
    """Map effective drive (Omega_x, Omega_y, Omega_z) to (chi, eps).

    chi multiplies a+a, eps multiplies a+ (conjugate on a). Values follow
    from exactly inverting P_c (chi a+a + eps a+ + eps* a) P_c =
    Omega.sigma + scalar. omega may be shape (3,) or (3, n).
    """
    ox, oy, oz = np.asarray(omega)
    al, npl, nmi = frame.alpha, frame.n_plus, frame.n_minus
    chi = oz * 2.0 * npl * nmi / (al ** 2 * (nmi ** 2 - npl ** 2))
    eps = (np.exp(1j * frame.xi) * np.sqrt(npl * nmi) / (4.0 * al)
           * (ox + 1j * np.exp(2.0 * al ** 2) * oy))
    return chi, eps


def two_qubit_controls_at(omega, frame: CatFrame):
    """Map the target-qubit drive to the five two-qubit channels.

    Channels multiply, in order: n1 n2 (chi12), n1 (chi1), n2 (chi2),
    n1 a2+ (lam, conjugate on n1 a2), a2+ (eps_t). Control = mode 1,
    target = mode 2. Obtained by inverting
    P_c2 H_c2 P_c2 = Pi1_minus (x) Omega.sigma + scalars.
    """
    ox, oy, oz = np.asarray(omega)
    al, npl, nmi = frame.alpha, frame.n_plus, frame.n_minus
    w_p = al ** 2 * nmi / npl   # <C+|n|C+>
    w_m = al ** 2 * npl / nmi   # <C-|n|C->
    s = 0.5 * (w_p + w_m)
    d = 0.5 * (w_p - w_m)       # negative for real alpha > 0
    eps_omega = (np.exp(1j * frame.xi) * np.sqrt(npl * nmi) / (4.0 * al)
                 * (ox + 1j * np.exp(2.0 * al ** 2) * oy))
    lam = -eps_omega / (2.0 * d)
    chi12 = -oz / (2.0 * d ** 2)
    chi1 = -chi12 * s
    chi2 = -chi12 * w_p
    eps_t = -w_p * lam
    return chi12, chi1, chi2, lam, eps_t


@dataclass(frozen=True)
class SingleQubitSchedule:
    """Sampled single-qubit control waveforms chi(t), eps(t)."""

    grid: np.ndarray
    chi: np.ndarray
    eps: np.ndarray

    def to_csv(self, path):
        data = np.column_stack([self.grid, self.chi.real,
                                self.eps.real, self.eps.imag])
        # adding 0.0 canonicalizes negative zeros so serialization is
        # stable under a read/write round trip
        np.savetxt(path, data + 0.0, delimiter=",", fmt="%.14e",
                   header="t,chi,eps_re,eps_im", comments="")

    @classmethod
    def from_csv(cls, path):
        data = np.genfromtxt(path, delimiter=",", names=True)
        return cls(grid=data["t"].copy(),
                   chi=data["chi"].copy(),
                   eps=data["eps_re"] + 1j * data["eps_im"])


@dataclass(frozen=True)
class TwoQubitSchedule:
    """Sampled two-qubit control waveforms (chi12, chi1, chi2, lam, eps_t)."""

    grid: np.ndarray
    chi12: np.ndarray
    chi1: np.ndarray
    chi2: np.ndarray
    lam: np.ndarray
    eps_t: np.ndarray

    def to_csv(self, path):
        data = np.column_stack([
            self.grid, self.chi12.real, self.chi1.real, self.chi2.real,
            self.lam.real, self.lam.imag, self.eps_t.real, self.eps_t.imag,
        ])
        # see SingleQubitSchedule.to_csv for the + 0.0
        np.savetxt(path, data + 0.0, delimiter=",", fmt="%.14e",
                   header="t,chi12,chi1,chi2,lam_re,lam_im,epst_re,epst_im",
                   comments="")

    @classmethod
    def from_csv(cls, path):
        data = np.genfromtxt(path, delimiter=",", names=True)
        return cls(grid=data["t"].copy(),
                   chi12=data["chi12"].copy(), chi1=data["chi1"].copy(),
                   chi2=data["chi2"].copy(),
                   lam=data["lam_re"] + 1j * data["lam_im"],
                   eps_t=data["epst_re"] + 1j * data["epst_im"])


def single_qubit_controls(spec: PathSpec, frame: CatFrame,
                          n_samples: int = 20001) -> SingleQubitSchedule:
    grid = np.linspace(0.0, spec.total_time, n_samples)
    omega = effective_drive(spec, grid)
    chi, eps = single_qubit_controls_at(omega, frame)
    return SingleQubitSchedule(grid=grid, chi=np.asarray(chi),
                               eps=np.asarray(eps))


def two_qubit_controls(spec: PathSpec, frame: CatFrame,
                       n_samples: int = 20001) -> TwoQubitSchedule:
    grid = np.linspace(0.0, spec.total_time, n_samples)
    omega = effective_drive(spec, grid)
    chi12, chi1, chi2, lam, eps_t = two_qubit_controls_at(omega, frame)
    chi12 = np.broadcast_to(np.asarray(chi12), grid.shape).copy()
    chi1 = np.broadcast_to(np.asarray(chi1), grid.shape).copy()
    chi2 = np.broadcast_to(np.asarray(chi2), grid.shape).copy()
    return TwoQubitSchedule(grid=grid, chi12=chi12, chi1=chi1, chi2=chi2,
                            lam=np.asarray(lam), eps_t=np.asarray(eps_t))


def verify_invariant(spec: PathSpec, frame: CatFrame, kerr: float,
                     n_grid: int = 10001) -> float:
    """Max-norm residual of the invariant equation dI/dt = i [I, H_sub].

    I(t) = zeta(t).sigma as a 2x2 matrix; H_sub is the full Hamiltonian
    (Kerr-cat plus synthesized controls) projected to the cat basis, with
    its scalar part removed. dI/dt by centered differences.
    """
    from .fock import destroy, kerr_cat_hamiltonian

    a = destroy(frame.space)
    ad = a.conj().T
    n_op = ad @ a
    eps2 = kerr * frame.alpha ** 2
    h_cat = kerr_cat_hamiltonian(kerr, eps2, frame.xi, frame.space)
    basis = frame.basis
    sig = np.array([[[0, 1], [1, 0]],
                    [[0, -1j], [1j, 0]],
                    [[1, 0], [0, -1]]], dtype=complex)

    grid = np.linspace(0.0, spec.total_time, n_grid)
    dt = grid[1] - grid[0]
    zeta = invariant_vector(spec, grid)                  # (3, n)
    inv = np.tensordot(zeta.T, sig, axes=1)              # (n, 2, 2)

    residual = 0.0
    for i in range(1, n_grid - 1):
        omega = effective_drive(spec, grid[i])
        chi, eps = single_qubit_controls_at(omega, frame)
        h_full = h_cat + chi * n_op + eps * ad + np.conj(eps) * a
        h_sub = basis.conj().T @ h_full @ basis
        h_sub = h_sub - 0.5 * np.trace(h_sub) * np.eye(2)
        didt = (inv[i + 1] - inv[i - 1]) / (2.0 * dt)
        comm = inv[i] @ h_sub - h_sub @ inv[i]
        residual = max(residual, float(np.abs(didt - 1j * comm).max()))
    return residual


def gap_margin(schedule, frame: CatFrame, kerr: float) -> float:
    """Peak control amplitude over the cat-pair gap; warns above 0.2.

    The synthesis is only valid while the gap dominates the drives.
    """
    eps2 = kerr * frame.alpha ** 2
    gap = cat_pair_gap(kerr, eps2, frame.space)
    if isinstance(schedule, SingleQubitSchedule):
        peak = max(np.abs(schedule.chi).max(), np.abs(schedule.eps).max())
    else:
        peak = max(np.abs(schedule.chi12).max(), np.abs(schedule.chi1).max(),
                   np.abs(schedule.chi2).max(), np.abs(schedule.lam).max(),
                   np.abs(schedule.eps_t).max())
    ratio = float(peak / gap)
    if ratio > 0.2:
        warnings.warn(f"control peak is {ratio:.2f} of the cat gap; "
                      "subspace dynamics may be unreliable")
    return ratio
