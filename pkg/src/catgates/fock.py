"""Truncated Fock-space operator algebra for Kerr-cat qubits.

Everything here is dense numpy. Dimensions in this project stay small
(dim <= 60 single mode, 15 per mode for two-mode runs), so dense linear
algebra is both the fastest and the simplest choice.

Unit convention used repo-wide: time in microseconds, every angular
frequency or coupling in rad/us. A quantity quoted as "2pi x f MHz"
enters as 2*pi*f rad/us. Plain decay rates (kappa, kappa_phi) are us^-1.
"""

from dataclasses import dataclass, field
import warnings

import numpy as np
from scipy.special import gammaln, gammainc


class InvalidSpaceError(ValueError):
    """Raised for Fock spaces that cannot host the requested operator."""


class DegenerateFrameError(ValueError):
    """Raised when a cat frame is requested at alpha = 0 (|C-> undefined)."""


class TruncationWarning(UserWarning):
    """Emitted when a state has non-negligible weight beyond the truncation."""


@dataclass(frozen=True)
class FockSpace:
    """Truncated bosonic Fock space with states |0> .. |dim-1> per mode."""

    dim: int
    n_modes: int = 1

    def __post_init__(self):
        if self.dim < 2:
            raise InvalidSpaceError(f"need dim >= 2, got {self.dim}")
        if self.n_modes not in (1, 2):
            raise InvalidSpaceError(f"n_modes must be 1 or 2, got {self.n_modes}")

    @property
    def size(self) -> int:
        """Total Hilbert-space dimension dim**n_modes."""
        return self.dim ** self.n_modes


def destroy(space: FockSpace) -> np.ndarray:
    """Single-mode annihilation operator: <n-1|a|n> = sqrt(n)."""
    return np.diag(np.sqrt(np.arange(1, space.dim)), 1).astype(complex)


def create(space: FockSpace) -> np.ndarray:
    return destroy(space).conj().T


def number(space: FockSpace) -> np.ndarray:
    return np.diag(np.arange(space.dim)).astype(complex)


def identity(space: FockSpace) -> np.ndarray:
    return np.eye(space.dim, dtype=complex)


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with fixed mode-1 (x) mode-2 ordering."""
    if a.shape[0] != a.shape[1] or b.shape[0] != b.shape[1]:
        raise ValueError("tensor expects square operators")
    return np.kron(a, b)


def embed(op: np.ndarray, space: FockSpace, mode: int) -> np.ndarray:
    """Lift a single-mode operator onto a two-mode space."""
    if space.n_modes != 2:
        raise InvalidSpaceError("embed targets a two-mode space")
    eye = np.eye(space.dim, dtype=complex)
    return np.kron(op, eye) if mode == 0 else np.kron(eye, op)


def coherent_state(alpha: complex, space: FockSpace) -> np.ndarray:
    """Coherent state |alpha>, renormalized after truncation.

    Warns when the Poisson tail beyond the truncation carries more than
    1e-10 probability.
    """
    mean = abs(alpha) ** 2
    # Poisson tail P(n >= dim) for mean |alpha|^2 = regularized lower
    # incomplete gamma gammainc(dim, mean).
    tail = gammainc(space.dim, mean) if mean > 0 else 0.0
    if tail > 1e-10:
        warnings.warn(
            f"coherent state |alpha|^2={mean:.3g} has tail weight "
            f"{tail:.3g} beyond dim={space.dim}",
            TruncationWarning,
        )
    n = np.arange(space.dim)
    if alpha == 0:
        vec = np.zeros(space.dim, dtype=complex)
        vec[0] = 1.0
        return vec
    logmag = n * np.log(abs(alpha)) - 0.5 * gammaln(n + 1)
    vec = np.exp(logmag) * np.exp(1j * n * np.angle(alpha))
    return vec / np.linalg.norm(vec)


@dataclass(frozen=True)
class CatFrame:
    """Computational frame of a single cat qubit.

    alpha is the (real, positive) coherent amplitude; the pump phase xi
    carries any phase, so a complex input amplitude is rotated into this
    parametrization by cat_frame().
    """

    alpha: float
    xi: float
    space: FockSpace
    n_plus: float
    n_minus: float
    c_plus: np.ndarray = field(repr=False)
    c_minus: np.ndarray = field(repr=False)
    projector: np.ndarray = field(repr=False)

    @property
    def basis(self) -> np.ndarray:
        """dim x 2 matrix whose columns are |C+>, |C->."""
        return np.column_stack([self.c_plus, self.c_minus])

    def paulis(self):
        """Logical (sigma_x, sigma_y, sigma_z) supported inside the projector."""
        cp, cm = self.c_plus, self.c_minus
        sx = np.outer(cp, cm.conj()) + np.outer(cm, cp.conj())
        sy = 1j * (np.outer(cm, cp.conj()) - np.outer(cp, cm.conj()))
        sz = np.outer(cp, cp.conj()) - np.outer(cm, cm.conj())
        return sx, sy, sz


def cat_frame(alpha: complex, xi: float = 0.0, space: FockSpace | None = None) -> CatFrame:
    """Build the cat-qubit frame |C+->, N+- and subspace projector.

    A complex alpha is reduced to (|alpha|, xi + arg alpha).
    """
    if space is None:
        space = FockSpace(30)
    mag = abs(alpha)
    if mag == 0:
        raise DegenerateFrameError("alpha = 0 leaves |C-> undefined")
    xi_tot = float(xi + np.angle(alpha))
    amp = mag * np.exp(1j * xi_tot)
    plus = coherent_state(amp, space)
    minus = coherent_state(-amp, space)
    cp = plus + minus
    cp = cp / np.linalg.norm(cp)
    cm = plus - minus
    cm = cm / np.linalg.norm(cm)
    n_plus = 2.0 * (1.0 + np.exp(-2.0 * mag ** 2))
    n_minus = 2.0 * (1.0 - np.exp(-2.0 * mag ** 2))
    proj = np.outer(cp, cp.conj()) + np.outer(cm, cm.conj())
    return CatFrame(
        alpha=mag, xi=xi_tot, space=space,
        n_plus=n_plus, n_minus=n_minus,
        c_plus=cp, c_minus=cm, projector=proj,
    )


def kerr_cat_hamiltonian(kerr: float, eps2: float, xi: float, space: FockSpace) -> np.ndarray:
    """H_cat = -K a+^2 a^2 + eps2 (e^{2i xi} a+^2 + e^{-2i xi} a^2), rad/us."""
    if kerr <= 0:
        raise ValueError("kerr must be positive")
    if eps2 < 0:
        raise ValueError("eps2 must be nonnegative")
    a = destroy(space)
    ad = a.conj().T
    return -kerr * ad @ ad @ a @ a + eps2 * (
        np.exp(2j * xi) * ad @ ad + np.exp(-2j * xi) * a @ a
    )


def two_mode_kerr_cat_hamiltonian(kerr: float, eps2: float, space: FockSpace) -> np.ndarray:
    """Sum of identical single-mode Kerr-cat Hamiltonians (xi = 0) on two modes."""
    single = FockSpace(space.dim)
    h1 = kerr_cat_hamiltonian(kerr, eps2, 0.0, single)
    eye = np.eye(space.dim, dtype=complex)
    return np.kron(h1, eye) + np.kron(eye, h1)


def cat_pair_gap(kerr: float, eps2: float, space: FockSpace) -> float:
    """Energy gap between the degenerate cat pair and the nearest eigenstate.

    The cat pair sits at the top of the spectrum of H_cat; the gap to the
    first excited manifold controls leakage under driving.
    """
    h = kerr_cat_hamiltonian(kerr, eps2, 0.0, space)
    w = np.sort(np.linalg.eigvalsh(h))[::-1]
    return float(w[1] - w[2])
