"""Scoring: gate and state fidelities, populations, Bloch trajectories.

Average gate fidelity follows the standard subspace formula

    F = [Tr(M M+) + |Tr M|^2] / [D (D + 1)],   M = U_target+ B+ U B,

with B the column matrix of computational-basis kets embedded in the full
Fock space and D the logical dimension (2 or 4). Both terms are invariant
under a global phase of U.
"""

from dataclasses import dataclass

import numpy as np

from .fock import CatFrame


@dataclass(frozen=True)
class GateTarget:
    """Logical target unitary plus its embedding basis.

    matrix is D x D in the computational basis; basis is size x D with the
    basis kets as columns.
    """

    name: str
    matrix: np.ndarray
    basis: np.ndarray

    def __post_init__(self):
        d = self.matrix.shape[0]
        defect = np.abs(self.matrix.conj().T @ self.matrix - np.eye(d)).max()
        if defect > 1e-12:
            raise ValueError(f"target '{self.name}' not unitary ({defect:.2e})")
        if self.basis.shape[1] != d:
            raise ValueError("basis column count must match target dimension")


def average_gate_fidelity(u_actual: np.ndarray, target: GateTarget) -> float:
    b = target.basis
    if u_actual.shape[0] != b.shape[0]:
        raise ValueError("operator and basis dimensions disagree")
    m = target.matrix.conj().T @ (b.conj().T @ u_actual @ b)
    d = m.shape[0]
    val = (np.trace(m @ m.conj().T) + abs(np.trace(m)) ** 2) / (d * (d + 1))
    return float(val.real)


def state_fidelity(rho: np.ndarray, psi: np.ndarray) -> float:
    """<psi| rho |psi> for a density matrix, |<psi|phi>|^2 for a ket."""
    psi = np.asarray(psi)
    rho = np.asarray(rho)
    if rho.ndim == 1:
        return float(abs(np.vdot(psi, rho)) ** 2)
    if rho.shape[0] != psi.shape[0]:
        raise ValueError("dimension mismatch")
    return float((psi.conj() @ rho @ psi).real)


def populations(state: np.ndarray, frame: CatFrame):
    """(P+, P-, leakage) of a ket or density matrix in the cat frame."""
    state = np.asarray(state)
    if state.ndim == 1:
        p_plus = abs(np.vdot(frame.c_plus, state)) ** 2
        p_minus = abs(np.vdot(frame.c_minus, state)) ** 2
    else:
        p_plus = (frame.c_plus.conj() @ state @ frame.c_plus).real
        p_minus = (frame.c_minus.conj() @ state @ frame.c_minus).real
    return float(p_plus), float(p_minus), float(1.0 - p_plus - p_minus)


def superposition_fidelity(u_actual: np.ndarray, frame: CatFrame,
                           sign: int) -> float:
    """Hadamard-style superposition fidelity for input (|C+>+-|C->)/sqrt(2).

    F^+ = |<C+|U|C+> + <C-|U|C+>|^2 / 2 for sign=+1 and
    F^- = |<C+|U|C-> - <C-|U|C->|^2 / 2 for sign=-1.
    """
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    ket_in = frame.c_plus if sign == +1 else frame.c_minus
    up = np.vdot(frame.c_plus, u_actual @ ket_in)
    um = np.vdot(frame.c_minus, u_actual @ ket_in)
    return float(0.5 * abs(up + sign * um) ** 2)


_PAULI2 = np.array([[[0, 1], [1, 0]],
                    [[0, -1j], [1j, 0]],
                    [[1, 0], [0, -1]]], dtype=complex)


def bloch_trajectory(states, frame: CatFrame, leakage_limit: float = 0.05):
    """Bloch vectors r(t) of the cat-subspace part of each state.

    Accepts full-space kets, full-space density matrices, or 2-vectors
    already written in the cat basis. Samples whose leakage exceeds
    leakage_limit are marked with NaN rather than silently renormalized.
    """
    b = frame.basis
    out = np.empty((len(states), 3))
    for i, state in enumerate(states):
        state = np.asarray(state)
        if state.ndim == 1 and state.shape[0] == 2:
            v = state
            weight = float(np.vdot(v, v).real)
            rho2 = np.outer(v, v.conj())
        elif state.ndim == 1:
            v = b.conj().T @ state
            weight = float(np.vdot(v, v).real)
            rho2 = np.outer(v, v.conj())
        else:
            rho2 = b.conj().T @ state @ b
            weight = float(np.trace(rho2).real)
        if 1.0 - weight > leakage_limit:
            out[i] = np.nan
            continue
        rho2 = rho2 / weight
        out[i] = [np.trace(rho2 @ s).real for s in _PAULI2]
    return out


def mean_photon_number(state: np.ndarray, n_op: np.ndarray) -> float:
    """Tr[rho a+a] (or <psi|a+a|psi>) for a supplied number operator."""
    state = np.asarray(state)
    if state.ndim == 1:
        return float((state.conj() @ n_op @ state).real)
    return float(np.trace(state @ n_op).real)


def solid_angle(r_traj: np.ndarray) -> float:
    """Signed solid angle enclosed by a closed loop on the unit sphere.

    Sums oriented spherical-triangle areas fanned from the first sample
    (Van Oosterom-Strackee). Counterclockwise loops (seen from outside)
    count positive. The geometric phase of the +1 invariant branch equals
    minus half of this value for the loops generated here.
    """
    r = np.asarray(r_traj, dtype=float)
    r = r / np.linalg.norm(r, axis=1, keepdims=True)
    r0 = r[0]
    total = 0.0
    for i in range(1, len(r) - 1):
        r1, r2 = r[i], r[i + 1]
        num = float(r0 @ np.cross(r1, r2))
        den = 1.0 + float(r0 @ r1) + float(r1 @ r2) + float(r2 @ r0)
        total += 2.0 * np.arctan2(num, den)
    return total
