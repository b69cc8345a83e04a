"""Superconducting-circuit parameter map and first-order error budget.

Maps SQUID-array circuit parameters (E_C, E_J, E~_J modulation, N, pump
drive) to the effective Kerr-cat quantities:

    omega_c = sqrt(8 E_C E_J / N),  K = E_C / (2 N^2),
    eps2 = omega_c E~_J / (8 E_J),  chi = omega_c - omega_p,
    eps = -i |eps| exp(-i phi_p).

All energies/frequencies are rad/us; inputs quoted as 2 pi x MHz must be
converted by the caller (the CLI accepts an explicit unit tag). The drive
magnitude prefactor E_C C_p V_p / (2 e) is exposed as a helper with the
Cooper-pair charge set to 1, so C_p V_p is supplied in units of 2e.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class CircuitParams:
    e_c: float                 # charging energy, rad/us
    e_j: float                 # Josephson energy, rad/us
    e_j_mod: float             # flux-modulation amplitude E~_J, rad/us
    n_squids: int = 1
    v_p: float = 0.0           # pump voltage amplitude (units of 2e/C_p)
    c_p: float = 0.0           # pump capacitance (relative)
    omega_p: float = 0.0       # pump frequency, rad/us
    phi_p: float = 0.0         # pump phase, rad

    def __post_init__(self):
        if self.e_c <= 0 or self.e_j <= 0 or self.e_j_mod < 0:
            raise ValueError("energies must be positive")
        if self.n_squids < 1:
            raise ValueError("n_squids must be >= 1")

    @property
    def omega_c(self) -> float:
        return float(np.sqrt(8.0 * self.e_c * self.e_j / self.n_squids))

    @property
    def n_zero(self) -> float:
        """Zero-point charge amplitude [E_J / (32 N E_C)]^(1/4)."""
        return float((self.e_j / (32.0 * self.n_squids * self.e_c)) ** 0.25)

    @property
    def phi_zero(self) -> float:
        return 1.0 / (2.0 * self.n_zero)


@dataclass(frozen=True)
class EffectiveParams:
    omega_c: float
    kerr: float
    eps2: float
    chi: float
    eps: complex


def drive_amplitude(e_c: float, c_p: float, v_p: float) -> float:
    """|eps| = E_C C_p V_p / 2 with the Cooper-pair charge as the unit."""
    return e_c * c_p * v_p / 2.0


def effective_params(cp: CircuitParams) -> EffectiveParams:
    omega_c = cp.omega_c
    kerr = cp.e_c / (2.0 * cp.n_squids ** 2)
    eps2 = omega_c * cp.e_j_mod / (8.0 * cp.e_j)
    chi = omega_c - cp.omega_p
    mag = drive_amplitude(cp.e_c, cp.c_p, cp.v_p)
    eps = -1j * mag * np.exp(-1j * cp.phi_p)
    return EffectiveParams(omega_c=omega_c, kerr=kerr, eps2=eps2,
                           chi=chi, eps=eps)


def invert_effective_params(kerr: float, eps2: float, n_squids: int,
                            omega_c: float):
    """Recover (E_C, E_J, E~_J) from the effective parameters."""
    e_c = 2.0 * kerr * n_squids ** 2
    e_j = omega_c ** 2 * n_squids / (8.0 * e_c)
    e_j_mod = 8.0 * eps2 * e_j / omega_c
    return e_c, e_j, e_j_mod


@dataclass(frozen=True)
class ErrorBudget:
    d_omega_c: float
    d_kerr: float
    d_eps2: float
    d_eps_fraction: float
    d_alpha: float


def error_propagation(cp: CircuitParams, d_ec: float, d_ej: float,
                      d_vp: float, alpha: float = 0.5) -> ErrorBudget:
    """First-order control-parameter errors from fractional circuit errors.

    d_ec, d_ej, d_vp are the fractions dE_C/E_C, dE_J/E_J, dV_p/V_p.
    d_eps_fraction is the fractional error on the drive amplitude; d_alpha
    is in amplitude units for the supplied cat amplitude.
    """
    for frac in (d_ec, d_ej, d_vp):
        if abs(frac) >= 0.5:
            raise ValueError("fractional errors must stay below 0.5")
    eff = effective_params(cp)
    d_omega_c = 0.5 * eff.omega_c * (d_ej + d_ec)
    d_kerr = eff.kerr * d_ec
    d_eps2 = 0.5 * eff.eps2 * (d_ec - d_ej)
    d_eps_fraction = d_ec + d_vp
    d_alpha = -(alpha / 4.0) * (2.0 * d_ec - d_ej)
    return ErrorBudget(d_omega_c=d_omega_c, d_kerr=d_kerr, d_eps2=d_eps2,
                       d_eps_fraction=d_eps_fraction, d_alpha=d_alpha)
