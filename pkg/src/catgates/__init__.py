"""Geometric quantum gates on Kerr-cat qubits.

Control synthesis by invariant-based reverse engineering, truncated
Fock-space propagation (closed and open), gate scoring, noise studies,
squeezing amplification, and a circuit-level parameter map.
"""

__version__ = "0.1.0"

from . import circuit, fock, gates, metrics, noise, propagate, scenarios, squeeze, synth  # noqa: F401,E501
