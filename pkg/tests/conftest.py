import time

import numpy as np
import pytest

from catgates import fock, gates, propagate


@pytest.fixture(scope="session")
def frame30():
    return fock.cat_frame(0.5, 0.0, fock.FockSpace(30))


def _timed_gate(name):
    t0 = time.perf_counter()
    run = gates.run_gate(name)
    return run, time.perf_counter() - t0


@pytest.fixture(scope="session")
def not_run():
    return _timed_gate("not")


@pytest.fixture(scope="session")
def hadamard_run():
    return _timed_gate("hadamard")


@pytest.fixture(scope="session")
def phase_run():
    return _timed_gate("phase")


@pytest.fixture(scope="session")
def cnot_run():
    t0 = time.perf_counter()
    run = gates.run_cnot()
    return run, time.perf_counter() - t0


@pytest.fixture(scope="session")
def hadamard_lindblad(frame30):
    """Open-system Hadamard runs (kappa = kappa_phi = 0.05/us), both inputs."""
    spec = gates.gate_path_spec("hadamard")
    ham = gates.single_qubit_hamiltonian(spec, frame30)
    out = {}
    for label, ket in (("plus", frame30.c_plus), ("minus", frame30.c_minus)):
        rho0 = np.outer(ket, ket.conj())
        out[label] = propagate.lindblad_evolve(
            ham, rho0, 1.0, 0.05, 0.05, frame30.space, n_steps=20000,
            n_store=11)
    return out
