import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from catgates import gates, noise, synth


def _test_signal(n=4096):
    t = np.linspace(0.0, 1.0, n)
    return np.sin(2 * np.pi * 3 * t) + 0.3


def test_config_validation():
    with pytest.raises(ValueError):
        noise.NoiseConfig(kind="brown")
    with pytest.raises(ValueError):
        noise.NoiseConfig(kind="awgn", channels=())
    with pytest.raises(ValueError):
        noise.NoiseConfig(kind="awgn", channels=("x", "q"))


@settings(max_examples=25)
@given(st.integers(min_value=0, max_value=2 ** 32),
       st.floats(min_value=-5.0, max_value=40.0))
def test_awgn_deterministic(seed, snr_db):
    sig = _test_signal(512)
    a = noise.add_awgn(sig, snr_db, seed)
    b = noise.add_awgn(sig, snr_db, seed)
    assert np.array_equal(a, b)


def test_awgn_snr_cap():
    sig = _test_signal(512)
    out = noise.add_awgn(sig, 300.0, 1)
    assert np.abs(out - sig).max() < 1e-12


def test_awgn_zero_power():
    with pytest.raises(noise.ZeroPowerError):
        noise.add_awgn(np.zeros(100), 10.0, 0)


def test_awgn_empirical_snr():
    sig = _test_signal(100000)
    out = noise.add_awgn(sig, 10.0, 42)
    p_sig = np.mean(sig ** 2)
    p_noise = np.mean((out - sig) ** 2)
    measured_db = 10 * np.log10(p_sig / p_noise)
    assert abs(measured_db - 10.0) < 1.0


def test_pink_empirical_snr():
    sig = _test_signal(100000)
    out = noise.add_pink(sig, 10.0, 42, dt=1e-5)
    p_sig = np.mean(sig ** 2)
    p_noise = np.mean((out - sig) ** 2)
    measured_db = 10 * np.log10(p_sig / p_noise)
    assert abs(measured_db - 1e1) < 1.0


def test_pink_spectral_slope():
    # log-log periodogram slope near -1 over a decade, seed-averaged
    n, dt = 8192, 1e-4
    f = np.fft.rfftfreq(n, dt)
    band = (f >= 100.0) & (f <= 1000.0)
    psd_acc = np.zeros(band.sum())
    for seed in range(100):
        trace = noise.pink_noise(n, dt, 1.0, seed)
        psd = np.abs(np.fft.rfft(trace)) ** 2
        psd_acc += psd[band]
    slope = np.polyfit(np.log10(f[band]), np.log10(psd_acc / 100), 1)[0]
    assert abs(slope + 1.0) < 0.15


def test_pink_deterministic():
    a = noise.pink_noise(1024, 1e-3, 2.0, 7)
    b = noise.pink_noise(1024, 1e-3, 2.0, 7)
    assert np.array_equal(a, b)


def test_systematic_zero_delta_identical():
    spec = gates.gate_path_spec("hadamard")
    drive = noise.apply_systematic(spec, [0.0, 0.0, 0.0])
    for t in (0.1, 0.4, 0.9):
        assert np.array_equal(drive(t), synth.effective_drive(spec, t))


def test_systematic_scales_channel():
    spec = gates.gate_path_spec("hadamard")
    drive = noise.apply_systematic(spec, [0.0, 0.0, 0.1])
    base = synth.effective_drive(spec, 0.3)
    pert = drive(0.3)
    assert abs(pert[2] - 1.1 * base[2]) < 1e-14
    assert abs(pert[0] - base[0]) < 1e-14


def test_monte_carlo_systematic_zero_delta():
    cfg = noise.NoiseConfig(kind="systematic", delta=(0.0, 0.0, 0.0))
    stats = noise.monte_carlo("not", cfg, 3, n_steps=500, dim=20)
    assert stats.count == 3
    assert stats.n_failed == 0
    assert np.ptp(stats.infidelities) == 0.0
    assert stats.min <= stats.mean <= stats.max


def test_monte_carlo_seeding_prefix():
    cfg = noise.NoiseConfig(kind="awgn", snr_db=10.0, seed=99)
    short = noise.monte_carlo("not", cfg, 3, n_steps=500, dim=20)
    long = noise.monte_carlo("not", cfg, 6, n_steps=500, dim=20)
    assert np.array_equal(short.infidelities, long.infidelities[:3])
    assert np.array_equal(short.seeds, long.seeds[:3])


def test_ensemble_csv(tmp_path):
    cfg = noise.NoiseConfig(kind="pink", snr_db=10.0, seed=5)
    stats = noise.monte_carlo("not", cfg, 2, n_steps=500, dim=20)
    path = tmp_path / "runs.csv"
    stats.to_csv(path)
    lines = path.read_text().splitlines()
    assert lines[0] == "run,seed,infidelity"
    assert len(lines) == 3
