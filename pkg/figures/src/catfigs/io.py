"""Readers for the scenario CSV/JSON artifacts.

Each reader checks the header against the documented schema and returns
plain numpy arrays (or dicts of them). Schema mismatches raise
SchemaError rather than silently reinterpreting columns.
"""

import csv
import json

import numpy as np


class SchemaError(ValueError):
    """Raised when an artifact does not match its documented schema."""


def _read_numeric_csv(path, expected_header):
    with open(path) as fh:
        header = fh.readline().strip()
    if header != expected_header:
        raise SchemaError(f"{path}: header '{header}' != '{expected_header}'")
    data = np.genfromtxt(path, delimiter=",", names=True)
    if data.size == 0:
        raise SchemaError(f"{path}: no data rows")
    return data


def read_bloch(path):
    """bloch_<gate>.csv: t,rx_plus,ry_plus,rz_plus,rx_minus,ry_minus,rz_minus"""
    data = _read_numeric_csv(
        path, "t,rx_plus,ry_plus,rz_plus,rx_minus,ry_minus,rz_minus")
    plus = np.column_stack([data["rx_plus"], data["ry_plus"], data["rz_plus"]])
    minus = np.column_stack([data["rx_minus"], data["ry_minus"],
                             data["rz_minus"]])
    return data["t"], plus, minus


def read_waveforms(path):
    """waveforms CSV: t,chi,eps_re,eps_im"""
    data = _read_numeric_csv(path, "t,chi,eps_re,eps_im")
    return data["t"], data["chi"], data["eps_re"] + 1j * data["eps_im"]


def read_sweep(path):
    """sweep CSV: alpha,kerr,infidelity"""
    data = _read_numeric_csv(path, "alpha,kerr,infidelity")
    return data["alpha"], data["kerr"], data["infidelity"]


def read_populations(path):
    """populations.csv: gate,input,p_plus,p_minus,leakage -> list of rows"""
    rows = []
    with open(path) as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != ["gate", "input", "p_plus", "p_minus", "leakage"]:
            raise SchemaError(f"{path}: unexpected header {header}")
        for rec in reader:
            rows.append({"gate": rec[0], "input": rec[1],
                         "p_plus": float(rec[2]), "p_minus": float(rec[3]),
                         "leakage": float(rec[4])})
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    return rows


def read_cnot_populations(path):
    """cnot_populations.csv: input,p_pp,p_pm,p_mp,p_mm,leakage"""
    rows = []
    with open(path) as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != ["input", "p_pp", "p_pm", "p_mp", "p_mm", "leakage"]:
            raise SchemaError(f"{path}: unexpected header {header}")
        for rec in reader:
            rows.append({"input": rec[0],
                         "probs": [float(v) for v in rec[1:5]],
                         "leakage": float(rec[5])})
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    return rows


def read_systematic(path):
    """systematic.csv: channel,delta,fidelity -> {channel: (delta, fid)}"""
    out = {}
    with open(path) as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != ["channel", "delta", "fidelity"]:
            raise SchemaError(f"{path}: unexpected header {header}")
        for rec in reader:
            out.setdefault(rec[0], []).append((float(rec[1]), float(rec[2])))
    if not out:
        raise SchemaError(f"{path}: no data rows")
    return {chan: (np.array([d for d, _ in pts]),
                   np.array([f for _, f in pts]))
            for chan, pts in out.items()}


def read_ensemble(path):
    """awgn.csv / pink.csv: run,seed,infidelity"""
    data = _read_numeric_csv(path, "run,seed,infidelity")
    return data["run"].astype(int), data["infidelity"]


def read_decoherence_grid(path):
    """decoherence_grid.csv: kappa,kappa_phi,infidelity"""
    data = _read_numeric_csv(path, "kappa,kappa_phi,infidelity")
    return data["kappa"], data["kappa_phi"], data["infidelity"]


def read_photon_trace(path):
    """photon_trace.csv: t,n_p"""
    data = _read_numeric_csv(path, "t,n_p")
    return data["t"], data["n_p"]


def read_summary(path):
    """summary.json written next to every scenario's artifacts."""
    with open(path) as fh:
        payload = json.load(fh)
    for key in ("scenario", "summary", "schema_version"):
        if key not in payload:
            raise SchemaError(f"{path}: missing '{key}'")
    return payload
