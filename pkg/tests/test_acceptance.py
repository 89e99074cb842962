"""Acceptance suite: one test per release criterion, at pinned tolerances.

Run with ``pytest -v -s tests/test_acceptance.py`` to see one PASS/FAIL line
per criterion.
"""

import math
from dataclasses import replace

import numpy as np
import pytest

from dceqi.cli import main
from dceqi.correlations import (
    DegeneratePureStateError,
    critical_temperature,
    ip_exact,
    ip_perturbative,
    steering_exact,
    steering_perturbative,
)
from dceqi.dce import (
    DceParams,
    ThermalOccupations,
    input_cm,
    output_cm,
    scattering_matrix,
    small_parameter,
    thermal_occupation,
)
from dceqi.gaussian import log_negativity

STANDARD = DceParams(
    speed=1.2e8,
    drive_angular_freq=2 * math.pi * 1e10,
    effective_length=5e-4,
    amplitude=0.15,
    temperature=0.050,
)


def check(name, ok, detail=""):
    print(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
    assert ok, f"{name}: {detail}"


def read_csv(path):
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    names = lines[0].split(",")
    return [dict(zip(names, line.split(","))) for line in lines[1:]]


@pytest.fixture(scope="module")
def preset_csvs(tmp_path_factory):
    base = tmp_path_factory.mktemp("presets")
    paths = {}
    for kind in ("fig1", "fig2", "fig3"):
        path = base / f"{kind}.csv"
        assert main(["figure", kind, "--out", str(path)]) == 0
        paths[kind] = path
    return paths


def test_01_thermal_occupation():
    n = thermal_occupation(2 * math.pi * 5e9, 0.050)
    check(
        "thermal occupation at 5 GHz, 50 mK in [7.9e-3, 8.7e-3]",
        7.9e-3 <= n <= 8.7e-3,
        f"n = {n:.6g}",
    )


def test_02_small_parameter():
    f = small_parameter(STANDARD)
    check(
        "small parameter at reference drive in [0.0190, 0.0203]",
        0.0190 <= f <= 0.0203,
        f"f = {f:.6g}",
    )


def test_03_steering_cutoff_temperature():
    t = critical_temperature(STANDARD, "steering")
    check(
        "steering cutoff temperature 32.2 +- 1 mK",
        t is not None and abs(t * 1e3 - 32.2) <= 1.0,
        f"T_c = {t * 1e3:.4f} mK" if t is not None else "T_c = none",
    )


def test_04_entanglement_cutoff_temperature():
    t = critical_temperature(STANDARD, "entanglement")
    check(
        "entanglement cutoff temperature 61 +- 3 mK",
        t is not None and abs(t * 1e3 - 61.0) <= 3.0,
        f"T_c = {t * 1e3:.4f} mK" if t is not None else "T_c = none",
    )


def test_05_perturbative_exact_consistency():
    worst_steering = 0.0
    worst_power = 0.0
    violations = 0
    for f in np.linspace(0.0, 0.05, 30):
        f = float(f)
        for n in np.linspace(0.0, 0.01, 30):
            n = float(n)
            cm = output_cm(f, ThermalOccupations(n, n))
            s_exact = steering_exact(cm)
            s_pert = steering_perturbative(f, n)
            if s_exact > 0.0 and s_pert > 0.0:
                bound = 10 * (f**4 + n * f * f + n * n)
                worst_steering = max(worst_steering, abs(s_exact - s_pert) - bound)
                if abs(s_exact - s_pert) > bound:
                    violations += 1
            if n >= f * f:
                try:
                    p_exact = ip_exact(cm)
                except DegeneratePureStateError:
                    p_exact = 0.0  # vacuum corner; limit value
                bound = 10 * (f**4 + n * n * f * f)
                worst_power = max(worst_power, abs(p_exact - ip_perturbative(f, n)) - bound)
                if abs(p_exact - ip_perturbative(f, n)) > bound:
                    violations += 1
    check(
        "perturbative-exact consistency on 30x30 grid",
        violations == 0,
        f"violations = {violations}, worst margins {worst_steering:.2e}, {worst_power:.2e}",
    )


def test_06_scattering_oracle():
    worst = 0.0
    for f in np.linspace(0.0, 0.2, 10):
        s = scattering_matrix(float(f))
        for n_minus in np.linspace(0.0, 0.05, 10):
            for n_plus in np.linspace(0.0, 0.05, 10):
                occ = ThermalOccupations(float(n_minus), float(n_plus))
                direct = s @ input_cm(occ).entries @ s.T
                closed = output_cm(float(f), occ).entries
                worst = max(worst, float(np.max(np.abs(direct - closed))))
    check(
        "scattering congruence matches closed form to 1e-12",
        worst <= 1e-12,
        f"max entrywise deviation = {worst:.2e}",
    )


def test_07a_fig1_preset(preset_csvs):
    rows = read_csv(preset_csvs["fig1"])
    steering = [float(r["steering_ab"]) for r in rows]
    ip = [float(r["ip_pert"]) for r in rows]
    ok = all(s == 0.0 for s in steering) and all(a < b for a, b in zip(ip, ip[1:]))
    check(
        "fig1 preset: steering identically 0, power strictly increasing",
        ok,
        f"rows = {len(rows)}",
    )


def test_07b_fig2_preset(preset_csvs):
    rows = read_csv(preset_csvs["fig2"])
    positive = [r for r in rows if float(r["steering_ab"]) > 0.0]
    last_t_mk = float(positive[-1]["temperature_K"]) * 1e3
    check(
        "fig2 preset: last steerable row at 32.2 +- 0.5 mK",
        abs(last_t_mk - 32.2) <= 0.5,
        f"T = {last_t_mk:.4f} mK",
    )


def test_07c_fig3_preset(preset_csvs):
    rows = read_csv(preset_csvs["fig3"])
    assert len(rows) == 101 * 101
    n_values = [float(rows[k * 101]["n_th"]) for k in range(101)]
    f_values = [float(rows[j]["f"]) for j in range(101)]
    cell = n_values[1] - n_values[0]
    n_max = n_values[-1]
    steering = np.array([float(r["steering_ab"]) for r in rows]).reshape(101, 101)
    bad = []
    for j, f in enumerate(f_values):
        n_star = ((1 + f * f) / (1 - f * f) ** 2 - 1) / 2
        column = steering[:, j]
        positive = np.flatnonzero(column > 0.0)
        if positive.size == 0:
            ok = n_star <= cell + 1e-15
        elif positive.size == column.size:
            ok = n_star >= n_max - cell
        else:
            contiguous = bool(np.all(positive == np.arange(positive.size)))
            midpoint = n_values[int(positive[-1])] + cell / 2
            ok = contiguous and abs(n_star - midpoint) <= cell
        if not ok:
            bad.append(f)
    check(
        "fig3 preset: steering boundary within one grid cell of analytic zero",
        not bad,
        f"columns off: {bad[:3]}" if bad else f"cell = {cell:.3g}",
    )


def test_08_hierarchy():
    violations = 0
    points = 0
    for f in np.linspace(0.0, 0.2, 30):
        for n in np.linspace(0.0, 0.1, 30):
            cm = output_cm(float(f), ThermalOccupations(float(n), float(n)))
            if steering_exact(cm) > 0.0:
                points += 1
                if not log_negativity(cm) > 0.0:
                    violations += 1
    check(
        "steerable implies entangled on full grid",
        violations == 0 and points > 0,
        f"steerable points = {points}, violations = {violations}",
    )


def test_09_determinism(tmp_path):
    identical = True
    for kind in ("fig1", "fig2", "fig3"):
        first = tmp_path / f"{kind}_a.csv"
        second = tmp_path / f"{kind}_b.csv"
        assert main(["figure", kind, "--out", str(first)]) == 0
        assert main(["figure", kind, "--out", str(second)]) == 0
        identical = identical and first.read_bytes() == second.read_bytes()
    check("figure presets byte-identical across runs", identical)
