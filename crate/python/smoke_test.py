#!/usr/bin/env python3
"""Smoke test for the soniq_py extension module.

Builds the cdylib if needed, stages it under an importable name, and checks
a handful of closed-form values end to end:

    python3 python/smoke_test.py
"""

import math
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def locate_or_build_cdylib() -> Path:
    candidates = [
        REPO / "target" / "release" / "libsoniq_py.so",
        REPO / "target" / "debug" / "libsoniq_py.so",
    ]
    for path in candidates:
        if path.exists():
            return path
    subprocess.run(
        ["cargo", "build", "-p", "soniq-py", "--release"], cwd=REPO, check=True
    )
    return candidates[0]


def stage_module(cdylib: Path) -> Path:
    stage = Path(tempfile.mkdtemp(prefix="soniq_py_"))
    shutil.copy2(cdylib, stage / "soniq_py.so")
    return stage


def approx(actual, expected, tol=1e-9, label=""):
    if abs(actual - expected) > tol:
        raise AssertionError(f"{label}: {actual!r} != {expected!r} (tol {tol})")


def main() -> None:
    sys.path.insert(0, str(stage_module(locate_or_build_cdylib())))
    import soniq_py as sq

    print(f"soniq_py {sq.__version__}")

    # Horizon of the linear transonic profile.
    h = sq.find_horizon_linear(1.0, 2.0, 0.5)
    approx(h.radius, 2.0, 1e-10, "horizon radius")
    approx(h.surface_gravity, 0.5, 1e-10, "surface gravity")
    approx(h.temperature, 0.5 / (2.0 * math.pi), 1e-14, "Hawking temperature")

    # Squeeze map at tanh r = 1/2 (omega/alpha = ln 2 / pi).
    s = sq.squeeze_parameter(math.log(2.0) / math.pi, 1.0)
    approx(s.r, 0.5493061443340548, 1e-13, "squeeze parameter")
    approx(s.tanh_r, 0.5, 1e-13, "tanh r")
    approx(s.nbar, 1.0 / 3.0, 1e-12, "mean occupation")
    u, v = sq.bogoliubov_pair(math.log(2.0) / math.pi, 1.0)
    approx(u * u - v * v, 1.0, 1e-12, "Bogoliubov identity")

    # SI temperature round trip at the 200 nK scale.
    alpha_si = sq.alpha_for_temperature(200e-9, "si")
    approx(alpha_si / 1.6452e5, 1.0, 5e-4, "alpha at 200 nK")
    approx(sq.hawking_temperature(alpha_si, "si"), 200e-9, 1e-16, "round trip")

    # Squeezed vacuum diagnostics.
    diag = sq.squeezed_vacuum_diagonal(0.5493061443340548, 20)
    approx(diag[0], math.sqrt(3.0) / 2.0, 1e-12, "c00")
    approx(diag[1], 0.5 * diag[0], 1e-12, "c11")
    occ = sq.reduced_occupations(0.5493061443340548, 40)
    approx(occ[0], 0.75, 1e-12, "p0")
    approx(occ[1], 0.1875, 1e-12, "p1")
    approx(
        sq.entanglement_entropy(0.5493061443340548, 40),
        0.7497801928250778,
        1e-8,
        "entanglement entropy",
    )

    # Teleportation of a unit coherent target at tanh r = 1/2.
    out = sq.teleport_coherent(1.0 + 0.0j, 0.5493061443340548)
    approx(out.fidelity, math.exp(-0.25), 1e-8, "simulated fidelity")
    approx(out.probability, 0.75 * math.exp(-0.75), 1e-8, "outcome probability")
    approx(
        sq.analytic_fidelity_zero(1.0 + 0.0j, 0.5493061443340548),
        math.exp(-0.25),
        1e-14,
        "closed-form fidelity",
    )

    # Conditional outcome bookkeeping for an arbitrary target.
    target = sq.coherent_amplitudes(1.0 + 0.0j, 40)
    cond = sq.mb_conditional(target, 0.8, 1, "+")
    assert cond.k == 1 and cond.sign == "+"
    assert 0.0 < cond.probability < 1.0

    # Fidelity strictly improves with surface gravity.
    rows = sq.fidelity_sweep(1.0 + 0.0j, 1.0, [2.0, 5.0, 10.0, 20.0])
    fs = [row.f_simulated for row in rows]
    assert all(b > a for a, b in zip(fs, fs[1:])), f"not monotone: {fs}"
    for row in rows:
        approx(row.f_simulated, row.f_analytic, 1e-8, "sweep row consistency")

    print("smoke test passed")


if __name__ == "__main__":
    main()
