"""
Acceptance criteria, each at its stated tolerance.

Every test prints one PASS/FAIL line (visible with ``pytest -s`` or in the
captured output of ``pytest -v``).
"""

import itertools
import math
import random
import time

import numpy as np
import pytest

from magnon_torus import (CouplingSet, InstabilityError, Regime, ToricClass, canonical_params,
                          curvature, orbit_point, preset, solve_splitting, solve_squeezing,
                          splitting_angle, splitting_eigenstate, squeezing_eigenstate,
                          squeezing_parameter)
from magnon_torus.cli import main
from magnon_torus.oracle import embedding_curvature_fd
from magnon_torus.validation import (duality_errors, random_fm_configs, seven_point_grid,
                                     splitting_errors, squeezing_errors)


def report(number, title, passed, detail):
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {title} ({detail})"
    print("\n" + line)
    return line


def test_1_splitting_oracle_equivalence(capsys):
    t0 = time.perf_counter()
    e, a, s = splitting_errors(max_sector=6, angles=(0.0, -math.pi / 8, -math.pi / 4, 0.3, -0.6))
    elapsed = time.perf_counter() - t0
    ok = e <= 1e-9 and a <= 1e-9 and s <= 1e-8 and elapsed < 5.0
    with capsys.disabled():
        report(1, "splitting vs sector oracle", ok,
               f"energy {e:.1e}, amplitude {a:.1e}, entropy {s:.1e}, {elapsed:.2f} s")
    assert e <= 1e-9
    assert a <= 1e-9
    assert s <= 1e-8
    assert elapsed < 5.0


def test_2_squeezing_oracle_equivalence(capsys):
    t0 = time.perf_counter()
    e, a, s, v = squeezing_errors(max_quantum=2, ratios=(0.2, 0.6, 0.9), cutoff=80)
    elapsed = time.perf_counter() - t0
    ok = a <= 1e-6 and s <= 1e-6 and v <= 1e-10 and elapsed < 10.0
    with capsys.disabled():
        report(2, "squeezing vs sector oracle", ok,
               f"amplitude {a:.1e}, entropy {s:.1e}, vacuum closed form {v:.1e}, "
               f"energy {e:.1e}, {elapsed:.2f} s")
    assert a <= 1e-6
    assert s <= 1e-6
    assert v <= 1e-10
    assert elapsed < 10.0


def test_3_duality(capsys):
    lattice = preset("chain")
    configs = random_fm_configs(count=10, seed=20240611, lattice=lattice)
    assert len(configs) == 10 and all(c.regime is Regime.FM for c in configs)
    p, s, rt = duality_errors(configs, lattice, seven_point_grid(),
                              quantum_numbers=((0, 0), (1, 0), (1, 1)))
    ok = p <= 1e-12 and s <= 1e-10 and rt <= 1e-12
    with capsys.disabled():
        report(3, "FM -> AFM duality", ok,
               f"parameters {p:.1e}, entropies {s:.1e}, round trip {rt:.1e}")
    assert p <= 1e-12
    assert s <= 1e-10
    assert rt <= 1e-12


def _orbit_spread(tc, J_z, B, lattice, ks, quantum_numbers):
    angles = np.linspace(0.0, 2 * math.pi, 16, endpoint=False)
    rows, skipped = [], 0
    for phi, psi in itertools.product(angles, angles):
        J, D, r, K = orbit_point(tc, phi, psi)
        try:
            c = CouplingSet(J, D, r, K, J_z, B, tc.regime)
        except ValueError:
            skipped += 1  # outside the regime's sign constraints
            continue
        row = []
        for k in ks:
            p = canonical_params(c, lattice, [k])
            sp = solve_splitting(p.omega, p.delta, p.chi_tilde)
            sq = solve_squeezing(p.omega, p.delta, p.lambda_tilde)
            row += [p.omega, p.delta, p.chi_tilde, p.lambda_tilde]
            for m, n in quantum_numbers:
                row.append(splitting_eigenstate(m, n, sp.theta).entropy)
                row.append(squeezing_eigenstate(m, n, sq).entropy)
        rows.append(row)
    arr = np.array(rows)
    return float(np.max(arr.max(axis=0) - arr.min(axis=0))), len(rows), skipped


def test_4_toric_orbit_invariance(capsys):
    lattice = preset("chain")
    ks = (0.0, 0.4, 1.1, 2.5)
    qn = ((0, 0), (1, 0), (1, 1), (2, 1))
    fm_spread, fm_n, fm_skip = _orbit_spread(ToricClass(1.0, 0.3, Regime.FM), -1.0, 0.2, lattice, ks, qn)
    afm_spread, afm_n, afm_skip = _orbit_spread(ToricClass(0.3, 1.0, Regime.AFM), 2.0, 0.1, lattice, ks, qn)
    spread = max(fm_spread, afm_spread)
    ok = spread <= 1e-10 and fm_n > 0 and afm_n > 0
    with capsys.disabled():
        report(4, "toric orbit invariance", ok,
               f"spread {spread:.1e} over {fm_n} FM + {afm_n} AFM feasible grid points "
               f"({fm_skip + afm_skip} infeasible skipped)")
    assert fm_n > 0 and afm_n > 0
    assert spread <= 1e-10


def test_5_curvature_swap_invariance(capsys):
    pairs = ((1.0, 1.0), (5.0, 1.0), (0.3, 2.0), (1.5, 0.7), (2.5, 4.0))
    swap_exact = True
    gauss_zero = True
    fd_err = 0.0
    for r1, r2 in pairs:
        a = curvature(ToricClass(r1, r2, Regime.FM))
        b = curvature(ToricClass(r2, r1, Regime.FM))
        swap_exact &= a.mean_curvature_magnitude == b.mean_curvature_magnitude
        gauss_zero &= a.gauss_curvature == 0.0 and b.gauss_curvature == 0.0
        for u, v in ((0.3, 1.1), (2.0, -0.7)):
            gauss_fd, mean_fd = embedding_curvature_fd(r1, r2, u, v)
            fd_err = max(fd_err, abs(gauss_fd))
    ok = swap_exact and gauss_zero and fd_err <= 1e-6
    with capsys.disabled():
        report(5, "curvature swap invariance", ok,
               f"exact swap {swap_exact}, gauss == 0 {gauss_zero}, finite-difference gauss {fd_err:.1e}")
    assert swap_exact
    assert gauss_zero
    assert fd_err <= 1e-6


def test_6_limits_and_identities(capsys):
    branch_ok = splitting_angle(0.7, 0.0) == -math.pi / 4 and splitting_angle(0.0, 0.0) == 0.0

    rng = random.Random(2024)
    id_err = 0.0
    for _ in range(100):
        chi, delta = rng.uniform(0.0, 5.0), rng.uniform(-5.0, 5.0)
        id_err = max(id_err, abs(splitting_angle(chi, delta) + 0.5 * math.atan(chi / delta)))
        g = rng.uniform(-0.999, 0.999)
        id_err = max(id_err, abs(squeezing_parameter(g, 1.0) - 0.5 * math.atanh(g)))

    unstable_ok = True
    for g in (1.0, -1.0, 1.01, 3.0):
        try:
            solve_squeezing(1.0, 0.0, g)
            unstable_ok = False
        except InstabilityError:
            pass

    sp_norm = 0.0
    for theta in (0.0, -math.pi / 8, -math.pi / 4, 0.3, -0.6):
        for m in range(13):
            for n in range(13 - m):
                sp_norm = max(sp_norm, abs(splitting_eigenstate(m, n, theta).norm - 1.0))
    sq_norm = sq_deficit = 0.0
    for g in (0.2, 0.6, 0.9):
        sol = solve_squeezing(1.0, 0.1, g)
        for m in range(7):
            for n in range(7):
                state = squeezing_eigenstate(m, n, sol)
                sq_norm = max(sq_norm, abs(state.norm - 1.0))
                sq_deficit = max(sq_deficit, state.norm_deficit)

    ok = (branch_ok and id_err <= 1e-12 and unstable_ok and sp_norm <= 1e-12
          and sq_norm <= 1e-12 and sq_deficit <= 1e-12)
    with capsys.disabled():
        report(6, "limits and identities", ok,
               f"delta=0 branch {branch_ok}, identities {id_err:.1e}, instability raised {unstable_ok}, "
               f"splitting norm {sp_norm:.1e}, squeezing norm {sq_norm:.1e} "
               f"(truncation deficit {sq_deficit:.1e})")
    assert branch_ok
    assert id_err <= 1e-12
    assert unstable_ok
    assert sp_norm <= 1e-12
    assert sq_norm <= 1e-12
    assert sq_deficit <= 1e-12


SWEEP_CONFIG = """
[lattice]
preset = chain

[couplings]
regime = FM
J = -1
D = 0.2
r = -0.1
K = 0.05
J_z = -1
B = 0.3

[grid]
count = 64

[states]
quantum_numbers = {qn}
"""


def test_7_determinism(tmp_path, capsys):
    qn = ", ".join(f"{m} {n}" for m in range(3) for n in range(3))
    cfg = tmp_path / "sweep.ini"
    cfg.write_text(SWEEP_CONFIG.format(qn=qn))
    serial, parallel = tmp_path / "serial.csv", tmp_path / "parallel.csv"

    t0 = time.perf_counter()
    code_s = main(["sweep", "--config", str(cfg), "--threads", "1", "--output", str(serial)])
    t1 = time.perf_counter()
    code_p = main(["sweep", "--config", str(cfg), "--threads", "4", "--output", str(parallel)])
    t2 = time.perf_counter()

    a, b = serial.read_bytes(), parallel.read_bytes()
    rows = a.count(b"\n") - 1
    ok = code_s == 0 and code_p == 0 and a == b and rows == 64 * 9 and max(t1 - t0, t2 - t1) < 5.0
    with capsys.disabled():
        report(7, "serial vs parallel sweep", ok,
               f"{rows} rows, byte-identical {a == b}, serial {t1 - t0:.2f} s, parallel {t2 - t1:.2f} s")
    assert code_s == 0 and code_p == 0
    assert rows == 64 * 9
    assert a == b
    assert t1 - t0 < 5.0
    assert t2 - t1 < 5.0
