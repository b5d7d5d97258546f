"""Cross-validation of the closed-form modules against the brute-force sectors."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .errors import InfeasibleDualError
from .lattice import LatticeSpec, coordination_number, preset
from .magnon_model import CouplingSet, Regime, canonical_params
from .oracle import (build_splitting_sector, build_squeezing_sector, diagonalize,
                     embedding_curvature_fd, entropy_from_vector)
from .splitting import solve_splitting, splitting_angle, splitting_eigenstate
from .squeezing import (solve_squeezing, squeezing_eigenstate, squeezing_parameter,
                        vacuum_entropy)
from .toric_geometry import ToricClass, classify, curvature, dual_of

SPLITTING_ANGLES = (0.0, -math.pi / 8, -math.pi / 4, 0.3, -0.6)
SQUEEZING_RATIOS = (0.2, 0.6, 0.9)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    error: float
    tolerance: float

    def line(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return f"{flag}  {self.name:<44s} max_err={self.error:.3e}  tol={self.tolerance:.0e}"


def splitting_params_for_angle(theta: float, omega: float = 2.0):
    """(omega, delta, chi) whose mixing angle is ``theta``; |delta| = 1 unless theta = -pi/4."""
    if abs(theta + math.pi / 4) < 1e-15:
        return omega, 0.0, 1.0
    if theta == 0.0:
        return omega, 1.0, 0.0
    delta = 1.0 if theta < 0 else -1.0
    return omega, delta, delta * math.tan(-2 * theta)


def _match_up_to_sign(a, b) -> float:
    a, b = np.asarray(a), np.asarray(b)
    return float(min(np.max(np.abs(a - b)), np.max(np.abs(a + b))))


def splitting_errors(max_sector: int = 6, angles=SPLITTING_ANGLES):
    """Worst (energy, amplitude, entropy) deviations from the sector oracle."""
    e_err = a_err = s_err = 0.0
    for theta in angles:
        omega, delta, chi = splitting_params_for_angle(theta)
        sol = solve_splitting(omega, delta, chi)
        for N in range(max_sector + 1):
            sector = build_splitting_sector(N, omega + delta, omega - delta, chi)
            pairs = diagonalize(sector)
            eigvals = np.array([w for w, _ in pairs])
            for m in range(N + 1):
                n = N - m
                target = m * sol.omega_alpha + n * sol.omega_beta
                j = int(np.argmin(np.abs(eigvals - target)))
                e_err = max(e_err, abs(eigvals[j] - target))
                state = splitting_eigenstate(m, n, sol.theta)
                amp = dict(((a, b), c) for a, b, c in state.terms)
                vec = np.array([amp.get(bs, 0.0) for bs in sector.basis])
                a_err = max(a_err, _match_up_to_sign(vec, pairs[j][1]))
                s_err = max(s_err, abs(state.entropy - entropy_from_vector(sector.basis, pairs[j][1])))
    return e_err, a_err, s_err


def squeezing_errors(max_quantum: int = 2, ratios=SQUEEZING_RATIOS, cutoff: int = 80,
                     omega: float = 2.0, delta: float = 0.25):
    """Worst (energy, amplitude, entropy, vacuum closed-form) deviations."""
    e_err = a_err = s_err = v_err = 0.0
    for g in ratios:
        lam = g * omega
        sol = solve_squeezing(omega, delta, lam)
        v_err = max(v_err, abs(squeezing_eigenstate(0, 0, sol, cutoff).entropy
                               - vacuum_entropy(sol.r_squeeze)))
        for m in range(max_quantum + 1):
            for n in range(max_quantum + 1):
                dl = abs(m - n)
                excess = "a" if m >= n else "b"
                sector = build_squeezing_sector(dl, cutoff, omega + delta, omega - delta, lam, excess)
                pairs = diagonalize(sector)
                w, v = pairs[min(m, n)]
                target = sol.vacuum_shift + m * sol.omega_alpha + n * sol.omega_beta
                e_err = max(e_err, abs(w - target))
                state = squeezing_eigenstate(m, n, sol, cutoff)
                amp = dict(((a, b), c) for a, b, c in state.terms)
                vec = np.array([amp.get(bs, 0.0) for bs in sector.basis])
                a_err = max(a_err, _match_up_to_sign(vec, v))
                s_err = max(s_err, abs(state.entropy - entropy_from_vector(sector.basis, v)))
    return e_err, a_err, s_err, v_err


def random_fm_configs(count: int = 10, seed: int = 20240611, lattice: LatticeSpec | None = None):
    """
    Feasible FM coupling sets with both toric radii nonzero.

    Squeezing stays stable on the whole zone of ``lattice`` (default: chain):
    Z * R_2 * sqrt(S_A S_B) < 0.9 * omega.
    """
    lattice = lattice or preset("chain")
    Z = coordination_number(lattice)
    s_sum = lattice.spin_A + lattice.spin_B
    s_root = math.sqrt(lattice.spin_A * lattice.spin_B)
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        R1 = rng.uniform(0.5, 2.0)
        R2 = rng.uniform(0.05, 0.4) * R1
        phi = rng.uniform(-1.2, 1.2)
        psi = rng.uniform(0, 2 * math.pi)
        J, D = -R1 * math.cos(phi), R1 * math.sin(phi)
        r, K = R2 * math.cos(psi), R2 * math.sin(psi)
        J_z = -rng.uniform(0.5, 2.0)
        B = rng.uniform(0.0, 1.0)
        omega = B - Z * J_z * s_sum / 2
        if not (J + abs(r) < 0 and Z * R2 * s_root < 0.9 * omega):
            continue
        out.append(CouplingSet(J, D, r, K, J_z, B, Regime.FM))
    return out


def duality_errors(configs, lattice: LatticeSpec, k_grid, quantum_numbers=((0, 0), (1, 0), (1, 1))):
    """Worst (canonical-parameter, entropy, round-trip) deviations between sources and duals."""
    p_err = s_err = rt_err = 0.0
    for src in configs:
        dual = dual_of(src, lattice)
        back = dual_of(dual, lattice)
        t0, t2 = classify(src), classify(back)
        rt_err = max(rt_err, abs(t0.radius_1 - t2.radius_1), abs(t0.radius_2 - t2.radius_2))
        for k in k_grid:
            a, b = canonical_params(src, lattice, k), canonical_params(dual, lattice, k)
            c = canonical_params(back, lattice, k)
            p_err = max(p_err, abs(a.omega - b.omega), abs(a.delta - b.delta),
                        abs(a.chi_tilde - b.chi_tilde), abs(a.lambda_tilde - b.lambda_tilde))
            rt_err = max(rt_err, abs(a.omega - c.omega), abs(a.delta - c.delta))
            sp_a = solve_splitting(a.omega, a.delta, a.chi_tilde)
            sp_b = solve_splitting(b.omega, b.delta, b.chi_tilde)
            sq_a = solve_squeezing(a.omega, a.delta, a.lambda_tilde)
            sq_b = solve_squeezing(b.omega, b.delta, b.lambda_tilde)
            for m, n in quantum_numbers:
                s_err = max(
                    s_err,
                    abs(splitting_eigenstate(m, n, sp_a.theta).entropy
                        - splitting_eigenstate(m, n, sp_b.theta).entropy),
                    abs(squeezing_eigenstate(m, n, sq_a).entropy
                        - squeezing_eigenstate(m, n, sq_b).entropy),
                )
    return p_err, s_err, rt_err


def seven_point_grid():
    return [np.array([x]) for x in np.linspace(0.0, math.pi, 7)]


def run_checks(lattice: LatticeSpec | None = None, configs=None, k_grid=None) -> list:
    lattice = lattice or preset("chain")
    results = []

    e, a, s = splitting_errors()
    results += [
        CheckResult("splitting energies vs sector eigenvalues", e <= 1e-9, e, 1e-9),
        CheckResult("splitting amplitudes vs eigenvectors", a <= 1e-9, a, 1e-9),
        CheckResult("splitting entropy vs oracle", s <= 1e-8, s, 1e-8),
    ]

    e, a, s, v = squeezing_errors()
    results += [
        CheckResult("squeezing energies vs sector eigenvalues", e <= 1e-6, e, 1e-6),
        CheckResult("squeezing amplitudes vs eigenvectors", a <= 1e-6, a, 1e-6),
        CheckResult("squeezing entropy vs oracle", s <= 1e-6, s, 1e-6),
        CheckResult("squeezed-vacuum entropy closed form", v <= 1e-10, v, 1e-10),
    ]

    rng = random.Random(7)
    id_err = 0.0
    for _ in range(100):
        chi, delta = rng.uniform(0, 5), rng.uniform(-5, 5)
        id_err = max(id_err, abs(splitting_angle(chi, delta) + 0.5 * math.atan(chi / delta)))
        g = rng.uniform(-0.99, 0.99)
        id_err = max(id_err, abs(squeezing_parameter(g, 1.0) - 0.5 * math.atanh(g)))
    results.append(CheckResult("half-angle identities (theta, r)", id_err <= 1e-12, id_err, 1e-12))

    c_err = 0.0
    for r1, r2 in ((1, 1), (5, 1), (0.3, 2.0), (1.5, 0.7), (2.5, 4.0)):
        fwd = curvature(ToricClass(r1, r2, Regime.FM))
        rev = curvature(ToricClass(r2, r1, Regime.AFM))
        gauss_fd, mean_fd = embedding_curvature_fd(r1, r2)
        c_err = max(c_err, abs(fwd.mean_curvature_magnitude - rev.mean_curvature_magnitude),
                    abs(gauss_fd), abs(mean_fd - fwd.mean_curvature_magnitude))
    results.append(CheckResult("flat-torus curvature vs finite differences", c_err <= 1e-6, c_err, 1e-6))

    configs = configs if configs is not None else random_fm_configs(lattice=lattice)
    k_grid = k_grid if k_grid is not None else seven_point_grid()
    try:
        p, s, rt = duality_errors(configs, lattice, k_grid)
        results += [
            CheckResult("dual canonical parameters", p <= 1e-12, p, 1e-12),
            CheckResult("dual entropies", s <= 1e-10, s, 1e-10),
            CheckResult("dual of dual round trip", rt <= 1e-12, rt, 1e-12),
        ]
    except InfeasibleDualError:
        results.append(CheckResult("dual construction feasible", False, math.inf, 0.0))
    return results
