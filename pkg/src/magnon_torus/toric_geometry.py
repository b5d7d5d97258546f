"""
Toric classes in (J, D, r, K) coupling space and the FM <-> AFM dual map.

For fixed spins, lattice and (omega, delta), the canonical couplings depend on
(J, D, r, K) only through the two circle radii

    FM:  R_1^2 = J^2 + D^2,  R_2^2 = r^2 + K^2
    AFM: R_1^2 = r^2 + K^2,  R_2^2 = J^2 + D^2

so each class is a flat torus S^1(R_1) x S^1(R_2) in R^4. Curvatures refer to
that embedding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateTorusError, DomainError, InfeasibleDualError, ValidationError
from .lattice import LatticeSpec, coordination_number
from .magnon_model import CouplingSet, Regime, spin_wave_constants


@dataclass(frozen=True)
class ToricClass:
    radius_1: float
    radius_2: float
    regime: Regime

    @property
    def degenerate(self) -> bool:
        return self.radius_1 == 0.0 or self.radius_2 == 0.0


@dataclass(frozen=True)
class CurvatureInvariants:
    gauss_curvature: float
    mean_curvature_magnitude: float
    principal_radii: tuple


def classify(couplings: CouplingSet) -> ToricClass:
    j_circle = math.hypot(couplings.J, couplings.D)
    r_circle = math.hypot(couplings.r_aniso, couplings.K)
    if couplings.regime is Regime.FM:
        return ToricClass(j_circle, r_circle, Regime.FM)
    return ToricClass(r_circle, j_circle, Regime.AFM)


def same_class(a: CouplingSet, b: CouplingSet, tol: float = 1e-12) -> bool:
    if a.regime is not b.regime:
        raise DomainError(
            f"cannot compare {a.regime.value} and {b.regime.value} classes directly; use dual_of"
        )
    ta, tb = classify(a), classify(b)
    return abs(ta.radius_1 - tb.radius_1) <= tol and abs(ta.radius_2 - tb.radius_2) <= tol


def curvature(tc: ToricClass) -> CurvatureInvariants:
    """
    Curvature invariants of the flat torus S^1(R_1) x S^1(R_2) in R^4.

    The intrinsic (Gauss) curvature vanishes; the mean-curvature vector has
    length sqrt(1/R_1^2 + 1/R_2^2) / 2, which is symmetric in the radii.

    Raises
    ------
    DegenerateTorusError
        If either circle has collapsed to a point.
    """
    r1, r2 = tc.radius_1, tc.radius_2
    if r1 <= 0.0 or r2 <= 0.0:
        which = "R_1" if r1 <= 0.0 else "R_2"
        raise DegenerateTorusError(
            f"degenerate torus: circle {which} has zero radius (R_1={r1}, R_2={r2})", which
        )
    mean = 0.5 * math.sqrt(1.0 / r1**2 + 1.0 / r2**2)
    return CurvatureInvariants(0.0, mean, (r1, r2))


def dual_of(couplings: CouplingSet, lattice: LatticeSpec) -> CouplingSet:
    """
    Canonical dual configuration in the opposite regime.

    Spins and lattice are kept; the returned couplings reproduce the source's
    (omega, delta, chi~_k, Lambda~_k) at every k. The representative is

        AFM target: (J, D, r, K) = (R_2, 0, 0, R_1)
        FM target:  (J, D, r, K) = (-R_1, 0, 0, R_2)

    with (J_z, B) solved from (omega, delta). For an FM target with equal
    spins the J_z freedom is fixed by B = 0.

    Raises
    ------
    InfeasibleDualError
        If the solved couplings violate the target regime's sign constraints.
    """
    tc = classify(couplings)
    Z = coordination_number(lattice)
    sa, sb = lattice.spin_A, lattice.spin_B
    omega_t, delta_t, _, _ = spin_wave_constants(couplings, lattice)
    if couplings.regime is Regime.FM:
        omega, delta = couplings.B_field - omega_t, delta_t
    else:
        omega, delta = omega_t, -couplings.B_field - delta_t

    target = couplings.regime.opposite
    if target is Regime.AFM:
        J, D, r, K = tc.radius_2, 0.0, 0.0, tc.radius_1
        J_z = 2.0 * omega / (Z * (sa + sb))
        if not J_z > 0:
            raise InfeasibleDualError(
                f"AFM dual needs J_z' = 2*omega/(Z(S_A+S_B)) > 0, but omega = {omega!r}"
            )
        B = -delta - Z * J_z * (sa - sb) / 2
    else:
        J, D, r, K = -tc.radius_1, 0.0, 0.0, tc.radius_2
        if sa != sb:
            J_z = 2.0 * delta / (Z * (sa - sb))
            if not J_z < 0:
                raise InfeasibleDualError(
                    f"FM dual needs J_z' = 2*delta/(Z(S_A-S_B)) < 0, got {J_z!r}"
                )
        else:
            if delta != 0.0:
                raise InfeasibleDualError(
                    f"FM dual with S_A == S_B requires delta == 0, got delta = {delta!r}"
                )
            J_z = -2.0 * omega / (Z * (sa + sb))
            if not J_z < 0:
                raise InfeasibleDualError(
                    f"FM dual needs J_z' = -2*omega/(Z(S_A+S_B)) < 0, but omega = {omega!r}"
                )
        B = omega + Z * J_z * (sa + sb) / 2
    try:
        return CouplingSet(J, D, r, K, J_z, B, target)
    except ValidationError as exc:
        raise InfeasibleDualError(f"dual configuration infeasible: {exc}") from None


def orbit_point(tc: ToricClass, phi: float, psi: float) -> tuple:
    """
    (J, D, r, K) at angles (phi, psi) on the torus of ``tc``.

    FM: J = -R_1 cos phi, D = R_1 sin phi, r = R_2 cos psi, K = R_2 sin psi.
    AFM: J = R_2 cos phi, D = R_2 sin phi, r = R_1 cos psi, K = R_1 sin psi.
    Regime validity is not checked here.
    """
    if tc.regime is Regime.FM:
        return (-tc.radius_1 * math.cos(phi), tc.radius_1 * math.sin(phi),
                tc.radius_2 * math.cos(psi), tc.radius_2 * math.sin(psi))
    return (tc.radius_2 * math.cos(phi), tc.radius_2 * math.sin(phi),
            tc.radius_1 * math.cos(psi), tc.radius_1 * math.sin(psi))
