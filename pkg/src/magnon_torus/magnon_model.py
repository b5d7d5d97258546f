"""
Spin couplings -> two-mode magnon Hamiltonian at a single wavevector.

The quadratic magnon Hamiltonian in one k sector reads

    H = w_a a^+a + w_b b^+b + chi_k a^+b + chi_k^* a b^+
        + Lambda_k a b_{-k} + Lambda_k^* a^+ b^+_{-k}

with w_a = omega + delta, w_b = omega - delta. Its parameters follow from the
exchange tensor

    [[J + r, K + D, 0], [K - D, J - r, 0], [0, 0, J_z]]

and a Zeeman energy B along z. All quantities are in one common energy unit.

The linearization is valid at low temperature, k_B T << min |I_ll|; there is
no temperature input, so this is not checked.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .errors import ValidationError
from .lattice import LatticeSpec, coordination_number, gamma_k


class Regime(str, Enum):
    FM = "FM"
    AFM = "AFM"

    @property
    def opposite(self) -> "Regime":
        return Regime.AFM if self is Regime.FM else Regime.FM

    @classmethod
    def parse(cls, value) -> "Regime":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().upper())
        except ValueError:
            raise ValidationError(f"regime must be FM or AFM, got {value!r}") from None


@dataclass(frozen=True)
class CouplingSet:
    """
    Exchange-tensor parameters plus the declared magnetic regime.

    The diagonal entries I_11 = J + r, I_22 = J - r, I_33 = J_z must all be
    negative (FM) or all positive (AFM); construction fails otherwise.
    """

    J: float
    D: float
    r_aniso: float
    K: float
    J_z: float
    B_field: float
    regime: Regime

    def __post_init__(self):
        object.__setattr__(self, "regime", Regime.parse(self.regime))
        for name in ("J", "D", "r_aniso", "K", "J_z", "B_field"):
            val = float(getattr(self, name))
            if not math.isfinite(val):
                raise ValidationError(f"coupling {name} must be finite, got {val}")
            object.__setattr__(self, name, val)
        diag = self.diagonal()
        want = -1.0 if self.regime is Regime.FM else 1.0
        word = "negative" if want < 0 else "positive"
        for label, val in diag.items():
            if not val * want > 0:
                raise ValidationError(
                    f"{self.regime.value} regime requires {label} {word}, got {label} = {val!r}"
                )

    def diagonal(self) -> dict:
        return {
            "I_11": self.J + self.r_aniso,
            "I_22": self.J - self.r_aniso,
            "I_33": self.J_z,
        }

    def as_dict(self) -> dict:
        return {
            "J": self.J,
            "D": self.D,
            "r": self.r_aniso,
            "K": self.K,
            "J_z": self.J_z,
            "B": self.B_field,
            "regime": self.regime.value,
        }


@dataclass(frozen=True)
class MagnonParams:
    omega: float
    delta: float
    chi_k: complex
    lambda_k: complex

    @property
    def omega_a(self) -> float:
        return self.omega + self.delta

    @property
    def omega_b(self) -> float:
        return self.omega - self.delta

    def as_dict(self) -> dict:
        return {
            "omega": self.omega,
            "delta": self.delta,
            "chi_k": [self.chi_k.real, self.chi_k.imag],
            "lambda_k": [self.lambda_k.real, self.lambda_k.imag],
            "omega_a": self.omega_a,
            "omega_b": self.omega_b,
        }


@dataclass(frozen=True)
class GaugeFixedParams:
    """
    Canonical real form of the two-mode Hamiltonian.

    ``phases`` holds (nu_1, nu_2, nu_3) with nu_1 = arg chi_k,
    nu_2 = arg chi_k - arg Lambda_k, nu_3 = arg Lambda_k^*. Under the
    rephasing b~ = e^{i nu_1} b, a~^+_{-k} = e^{i nu_2} a^+_{-k},
    b~^+_{-k} = e^{i nu_3} b^+_{-k} both couplings become real and nonnegative.
    """

    omega: float
    delta: float
    chi_tilde: float
    lambda_tilde: float
    phases: tuple = (0.0, 0.0, 0.0)

    @property
    def omega_a(self) -> float:
        return self.omega + self.delta

    @property
    def omega_b(self) -> float:
        return self.omega - self.delta

    def as_dict(self) -> dict:
        return {
            "omega": self.omega,
            "delta": self.delta,
            "chi_tilde": self.chi_tilde,
            "lambda_tilde": self.lambda_tilde,
            "phases": list(self.phases),
        }


def spin_wave_constants(couplings: CouplingSet, lattice: LatticeSpec):
    """Return (omega_t, delta_t, G, F) before regime assignment and k dependence."""
    Z = coordination_number(lattice)
    sa, sb = lattice.spin_A, lattice.spin_B
    root = math.sqrt(sa * sb)
    omega_t = Z * couplings.J_z * (sa + sb) / 2
    delta_t = Z * couplings.J_z * (sa - sb) / 2
    G = complex(couplings.J, -couplings.D) * root
    F = complex(couplings.r_aniso, -couplings.K) * root
    return omega_t, delta_t, G, F


def build_magnon_params(couplings: CouplingSet, lattice: LatticeSpec, k) -> MagnonParams:
    """
    Magnon Hamiltonian parameters at wavevector ``k``.

    FM:  (omega, delta, chi, Lambda) = (B - omega_t, delta_t, G gamma_k, F gamma_{-k})
    AFM: (omega, delta, chi, Lambda) = (omega_t, -B - delta_t, F^* gamma_k, G^* gamma_{-k})
    """
    omega_t, delta_t, G, F = spin_wave_constants(couplings, lattice)
    g_plus = gamma_k(lattice, k)
    g_minus = g_plus.conjugate()  # gamma_{-k}; delta vectors are real
    B = couplings.B_field
    if couplings.regime is Regime.FM:
        return MagnonParams(B - omega_t, delta_t, G * g_plus, F * g_minus)
    return MagnonParams(omega_t, -B - delta_t, F.conjugate() * g_plus, G.conjugate() * g_minus)


def _arg(z: complex) -> float:
    return cmath.phase(z) if z != 0 else 0.0


def gauge_fix(params) -> GaugeFixedParams:
    """Rephase the modes so that both couplings are real and nonnegative.

    Idempotent: a GaugeFixedParams input is returned with zero phases.
    """
    if isinstance(params, GaugeFixedParams):
        return GaugeFixedParams(params.omega, params.delta, params.chi_tilde, params.lambda_tilde)
    chi, lam = complex(params.chi_k), complex(params.lambda_k)
    nu1 = _arg(chi)
    nu3 = -_arg(lam)
    nu2 = nu1 + nu3
    return GaugeFixedParams(params.omega, params.delta, abs(chi), abs(lam), (nu1, nu2, nu3))


def canonical_params(couplings: CouplingSet, lattice: LatticeSpec, k) -> GaugeFixedParams:
    return gauge_fix(build_magnon_params(couplings, lattice, k))
