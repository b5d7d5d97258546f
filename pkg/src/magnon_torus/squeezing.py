"""
Squeezing (pair-creation) coupling:

    H = w_a a^+a + w_b b^+b + Lambda (a b + a^+ b^+),   0 <= Lambda < |omega|.

An SU(1,1) transformation a = eta alpha + zeta beta^+, b^+ = zeta alpha + eta beta^+
with eta = cosh s, zeta = sinh s diagonalizes H when tanh 2s = -Lambda/omega.
The squeezing parameter r = |s| = artanh(|Lambda/omega|)/2 is what we report;
the sign of s (opposite to that of Lambda/omega) is kept in
``SqueezingSolution.rotation_sign`` and enters the amplitudes through
tanh(s)^p, which alternates for omega > 0.

Eigenstates |m; alpha>|n; beta> are infinite sums over |p + dl, p> (m >= n) or
|p, p + dl> (m <= n), dl = |m - n|; they are truncated at ``cutoff`` and
renormalized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InstabilityError, SizeError
from .expansion import EigenstateExpansion, entanglement_entropy

DEFAULT_MAX_QUANTUM = 6
TAIL_TOLERANCE = 1e-14
MAX_CUTOFF = 512
DEFICIT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class SqueezingSolution:
    """
    Bogoliubov data for one k point.

    Attributes
    ----------
    r_squeeze : float
        Nonnegative squeezing parameter.
    eta, zeta : float
        cosh(r_squeeze), sinh(r_squeeze); eta**2 - zeta**2 == 1.
    gamma_tilde : float
        Lambda~/omega, |gamma_tilde| < 1.
    omega_alpha, omega_beta : float
        Normal-mode energies.
    rotation_sign : int
        Sign of the diagonalizing transformation parameter s = rotation_sign * r.
    vacuum_shift : float
        Ground-state energy of H relative to the bare vacuum, sqrt(omega^2 - Lambda^2) - omega.
    """

    r_squeeze: float
    eta: float
    zeta: float
    gamma_tilde: float
    omega_alpha: float
    omega_beta: float
    rotation_sign: int = -1
    vacuum_shift: float = 0.0

    @property
    def signed_r(self) -> float:
        return self.rotation_sign * self.r_squeeze


def squeezing_ratio(lambda_tilde: float, omega: float) -> float:
    if omega == 0.0:
        raise DomainError("squeezing undefined for omega = 0")
    g = lambda_tilde / omega
    if not abs(g) < 1.0:
        raise InstabilityError(
            f"Bogoliubov diagonalization invalid: |Lambda/omega| = {abs(g)!r} >= 1"
        )
    return g


def squeezing_parameter(lambda_tilde: float, omega: float) -> float:
    """
    r from tanh r = (1 - sqrt(1 - G^2)) / G, G = Lambda/omega (signed like G).

    Equivalent to artanh(G)/2. Raises InstabilityError for |G| >= 1 and
    DomainError for omega = 0.
    """
    g = squeezing_ratio(lambda_tilde, omega)
    if g == 0.0:
        return 0.0
    # (1 - sqrt(1-g^2))/g == g/(1 + sqrt(1-g^2))
    return math.atanh(g / (1.0 + math.sqrt((1.0 - g) * (1.0 + g))))


def squeezing_dispersions(signed_r: float, omega: float, delta: float, lambda_tilde: float):
    common = omega * math.cosh(2 * signed_r) + lambda_tilde * math.sinh(2 * signed_r)
    return common + delta, common - delta


def solve_squeezing(omega: float, delta: float, lambda_tilde: float) -> SqueezingSolution:
    r = squeezing_parameter(lambda_tilde, omega)
    g = lambda_tilde / omega
    sign = -1 if g > 0 else 1
    r_abs = abs(r)
    s = sign * r_abs
    wa, wb = squeezing_dispersions(s, omega, delta, lambda_tilde)
    common = 0.5 * (wa + wb)
    return SqueezingSolution(
        r_squeeze=r_abs,
        eta=math.cosh(r_abs),
        zeta=math.sinh(r_abs),
        gamma_tilde=g,
        omega_alpha=wa,
        omega_beta=wb,
        rotation_sign=sign,
        vacuum_shift=common - omega,
    )


@dataclass(frozen=True)
class RecursionTable:
    l: int
    delta_l: int
    values: np.ndarray

    def __getitem__(self, p):
        return self.values[p]


def recursion_q(l: int, delta_l: int, eta: float, zeta: float, cutoff: int) -> RecursionTable:
    """
    Polynomial factors q^{(l, dl)}_p for p = 0..cutoff.

    Starting from q^{(0,0)}_p = 1, the pair index is raised with

        q^{(l,0)}_p = p eta^4 q^{(l-1,0)}_{p-1} - (2p+1) eta^2 zeta^2 q^{(l-1,0)}_p
                      + (p+1) zeta^4 q^{(l-1,0)}_{p+1}

    and then the difference index with

        q^{(l,dl)}_p = eta^2 sqrt(p+dl) q^{(l,dl-1)}_p - zeta^2 sqrt(p+1) q^{(l,dl-1)}_{p+1}.

    Each step consumes one entry at the top, so work starts at width cutoff + l + dl.
    """
    if l < 0 or delta_l < 0:
        raise SizeError(f"recursion indices must be nonnegative, got ({l}, {delta_l})")
    if cutoff < 0:
        raise SizeError(f"cutoff must be nonnegative, got {cutoff}")
    # extended precision: the alternating sums lose ~1 digit per pair level at strong squeezing
    e2 = np.longdouble(eta) ** 2
    z2 = np.longdouble(zeta) ** 2
    width = cutoff + l + delta_l
    q = np.ones(width + 1, dtype=np.longdouble)
    for _ in range(l):
        p = np.arange(width, dtype=np.longdouble)
        lower = np.concatenate([np.zeros(1, dtype=np.longdouble), q[:width - 1]])
        q = p * e2 * e2 * lower - (2 * p + 1) * e2 * z2 * q[:width] + (p + 1) * z2 * z2 * q[1:width + 1]
        width -= 1
    for d in range(1, delta_l + 1):
        p = np.arange(width, dtype=np.longdouble)
        q = e2 * np.sqrt(p + d) * q[:width] - z2 * np.sqrt(p + 1) * q[1:width + 1]
        width -= 1
    return RecursionTable(l, delta_l, q[:cutoff + 1])


def default_cutoff(r: float) -> int:
    """Smallest P with tanh(r)^(2(P+1)) < 1e-14, capped at 512."""
    lam = math.tanh(abs(r)) ** 2
    P = 0
    while P < MAX_CUTOFF and lam ** (P + 1) >= TAIL_TOLERANCE:
        P += 1
    return P


def _amplitudes(m: int, n: int, s: float, cutoff: int):
    l, dl = min(m, n), abs(m - n)
    eta, zeta = math.cosh(s), math.sinh(s)
    q = recursion_q(l, dl, eta, zeta, cutoff).values
    vac = np.tanh(np.longdouble(s)) ** np.arange(cutoff + 1) / np.cosh(np.longdouble(s))
    log_pref = (-0.5 * (math.lgamma(m + 1) + math.lgamma(n + 1)) - dl * math.log(eta)
                - l * math.log(abs(eta * zeta)))
    pref = math.exp(log_pref) * (-1.0 if (zeta < 0 and l % 2) else 1.0)
    amps = pref * q * vac
    return amps.astype(float), float(np.sum(amps ** 2))


def squeezing_eigenstate(m: int, n: int, sol: SqueezingSolution, cutoff: int | None = None,
                         max_quantum: int = DEFAULT_MAX_QUANTUM) -> EigenstateExpansion:
    """
    Truncated expansion of |m; alpha>|n; beta> over localized number states.

    Amplitudes are

        c(p) = (m! n!)^(-1/2) eta^(-dl) (eta zeta)^(-l) q^{(l,dl)}_p tanh(s)^p / cosh(s)

    with l = min(m, n), dl = |m - n| and s the signed parameter. At r = 0 the
    state is the product |m, n>. The raw norm deficit of the truncated sum is
    kept on the result before the amplitudes are renormalized.

    Without an explicit ``cutoff``, P starts at :func:`default_cutoff` and is
    widened until the deficit is below 1e-12 (or P reaches 512).
    """
    if m < 0 or n < 0:
        raise SizeError(f"quantum numbers must be nonnegative, got (m, n) = ({m}, {n})")
    if max(m, n) > max_quantum:
        raise SizeError(f"max(m, n) = {max(m, n)} exceeds the cap of {max_quantum}")
    if sol.r_squeeze == 0.0:
        return EigenstateExpansion.build(m, n, [(m, n, 1.0)])
    if cutoff is not None:
        amps, raw = _amplitudes(m, n, sol.signed_r, cutoff)
    else:
        # the vacuum tail rule undershoots for excited states; widen until the tail is negligible
        cutoff = default_cutoff(sol.r_squeeze)
        amps, raw = _amplitudes(m, n, sol.signed_r, cutoff)
        while 1.0 - raw > DEFICIT_TOLERANCE and cutoff < MAX_CUTOFF:
            cutoff = min(2 * cutoff + 8, MAX_CUTOFF)
            amps, raw = _amplitudes(m, n, sol.signed_r, cutoff)
    dl = abs(m - n)
    p = np.arange(cutoff + 1)
    amps = amps / math.sqrt(raw)
    if m >= n:
        terms = [(int(pp) + dl, int(pp), a) for pp, a in zip(p, amps)]
    else:
        terms = [(int(pp), int(pp) + dl, a) for pp, a in zip(p, amps)]
    return EigenstateExpansion.build(m, n, terms, 1.0 - raw)


def squeezing_entropy(state: EigenstateExpansion, base: float | None = None) -> float:
    return entanglement_entropy(state, base)


def vacuum_entropy(r: float) -> float:
    """Closed form cosh^2 r ln cosh^2 r - sinh^2 r ln sinh^2 r of the two-mode squeezed vacuum."""
    if r == 0.0:
        return 0.0
    c2, s2 = math.cosh(r) ** 2, math.sinh(r) ** 2
    return c2 * math.log(c2) - s2 * math.log(s2)
