"""
Splitting (beam-splitter) coupling: H = w_a a^+a + w_b b^+b + chi (a^+b + a b^+).

The rotation a = u alpha + v beta, b = -v alpha + u beta with u = cos theta,
v = sin theta and tan 2 theta = -chi/delta diagonalizes H. Eigenstates
|m; alpha>|n; beta> are finite superpositions of |m - p, n + p> and
|m + q, n - q> in the localized modes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import SizeError
from .expansion import EigenstateExpansion, entanglement_entropy

DEFAULT_MAX_QUANTA = 12
# Above this many quanta factorials are handled as logarithms.
_LOG_SPACE_ABOVE = 10


@dataclass(frozen=True)
class SplittingSolution:
    theta: float
    omega_alpha: float
    omega_beta: float
    gamma_ratio: float  # chi/delta; nan on the delta = 0 branch
    degenerate_branch: bool = False

    @property
    def u(self) -> float:
        return math.cos(self.theta)

    @property
    def v(self) -> float:
        return math.sin(self.theta)


def splitting_angle(chi_tilde: float, delta: float) -> float:
    """
    Mixing angle theta with |theta| <= pi/4.

    Uses tan theta = (1 - sqrt(1 + Gamma^2)) / Gamma, Gamma = chi/delta.
    At delta = 0 the branch theta = -pi/4 is taken (the delta -> 0+ limit for chi > 0).
    """
    if chi_tilde == 0.0:
        return 0.0
    if delta == 0.0:
        return -math.pi / 4
    # (1 - sqrt(1+g^2))/g with g = chi/delta, rewritten free of cancellation and of chi/delta overflow
    return math.atan(-chi_tilde / (delta + math.copysign(math.hypot(delta, chi_tilde), delta)))


def splitting_dispersions(theta: float, omega: float, delta: float, chi_tilde: float):
    c2, s2 = math.cos(2 * theta), math.sin(2 * theta)
    return (omega + delta * c2 - chi_tilde * s2,
            omega - delta * c2 + chi_tilde * s2)


def solve_splitting(omega: float, delta: float, chi_tilde: float) -> SplittingSolution:
    theta = splitting_angle(chi_tilde, delta)
    wa, wb = splitting_dispersions(theta, omega, delta, chi_tilde)
    ratio = chi_tilde / delta if delta != 0.0 else math.nan
    return SplittingSolution(theta, wa, wb, ratio, delta == 0.0)


def _coefficient(m: int, n: int, x: int, y: int, u: float, v: float, log_space: bool) -> float:
    # (-1)^x C(m,x) C(n,y) v^(x+y) u^(m+n-x-y) sqrt((m-x+y)! (n-y+x)!)
    pv, pu = x + y, m + n - x - y
    if v == 0.0 and pv > 0:
        return 0.0
    sign = -1.0 if x % 2 else 1.0
    if v < 0 and pv % 2:
        sign = -sign
    if not log_space:
        mag = (math.comb(m, x) * math.comb(n, y) * abs(v) ** pv * u ** pu
               * math.sqrt(math.factorial(m - x + y) * math.factorial(n - y + x)))
        return sign * mag
    log_mag = (
        math.lgamma(m + 1) - math.lgamma(x + 1) - math.lgamma(m - x + 1)
        + math.lgamma(n + 1) - math.lgamma(y + 1) - math.lgamma(n - y + 1)
        + (pv * math.log(abs(v)) if pv else 0.0)
        + pu * math.log(u)
        + 0.5 * (math.lgamma(m - x + y + 1) + math.lgamma(n - y + x + 1))
    )
    return sign * math.exp(log_mag)


def splitting_eigenstate(m: int, n: int, theta: float,
                         max_quanta: int = DEFAULT_MAX_QUANTA) -> EigenstateExpansion:
    """
    Expand |m; alpha>|n; beta> over localized number states (a_count, b_count).

    Parameters
    ----------
    m, n : int
        Occupations of the hybridized modes alpha and beta.
    theta : float
        Mixing angle from :func:`splitting_angle`.
    max_quanta : int
        Upper bound on m + n.

    Returns
    -------
    EigenstateExpansion
        m + n + 1 terms; first the (m - p, n + p) for p = 0..m, then
        (m + q, n - q) for q = 1..n.
    """
    if m < 0 or n < 0:
        raise SizeError(f"quantum numbers must be nonnegative, got (m, n) = ({m}, {n})")
    if m + n > max_quanta:
        raise SizeError(f"m + n = {m + n} exceeds the cap of {max_quanta}")
    u, v = math.cos(theta), math.sin(theta)
    log_space = m + n > _LOG_SPACE_ABOVE
    if log_space:
        lognorm = -0.5 * (math.lgamma(m + 1) + math.lgamma(n + 1))
        norm = math.exp(lognorm)
    else:
        norm = 1.0 / math.sqrt(math.factorial(m) * math.factorial(n))

    terms = []
    for p in range(m + 1):
        s = sum(_coefficient(m, n, p + l, l, u, v, log_space) for l in range(min(m - p, n) + 1))
        terms.append((m - p, n + p, norm * s))
    for q in range(1, n + 1):
        s = sum(_coefficient(m, n, l, q + l, u, v, log_space) for l in range(min(m, n - q) + 1))
        terms.append((m + q, n - q, norm * s))
    return EigenstateExpansion.build(m, n, terms)


def splitting_entropy(state: EigenstateExpansion, base: float | None = None) -> float:
    return entanglement_entropy(state, base)
