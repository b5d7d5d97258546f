"""
Brute-force reference: truncated Fock-space sectors of the two-mode Hamiltonians.

The splitting Hamiltonian conserves a_count + b_count and the squeezing
Hamiltonian conserves a_count - b_count, so each conserved sector is a small
tridiagonal matrix in the product number basis. Sectors are diagonalized with
the implicit-shift QL iteration below rather than a library call, keeping the
reference self-contained.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, ValidationError
from .expansion import weights_entropy

MAX_QL_ITERATIONS = 60


@dataclass(frozen=True)
class SectorMatrix:
    kind: str  # "splitting" or "squeezing"
    label: int  # total number N, or difference dl
    entries: np.ndarray
    basis: tuple

    @property
    def dimension(self) -> int:
        return self.entries.shape[0]

    @property
    def diagonal(self) -> np.ndarray:
        return np.diag(self.entries).copy()

    @property
    def offdiagonal(self) -> np.ndarray:
        return np.diag(self.entries, 1).copy()


def build_splitting_sector(N: int, omega_a: float, omega_b: float, chi_tilde: float) -> SectorMatrix:
    """Sector of total number N in the basis (N - j, j), j = 0..N."""
    if N < 0:
        raise ValidationError(f"sector number must be nonnegative, got N = {N}")
    j = np.arange(N + 1, dtype=float)
    H = np.diag(omega_a * (N - j) + omega_b * j)
    off = chi_tilde * np.sqrt((N - j[:-1]) * (j[:-1] + 1))
    H += np.diag(off, 1) + np.diag(off, -1)
    basis = tuple((N - i, i) for i in range(N + 1))
    return SectorMatrix("splitting", N, H, basis)


def build_squeezing_sector(delta_l: int, P: int, omega_a: float, omega_b: float,
                           lambda_tilde: float, excess: str = "a") -> SectorMatrix:
    """
    Sector a_count - b_count = delta_l truncated to p = 0..P.

    With ``excess="a"`` the basis is (p + dl, p); with ``excess="b"`` it is
    (p, p + dl), i.e. the sector b_count - a_count = delta_l.
    """
    if delta_l < 0 or P < 0:
        raise ValidationError(f"sector indices must be nonnegative, got dl={delta_l}, P={P}")
    p = np.arange(P + 1, dtype=float)
    if excess == "a":
        diag = omega_a * (p + delta_l) + omega_b * p
        basis = tuple((i + delta_l, i) for i in range(P + 1))
    elif excess == "b":
        diag = omega_a * p + omega_b * (p + delta_l)
        basis = tuple((i, i + delta_l) for i in range(P + 1))
    else:
        raise ValidationError(f"excess must be 'a' or 'b', got {excess!r}")
    off = lambda_tilde * np.sqrt((p[:-1] + 1) * (p[:-1] + delta_l + 1))
    H = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
    return SectorMatrix("squeezing", delta_l, H, basis)


def tridiagonal_eigh(diag, off):
    """
    Eigen-decomposition of a real symmetric tridiagonal matrix.

    Implicit-shift QL with Wilkinson shifts, accumulating the rotations into
    the eigenvector matrix.

    Parameters
    ----------
    diag : array_like, shape (n,)
    off : array_like, shape (n - 1,)
        Super/sub-diagonal.

    Returns
    -------
    w : ndarray, shape (n,)
        Eigenvalues, ascending.
    V : ndarray, shape (n, n)
        Orthonormal eigenvectors in columns.
    """
    d = np.array(diag, dtype=float)
    n = d.shape[0]
    e = np.zeros(n)
    e[: n - 1] = np.asarray(off, dtype=float)
    z = np.eye(n)
    # work at unit scale so the deflation test below is meaningful for tiny/denormal input
    anorm = max(float(np.max(np.abs(d), initial=0.0)), float(np.max(np.abs(e), initial=0.0)))
    if anorm == 0.0:
        return d, z
    d /= anorm
    e /= anorm
    eps = np.finfo(float).eps
    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= eps * (dd + eps):
                    break
                m += 1
            if m == l:
                break
            it += 1
            if it > MAX_QL_ITERATIONS:
                raise ConvergenceError(
                    f"QL iteration did not converge for eigenvalue {l}", residual=abs(e[l])
                )
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            underflow = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                zi = z[:, i].copy()
                z[:, i] = c * zi - s * z[:, i + 1]
                z[:, i + 1] = s * zi + c * z[:, i + 1]
                i -= 1
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    d *= anorm
    order = np.argsort(d, kind="stable")
    return d[order], z[:, order]


def _fix_sign(v: np.ndarray) -> np.ndarray:
    k = int(np.argmax(np.abs(v)))
    return -v if v[k] < 0 else v


def diagonalize(sector: SectorMatrix, residual_tol: float = 1e-10):
    """
    Ascending (eigenvalue, eigenvector) pairs of a sector.

    Each eigenvector is normalized with its largest-magnitude component
    positive. Raises ConvergenceError if any residual ||Mv - wv|| exceeds
    ``residual_tol * ||M||``.
    """
    M = sector.entries
    if not np.all(np.isfinite(M)):
        raise ValidationError("sector matrix has non-finite entries")
    w, V = tridiagonal_eigh(np.diag(M), np.diag(M, 1))
    scale = max(float(np.linalg.norm(M, 2)) if M.size else 0.0, 1.0)
    pairs = []
    for j in range(len(w)):
        v = _fix_sign(V[:, j] / np.linalg.norm(V[:, j]))
        res = float(np.linalg.norm(M @ v - w[j] * v))
        if res > residual_tol * scale:
            raise ConvergenceError(
                f"eigenpair {j} residual {res:.3e} exceeds {residual_tol:.1e} * ||M||", residual=res
            )
        pairs.append((float(w[j]), v))
    return pairs


def entropy_from_vector(basis, vector, base: float | None = None) -> float:
    """-sum v_i^2 log v_i^2; the sector basis is a Schmidt basis, so this is the entanglement entropy."""
    if len(set(a for a, _ in basis)) != len(basis) or len(set(b for _, b in basis)) != len(basis):
        raise ValidationError("basis is not in Schmidt form")
    v = np.asarray(vector, dtype=complex if np.iscomplexobj(vector) else float)
    return weights_entropy(np.abs(v) ** 2, base)


def embedding_curvature_fd(r1: float, r2: float, u: float = 0.3, v: float = 1.1, h: float = 1e-4):
    """
    Finite-difference Gauss and mean curvature of (R1 cos u, R1 sin u, R2 cos v, R2 sin v) in R^4.

    Derivatives by central differences; second fundamental form from the
    normal projection of the second derivatives; Gauss curvature from the
    Gauss equation.
    """
    def X(a, b):
        return np.array([r1 * math.cos(a), r1 * math.sin(a), r2 * math.cos(b), r2 * math.sin(b)])

    Xu = (X(u + h, v) - X(u - h, v)) / (2 * h)
    Xv = (X(u, v + h) - X(u, v - h)) / (2 * h)
    Xuu = (X(u + h, v) - 2 * X(u, v) + X(u - h, v)) / h**2
    Xvv = (X(u, v + h) - 2 * X(u, v) + X(u, v - h)) / h**2
    Xuv = (X(u + h, v + h) - X(u + h, v - h) - X(u - h, v + h) + X(u - h, v - h)) / (4 * h**2)
    T = np.stack([Xu, Xv], axis=1)
    g = T.T @ T
    proj = np.eye(4) - T @ np.linalg.solve(g, T.T)
    II = {k: proj @ vec for k, vec in (("uu", Xuu), ("vv", Xvv), ("uv", Xuv))}
    ginv = np.linalg.inv(g)
    Hvec = 0.5 * (ginv[0, 0] * II["uu"] + 2 * ginv[0, 1] * II["uv"] + ginv[1, 1] * II["vv"])
    gauss = (II["uu"] @ II["vv"] - II["uv"] @ II["uv"]) / np.linalg.det(g)
    return float(gauss), float(np.linalg.norm(Hvec))
