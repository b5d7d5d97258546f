"""
Bipartite lattice geometry.

Nearest-neighbour vectors are given in dimensionless lattice units (spacing 1);
wavevectors in radians per lattice unit. Only the structure factor

    gamma_k = sum_delta exp(-i delta . k)

and the coordination number enter the magnon Hamiltonian.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import DimensionError, ValidationError

_PAIR_TOL = 1e-12
_ROUNDOFF = 8 * np.finfo(float).eps


@dataclass(frozen=True)
class LatticeSpec:
    """
    Nearest-neighbour geometry of a bipartite lattice and its sublattice spins.

    Attributes
    ----------
    neighbor_vectors : tuple of tuple of float
        Vectors connecting an A site to its B neighbours, all of one dimension d in {1, 2, 3}.
    spin_A, spin_B : float
        Spin lengths of the two sublattices (units of hbar).
    name : str
        Free-form label; presets use their registry key.
    require_inversion : bool
        If true, every delta must be accompanied by -delta. The honeycomb
        preset switches this off since its three bonds are not inversion-paired.
    """

    neighbor_vectors: tuple
    spin_A: float = 1.0
    spin_B: float = 1.0
    name: str = "custom"
    require_inversion: bool = field(default=True, repr=False)

    def __post_init__(self):
        vecs = tuple(tuple(float(c) for c in np.atleast_1d(v)) for v in self.neighbor_vectors)
        object.__setattr__(self, "neighbor_vectors", vecs)
        if not vecs:
            raise ValidationError("lattice needs at least one neighbor vector")
        dims = {len(v) for v in vecs}
        if len(dims) != 1:
            raise DimensionError(f"neighbor vectors of mixed dimension {sorted(dims)}")
        (d,) = dims
        if d not in (1, 2, 3):
            raise DimensionError(f"lattice dimension must be 1, 2 or 3, got {d}")
        if not (self.spin_A > 0 and self.spin_B > 0):
            raise ValidationError(
                f"spins must be positive, got spin_A={self.spin_A}, spin_B={self.spin_B}"
            )
        if self.require_inversion:
            arr = np.asarray(vecs)
            for v in arr:
                if not np.any(np.all(np.abs(arr + v) <= _PAIR_TOL, axis=1)):
                    raise ValidationError(
                        f"neighbor vector {tuple(v)} has no partner {tuple(-v)}"
                    )

    @property
    def dimension(self) -> int:
        return len(self.neighbor_vectors[0])

    @property
    def vectors(self) -> np.ndarray:
        return np.asarray(self.neighbor_vectors, dtype=float)

    def with_spins(self, spin_A: float, spin_B: float) -> "LatticeSpec":
        return LatticeSpec(self.neighbor_vectors, spin_A, spin_B, self.name, self.require_inversion)


def _as_kpoint(lattice: LatticeSpec, k) -> np.ndarray:
    kv = np.atleast_1d(np.asarray(k, dtype=float))
    if kv.ndim != 1 or kv.shape[0] != lattice.dimension:
        raise DimensionError(
            f"k-point of dimension {kv.shape} does not match {lattice.dimension}-d lattice"
        )
    return kv


def gamma_k(lattice: LatticeSpec, k) -> complex:
    """Structure factor sum_delta exp(-i delta . k)."""
    kv = _as_kpoint(lattice, k)
    phases = lattice.vectors @ kv
    g = complex(np.sum(np.exp(-1j * phases)))
    # cancellation leaves ~1e-16 residue at nodes of gamma; snap it so decoupled points stay decoupled
    tol = _ROUNDOFF * len(lattice.neighbor_vectors)
    return complex(0.0 if abs(g.real) < tol else g.real, 0.0 if abs(g.imag) < tol else g.imag)


def coordination_number(lattice: LatticeSpec) -> int:
    return len(lattice.neighbor_vectors)


# --- presets -----------------------------------------------------------------

_S3 = math.sqrt(3.0)

_PRESET_VECTORS = {
    "chain": ((1.0,), (-1.0,)),
    "square": ((1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)),
    "cubic": (
        (1.0, 0.0, 0.0), (-1.0, 0.0, 0.0),
        (0.0, 1.0, 0.0), (0.0, -1.0, 0.0),
        (0.0, 0.0, 1.0), (0.0, 0.0, -1.0),
    ),
    "honeycomb": ((0.0, 1.0), (_S3 / 2, -0.5), (-_S3 / 2, -0.5)),
}

# High-symmetry points, radians per lattice unit (nearest-neighbour spacing 1).
HIGH_SYMMETRY_POINTS = {
    "chain": {"G": (0.0,), "X": (math.pi,)},
    "square": {"G": (0.0, 0.0), "X": (math.pi, 0.0), "M": (math.pi, math.pi)},
    "cubic": {
        "G": (0.0, 0.0, 0.0),
        "X": (math.pi, 0.0, 0.0),
        "M": (math.pi, math.pi, 0.0),
        "R": (math.pi, math.pi, math.pi),
    },
    "honeycomb": {
        "G": (0.0, 0.0),
        "K": (4 * math.pi / (3 * _S3), 0.0),
        "M": (0.0, 2 * math.pi / 3),
    },
}

DEFAULT_PATHS = {
    "chain": ("G", "X"),
    "square": ("G", "X", "M", "G"),
    "cubic": ("G", "X", "M", "G", "R"),
    "honeycomb": ("G", "K", "M", "G"),
}

PRESETS = tuple(_PRESET_VECTORS)


def preset(name: str, spin_A: float = 1.0, spin_B: float = 1.0) -> LatticeSpec:
    """Return a built-in lattice: ``chain``, ``square``, ``cubic`` or ``honeycomb``."""
    try:
        vecs = _PRESET_VECTORS[name]
    except KeyError:
        raise ValidationError(
            f"unknown lattice preset {name!r}; choose from {', '.join(PRESETS)}"
        ) from None
    return LatticeSpec(vecs, spin_A, spin_B, name, require_inversion=(name != "honeycomb"))


def bz_path(name: str, count: int, corners: Sequence[str] | None = None) -> np.ndarray:
    """
    Uniformly sample a piecewise-linear path through high-symmetry points.

    Points are spaced evenly in arc length and include both end points
    (a single point when ``count == 1``).

    Returns
    -------
    ndarray, shape (count, d)
    """
    if count < 1:
        raise ValidationError(f"k-path count must be >= 1, got {count}")
    if name not in HIGH_SYMMETRY_POINTS:
        raise ValidationError(f"no Brillouin-zone path defined for lattice {name!r}")
    table = HIGH_SYMMETRY_POINTS[name]
    labels = tuple(corners) if corners else DEFAULT_PATHS[name]
    try:
        nodes = np.array([table[c] for c in labels], dtype=float)
    except KeyError as exc:
        raise ValidationError(
            f"unknown high-symmetry point {exc.args[0]!r} for {name}; known: {sorted(table)}"
        ) from None
    if len(nodes) == 1 or count == 1:
        return np.repeat(nodes[:1], count, axis=0)
    seg = np.linalg.norm(np.diff(nodes, axis=0), axis=1)
    cum = np.concatenate([[0.0], np.cumsum(seg)])
    s = np.linspace(0.0, cum[-1], count)
    out = np.empty((count, nodes.shape[1]))
    for i, si in enumerate(s):
        j = min(int(np.searchsorted(cum, si, side="right")) - 1, len(seg) - 1)
        t = 0.0 if seg[j] == 0.0 else (si - cum[j]) / seg[j]
        out[i] = nodes[j] + t * (nodes[j + 1] - nodes[j])
    return out
