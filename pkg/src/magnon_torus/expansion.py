"""Eigenstates written over product number states, and their entanglement entropy."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class EigenstateExpansion:
    """
    A two-mode state sum_i c_i |a_i>|b_i> with pairwise distinct (a_i, b_i).

    Because every a_count and every b_count appears at most once, the
    amplitudes are already Schmidt coefficients and the entropy is
    -sum c_i^2 log c_i^2.

    ``norm_deficit`` is 1 - sum c_i^2 before any renormalization (nonzero only
    for truncated infinite expansions).
    """

    m: int
    n: int
    terms: tuple
    norm_deficit: float = 0.0

    @classmethod
    def build(cls, m, n, terms, norm_deficit=0.0):
        terms = tuple((int(a), int(b), float(c)) for a, b, c in terms)
        a_counts = [t[0] for t in terms]
        b_counts = [t[1] for t in terms]
        if len(set(a_counts)) != len(terms) or len(set(b_counts)) != len(terms):
            raise ValueError("expansion is not in Schmidt form: repeated mode occupation")
        return cls(m, n, terms, float(norm_deficit))

    @property
    def basis(self):
        return [(a, b) for a, b, _ in self.terms]

    @property
    def amplitudes(self) -> np.ndarray:
        return np.array([c for _, _, c in self.terms])

    @property
    def norm(self) -> float:
        return float(np.sum(self.amplitudes ** 2))

    @property
    def entropy(self) -> float:
        return entanglement_entropy(self)

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "terms": [list(t) for t in self.terms],
            "norm_deficit": self.norm_deficit,
            "entropy": self.entropy,
        }


def weights_entropy(weights, base: float | None = None) -> float:
    w = np.asarray(weights, dtype=float)
    w = w[w > 0]
    s = float(-np.sum(w * np.log(w)))
    s = max(s, 0.0) + 0.0
    return s / math.log(base) if base else s


def entanglement_entropy(state: EigenstateExpansion, base: float | None = None) -> float:
    """Von Neumann entropy of either mode, natural log unless ``base`` is given."""
    return weights_entropy(state.amplitudes ** 2, base)
