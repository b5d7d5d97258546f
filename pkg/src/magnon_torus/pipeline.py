"""k-point evaluation, sweeps and deterministic CSV/JSON rendering."""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .config import RunConfig
from .errors import DomainError, InstabilityError
from .lattice import LatticeSpec, gamma_k
from .magnon_model import CouplingSet, build_magnon_params, gauge_fix
from .splitting import solve_splitting, splitting_eigenstate
from .squeezing import solve_squeezing, squeezing_eigenstate

SWEEP_COLUMNS = (
    "k_index", "k_components", "m", "n", "gamma_abs", "chi_tilde", "lambda_tilde",
    "theta", "r_squeeze", "omega_alpha_sp", "omega_beta_sp", "omega_alpha_sq",
    "omega_beta_sq", "entropy_sp", "entropy_sq", "truncation_deficit", "status",
)
DISPERSION_COLUMNS = (
    "k_index", "k_components", "gamma_abs", "omega", "delta", "chi_tilde", "lambda_tilde",
    "omega_alpha_sp", "omega_beta_sp", "omega_alpha_sq", "omega_beta_sq", "status",
)
ENTROPY_SP_COLUMNS = (
    "k_index", "k_components", "m", "n", "chi_tilde", "theta",
    "omega_alpha_sp", "omega_beta_sp", "entropy_sp",
)
ENTROPY_SQ_COLUMNS = (
    "k_index", "k_components", "m", "n", "lambda_tilde", "r_squeeze",
    "omega_alpha_sq", "omega_beta_sq", "entropy_sq", "truncation_deficit", "status",
)

_SQ_FIELDS = ("r_squeeze", "omega_alpha_sq", "omega_beta_sq", "entropy_sq", "truncation_deficit")


def evaluate_point(couplings: CouplingSet, lattice: LatticeSpec, k, k_index: int,
                   quantum_numbers, cutoff=None, base=None) -> list:
    """All sweep rows for one k-point, one per (m, n) in input order."""
    k = np.asarray(k, dtype=float)
    g = gamma_k(lattice, k)
    params = gauge_fix(build_magnon_params(couplings, lattice, k))
    sp = solve_splitting(params.omega, params.delta, params.chi_tilde)
    try:
        sq = solve_squeezing(params.omega, params.delta, params.lambda_tilde)
        status = "ok"
    except (InstabilityError, DomainError):
        sq, status = None, "unstable"

    rows = []
    for m, n in quantum_numbers:
        row = {
            "k_index": k_index,
            "k_components": tuple(float(c) for c in k),
            "m": m,
            "n": n,
            "gamma_abs": abs(g),
            "omega": params.omega,
            "delta": params.delta,
            "chi_tilde": params.chi_tilde,
            "lambda_tilde": params.lambda_tilde,
            "theta": sp.theta,
            "omega_alpha_sp": sp.omega_alpha,
            "omega_beta_sp": sp.omega_beta,
            "entropy_sp": splitting_eigenstate(m, n, sp.theta).entropy,
            "status": status,
        }
        if sq is None:
            row.update(dict.fromkeys(_SQ_FIELDS))
        else:
            state = squeezing_eigenstate(m, n, sq, cutoff)
            row.update(
                r_squeeze=sq.r_squeeze,
                omega_alpha_sq=sq.omega_alpha,
                omega_beta_sq=sq.omega_beta,
                entropy_sq=state.entropy,
                truncation_deficit=state.norm_deficit,
            )
        if base == "bits":
            for key in ("entropy_sp", "entropy_sq"):
                if row[key] is not None:
                    row[key] = row[key] / math.log(2)
        rows.append(row)
    return rows


def run_sweep(config: RunConfig, threads: int = 1) -> list:
    """
    Evaluate every (k, m, n) of ``config``.

    k-points are independent and are spread over ``threads`` workers; rows
    come back ordered by k_index and then by the configured (m, n) order.
    """
    def task(item):
        i, k = item
        return evaluate_point(config.couplings, config.lattice, k, i, config.quantum_numbers,
                              config.cutoff, config.entropy_base)

    items = list(enumerate(config.k_points))
    if threads <= 1:
        chunks = [task(it) for it in items]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(task, items))
    return [row for chunk in chunks for row in chunk]


def dispersion_rows(config: RunConfig, threads: int = 1) -> list:
    single = RunConfig(config.lattice, config.couplings, config.k_points, ((0, 0),), 0,
                       config.entropy_base, config.output_format, config.output_path)
    return run_sweep(single, threads)


# --- rendering ---------------------------------------------------------------

def format_float(x: float) -> str:
    """17 significant digits, lowercase scientific; negative zero printed as zero."""
    return f"{x + 0.0:.16e}"


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, tuple):
        return " ".join(format_float(c) for c in value)
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format_float(float(value))
    return str(value)


def to_csv(rows, columns) -> str:
    lines = [",".join(columns)]
    for row in rows:
        lines.append(",".join(_cell(row.get(c)) for c in columns))
    return "\n".join(lines) + "\n"


def json_value(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, tuple):
        return "[" + ", ".join(json_value(float(c)) for c in value) + "]"
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format_float(float(value)) if math.isfinite(value) else "null"
    return json.dumps(str(value))


def to_json(rows, columns) -> str:
    body = []
    for row in rows:
        fields = ", ".join(f"{json.dumps(c)}: {json_value(row.get(c))}" for c in columns)
        body.append("  {" + fields + "}")
    return "[\n" + ",\n".join(body) + "\n]\n"


def render(rows, columns, fmt: str) -> str:
    return to_json(rows, columns) if fmt == "json" else to_csv(rows, columns)
