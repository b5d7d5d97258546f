"""
Run configuration: an INI-style file of ``key = value`` lines under
``[section]`` headers, arrays written as comma lists.

Example::

    [lattice]
    preset = chain            # or: vectors = 1, -1   (components split by spaces)
    spin_A = 1
    spin_B = 1

    [couplings]
    regime = FM
    J = -1
    D = 0
    r = -0.1
    K = 0
    J_z = -1
    B = 0

    [grid]
    count = 64                # sample the preset path (optionally: path = G, X)
    # points = 0, 0.5, 1.0    # or explicit k-points

    [states]
    quantum_numbers = 0 0, 1 0, 1 1
    cutoff = auto

    [output]
    format = csv
    base = nats
    path = sweep.csv
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from .errors import OutputError, ValidationError
from .lattice import LatticeSpec, bz_path, preset
from .magnon_model import CouplingSet
from .splitting import DEFAULT_MAX_QUANTA
from .squeezing import DEFAULT_MAX_QUANTUM

_COUPLING_KEYS = {"J": "J", "D": "D", "r": "r_aniso", "K": "K", "J_z": "J_z", "B": "B_field"}


@dataclass(frozen=True)
class RunConfig:
    lattice: LatticeSpec
    couplings: CouplingSet
    k_points: np.ndarray = field(repr=False)
    quantum_numbers: tuple = ((0, 0),)
    cutoff: int | None = None
    entropy_base: str = "nats"
    output_format: str = "csv"
    output_path: str | None = None

    def __post_init__(self):
        kp = np.atleast_2d(np.asarray(self.k_points, dtype=float))
        if kp.shape[0] < 1:
            raise ValidationError("grid: at least one k-point is required")
        if kp.shape[1] != self.lattice.dimension:
            raise ValidationError(
                f"grid: k-points have dimension {kp.shape[1]}, lattice has {self.lattice.dimension}"
            )
        object.__setattr__(self, "k_points", kp)
        for m, n in self.quantum_numbers:
            if m < 0 or n < 0:
                raise ValidationError(f"states.quantum_numbers: negative entry ({m}, {n})")
            if m + n > DEFAULT_MAX_QUANTA:
                raise ValidationError(
                    f"states.quantum_numbers: m + n = {m + n} exceeds splitting cap {DEFAULT_MAX_QUANTA}"
                )
            if max(m, n) > DEFAULT_MAX_QUANTUM:
                raise ValidationError(
                    f"states.quantum_numbers: max(m, n) = {max(m, n)} exceeds squeezing cap "
                    f"{DEFAULT_MAX_QUANTUM}"
                )
        if self.cutoff is not None and self.cutoff < 0:
            raise ValidationError(f"states.cutoff must be >= 0, got {self.cutoff}")
        if self.entropy_base not in ("nats", "bits"):
            raise ValidationError(f"output.base must be nats or bits, got {self.entropy_base!r}")
        if self.output_format not in ("csv", "json"):
            raise ValidationError(f"output.format must be csv or json, got {self.output_format!r}")

    def with_overrides(self, **kwargs) -> "RunConfig":
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


def _floats(text: str, where: str) -> list:
    try:
        return [float(tok) for tok in text.split()]
    except ValueError:
        raise ValidationError(f"{where}: cannot parse numbers from {text!r}") from None


def _items(text: str) -> list:
    return [item.strip() for item in text.split(",") if item.strip()]


def _get_float(section, key, where, default=None):
    if key not in section:
        if default is None:
            raise ValidationError(f"{where}.{key} is required")
        return default
    try:
        return float(section[key])
    except ValueError:
        raise ValidationError(f"{where}.{key}: not a number: {section[key]!r}") from None


def parse_config(text: str) -> RunConfig:
    cp = configparser.ConfigParser(inline_comment_prefixes=("#",), interpolation=None)
    cp.optionxform = str
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise ValidationError(f"config syntax error: {exc}") from None

    for required in ("lattice", "couplings"):
        if not cp.has_section(required):
            raise ValidationError(f"config is missing the [{required}] section")

    lat = cp["lattice"]
    spin_A = _get_float(lat, "spin_A", "lattice", 1.0)
    spin_B = _get_float(lat, "spin_B", "lattice", 1.0)
    if "vectors" in lat:
        vecs = [_floats(item, "lattice.vectors") for item in _items(lat["vectors"])]
        lattice = LatticeSpec(vecs, spin_A, spin_B, lat.get("name", "custom"))
    else:
        lattice = preset(lat.get("preset", "chain"), spin_A, spin_B)

    cs = cp["couplings"]
    if "regime" not in cs:
        raise ValidationError("couplings.regime is required (FM or AFM)")
    values = {attr: _get_float(cs, key, "couplings", 0.0) for key, attr in _COUPLING_KEYS.items()}
    couplings = CouplingSet(regime=cs["regime"], **values)

    grid = cp["grid"] if cp.has_section("grid") else {}
    if "points" in grid:
        k_points = np.array([_floats(item, "grid.points") for item in _items(grid["points"])])
    else:
        try:
            count = int(grid.get("count", "64"))
        except ValueError:
            raise ValidationError(f"grid.count: not an integer: {grid.get('count')!r}") from None
        corners = _items(grid["path"]) if "path" in grid else None
        k_points = bz_path(lattice.name, count, corners)

    states = cp["states"] if cp.has_section("states") else {}
    qn = []
    for item in _items(states.get("quantum_numbers", "0 0")):
        parts = item.split()
        if len(parts) != 2:
            raise ValidationError(f"states.quantum_numbers: expected 'm n', got {item!r}")
        try:
            qn.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValidationError(f"states.quantum_numbers: not integers: {item!r}") from None
    cutoff_text = states.get("cutoff", "auto").strip()
    try:
        cutoff = None if cutoff_text == "auto" else int(cutoff_text)
    except ValueError:
        raise ValidationError(f"states.cutoff: expected an integer or auto, got {cutoff_text!r}") from None

    out = cp["output"] if cp.has_section("output") else {}
    return RunConfig(
        lattice=lattice,
        couplings=couplings,
        k_points=k_points,
        quantum_numbers=tuple(qn),
        cutoff=cutoff,
        entropy_base=out.get("base", "nats"),
        output_format=out.get("format", "csv"),
        output_path=out.get("path"),
    )


def load_config(path) -> RunConfig:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise OutputError(f"cannot read config {path}: {exc}") from None
    return parse_config(text)


def couplings_section(couplings: CouplingSet) -> str:
    """Render a [couplings] section that :func:`parse_config` reads back exactly."""
    d = couplings.as_dict()
    lines = ["[couplings]", f"regime = {d.pop('regime')}"]
    lines += [f"{key} = {val!r}" for key, val in d.items()]
    return "\n".join(lines) + "\n"
