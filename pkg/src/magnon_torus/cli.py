"""
Command-line front end.

    magnon-torus classify --config run.ini
    magnon-torus dual --config run.ini
    magnon-torus sweep --config run.ini --output sweep.csv --threads 4
    magnon-torus oracle-check

Exit status: 0 success, 1 validation, 2 infeasible dual, 3 numeric, 4 I/O.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import pipeline
from .config import RunConfig, couplings_section, load_config
from .errors import MagnonTorusError, OutputError, ValidationError
from .magnon_model import canonical_params
from .toric_geometry import classify, curvature, dual_of
from .validation import run_checks

log = logging.getLogger("magnon_torus")

THREADS_ENV = "MAGNON_TORUS_THREADS"


def _threads(arg) -> int:
    if arg is not None:
        value = arg
    else:
        env = os.environ.get(THREADS_ENV, "1")
        try:
            value = int(env)
        except ValueError:
            raise ValidationError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
    if value < 1:
        raise ValidationError(f"thread count must be >= 1, got {value}")
    return value


def _emit(text: str, path) -> None:
    if not path:
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc}") from None


def _config(args) -> RunConfig:
    if not args.config:
        raise ValidationError("--config is required for this subcommand")
    cfg = load_config(args.config)
    return cfg.with_overrides(output_format=args.format, entropy_base=args.base,
                              output_path=args.output)


def cmd_classify(args) -> int:
    cfg = _config(args)
    tc = classify(cfg.couplings)
    row = {"R1": tc.radius_1, "R2": tc.radius_2, "regime": tc.regime.value,
           "gauss": None, "mean": None, "status": "ok"}
    if tc.degenerate:
        row["status"] = "degenerate: circle class"
    else:
        inv = curvature(tc)
        row.update(gauss=inv.gauss_curvature, mean=inv.mean_curvature_magnitude)
    cols = ("R1", "R2", "regime", "gauss", "mean", "status")
    _emit(pipeline.render([row], cols, cfg.output_format), cfg.output_path)
    return 0


def cmd_dual(args) -> int:
    cfg = _config(args)
    dual = dual_of(cfg.couplings, cfg.lattice)
    dev = {"omega": 0.0, "delta": 0.0, "chi_tilde": 0.0, "lambda_tilde": 0.0}
    for k in cfg.k_points:
        a = canonical_params(cfg.couplings, cfg.lattice, k)
        b = canonical_params(dual, cfg.lattice, k)
        for key in dev:
            dev[key] = max(dev[key], abs(getattr(a, key) - getattr(b, key)))
    worst = max(dev.values())
    if cfg.output_format == "json":
        d = dual.as_dict()
        fields = ", ".join(f'"{k}": {pipeline.json_value(v)}' for k, v in d.items())
        devs = ", ".join(f'"{k}": {pipeline.format_float(v)}' for k, v in dev.items())
        text = (
            "{\n"
            f'  "dual": {{{fields}}},\n'
            f'  "k_points": {len(cfg.k_points)},\n'
            f'  "max_deviation": {{{devs}}},\n'
            f'  "max_deviation_all": {pipeline.format_float(worst)}\n'
            "}\n"
        )
    else:
        lines = [couplings_section(dual).rstrip("\n"), "",
                 f"# verification over {len(cfg.k_points)} k-points"]
        lines += [f"# max |d {key}| = {pipeline.format_float(v)}" for key, v in dev.items()]
        lines.append(f"# max deviation = {pipeline.format_float(worst)}")
        text = "\n".join(lines) + "\n"
    _emit(text, cfg.output_path)
    return 0


def _table(args, columns, rows_fn) -> int:
    cfg = _config(args)
    rows = rows_fn(cfg, _threads(args.threads))
    if rows and all(r["status"] == "unstable" for r in rows):
        log.warning("squeezing is unstable (|Lambda/omega| >= 1) at every k-point")
    _emit(pipeline.render(rows, columns, cfg.output_format), cfg.output_path)
    return 0


def cmd_dispersion(args) -> int:
    return _table(args, pipeline.DISPERSION_COLUMNS, pipeline.dispersion_rows)


def cmd_entropy_sp(args) -> int:
    return _table(args, pipeline.ENTROPY_SP_COLUMNS, pipeline.run_sweep)


def cmd_entropy_sq(args) -> int:
    return _table(args, pipeline.ENTROPY_SQ_COLUMNS, pipeline.run_sweep)


def cmd_sweep(args) -> int:
    return _table(args, pipeline.SWEEP_COLUMNS, pipeline.run_sweep)


def cmd_oracle_check(args) -> int:
    kwargs = {}
    if args.config:
        cfg = load_config(args.config)
        kwargs = {"lattice": cfg.lattice, "k_grid": list(cfg.k_points)}
        if cfg.couplings.regime.value == "FM":
            kwargs["configs"] = [cfg.couplings]
    results = run_checks(**kwargs)
    text = "\n".join(r.line() for r in results) + "\n"
    failed = sum(not r.passed for r in results)
    text += f"{len(results) - failed}/{len(results)} checks passed\n"
    _emit(text, args.output)
    return 0 if failed == 0 else 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="magnon-torus",
        description="Toric classification, FM/AFM duality and magnon entanglement sweeps.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="run configuration file")
    common.add_argument("--output", help="write to this file instead of stdout")
    common.add_argument("--format", choices=("csv", "json"), help="output format")
    common.add_argument("--base", choices=("nats", "bits"), help="entropy log base")
    common.add_argument("--threads", type=int,
                        help=f"worker threads for k-points (fallback: ${THREADS_ENV})")
    common.add_argument("-v", "--verbose", action="store_true")

    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn, helptext in (
        ("classify", cmd_classify, "toric radii and curvature invariants"),
        ("dual", cmd_dual, "canonical FM<->AFM dual and its verification"),
        ("dispersion", cmd_dispersion, "canonical parameters and normal-mode energies per k"),
        ("entropy-sp", cmd_entropy_sp, "splitting entanglement entropy per (k, m, n)"),
        ("entropy-sq", cmd_entropy_sq, "squeezing entanglement entropy per (k, m, n)"),
        ("sweep", cmd_sweep, "full table per (k, m, n)"),
        ("oracle-check", cmd_oracle_check, "cross-validate closed forms against exact sectors"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.set_defaults(func=fn)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except MagnonTorusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
