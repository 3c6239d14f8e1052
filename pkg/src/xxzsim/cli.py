"""Command-line front end: time evolutions, sweeps, steady states, figure data.

Examples
--------
simulate --case 1 --gamma 0.05 --t-max 30 --t-points 600 --out run.csv
simulate --case 2 --steady
simulate --figure fig1a --out fig1a.csv
simulate --case 1 --sweep B=0,0.1,0.3 --format json

Exit codes: 0 success, 2 invalid configuration, 3 degenerate limit (the
closed-form engine cannot represent the requested point; use --engine
spectral).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .dynamics import DegenerateLimitError, EwlCase, InitialStateSpec
from .hamiltonian import ModelParams
from .sweep import (FORMATS, SweepConfig, emit, figure_preset, run_sweep,
                    steady_state_report, steady_sweep_records)

_DEFAULTS = {
    "case": 1, "p": 0.7, "theta": math.pi / 4.0,
    "J": 0.5, "Jz": 0.3, "B": 0.1, "Dz": 0.1, "Gz": 0.5,
    "gamma": 0.05, "t_max": 30.0, "t_points": 600,
    "sweep": None, "engine": "spectral", "format": "csv", "out": None,
    "steady": False, "figure": None,
}

_ENGINE_NAMES = {"closed": "closed_form", "closed_form": "closed_form",
                 "spectral": "spectral"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simulate",
        description="Intrinsic-decoherence dynamics of the two-qubit XXZ model: "
                    "correlated coherence and quantum discord along trajectories.")
    parser.add_argument("--config", metavar="PATH",
                        help="flat JSON file with any of the flag names as keys "
                             "(explicit flags override it)")
    parser.add_argument("--case", type=int, choices=(1, 2), help="initial EWL state family")
    parser.add_argument("--p", type=float, help="purity of the initial state, in [0, 1]")
    parser.add_argument("--theta", type=float, help="Bloch angle in [0, pi)")
    parser.add_argument("--J", type=float, help="in-plane exchange coupling")
    parser.add_argument("--Jz", type=float, help="axial exchange coupling")
    parser.add_argument("--B", type=float, help="magnetic field strength, >= 0")
    parser.add_argument("--Dz", type=float, help="DM interaction strength")
    parser.add_argument("--Gz", type=float, help="KSEA interaction strength")
    parser.add_argument("--gamma", type=float, help="intrinsic decoherence rate, >= 0")
    parser.add_argument("--t-max", dest="t_max", type=float, help="end of the time grid")
    parser.add_argument("--t-points", dest="t_points", type=int, help="points on the time grid")
    parser.add_argument("--sweep", metavar="NAME=v1,v2,...",
                        help="sweep one of J,Jz,B,Dz,Gz,gamma,p,theta over listed values")
    parser.add_argument("--engine", choices=sorted(set(_ENGINE_NAMES)),
                        help="evolution route (default spectral)")
    parser.add_argument("--format", choices=FORMATS, help="output format (default csv)")
    parser.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    parser.add_argument("--steady", action="store_true", default=None,
                        help="report the t -> infinity state instead of a trajectory")
    parser.add_argument("--figure", metavar="figNx",
                        help="use a built-in preset (fig1a..fig5b); other flags are ignored")
    return parser


def _merge_settings(args: argparse.Namespace) -> dict:
    settings = dict(_DEFAULTS)
    if args.config is not None:
        with open(args.config) as fh:
            loaded = json.load(fh)
        unknown = set(loaded) - set(_DEFAULTS)
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        settings.update(loaded)
    for key in _DEFAULTS:
        value = getattr(args, key if key != "format" else "format", None)
        if value is not None:
            settings[key] = value
    return settings


def _parse_sweep(text: str) -> tuple[str, tuple[float, ...]]:
    name, _, values = text.partition("=")
    if not values:
        raise ValueError(f"--sweep expects NAME=v1,v2,..., got {text!r}")
    return name, tuple(float(v) for v in values.split(","))


def config_from_settings(settings: dict) -> SweepConfig:
    sweep_param, sweep_values = (None, None)
    if settings["sweep"]:
        sweep_param, sweep_values = _parse_sweep(settings["sweep"])
    return SweepConfig(
        params=ModelParams(J=settings["J"], Jz=settings["Jz"], B=settings["B"],
                           Dz=settings["Dz"], Gz=settings["Gz"]),
        state=InitialStateSpec(case=EwlCase(settings["case"]), p=settings["p"],
                               theta=settings["theta"]),
        gamma=settings["gamma"],
        t_max=settings["t_max"],
        n_points=settings["t_points"],
        sweep_param=sweep_param,
        sweep_values=sweep_values,
        fmt=settings["format"],
        engine=_ENGINE_NAMES[settings["engine"]],
    )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = _merge_settings(args)
        if settings["figure"]:
            config = figure_preset(settings["figure"])
            records = run_sweep(config) + steady_sweep_records(config)
            records.sort(key=lambda r: (r.case, r.sweep_value, r.t))
            fmt = settings["format"]
        else:
            config = config_from_settings(settings)
            fmt = config.fmt
            if settings["steady"]:
                records = [steady_state_report(config)]
            else:
                records = run_sweep(config)
        text = emit(records, fmt=fmt, destination=settings["out"])
    except DegenerateLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if settings["out"] is None:
        try:
            sys.stdout.write(text)
        except BrokenPipeError:
            return 0
    return 0


if __name__ == "__main__":
    sys.exit(main())
