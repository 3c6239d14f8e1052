"""Batch evaluation: time grids, parameter sweeps, steady states, CSV/JSON output.

Every record carries the full parameter set plus all measures, one row per
(case, swept value, time) point, so any downstream tool can regroup the data
without re-running the dynamics.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, fields
from pathlib import Path

import numpy as np

from .dynamics import (EwlCase, InitialStateSpec, evolve_closed_form, evolve_spectral,
                       ewl_initial_state, steady_state)
from .hamiltonian import ModelParams, spectral_decomposition
from .measures import correlated_coherence, l1_coherence, xstate_discord

SWEEPABLE_PARAMS = ("J", "Jz", "B", "Dz", "Gz", "gamma", "p", "theta")
OUTPUT_MEASURES = ("C_l1", "C_cc", "QD", "populations")
ENGINES = ("spectral", "closed_form")
FORMATS = ("csv", "json")

CSV_HEADER = ("case,p,theta,J,Jz,B,Dz,Gz,gamma,sweep_param,sweep_value,t,"
              "C_l1,C_cc,QD,qd1,qd2,lambda1,lambda2,lambda3,lambda4")

# Baseline parameter point used throughout the figure presets.  Jz is free:
# it provably never moves any measure for EWL inputs; a nonzero value keeps
# the two blocks' eigenvalues from accidentally crossing.
BASELINE_PARAMS = ModelParams(J=0.5, Jz=0.3, B=0.1, Dz=0.1, Gz=0.5)
BASELINE_P = 0.7
BASELINE_THETA = math.pi / 4.0
BASELINE_GAMMA = 0.05


@dataclass(frozen=True)
class SweepConfig:
    """One batch run: base point, time axis, optional swept parameter."""

    params: ModelParams
    state: InitialStateSpec
    gamma: float
    t_max: float
    n_points: int
    sweep_param: str | None = None
    sweep_values: tuple[float, ...] | None = None
    outputs: tuple[str, ...] = ("C_l1", "C_cc", "QD")
    fmt: str = "csv"
    engine: str = "spectral"
    cases: tuple[EwlCase, ...] | None = None

    def __post_init__(self):
        if not (math.isfinite(self.gamma) and self.gamma >= 0.0):
            raise ValueError(f"gamma must be finite and >= 0, got {self.gamma!r}")
        if not (math.isfinite(self.t_max) and self.t_max > 0.0):
            raise ValueError(f"t_max must be > 0, got {self.t_max!r}")
        if int(self.n_points) != self.n_points or self.n_points < 2:
            raise ValueError(f"n_points must be an integer >= 2, got {self.n_points!r}")
        if (self.sweep_param is None) != (self.sweep_values is None):
            raise ValueError("sweep_param and sweep_values must be given together")
        if self.sweep_param is not None:
            if self.sweep_param not in SWEEPABLE_PARAMS:
                raise ValueError(f"cannot sweep {self.sweep_param!r}; "
                                 f"choose one of {SWEEPABLE_PARAMS}")
            if len(self.sweep_values) == 0:
                raise ValueError("sweep_values must be non-empty")
            object.__setattr__(self, "sweep_values",
                               tuple(float(v) for v in self.sweep_values))
            for v in self.sweep_values:
                self._check_domain(self.sweep_param, v)
        for m in self.outputs:
            if m not in OUTPUT_MEASURES:
                raise ValueError(f"unknown output measure {m!r}")
        if self.engine not in ENGINES:
            raise ValueError(f"engine must be one of {ENGINES}, got {self.engine!r}")
        if self.fmt not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.fmt!r}")
        if self.cases is not None:
            object.__setattr__(self, "cases", tuple(EwlCase(c) for c in self.cases))

    @staticmethod
    def _check_domain(name: str, value: float):
        if not math.isfinite(value):
            raise ValueError(f"swept {name} value must be finite, got {value!r}")
        if name == "B" and value < 0.0:
            raise ValueError(f"swept B must be >= 0, got {value}")
        if name == "gamma" and value < 0.0:
            raise ValueError(f"swept gamma must be >= 0, got {value}")
        if name == "p" and not 0.0 <= value <= 1.0:
            raise ValueError(f"swept p must lie in [0, 1], got {value}")
        if name == "theta" and not 0.0 <= value < math.pi:
            raise ValueError(f"swept theta must lie in [0, pi), got {value}")

    def effective(self, case: EwlCase, sweep_value: float | None):
        """(params, state, gamma) with the swept value substituted."""
        params, gamma = self.params, self.gamma
        state = self.state.replace(case=case)
        if self.sweep_param is not None and sweep_value is not None:
            if self.sweep_param == "gamma":
                gamma = sweep_value
            elif self.sweep_param in ("p", "theta"):
                state = state.replace(**{self.sweep_param: sweep_value})
            else:
                params = params.replace(**{self.sweep_param: sweep_value})
        return params, state, gamma


@dataclass(frozen=True)
class MeasureRecord:
    """One evaluated point; the field order is exactly the CSV column order."""

    case: int
    p: float
    theta: float
    J: float
    Jz: float
    B: float
    Dz: float
    Gz: float
    gamma: float
    sweep_param: str
    sweep_value: float
    t: float
    C_l1: float
    C_cc: float
    QD: float
    qd1: float
    qd2: float
    lambda1: float
    lambda2: float
    lambda3: float
    lambda4: float


def _record(config: SweepConfig, case: EwlCase, sweep_value: float | None,
            t: float, rho: np.ndarray) -> MeasureRecord:
    params, state, gamma = config.effective(case, sweep_value)
    breakdown = xstate_discord(rho)
    return MeasureRecord(
        case=int(case), p=state.p, theta=state.theta,
        J=params.J, Jz=params.Jz, B=params.B, Dz=params.Dz, Gz=params.Gz,
        gamma=gamma,
        sweep_param=config.sweep_param if config.sweep_param is not None else "none",
        sweep_value=sweep_value if sweep_value is not None else 0.0,
        t=t,
        C_l1=l1_coherence(rho), C_cc=correlated_coherence(rho),
        QD=breakdown.discord, qd1=breakdown.qd1, qd2=breakdown.qd2,
        lambda1=float(breakdown.populations[0]), lambda2=float(breakdown.populations[1]),
        lambda3=float(breakdown.populations[2]), lambda4=float(breakdown.populations[3]),
    )


def _sweep_groups(config: SweepConfig):
    cases = config.cases if config.cases is not None else (config.state.case,)
    values = config.sweep_values if config.sweep_values is not None else (None,)
    return [(case, value) for case in cases for value in values]


def _run_group(config: SweepConfig, case: EwlCase, value: float | None):
    params, state, gamma = config.effective(case, value)
    times = np.linspace(0.0, config.t_max, int(config.n_points))
    records = []
    if config.engine == "closed_form":
        for t in times:
            rho = evolve_closed_form(state, params, gamma, float(t))
            records.append(_record(config, case, value, float(t), rho))
    else:
        spectrum = spectral_decomposition(params)
        rho0 = ewl_initial_state(state)
        for t in times:
            rho = evolve_spectral(rho0, spectrum, gamma, float(t))
            records.append(_record(config, case, value, float(t), rho))
    return records


def _max_workers() -> int:
    raw = os.environ.get("SIM_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_sweep(config: SweepConfig) -> list[MeasureRecord]:
    """Evaluate the full (case, swept value, time) grid.

    Groups may run on up to SIM_THREADS threads; the output order is fixed to
    (case, sweep value, t) regardless of scheduling.
    """
    groups = _sweep_groups(config)
    workers = min(_max_workers(), len(groups))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(lambda g: _run_group(config, *g), groups))
    else:
        chunks = [_run_group(config, case, value) for case, value in groups]
    records = [rec for chunk in chunks for rec in chunk]
    records.sort(key=lambda r: (r.case, r.sweep_value, r.t))
    return records


def _steady_record(config: SweepConfig, case: EwlCase, value: float | None) -> MeasureRecord:
    params, state, gamma = config.effective(case, value)
    if gamma <= 0.0:
        raise ValueError("no steady state exists at gamma = 0 "
                         "(the evolution never stops oscillating)")
    spectrum = spectral_decomposition(params)
    rho = steady_state(ewl_initial_state(state), spectrum)
    return _record(config, case, value, math.inf, rho)


def steady_state_report(config: SweepConfig) -> MeasureRecord:
    """Measures of the t -> infinity state at the base point (t column: inf)."""
    return _steady_record(config, config.state.case, None)


def steady_sweep_records(config: SweepConfig) -> list[MeasureRecord]:
    """One steady record per (case, swept value); values with gamma = 0 are skipped."""
    records = []
    for case, value in _sweep_groups(config):
        _, _, gamma = config.effective(case, value)
        if gamma > 0.0:
            records.append(_steady_record(config, case, value))
    records.sort(key=lambda r: (r.case, r.sweep_value, r.t))
    return records


def figure_preset(name: str) -> SweepConfig:
    """Sweep configuration reproducing one of the ten reference panels.

    All presets share the baseline point; the sweep grids are representative
    choices (4-5 values each, t in [0, 30] with 600 points).
    """
    theta_grid = (math.pi / 8.0, math.pi / 4.0, 3.0 * math.pi / 8.0, math.pi / 2.0)
    presets = {
        "fig1a": dict(sweep=("gamma", (0.0, 0.01, 0.05, 0.1)), outputs=("C_cc",), cases=(1, 2)),
        "fig1b": dict(sweep=("gamma", (0.0, 0.01, 0.05, 0.1)), outputs=("QD",), cases=(1, 2)),
        "fig2a": dict(sweep=("B", (0.0, 0.1, 0.3, 0.6)), outputs=("C_cc", "QD"), cases=(1,)),
        "fig2b": dict(sweep=("Dz", (0.0, 0.1, 0.3, 0.6)), outputs=("C_cc", "QD"), cases=(2,)),
        "fig3a": dict(sweep=("Gz", (0.0, 0.25, 0.5, 1.0)), outputs=("C_cc", "QD"), cases=(1,)),
        "fig3b": dict(sweep=("J", (0.0, 0.25, 0.5, 1.0)), outputs=("C_cc", "QD"), cases=(2,)),
        "fig4a": dict(sweep=("theta", theta_grid), outputs=("C_cc",), cases=(1, 2)),
        "fig4b": dict(sweep=("theta", theta_grid), outputs=("QD",), cases=(1, 2)),
        "fig5a": dict(sweep=("p", (0.0, 0.25, 0.5, 0.75, 1.0)), outputs=("C_cc",), cases=(1, 2)),
        "fig5b": dict(sweep=("p", (0.0, 0.25, 0.5, 0.75, 1.0)), outputs=("QD",), cases=(1, 2)),
    }
    if name not in presets:
        raise ValueError(f"unknown figure preset {name!r}; choose from {sorted(presets)}")
    chosen = presets[name]
    sweep_param, sweep_values = chosen["sweep"]
    return SweepConfig(
        params=BASELINE_PARAMS,
        state=InitialStateSpec(case=EwlCase(chosen["cases"][0]), p=BASELINE_P,
                               theta=BASELINE_THETA),
        gamma=BASELINE_GAMMA,
        t_max=30.0,
        n_points=600,
        sweep_param=sweep_param,
        sweep_values=sweep_values,
        outputs=chosen["outputs"],
        cases=tuple(EwlCase(c) for c in chosen["cases"]),
    )


def _fmt(value) -> str:
    """Shortest representation capped at 12 significant digits; inf stays 'inf'."""
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if math.isinf(value):
        return "inf"
    return f"{value:.12g}"


def _json_value(value):
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if math.isinf(value):
        return "inf"
    return float(f"{value:.12g}")


def emit(records: list[MeasureRecord], fmt: str = "csv",
         destination: str | Path | None = None) -> str:
    """Serialize records to CSV or JSON text (LF line endings).

    If destination is given the text is also written there.  Steady-state
    rows carry the literal 'inf' in the t column.
    """
    if not records:
        raise ValueError("no records to emit")
    if fmt == "csv":
        lines = [CSV_HEADER]
        for rec in records:
            lines.append(",".join(_fmt(getattr(rec, f.name)) for f in fields(MeasureRecord)))
        text = "\n".join(lines) + "\n"
    elif fmt == "json":
        rows = [{k: _json_value(v) for k, v in asdict(rec).items()} for rec in records]
        text = json.dumps(rows, indent=1) + "\n"
    else:
        raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}")
    if destination is not None:
        with open(destination, "w", newline="\n") as fh:
            fh.write(text)
    return text


def parse_records(text: str, fmt: str = "csv") -> list[MeasureRecord]:
    """Inverse of emit, for round-trip checks and downstream tooling."""
    names = [f.name for f in fields(MeasureRecord)]
    records = []
    if fmt == "csv":
        lines = [ln for ln in text.split("\n") if ln]
        if lines[0] != CSV_HEADER:
            raise ValueError("unexpected CSV header")
        for line in lines[1:]:
            parts = line.split(",")
            row = dict(zip(names, parts))
            records.append(_record_from_strings(row))
    elif fmt == "json":
        for row in json.loads(text):
            records.append(_record_from_strings({k: row[k] for k in names}))
    else:
        raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}")
    return records


def _record_from_strings(row: dict) -> MeasureRecord:
    kwargs = {}
    for f in fields(MeasureRecord):
        raw = row[f.name]
        if f.name == "sweep_param":
            kwargs[f.name] = str(raw)
        elif f.name == "case":
            kwargs[f.name] = int(raw)
        elif raw == "inf":
            kwargs[f.name] = math.inf
        else:
            kwargs[f.name] = float(raw)
    return MeasureRecord(**kwargs)
