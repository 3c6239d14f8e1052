"""Intrinsic-decoherence simulator for a two-qubit XXZ model with DM/KSEA couplings."""

from .dynamics import (DegenerateLimitError, EwlCase, InitialStateSpec,
                       default_kraus_terms, evolve_closed_form, evolve_ode_oracle,
                       evolve_spectral, ewl_initial_state, kraus_evolve_oracle,
                       steady_state)
from .hamiltonian import ModelParams, Spectrum, build_hamiltonian, spectral_decomposition
from .measures import (DiscordBreakdown, MeasurementGrid, NotAStateError, NotXStateError,
                       binary_entropy, correlated_coherence, discord_bruteforce,
                       l1_coherence, partial_trace, von_neumann_entropy, xstate_discord)
from .sweep import (CSV_HEADER, MeasureRecord, SweepConfig, emit, figure_preset,
                    parse_records, run_sweep, steady_state_report, steady_sweep_records)

__version__ = "0.1.0"

__all__ = [
    "ModelParams", "Spectrum", "build_hamiltonian", "spectral_decomposition",
    "EwlCase", "InitialStateSpec", "DegenerateLimitError",
    "ewl_initial_state", "evolve_spectral", "evolve_closed_form",
    "evolve_ode_oracle", "kraus_evolve_oracle", "default_kraus_terms", "steady_state",
    "NotAStateError", "NotXStateError", "DiscordBreakdown", "MeasurementGrid",
    "partial_trace", "l1_coherence", "correlated_coherence",
    "von_neumann_entropy", "binary_entropy", "xstate_discord", "discord_bruteforce",
    "SweepConfig", "MeasureRecord", "CSV_HEADER",
    "run_sweep", "steady_state_report", "steady_sweep_records",
    "figure_preset", "emit", "parse_records",
    "__version__",
]
