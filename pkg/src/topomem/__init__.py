"""Entropic uncertainty and key-rate bounds for decohering topological qubits."""

from .bounds import (
    DEFAULT_PAIR,
    BoundsSample,
    ObservablePair,
    adabi_bound,
    berta_bound,
    bounds_at,
    complementarity,
    key_rate_adabi,
    key_rate_berta,
)
from .decoherence import (
    DecoherenceTrace,
    EnvironmentKind,
    EnvironmentSpec,
    alpha,
    beta,
    beta_bosonic,
    beta_fermionic,
    decoherence_trace,
    evolve_single_qubit,
    i_s,
)
from .qstate import (
    SIGMA_X,
    SIGMA_Z,
    BellDiagonalState,
    DensityMatrix,
    InvalidStateError,
    ProjectiveQubitMeasurement,
    binary_entropy,
    conditional_entropy,
    evolve_bell_diagonal,
    holevo,
    measurement_outcomes,
    mutual_information,
    partial_trace_a,
    partial_trace_b,
    post_measurement_state,
    to_density_matrix,
    von_neumann_entropy,
)
from .specfun import (
    DEFAULT_CONTROL,
    ConvergenceError,
    PoleError,
    SeriesControl,
    SpecialFunctionError,
    gamma,
    hyp1f1,
    hyp2f2_11_32_2,
)
from .sweep import CSV_HEADER, ConfigError, ExperimentConfig, PRESETS, emit, parse_csv, run_sweep

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
