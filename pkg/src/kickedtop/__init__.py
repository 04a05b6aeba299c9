"""Spin squeezing, pairwise entanglement, and sudden death in the quantum kicked top."""

from .entanglement import (
    ConcurrenceReport,
    TwoQubitDensity,
    concurrence,
    pair_correlation_brute,
    partial_trace_pair,
    rho12_from_moments,
    symmetric_embed,
)
from .events import (
    DEFAULT_EPS,
    EventLog,
    WitnessRecord,
    detect_transitions,
    witness_series,
    zeta2,
)
from .spin import (
    Moments,
    Operator,
    SpinQuantum,
    StateVector,
    coherent_spin_state,
    expectation,
    hermitian_exponential,
    jx_operator,
    jy_operator,
    jz_operator,
    ladder_operators,
    moments,
    rotation_operator,
)
from .squeezing import (
    GammaMatrix,
    MeanSpinFrame,
    SqueezingReport,
    c_min,
    correlation_matrix,
    gamma_matrix,
    mean_spin_frame,
    pairwise_correlation,
    squeezing_report,
    xi_ku2,
    xi_n2,
    xi_t2,
)
from .top import (
    KickedTopParams,
    classical_point,
    classical_step,
    classical_trajectory,
    evolve,
    floquet_operator,
    phase_space_map,
    phase_space_trajectories,
    point_angles,
)

__all__ = [
    "ConcurrenceReport",
    "DEFAULT_EPS",
    "EventLog",
    "GammaMatrix",
    "KickedTopParams",
    "MeanSpinFrame",
    "Moments",
    "Operator",
    "SpinQuantum",
    "SqueezingReport",
    "StateVector",
    "TwoQubitDensity",
    "WitnessRecord",
    "c_min",
    "classical_point",
    "classical_step",
    "classical_trajectory",
    "coherent_spin_state",
    "concurrence",
    "correlation_matrix",
    "detect_transitions",
    "evolve",
    "expectation",
    "floquet_operator",
    "gamma_matrix",
    "hermitian_exponential",
    "jx_operator",
    "jy_operator",
    "jz_operator",
    "ladder_operators",
    "mean_spin_frame",
    "moments",
    "pair_correlation_brute",
    "pairwise_correlation",
    "partial_trace_pair",
    "phase_space_map",
    "phase_space_trajectories",
    "point_angles",
    "rho12_from_moments",
    "rotation_operator",
    "squeezing_report",
    "symmetric_embed",
    "witness_series",
    "xi_ku2",
    "xi_n2",
    "xi_t2",
    "zeta2",
]

__version__ = "0.1.0"
