"""Qubit-qutrit correlations under classical dephasing noise.

States are 6x6 complex numpy arrays in the basis |00>,|01>,|02>,|10>,|11>,|12>.
"""

from ._core import (
    DimensionMismatch,
    Error,
    InsufficientData,
    InvalidConfig,
    InvalidState,
    InvalidTrajectoryConfig,
    IoFailure,
    NegativeTime,
    ParameterOutOfRange,
    ToleranceBreach,
    apply_channel,
    classical_correlation,
    closed_geometric_discord,
    closed_negativity,
    detect_transitions,
    evaluate_correlations,
    find_critical_times,
    geometric_discord,
    geometric_discord_variational_oracle,
    hermitian_eigenvalues,
    measured_conditional_entropy,
    mutual_information,
    negativity,
    partial_trace,
    partial_transpose_qubit,
    quantum_discord,
    random_density_matrix,
    rho_entangled,
    rho_separable,
    simulate_trajectories,
    sweep,
    sweep_csv,
    von_neumann_entropy,
)

__all__ = [name for name in dir() if not name.startswith("_")]
