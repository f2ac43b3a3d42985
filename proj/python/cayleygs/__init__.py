"""Exact ground-state toolkit for finite-range models on Cayley trees."""

from ._core import (
    SubgroupSpec,
    ToolkitError,
    ball,
    build_a_sets,
    build_alpha_patterns,
    cooccurrence_differences,
    count_by_constraint_graph,
    count_label_colorings,
    count_periodic_ground_states,
    distance,
    exhaustive_min_energy,
    gamma_check,
    generalize_a_sets,
    hamiltonian,
    is_ground_state,
    kronecker_u,
    letter_count,
    multiply,
    ordered_injections,
    parity_vector,
    periodic_config,
    predicted_periodic_count,
    reduce,
    spec_from_a_sets,
    sphere,
    u_extremes,
)

__all__ = [
    "SubgroupSpec",
    "ToolkitError",
    "ball",
    "build_a_sets",
    "build_alpha_patterns",
    "cooccurrence_differences",
    "count_by_constraint_graph",
    "count_label_colorings",
    "count_periodic_ground_states",
    "distance",
    "exhaustive_min_energy",
    "gamma_check",
    "generalize_a_sets",
    "hamiltonian",
    "is_ground_state",
    "kronecker_u",
    "letter_count",
    "multiply",
    "ordered_injections",
    "parity_vector",
    "periodic_config",
    "predicted_periodic_count",
    "reduce",
    "spec_from_a_sets",
    "sphere",
    "u_extremes",
]

__version__ = "0.1.0"
