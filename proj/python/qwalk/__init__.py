"""Scattering quantum walks that locate structural anomalies in graphs."""

from ._core import (
    Baseline,
    DetectResult,
    Edge,
    Graph,
    InitialStateKind,
    PerturbativePrediction,
    PredictionReport,
    ScanResult,
    ScanRow,
    ScenarioMismatch,
    ScenarioParams,
    SearchResult,
    SpeedupReport,
    TrialFrequency,
    build_graph,
    char_poly,
    char_poly_closed_form,
    classical_baseline,
    detect_extra_edge,
    detect_trial_frequency,
    directed_states,
    eigenvalues,
    evolve_distribution,
    initial_state,
    invariance_residual,
    optimal_steps,
    params,
    parse_adjacency_list,
    perturbative_prediction,
    predicted_probabilities,
    reduced_from_full,
    reduced_labels,
    reduced_matrix,
    run_search,
    scan_success,
    speedup_report,
    step_matrix,
    target_edges,
    unitarity_deviation,
    verify_prediction,
    write_adjacency_list,
)

__version__ = "0.1.0"

__all__ = [
    "Baseline",
    "DetectResult",
    "Edge",
    "Graph",
    "InitialStateKind",
    "PerturbativePrediction",
    "PredictionReport",
    "ScanResult",
    "ScanRow",
    "ScenarioMismatch",
    "ScenarioParams",
    "SearchResult",
    "SpeedupReport",
    "TrialFrequency",
    "build_graph",
    "char_poly",
    "char_poly_closed_form",
    "classical_baseline",
    "detect_extra_edge",
    "detect_trial_frequency",
    "directed_states",
    "eigenvalues",
    "evolve_distribution",
    "initial_state",
    "invariance_residual",
    "optimal_steps",
    "params",
    "parse_adjacency_list",
    "perturbative_prediction",
    "predicted_probabilities",
    "reduced_from_full",
    "reduced_labels",
    "reduced_matrix",
    "run_search",
    "scan_success",
    "speedup_report",
    "step_matrix",
    "target_edges",
    "unitarity_deviation",
    "verify_prediction",
    "write_adjacency_list",
]
