#pragma once

#include <cstdint>
#include <vector>

#include "qwalk/initial_state.hpp"
#include "qwalk/measurement.hpp"
#include "qwalk/scenario.hpp"
#include "qwalk/step_operator.hpp"

namespace qwalk {

// Recommended step count round(pi / (2 theta)) for the scenario's rotation
// angle theta. Two-stars rotates only on every second step, so its count is
// twice the rounded half-step count (always even).
int optimal_steps(const ScenarioParams& p);

// Peak-probability claims for the scenario: (target mass, hidden mass).
std::pair<double, double> predicted_probabilities(const ScenarioParams& p);

struct SearchResult {
    int steps = 0;       // steps actually run
    int n_star = 0;      // recommended count for these parameters
    std::vector<Edge> target_edges;
    double p_target = 0.0;   // mass on the target edges after `steps`
    double p_hidden = 0.0;   // mass reported as not-found (hidden edges)
    double p_retry = 0.0;    // target mass after collapsing onto the hidden
                             // edges and stepping once more
    double predicted_p_target = 0.0;
    double predicted_p_hidden = 0.0;
};

SearchResult run_search(const ScenarioParams& p, int steps = -1);
SearchResult run_search(const ScenarioParams& p, InitialStateKind kind, int steps = -1);

// A not-found outcome collapses the walker onto the hidden edges. One further
// step sends that mass to the target edges; returns the target mass it lands
// with (0 when the state holds no hidden mass).
double retry_step(const Graph& g, const StateSpace& space, const StepOperator& u,
                  const StateVector& s, const std::vector<Edge>& targets);

struct ScanRow {
    int n = 0;
    double p_target = 0.0;
    double p_hidden = 0.0;
};

struct ScanResult {
    std::vector<ScanRow> rows;   // n = 0..n_max inclusive
    int best_n = 0;              // argmax of p_target + p_hidden, smallest on ties
    double best_success = 0.0;
    int predicted_n = 0;         // optimal_steps for comparison
};

ScanResult scan_success(const ScenarioParams& p, int n_max);

struct DetectResult {
    bool present = false;   // any repetition measured a hidden edge
    int reps = 0;
    int hits = 0;            // not-found outcomes observed
    double confidence = 0.0; // 1 - miss probability when an edge is present
};

// Presence test for the bipartite extra edge: run the walk once, measure
// `reps` times; a not-found outcome certifies the edge. Bipartite scenarios only.
DetectResult detect_extra_edge(const ScenarioParams& p, int reps, std::uint64_t seed);

struct TrialFrequency {
    int trials = 0;
    int flagged = 0;
    double frequency = 0.0;
};

// Repeats the presence test `trials` times; trial i reproduces
// detect_extra_edge with seed+i exactly but reuses the evolved state.
TrialFrequency detect_trial_frequency(const ScenarioParams& p, int reps, int trials,
                                      std::uint64_t seed, int jobs = 1);

struct Baseline {
    long long scan_length = 0;        // adjacency entries a classical scan examines
    long long certifying_entries = 0; // entries that reveal the anomaly
    double probes_expected = 0.0;     // (scan_length+1)/(certifying+1); scan_length if none
    double observed_mean = 0.0;       // Monte Carlo mean probes to first certifier
    double observed_se = 0.0;         // standard error of that mean
    int trials = 0;
};

// Classical certifier: scan the adjacency list in random order until an entry
// reveals the anomaly. star-dummy-loops is rejected (a phase mark leaves no
// trace in the adjacency list).
Baseline classical_baseline(const ScenarioParams& p, int trials, std::uint64_t seed,
                            int jobs = 1);

struct SpeedupReport {
    int n_star = 0;
    int repetitions = 0;          // walk runs budgeted for one expected success
    double quantum_total = 0.0;   // steps across repetitions (incl. retry where used)
    double classical_expected = 0.0;
    double ratio = 0.0;           // quantum_total / classical_expected
    double success_per_rep = 0.0; // measured certification probability per run
    double overall_success = 0.0; // after the budgeted repetitions
};

SpeedupReport speedup_report(const ScenarioParams& p);

}  // namespace qwalk
