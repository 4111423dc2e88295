#pragma once

#include <map>
#include <optional>
#include <random>

#include "qwalk/state_space.hpp"

namespace qwalk {

// Probability of finding the walker on each undirected edge (both orientations
// pooled; loops have a single orientation). not_found aggregates the hidden
// edges: a measurement cannot report an edge the searcher does not know about.
struct EdgeDistribution {
    std::map<Edge, double> probabilities;
    double not_found = 0.0;

    double total() const;
    double mass(const Edge& e) const;
};

EdgeDistribution edge_probabilities(const Graph& g, const StateSpace& space,
                                    const StateVector& s);

// Edge measurement outcome; nullopt means NotFound (walker was on a hidden edge).
using MeasureOutcome = std::optional<Edge>;

MeasureOutcome sample_measurement(const Graph& g, const StateSpace& space,
                                  const StateVector& s, std::uint64_t seed);
MeasureOutcome sample_from_distribution(const Graph& g, const EdgeDistribution& dist,
                                        std::mt19937_64& rng);

}  // namespace qwalk
