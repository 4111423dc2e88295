#pragma once

#include <complex>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/graph.hpp"

namespace qwalk {

using Complex = std::complex<double>;
using StateVector = Eigen::VectorXcd;

// Directed edge state |tail,head>: the walker sits on edge {tail,head} moving
// toward head. A loop at j contributes the single state |j,j>.
struct DirectedEdgeState {
    VertexId tail = 0;
    VertexId head = 0;

    bool operator==(const DirectedEdgeState& o) const {
        return tail == o.tail && head == o.head;
    }
    bool operator<(const DirectedEdgeState& o) const {
        return tail != o.tail ? tail < o.tail : head < o.head;
    }
    Edge edge() const { return Edge(tail, head); }
};

// Canonical enumeration of a graph's directed edge states, sorted by (tail, head).
class StateSpace {
public:
    explicit StateSpace(const Graph& g);

    std::size_t dim() const { return states_.size(); }
    const std::vector<DirectedEdgeState>& states() const { return states_; }
    const DirectedEdgeState& state(std::size_t i) const { return states_[i]; }

    bool contains(VertexId tail, VertexId head) const;
    std::size_t index(VertexId tail, VertexId head) const;  // throws if absent

    StateVector zero_vector() const { return StateVector::Zero(static_cast<Eigen::Index>(dim())); }

private:
    static std::uint64_t key(VertexId tail, VertexId head) {
        return (static_cast<std::uint64_t>(tail) << 32) | head;
    }
    std::vector<DirectedEdgeState> states_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

std::vector<DirectedEdgeState> enumerate_states(const Graph& g);

}  // namespace qwalk
