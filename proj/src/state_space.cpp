#include "qwalk/state_space.hpp"

#include <algorithm>

namespace qwalk {

StateSpace::StateSpace(const Graph& g) {
    states_.reserve(2 * g.num_edges());
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) {
            states_.push_back({e.a, e.a});
        } else {
            states_.push_back({e.a, e.b});
            states_.push_back({e.b, e.a});
        }
    }
    std::sort(states_.begin(), states_.end());
    index_.reserve(states_.size());
    for (std::size_t i = 0; i < states_.size(); ++i)
        index_[key(states_[i].tail, states_[i].head)] = i;
}

bool StateSpace::contains(VertexId tail, VertexId head) const {
    return index_.count(key(tail, head)) != 0;
}

std::size_t StateSpace::index(VertexId tail, VertexId head) const {
    auto it = index_.find(key(tail, head));
    if (it == index_.end())
        throw std::out_of_range("no directed state |" + std::to_string(tail) + "," +
                                std::to_string(head) + ">");
    return it->second;
}

std::vector<DirectedEdgeState> enumerate_states(const Graph& g) {
    return StateSpace(g).states();
}

}  // namespace qwalk
