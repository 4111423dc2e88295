#include "qwalk/measurement.hpp"

#include "qwalk/rng.hpp"

namespace qwalk {

double EdgeDistribution::total() const {
    double t = 0.0;
    for (const auto& [e, pr] : probabilities) t += pr;
    return t;
}

double EdgeDistribution::mass(const Edge& e) const {
    auto it = probabilities.find(e);
    return it == probabilities.end() ? 0.0 : it->second;
}

EdgeDistribution edge_probabilities(const Graph& g, const StateSpace& space,
                                    const StateVector& s) {
    if (s.size() != static_cast<Eigen::Index>(space.dim()))
        throw std::invalid_argument("state dimension does not match the graph");
    EdgeDistribution dist;
    for (const Edge& e : g.edges()) dist.probabilities[e] = 0.0;
    for (std::size_t i = 0; i < space.dim(); ++i)
        dist.probabilities[space.state(i).edge()] += std::norm(s[static_cast<Eigen::Index>(i)]);
    for (const Edge& h : g.hidden()) dist.not_found += dist.probabilities.at(h);
    return dist;
}

MeasureOutcome sample_from_distribution(const Graph& g, const EdgeDistribution& dist,
                                        std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double u = unit(rng);
    double cum = 0.0;
    const Edge* last_visible = nullptr;
    for (const auto& [e, pr] : dist.probabilities) {
        if (g.is_hidden(e)) continue;
        cum += pr;
        last_visible = &e;
        if (u < cum) return e;
    }
    if (dist.not_found > 0.0 || last_visible == nullptr) return std::nullopt;
    return *last_visible;  // u landed in the rounding gap past the visible mass
}

MeasureOutcome sample_measurement(const Graph& g, const StateSpace& space,
                                  const StateVector& s, std::uint64_t seed) {
    const EdgeDistribution dist = edge_probabilities(g, space, s);
    auto rng = rng_stream(seed);
    return sample_from_distribution(g, dist, rng);
}

}  // namespace qwalk
