#include "qwalk/initial_state.hpp"

#include <cmath>

namespace qwalk {

const char* initial_state_name(InitialStateKind k) {
    switch (k) {
        case InitialStateKind::AntisymmetricUniform: return "antisymmetric-uniform";
        case InitialStateKind::UniformAllWithLoops: return "uniform-all-with-loops";
        case InitialStateKind::TwoStarSigned: return "two-star-signed";
        case InitialStateKind::TwoStarOutgoingSigned: return "two-star-outgoing-signed";
    }
    throw std::logic_error("unreachable initial state kind");
}

InitialStateKind initial_state_from_name(const std::string& name) {
    if (name == "antisymmetric-uniform") return InitialStateKind::AntisymmetricUniform;
    if (name == "uniform-all-with-loops") return InitialStateKind::UniformAllWithLoops;
    if (name == "two-star-signed") return InitialStateKind::TwoStarSigned;
    if (name == "two-star-outgoing-signed") return InitialStateKind::TwoStarOutgoingSigned;
    throw std::invalid_argument("unknown initial state kind: " + name);
}

InitialStateKind scenario_initial_state(Scenario s) {
    switch (s) {
        case Scenario::StarLoop:
        case Scenario::StarClique:
        case Scenario::BipartiteExtra:
        case Scenario::BipartiteDetect:
            return InitialStateKind::AntisymmetricUniform;
        case Scenario::StarDummyLoops:
            return InitialStateKind::UniformAllWithLoops;
        case Scenario::TwoStars:
            return InitialStateKind::TwoStarSigned;
    }
    throw std::logic_error("unreachable scenario");
}

namespace {

bool star_like(Scenario s) {
    return s == Scenario::StarLoop || s == Scenario::StarDummyLoops ||
           s == Scenario::StarClique;
}

StateVector antisymmetric_uniform(const Graph& g, const StateSpace& space,
                                  const ScenarioParams& p) {
    // Signed orientation: + on hub->out states. Stars: hub is the center 0.
    // Bipartite: the "hub" side is set 2 (the walk starts on states entering
    // set 1), so + runs from labels > n1 toward labels <= n1.
    StateVector s = space.zero_vector();
    std::size_t count = 0;
    for (std::size_t i = 0; i < space.dim(); ++i) {
        const auto& st = space.state(i);
        const Edge e = st.edge();
        if (e.is_loop() || g.is_hidden(e)) continue;
        ++count;
        double sign;
        if (star_like(p.scenario)) {
            sign = st.tail == 0 ? 1.0 : -1.0;
        } else if (p.scenario == Scenario::BipartiteExtra ||
                   p.scenario == Scenario::BipartiteDetect) {
            sign = st.tail > static_cast<VertexId>(p.n1) ? 1.0 : -1.0;
        } else {
            throw std::invalid_argument(
                "antisymmetric-uniform needs a star or bipartite scenario");
        }
        s[static_cast<Eigen::Index>(i)] = Complex(sign, 0.0);
    }
    if (count == 0) throw std::invalid_argument("no visible edges to start on");
    return s / std::sqrt(static_cast<double>(count));
}

}  // namespace

StateVector make_initial_state(const Graph& g, const StateSpace& space,
                               InitialStateKind kind, const ScenarioParams& p) {
    p.validate();
    switch (kind) {
        case InitialStateKind::AntisymmetricUniform:
            return antisymmetric_uniform(g, space, p);

        case InitialStateKind::UniformAllWithLoops: {
            if (p.scenario != Scenario::StarDummyLoops)
                throw std::invalid_argument(
                    "uniform-all-with-loops is the star-dummy-loops start");
            StateVector s = StateVector::Constant(
                static_cast<Eigen::Index>(space.dim()),
                Complex(1.0 / std::sqrt(static_cast<double>(space.dim())), 0.0));
            return s;
        }

        case InitialStateKind::TwoStarSigned: {
            if (p.scenario != Scenario::TwoStars)
                throw std::invalid_argument("two-star-signed needs the two-stars scenario");
            const auto b = static_cast<VertexId>(2 * p.n);
            StateVector s = space.zero_vector();
            for (std::size_t i = 0; i < space.dim(); ++i) {
                const auto& st = space.state(i);
                const bool second_star = st.tail == b || st.head == b;
                s[static_cast<Eigen::Index>(i)] = Complex(second_star ? -1.0 : 1.0, 0.0);
            }
            return s / std::sqrt(static_cast<double>(space.dim()));
        }

        case InitialStateKind::TwoStarOutgoingSigned: {
            if (p.scenario != Scenario::TwoStars)
                throw std::invalid_argument(
                    "two-star-outgoing-signed needs the two-stars scenario");
            const auto b = static_cast<VertexId>(2 * p.n);
            StateVector s = space.zero_vector();
            std::size_t count = 0;
            for (std::size_t i = 0; i < space.dim(); ++i) {
                const auto& st = space.state(i);
                if (st.tail == 0) {
                    s[static_cast<Eigen::Index>(i)] = Complex(1.0, 0.0);
                    ++count;
                } else if (st.tail == b) {
                    s[static_cast<Eigen::Index>(i)] = Complex(-1.0, 0.0);
                    ++count;
                }
            }
            return s / std::sqrt(static_cast<double>(count));
        }
    }
    throw std::logic_error("unreachable initial state kind");
}

StateVector make_custom_state(const StateSpace& space,
                              const std::map<DirectedEdgeState, Complex>& amplitudes) {
    StateVector s = space.zero_vector();
    for (const auto& [st, amp] : amplitudes)
        s[static_cast<Eigen::Index>(space.index(st.tail, st.head))] = amp;
    const double norm = s.norm();
    if (norm < 1e-300) throw std::invalid_argument("custom state has zero norm");
    return s / norm;
}

}  // namespace qwalk
