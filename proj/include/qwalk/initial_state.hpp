#pragma once

#include <map>

#include "qwalk/scenario.hpp"
#include "qwalk/state_space.hpp"

namespace qwalk {

enum class InitialStateKind {
    // Uniform over both orientations of the visible (non-hidden, non-loop)
    // edges, signed: + away from the scattering hub (star center; set 2 for
    // bipartite graphs), - toward it.
    AntisymmetricUniform,
    // Uniform positive amplitude on every directed state, loops included.
    UniformAllWithLoops,
    // Two-stars: + on all states of the first star, - on all of the second.
    TwoStarSigned,
    // Two-stars: + on outgoing states of the first center, - on the second's.
    TwoStarOutgoingSigned,
};

const char* initial_state_name(InitialStateKind k);
InitialStateKind initial_state_from_name(const std::string& name);

InitialStateKind scenario_initial_state(Scenario s);

StateVector make_initial_state(const Graph& g, const StateSpace& space,
                               InitialStateKind kind, const ScenarioParams& p);

// Normalized vector with the given amplitudes, zero elsewhere.
StateVector make_custom_state(const StateSpace& space,
                              const std::map<DirectedEdgeState, Complex>& amplitudes);

}  // namespace qwalk
