#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qwalk/graph.hpp"

namespace qwalk {

enum class Scenario {
    StarLoop,          // star, loop on external vertex 1
    StarDummyLoops,    // star, real loops on externals 2..N, phase loop on 1
    StarClique,        // star, clique on externals 1..M
    TwoStars,          // two stars sharing external vertex 1
    BipartiteExtra,    // complete bipartite + extra edge (1,2) inside set 1
    BipartiteDetect,   // presence question on the bipartite family
};

const char* scenario_name(Scenario s);
Scenario scenario_from_name(const std::string& name);

struct ScenarioParams {
    Scenario scenario = Scenario::StarLoop;
    int n = 0;        // external count for star/two-star scenarios
    int m = 0;        // clique size
    int n1 = 0;       // bipartite set-1 size
    int n2 = 0;       // bipartite set-2 size
    double phi = 0.0; // dummy-loop phase
    bool absent = false; // BipartiteDetect: build without the extra edge

    void validate() const;  // throws std::invalid_argument
};

// Star with center 0, externals 1..n, loop at vertex 1 (hidden).
Graph build_star_loop(int n);
// Star with loops on every external; vertex 1 carries the phase loop. No hidden edges.
Graph build_star_dummy_loops(int n, double phi);
// Star plus a clique on externals 1..m; the clique edges are hidden.
Graph build_star_clique(int n, int m);
// Centers 0 and 2n; externals of the first star are 1..n, of the second
// 1 and n+1..2n-1; vertex 1 is shared and transmissive. No hidden edges.
Graph build_two_stars(int n);
// Complete bipartite on {1..n1} x {n1+1..n1+n2} plus hidden extra edge (1,2).
Graph build_bipartite_extra(int n1, int n2);
// Complete bipartite with no anomaly (detection null case).
Graph build_bipartite_plain(int n1, int n2);

Graph scenario_graph(const ScenarioParams& p);

// Edges certifying success when the walker is measured there.
std::vector<Edge> scenario_target_edges(const ScenarioParams& p);

}  // namespace qwalk
