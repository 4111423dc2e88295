#pragma once

#include <iosfwd>
#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/graph.hpp"

namespace qwalk {

// Text format, one vertex per line, then optional annotation directives:
//
//   0: 1 2 3
//   1: 0 1          <- a vertex listing itself has a loop
//   2: 0
//   3: 0
//   #behavior 1 loop-relay
//   #hidden 1 1
//
// Neighbor entries must be symmetric and duplicate-free. Behavior kinds are
// grover (default, may be omitted), transmissive, loop-relay and
// "dummy-loop <phi>". Throws ParseError with a 1-based line number.
Graph parse_adjacency_list(const std::string& text);
Graph parse_adjacency_file(const std::string& path);

// Canonical form: vertices and neighbors ascending, non-default behaviors,
// then hidden edges. Inverse of parse_adjacency_list for every valid graph.
std::string write_adjacency_list(const Graph& g);
void write_adjacency_file(const Graph& g, const std::string& path);

}  // namespace qwalk
