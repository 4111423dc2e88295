#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwalk {

using VertexId = std::uint32_t;

// Undirected edge, endpoints stored sorted. a == b is a loop.
struct Edge {
    VertexId a = 0;
    VertexId b = 0;

    Edge() = default;
    Edge(VertexId x, VertexId y) : a(x < y ? x : y), b(x < y ? y : x) {}

    bool is_loop() const { return a == b; }
    bool operator==(const Edge& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Edge& o) const { return !(*this == o); }
    bool operator<(const Edge& o) const { return a != o.a ? a < o.a : b < o.b; }
};

// How the walker scatters at a vertex.
//   GroverScatter: reflection -(n-2)/n, transmission 2/n over the n ports
//                  (a loop counts as a single port).
//   Transmissive:  degree-2 pass-through, no loop allowed.
//   LoopRelay:     one spoke + one loop; incoming spoke -> loop, loop -> outgoing spoke.
//   DummyLoop:     one spoke + one loop; incoming spoke -> e^{i phi} outgoing spoke,
//                  loop state is a fixed point.
enum class BehaviorKind { GroverScatter, Transmissive, LoopRelay, DummyLoop };

struct VertexBehavior {
    BehaviorKind kind = BehaviorKind::GroverScatter;
    double phi = 0.0;  // used by DummyLoop only

    bool operator==(const VertexBehavior& o) const {
        return kind == o.kind && (kind != BehaviorKind::DummyLoop || phi == o.phi);
    }
};

const char* behavior_name(BehaviorKind k);
BehaviorKind behavior_from_name(const std::string& name);

// Finite undirected multigraph-lite: at most one edge per vertex pair, at most
// one loop per vertex, connected, every vertex behavior structurally valid.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<VertexId> vertices, std::vector<Edge> edges,
          std::map<VertexId, VertexBehavior> behaviors = {},
          std::set<Edge> hidden = {});

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::set<Edge>& hidden() const { return hidden_; }
    const std::map<VertexId, VertexBehavior>& behaviors() const { return behaviors_; }

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    bool has_vertex(VertexId v) const;
    bool has_edge(VertexId a, VertexId b) const { return has_edge(Edge(a, b)); }
    bool has_edge(const Edge& e) const;
    bool is_hidden(const Edge& e) const { return hidden_.count(e) != 0; }

    // Graph-theoretic degree: loops count twice.
    std::size_t degree(VertexId v) const;
    // Scattering ports: loops count once.
    std::size_t port_count(VertexId v) const;
    bool has_loop(VertexId v) const;
    // Non-loop neighbors in ascending order, then the vertex itself if looped.
    std::vector<VertexId> neighbors(VertexId v) const;

    VertexBehavior behavior(VertexId v) const;

    // Returns a copy with one extra edge and the same behaviors/hidden set.
    Graph with_extra_edge(const Edge& e) const;

    bool operator==(const Graph& o) const;
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    void validate() const;

    std::vector<VertexId> vertices_;                 // ascending
    std::vector<Edge> edges_;                        // ascending, unique
    std::map<VertexId, VertexBehavior> behaviors_;   // only non-default entries kept
    std::set<Edge> hidden_;                          // subset of edges_
    std::map<VertexId, std::vector<VertexId>> adj_;  // includes v itself once if looped
};

}  // namespace qwalk
