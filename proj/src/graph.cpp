#include "qwalk/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace qwalk {

const char* behavior_name(BehaviorKind k) {
    switch (k) {
        case BehaviorKind::GroverScatter: return "grover";
        case BehaviorKind::Transmissive: return "transmissive";
        case BehaviorKind::LoopRelay: return "loop-relay";
        case BehaviorKind::DummyLoop: return "dummy-loop";
    }
    throw std::logic_error("unreachable behavior kind");
}

BehaviorKind behavior_from_name(const std::string& name) {
    if (name == "grover") return BehaviorKind::GroverScatter;
    if (name == "transmissive") return BehaviorKind::Transmissive;
    if (name == "loop-relay") return BehaviorKind::LoopRelay;
    if (name == "dummy-loop") return BehaviorKind::DummyLoop;
    throw std::invalid_argument("unknown behavior tag: " + name);
}

Graph::Graph(std::vector<VertexId> vertices, std::vector<Edge> edges,
             std::map<VertexId, VertexBehavior> behaviors, std::set<Edge> hidden)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      behaviors_(std::move(behaviors)),
      hidden_(std::move(hidden)) {
    std::sort(vertices_.begin(), vertices_.end());
    std::sort(edges_.begin(), edges_.end());
    // Default behaviors are implicit; drop them so equality is representation-free.
    for (auto it = behaviors_.begin(); it != behaviors_.end();) {
        if (it->second.kind == BehaviorKind::GroverScatter)
            it = behaviors_.erase(it);
        else
            ++it;
    }
    for (const Edge& e : edges_) {
        adj_[e.a].push_back(e.b);
        if (!e.is_loop()) adj_[e.b].push_back(e.a);
    }
    for (auto& [v, nbrs] : adj_) std::sort(nbrs.begin(), nbrs.end());
    validate();
}

bool Graph::has_vertex(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Graph::has_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::size_t Graph::degree(VertexId v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) return 0;
    std::size_t d = it->second.size();
    if (has_loop(v)) ++d;  // loop contributes 2 to the graph-theoretic degree
    return d;
}

std::size_t Graph::port_count(VertexId v) const {
    auto it = adj_.find(v);
    return it == adj_.end() ? 0 : it->second.size();
}

bool Graph::has_loop(VertexId v) const { return has_edge(Edge(v, v)); }

std::vector<VertexId> Graph::neighbors(VertexId v) const {
    auto it = adj_.find(v);
    return it == adj_.end() ? std::vector<VertexId>{} : it->second;
}

VertexBehavior Graph::behavior(VertexId v) const {
    auto it = behaviors_.find(v);
    return it == behaviors_.end() ? VertexBehavior{} : it->second;
}

Graph Graph::with_extra_edge(const Edge& e) const {
    std::vector<Edge> edges = edges_;
    edges.push_back(e);
    return Graph(vertices_, std::move(edges), behaviors_, hidden_);
}

bool Graph::operator==(const Graph& o) const {
    return vertices_ == o.vertices_ && edges_ == o.edges_ &&
           behaviors_ == o.behaviors_ && hidden_ == o.hidden_;
}

void Graph::validate() const {
    if (vertices_.empty()) throw std::invalid_argument("graph: empty vertex set");
    for (std::size_t i = 1; i < vertices_.size(); ++i)
        if (vertices_[i] == vertices_[i - 1])
            throw std::invalid_argument("graph: duplicate vertex label " +
                                        std::to_string(vertices_[i]));
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (!has_vertex(e.a) || !has_vertex(e.b))
            throw std::invalid_argument("graph: edge endpoint not a vertex: " +
                                        std::to_string(e.a) + "-" + std::to_string(e.b));
        if (i > 0 && edges_[i - 1] == e)
            throw std::invalid_argument("graph: duplicate edge " + std::to_string(e.a) +
                                        "-" + std::to_string(e.b));
    }
    for (const Edge& h : hidden_)
        if (!has_edge(h))
            throw std::invalid_argument("graph: hidden edge not present: " +
                                        std::to_string(h.a) + "-" + std::to_string(h.b));

    // Connectivity (loops are irrelevant to it).
    if (!edges_.empty() || vertices_.size() > 1) {
        std::set<VertexId> seen;
        std::queue<VertexId> q;
        q.push(vertices_.front());
        seen.insert(vertices_.front());
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId u : neighbors(v))
                if (u != v && seen.insert(u).second) q.push(u);
        }
        if (seen.size() != vertices_.size())
            throw std::invalid_argument("graph: not connected");
    }
    if (vertices_.size() > 1 && edges_.empty())
        throw std::invalid_argument("graph: not connected");

    for (const auto& [v, b] : behaviors_) {
        if (!has_vertex(v))
            throw std::invalid_argument("graph: behavior on missing vertex " +
                                        std::to_string(v));
        const std::size_t nonloop = port_count(v) - (has_loop(v) ? 1 : 0);
        switch (b.kind) {
            case BehaviorKind::GroverScatter:
                break;
            case BehaviorKind::Transmissive:
                if (has_loop(v) || nonloop != 2)
                    throw std::invalid_argument(
                        "graph: transmissive vertex " + std::to_string(v) +
                        " must have exactly two non-loop edges and no loop");
                break;
            case BehaviorKind::LoopRelay:
            case BehaviorKind::DummyLoop:
                if (!has_loop(v) || nonloop != 1)
                    throw std::invalid_argument(
                        "graph: vertex " + std::to_string(v) + " with " +
                        behavior_name(b.kind) +
                        " behavior must have exactly one loop and one spoke");
                if (b.kind == BehaviorKind::DummyLoop && !std::isfinite(b.phi))
                    throw std::invalid_argument("graph: dummy-loop phase must be finite");
                break;
        }
    }
}

}  // namespace qwalk
