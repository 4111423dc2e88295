#include "qwalk/scenario.hpp"

#include <cmath>

namespace qwalk {

const char* scenario_name(Scenario s) {
    switch (s) {
        case Scenario::StarLoop: return "star-loop";
        case Scenario::StarDummyLoops: return "star-dummy-loops";
        case Scenario::StarClique: return "star-clique";
        case Scenario::TwoStars: return "two-stars";
        case Scenario::BipartiteExtra: return "bipartite-extra";
        case Scenario::BipartiteDetect: return "bipartite-detect";
    }
    throw std::logic_error("unreachable scenario");
}

Scenario scenario_from_name(const std::string& name) {
    if (name == "star-loop") return Scenario::StarLoop;
    if (name == "star-dummy-loops") return Scenario::StarDummyLoops;
    if (name == "star-clique") return Scenario::StarClique;
    if (name == "two-stars") return Scenario::TwoStars;
    if (name == "bipartite-extra" || name == "bipartite") return Scenario::BipartiteExtra;
    if (name == "bipartite-detect") return Scenario::BipartiteDetect;
    throw std::invalid_argument("unknown scenario: " + name);
}

void ScenarioParams::validate() const {
    switch (scenario) {
        case Scenario::StarLoop:
            if (n < 3) throw std::invalid_argument("star-loop requires n >= 3");
            break;
        case Scenario::StarDummyLoops:
            if (n < 3) throw std::invalid_argument("star-dummy-loops requires n >= 3");
            if (!std::isfinite(phi))
                throw std::invalid_argument("star-dummy-loops requires a finite phi");
            break;
        case Scenario::StarClique:
            if (n < 3) throw std::invalid_argument("star-clique requires n >= 3");
            if (m < 2 || m >= n)
                throw std::invalid_argument("star-clique requires 2 <= m < n");
            break;
        case Scenario::TwoStars:
            if (n < 3) throw std::invalid_argument("two-stars requires n >= 3");
            break;
        case Scenario::BipartiteExtra:
        case Scenario::BipartiteDetect:
            if (n1 < 3) throw std::invalid_argument("bipartite requires n1 >= 3");
            if (n2 < 2) throw std::invalid_argument("bipartite requires n2 >= 2");
            break;
    }
}

Graph build_star_loop(int n) {
    if (n < 3) throw std::invalid_argument("star-loop requires n >= 3");
    std::vector<VertexId> vs;
    std::vector<Edge> es;
    vs.reserve(static_cast<std::size_t>(n) + 1);
    for (int v = 0; v <= n; ++v) vs.push_back(static_cast<VertexId>(v));
    for (int j = 1; j <= n; ++j) es.emplace_back(0, static_cast<VertexId>(j));
    es.emplace_back(1, 1);
    std::map<VertexId, VertexBehavior> beh;
    beh[1] = {BehaviorKind::LoopRelay, 0.0};
    return Graph(std::move(vs), std::move(es), std::move(beh), {Edge(1, 1)});
}

Graph build_star_dummy_loops(int n, double phi) {
    if (n < 3) throw std::invalid_argument("star-dummy-loops requires n >= 3");
    if (!std::isfinite(phi))
        throw std::invalid_argument("star-dummy-loops requires a finite phi");
    std::vector<VertexId> vs;
    std::vector<Edge> es;
    for (int v = 0; v <= n; ++v) vs.push_back(static_cast<VertexId>(v));
    for (int j = 1; j <= n; ++j) {
        es.emplace_back(0, static_cast<VertexId>(j));
        es.emplace_back(static_cast<VertexId>(j), static_cast<VertexId>(j));
    }
    std::map<VertexId, VertexBehavior> beh;
    beh[1] = {BehaviorKind::DummyLoop, phi};
    for (int j = 2; j <= n; ++j)
        beh[static_cast<VertexId>(j)] = {BehaviorKind::LoopRelay, 0.0};
    return Graph(std::move(vs), std::move(es), std::move(beh), {});
}

Graph build_star_clique(int n, int m) {
    if (n < 3 || m < 2 || m >= n)
        throw std::invalid_argument("star-clique requires n >= 3 and 2 <= m < n");
    std::vector<VertexId> vs;
    std::vector<Edge> es;
    std::set<Edge> hidden;
    for (int v = 0; v <= n; ++v) vs.push_back(static_cast<VertexId>(v));
    for (int j = 1; j <= n; ++j) es.emplace_back(0, static_cast<VertexId>(j));
    for (int j = 1; j <= m; ++j)
        for (int k = j + 1; k <= m; ++k) {
            Edge e(static_cast<VertexId>(j), static_cast<VertexId>(k));
            es.push_back(e);
            hidden.insert(e);
        }
    return Graph(std::move(vs), std::move(es), {}, std::move(hidden));
}

Graph build_two_stars(int n) {
    if (n < 3) throw std::invalid_argument("two-stars requires n >= 3");
    const VertexId a = 0;
    const VertexId b = static_cast<VertexId>(2 * n);
    std::vector<VertexId> vs;
    std::vector<Edge> es;
    for (int v = 0; v <= 2 * n; ++v) vs.push_back(static_cast<VertexId>(v));
    for (int j = 1; j <= n; ++j) es.emplace_back(a, static_cast<VertexId>(j));
    es.emplace_back(1, b);
    for (int j = n + 1; j <= 2 * n - 1; ++j) es.emplace_back(static_cast<VertexId>(j), b);
    std::map<VertexId, VertexBehavior> beh;
    beh[1] = {BehaviorKind::Transmissive, 0.0};
    return Graph(std::move(vs), std::move(es), std::move(beh), {});
}

static Graph build_bipartite(int n1, int n2, bool with_extra) {
    if (n1 < 3) throw std::invalid_argument("bipartite requires n1 >= 3");
    if (n2 < 2) throw std::invalid_argument("bipartite requires n2 >= 2");
    std::vector<VertexId> vs;
    std::vector<Edge> es;
    for (int v = 1; v <= n1 + n2; ++v) vs.push_back(static_cast<VertexId>(v));
    for (int k = 1; k <= n1; ++k)
        for (int j = n1 + 1; j <= n1 + n2; ++j)
            es.emplace_back(static_cast<VertexId>(k), static_cast<VertexId>(j));
    std::set<Edge> hidden;
    if (with_extra) {
        es.emplace_back(1, 2);
        hidden.insert(Edge(1, 2));
    }
    return Graph(std::move(vs), std::move(es), {}, std::move(hidden));
}

Graph build_bipartite_extra(int n1, int n2) { return build_bipartite(n1, n2, true); }
Graph build_bipartite_plain(int n1, int n2) { return build_bipartite(n1, n2, false); }

Graph scenario_graph(const ScenarioParams& p) {
    p.validate();
    switch (p.scenario) {
        case Scenario::StarLoop: return build_star_loop(p.n);
        case Scenario::StarDummyLoops: return build_star_dummy_loops(p.n, p.phi);
        case Scenario::StarClique: return build_star_clique(p.n, p.m);
        case Scenario::TwoStars: return build_two_stars(p.n);
        case Scenario::BipartiteExtra: return build_bipartite_extra(p.n1, p.n2);
        case Scenario::BipartiteDetect:
            return p.absent ? build_bipartite_plain(p.n1, p.n2)
                            : build_bipartite_extra(p.n1, p.n2);
    }
    throw std::logic_error("unreachable scenario");
}

std::vector<Edge> scenario_target_edges(const ScenarioParams& p) {
    p.validate();
    std::vector<Edge> out;
    switch (p.scenario) {
        case Scenario::StarLoop:
        case Scenario::StarDummyLoops:
            out.emplace_back(0, 1);
            break;
        case Scenario::StarClique:
            for (int j = 1; j <= p.m; ++j) out.emplace_back(0, static_cast<VertexId>(j));
            break;
        case Scenario::TwoStars:
            out.emplace_back(0, 1);
            out.emplace_back(1, static_cast<VertexId>(2 * p.n));
            break;
        case Scenario::BipartiteExtra:
        case Scenario::BipartiteDetect:
            for (int j = p.n1 + 1; j <= p.n1 + p.n2; ++j) {
                out.emplace_back(1, static_cast<VertexId>(j));
                out.emplace_back(2, static_cast<VertexId>(j));
            }
            break;
    }
    return out;
}

}  // namespace qwalk
