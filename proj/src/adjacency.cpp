#include "qwalk/adjacency.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace qwalk {

namespace {

VertexId parse_vertex_id(const std::string& tok, int line_no) {
    if (tok.empty()) throw ParseError(line_no, "empty vertex id");
    for (char c : tok)
        if (c < '0' || c > '9')
            throw ParseError(line_no, "vertex id is not a non-negative integer: '" + tok + "'");
    unsigned long long v = 0;
    try {
        v = std::stoull(tok);
    } catch (const std::exception&) {
        throw ParseError(line_no, "vertex id out of range: '" + tok + "'");
    }
    if (v > 0xFFFFFFFFull) throw ParseError(line_no, "vertex id out of range: '" + tok + "'");
    return static_cast<VertexId>(v);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Graph parse_adjacency_list(const std::string& text) {
    std::map<VertexId, std::vector<VertexId>> lists;
    std::map<VertexId, int> vertex_line;
    std::map<VertexId, VertexBehavior> behaviors;
    std::set<Edge> hidden;
    std::vector<std::pair<Edge, int>> hidden_lines;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            throw ParseError(line_no, "CR line ending; the format is LF-only");
        if (line.find_first_not_of(" \t") == std::string::npos) continue;

        if (line[0] == '#') {
            auto toks = split_ws(line.substr(1));
            if (toks.empty()) throw ParseError(line_no, "empty directive");
            if (toks[0] == "behavior") {
                if (toks.size() < 3)
                    throw ParseError(line_no, "#behavior needs a vertex id and a kind");
                VertexId v = parse_vertex_id(toks[1], line_no);
                BehaviorKind kind;
                try {
                    kind = behavior_from_name(toks[2]);
                } catch (const std::invalid_argument& e) {
                    throw ParseError(line_no, e.what());
                }
                VertexBehavior b{kind, 0.0};
                if (kind == BehaviorKind::DummyLoop) {
                    if (toks.size() != 4)
                        throw ParseError(line_no, "dummy-loop needs exactly one phase argument");
                    try {
                        std::size_t used = 0;
                        b.phi = std::stod(toks[3], &used);
                        if (used != toks[3].size()) throw std::invalid_argument(toks[3]);
                    } catch (const std::exception&) {
                        throw ParseError(line_no, "bad dummy-loop phase: '" + toks[3] + "'");
                    }
                } else if (toks.size() != 3) {
                    throw ParseError(line_no, "unexpected arguments after behavior kind");
                }
                if (behaviors.count(v))
                    throw ParseError(line_no, "duplicate behavior for vertex " + std::to_string(v));
                behaviors[v] = b;
            } else if (toks[0] == "hidden") {
                if (toks.size() != 3)
                    throw ParseError(line_no, "#hidden needs exactly two vertex ids");
                Edge e(parse_vertex_id(toks[1], line_no), parse_vertex_id(toks[2], line_no));
                hidden.insert(e);
                hidden_lines.emplace_back(e, line_no);
            } else {
                throw ParseError(line_no, "unknown directive: #" + toks[0]);
            }
            continue;
        }

        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError(line_no, "expected 'id: neighbors...' or a # directive");
        VertexId v = parse_vertex_id(line.substr(0, colon), line_no);
        if (lists.count(v))
            throw ParseError(line_no, "duplicate line for vertex " + std::to_string(v));
        vertex_line[v] = line_no;
        std::vector<VertexId> nbrs;
        std::set<VertexId> seen;
        for (const auto& tok : split_ws(line.substr(colon + 1))) {
            VertexId u = parse_vertex_id(tok, line_no);
            if (!seen.insert(u).second)
                throw ParseError(line_no, "duplicate neighbor entry " + std::to_string(u) +
                                              " for vertex " + std::to_string(v));
            nbrs.push_back(u);
        }
        lists[v] = std::move(nbrs);
    }

    if (lists.empty()) throw ParseError(line_no == 0 ? 1 : line_no, "no vertex lines");

    // Symmetry and edge collection.
    std::vector<Edge> edges;
    for (const auto& [v, nbrs] : lists) {
        for (VertexId u : nbrs) {
            if (!lists.count(u))
                throw ParseError(vertex_line[v], "neighbor " + std::to_string(u) +
                                                     " of vertex " + std::to_string(v) +
                                                     " has no vertex line");
            if (u == v) {
                edges.emplace_back(v, v);
                continue;
            }
            const auto& back = lists.at(u);
            bool reciprocated = false;
            for (VertexId w : back)
                if (w == v) { reciprocated = true; break; }
            if (!reciprocated)
                throw ParseError(vertex_line[v],
                                 "asymmetric entry: " + std::to_string(v) + " lists " +
                                     std::to_string(u) + " but " + std::to_string(u) +
                                     " does not list " + std::to_string(v));
            if (v < u) edges.emplace_back(v, u);
        }
    }

    std::vector<VertexId> vertices;
    vertices.reserve(lists.size());
    for (const auto& [v, _] : lists) vertices.push_back(v);

    for (const auto& [e, ln] : hidden_lines) {
        bool present = false;
        for (const Edge& g : edges)
            if (g == e) { present = true; break; }
        if (!present)
            throw ParseError(ln, "hidden edge " + std::to_string(e.a) + "-" +
                                     std::to_string(e.b) + " is not an edge");
    }
    for (const auto& [v, b] : behaviors)
        if (!lists.count(v))
            throw ParseError(vertex_line.count(v) ? vertex_line[v] : line_no,
                             "behavior for unknown vertex " + std::to_string(v));

    try {
        return Graph(std::move(vertices), std::move(edges), std::move(behaviors),
                     std::move(hidden));
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
}

Graph parse_adjacency_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_adjacency_list(buf.str());
}

std::string write_adjacency_list(const Graph& g) {
    if (g.num_vertices() == 0) throw std::invalid_argument("cannot write an empty graph");
    std::ostringstream out;
    for (VertexId v : g.vertices()) {
        out << v << ":";
        for (VertexId u : g.neighbors(v)) out << ' ' << u;
        out << '\n';
    }
    for (const auto& [v, b] : g.behaviors()) {
        out << "#behavior " << v << ' ' << behavior_name(b.kind);
        if (b.kind == BehaviorKind::DummyLoop) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", b.phi);
            out << ' ' << buf;
        }
        out << '\n';
    }
    for (const Edge& e : g.hidden()) out << "#hidden " << e.a << ' ' << e.b << '\n';
    return out.str();
}

void write_adjacency_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << write_adjacency_list(g);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace qwalk
