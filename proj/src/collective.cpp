#include "qwalk/collective.hpp"

#include <cmath>
#include <complex>

namespace qwalk {

namespace {

using Term = std::pair<DirectedEdgeState, double>;

Eigen::VectorXcd basis_column(const StateSpace& space, const std::vector<Term>& terms,
                              const std::string& label) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(space.dim()));
    double norm2 = 0.0;
    for (const auto& [st, amp] : terms) {
        if (!space.contains(st.tail, st.head))
            throw ScenarioMismatchError("graph lacks state |" + std::to_string(st.tail) +
                                        "," + std::to_string(st.head) +
                                        "> required by collective state " + label);
        v[static_cast<Eigen::Index>(space.index(st.tail, st.head))] = amp;
        norm2 += amp * amp;
    }
    return v / std::sqrt(norm2);
}

CollectiveBasis from_terms(const StateSpace& space,
                           const std::vector<std::pair<std::string, std::vector<Term>>>& defs) {
    CollectiveBasis b;
    b.vectors.resize(static_cast<Eigen::Index>(space.dim()),
                     static_cast<Eigen::Index>(defs.size()));
    for (std::size_t i = 0; i < defs.size(); ++i) {
        b.labels.push_back(defs[i].first);
        b.vectors.col(static_cast<Eigen::Index>(i)) =
            basis_column(space, defs[i].second, defs[i].first);
    }
    return b;
}

DirectedEdgeState st(VertexId tail, VertexId head) { return {tail, head}; }

}  // namespace

CollectiveBasis collective_basis([[maybe_unused]] const Graph& g, const StateSpace& space,
                                 const ScenarioParams& p) {
    p.validate();
    std::vector<std::pair<std::string, std::vector<Term>>> defs;
    switch (p.scenario) {
        case Scenario::StarLoop: {
            const int n = p.n;
            std::vector<Term> psi1, psi2;
            for (int j = 2; j <= n; ++j) {
                psi1.push_back({st(0, static_cast<VertexId>(j)), 1.0});
                psi2.push_back({st(static_cast<VertexId>(j), 0), 1.0});
            }
            defs = {{"|0,1>", {{st(0, 1), 1.0}}},
                    {"|l1>", {{st(1, 1), 1.0}}},
                    {"|1,0>", {{st(1, 0), 1.0}}},
                    {"psi1", psi1},
                    {"psi2", psi2}};
            break;
        }
        case Scenario::StarDummyLoops: {
            const int n = p.n;
            std::vector<Term> psiL, psi1, psi2;
            for (int j = 2; j <= n; ++j) {
                const auto v = static_cast<VertexId>(j);
                psiL.push_back({st(v, v), 1.0});
                psi1.push_back({st(0, v), 1.0});
                psi2.push_back({st(v, 0), 1.0});
            }
            defs = {{"|0,1>", {{st(0, 1), 1.0}}},
                    {"|1,0>", {{st(1, 0), 1.0}}},
                    {"psiL", psiL},
                    {"psi1", psi1},
                    {"psi2", psi2}};
            break;
        }
        case Scenario::StarClique: {
            const int n = p.n, m = p.m;
            std::vector<Term> psi1, psi2, psi3, psi4, psi5;
            for (int j = 1; j <= m; ++j) {
                const auto v = static_cast<VertexId>(j);
                psi1.push_back({st(0, v), 1.0});
                psi2.push_back({st(v, 0), 1.0});
                for (int k = 1; k <= m; ++k)
                    if (k != j) psi3.push_back({st(v, static_cast<VertexId>(k)), 1.0});
            }
            for (int j = m + 1; j <= n; ++j) {
                const auto v = static_cast<VertexId>(j);
                psi4.push_back({st(0, v), 1.0});
                psi5.push_back({st(v, 0), 1.0});
            }
            defs = {{"psi1", psi1}, {"psi2", psi2}, {"psi3", psi3},
                    {"psi4", psi4}, {"psi5", psi5}};
            break;
        }
        case Scenario::TwoStars: {
            const int n = p.n;
            const auto b = static_cast<VertexId>(2 * n);
            std::vector<Term> psi5, psi6, psi7, psi8;
            for (int j = 2; j <= n; ++j) {
                const auto v = static_cast<VertexId>(j);
                psi5.push_back({st(0, v), 1.0});
                psi6.push_back({st(v, 0), 1.0});
            }
            for (int j = n + 1; j <= 2 * n - 1; ++j) {
                const auto v = static_cast<VertexId>(j);
                psi7.push_back({st(b, v), 1.0});
                psi8.push_back({st(v, b), 1.0});
            }
            defs = {{"psi1", {{st(0, 1), 1.0}}},
                    {"psi2", {{st(1, 0), 1.0}}},
                    {"psi3", {{st(b, 1), 1.0}}},
                    {"psi4", {{st(1, b), 1.0}}},
                    {"psi5", psi5},
                    {"psi6", psi6},
                    {"psi7", psi7},
                    {"psi8", psi8}};
            break;
        }
        case Scenario::BipartiteExtra:
        case Scenario::BipartiteDetect: {
            const int n1 = p.n1, n2 = p.n2;
            std::vector<Term> psi2, psi3, psi4, psi5;
            for (int j = n1 + 1; j <= n1 + n2; ++j) {
                const auto v = static_cast<VertexId>(j);
                psi2.push_back({st(v, 1), 1.0});
                psi2.push_back({st(v, 2), 1.0});
                psi3.push_back({st(1, v), 1.0});
                psi3.push_back({st(2, v), 1.0});
                for (int k = 3; k <= n1; ++k) {
                    psi4.push_back({st(v, static_cast<VertexId>(k)), 1.0});
                    psi5.push_back({st(static_cast<VertexId>(k), v), 1.0});
                }
            }
            defs = {{"psi1", {{st(1, 2), 1.0}, {st(2, 1), 1.0}}},
                    {"psi2", psi2},
                    {"psi3", psi3},
                    {"psi4", psi4},
                    {"psi5", psi5}};
            break;
        }
    }
    return from_terms(space, defs);
}

CollectiveBasis two_stars_w_basis([[maybe_unused]] const Graph& g, const StateSpace& space,
                                  const ScenarioParams& p) {
    if (p.scenario != Scenario::TwoStars)
        throw std::invalid_argument("w basis exists for the two-stars scenario only");
    p.validate();
    const int n = p.n;
    const auto b = static_cast<VertexId>(2 * n);
    std::vector<Term> w1 = {{st(0, 1), 1.0}, {st(b, 1), -1.0}};
    std::vector<Term> w3 = {{st(1, 0), 1.0}, {st(1, b), -1.0}};
    std::vector<Term> w2, w4;
    for (int j = 2; j <= n; ++j) {
        const auto v = static_cast<VertexId>(j);
        w2.push_back({st(0, v), 1.0});
        w4.push_back({st(v, 0), 1.0});
    }
    for (int j = n + 1; j <= 2 * n - 1; ++j) {
        const auto v = static_cast<VertexId>(j);
        w2.push_back({st(b, v), -1.0});
        w4.push_back({st(v, b), -1.0});
    }
    return from_terms(space, {{"w1", w1}, {"w2", w2}, {"w3", w3}, {"w4", w4}});
}

double verify_invariance(const StepOperator& u, const CollectiveBasis& basis) {
    if (basis.dim() != u.dim())
        throw std::invalid_argument("basis dimension does not match operator");
    const Eigen::MatrixXcd image = u.matrix * basis.vectors;
    const Eigen::MatrixXcd outside =
        image - basis.vectors * (basis.vectors.adjoint() * image);
    double residual = 0.0;
    for (Eigen::Index c = 0; c < outside.cols(); ++c)
        residual = std::max(residual, outside.col(c).norm());
    return residual;
}

ReducedOperator reduce_operator(const StepOperator& u, const CollectiveBasis& basis,
                                double tol) {
    const double residual = verify_invariance(u, basis);
    if (!(residual <= tol))
        throw std::runtime_error("basis is not invariant: residual " +
                                 std::to_string(residual) + " exceeds tolerance " +
                                 std::to_string(tol));
    ReducedOperator r;
    r.matrix = basis.vectors.adjoint() * (u.matrix * basis.vectors);
    r.labels = basis.labels;
    return r;
}

namespace {

ReducedOperator star_loop_closed_form(int n) {
    const double t = 2.0 / n, r = 1.0 - t, s = std::sqrt(n - 1.0);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(5, 5);
    m(0, 2) = -r;
    m(0, 4) = t * s;
    m(1, 0) = 1.0;
    m(2, 1) = 1.0;
    m(3, 2) = t * s;
    m(3, 4) = r;
    m(4, 3) = 1.0;
    return {m, {"|0,1>", "|l1>", "|1,0>", "psi1", "psi2"}};
}

ReducedOperator star_dummy_closed_form(int n, double phi) {
    const double t = 2.0 / n, r = 1.0 - t, s = std::sqrt(n - 1.0);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(5, 5);
    m(1, 0) = std::polar(1.0, phi);
    m(0, 1) = -r;
    m(3, 1) = t * s;
    m(4, 2) = 1.0;
    m(2, 3) = 1.0;
    m(0, 4) = t * s;
    m(3, 4) = r;
    return {m, {"|0,1>", "|1,0>", "psiL", "psi1", "psi2"}};
}

ReducedOperator star_clique_closed_form(int n, int m_cl) {
    const double t = 2.0 / n;
    const double tt = 2.0 / m_cl, rt = 1.0 - tt;
    const double m = m_cl;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(5, 5);
    u(0, 1) = t * m - 1.0;
    u(0, 4) = t * std::sqrt(m * (n - m));
    u(1, 0) = -rt;
    u(1, 2) = tt * std::sqrt(m - 1.0);
    u(2, 0) = tt * std::sqrt(m - 1.0);
    u(2, 2) = rt;
    u(3, 1) = t * std::sqrt(m * (n - m));
    u(3, 4) = 1.0 - t * m;
    u(4, 3) = 1.0;
    return {u, {"psi1", "psi2", "psi3", "psi4", "psi5"}};
}

ReducedOperator two_stars_w_closed_form(int n) {
    const double t = 2.0 / n, r = 1.0 - t, s = std::sqrt(n - 1.0);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
    m(2, 0) = -1.0;  // U w1 = -w3
    m(3, 1) = 1.0;   // U w2 =  w4
    m(0, 2) = -r;    // U w3 = -r w1 + t sqrt(N-1) w2
    m(1, 2) = t * s;
    m(0, 3) = t * s;  // U w4 = t sqrt(N-1) w1 + r w2
    m(1, 3) = r;
    return {m, {"w1", "w2", "w3", "w4"}};
}

ReducedOperator bipartite_closed_form(int n1, int n2) {
    const double tt = 2.0 / (n2 + 1.0), rt = 1.0 - tt;
    const double t2 = 2.0 / n1, r2 = 1.0 - t2;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(5, 5);
    m(0, 0) = -rt;
    m(0, 1) = tt * std::sqrt(static_cast<double>(n2));
    m(2, 0) = tt * std::sqrt(static_cast<double>(n2));
    m(2, 1) = rt;
    m(1, 2) = -(r2 - t2);
    m(1, 4) = 2.0 * std::sqrt(t2 * r2);
    m(3, 2) = 2.0 * std::sqrt(t2 * r2);
    m(3, 4) = r2 - t2;
    m(4, 3) = 1.0;
    return {m, {"psi1", "psi2", "psi3", "psi4", "psi5"}};
}

}  // namespace

ReducedOperator reduced_matrix_closed_form(const ScenarioParams& p) {
    p.validate();
    switch (p.scenario) {
        case Scenario::StarLoop: return star_loop_closed_form(p.n);
        case Scenario::StarDummyLoops: return star_dummy_closed_form(p.n, p.phi);
        case Scenario::StarClique: return star_clique_closed_form(p.n, p.m);
        case Scenario::TwoStars: return two_stars_w_closed_form(p.n);
        case Scenario::BipartiteExtra:
        case Scenario::BipartiteDetect: return bipartite_closed_form(p.n1, p.n2);
    }
    throw std::logic_error("unreachable scenario");
}

ReducedOperator two_stars_psi_closed_form(int n) {
    const double t = 2.0 / n, r = 1.0 - t, s = std::sqrt(n - 1.0);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(8, 8);
    m(3, 0) = 1.0;   // U psi1 = psi4
    m(0, 1) = -r;    // U psi2 = -r psi1 + t sqrt(N-1) psi5
    m(4, 1) = t * s;
    m(1, 2) = 1.0;   // U psi3 = psi2
    m(2, 3) = -r;    // U psi4 = -r psi3 + t sqrt(N-1) psi7
    m(6, 3) = t * s;
    m(5, 4) = 1.0;   // U psi5 = psi6
    m(0, 5) = t * s; // U psi6 = r psi5 + t sqrt(N-1) psi1
    m(4, 5) = r;
    m(7, 6) = 1.0;   // U psi7 = psi8
    m(2, 7) = t * s; // U psi8 = r psi7 + t sqrt(N-1) psi3
    m(6, 7) = r;
    return {m, {"psi1", "psi2", "psi3", "psi4", "psi5", "psi6", "psi7", "psi8"}};
}

std::pair<Eigen::Matrix2cd, Eigen::Matrix2cd> two_stars_u2_blocks(int n) {
    const double t = 2.0 / n, r = 1.0 - t, s = std::sqrt(n - 1.0);
    Eigen::Matrix2cd b1, b2;
    b1 << r, t * s, -t * s, r;
    b2 << r, -t * s, t * s, r;
    return {b1, b2};
}

Projection project_initial(const StateVector& s, const CollectiveBasis& basis) {
    if (s.size() != static_cast<Eigen::Index>(basis.dim()))
        throw std::invalid_argument("state dimension does not match basis");
    Projection p;
    p.coords = basis.vectors.adjoint() * s;
    p.residual = (s - basis.vectors * p.coords).norm();
    return p;
}

}  // namespace qwalk
