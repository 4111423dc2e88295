#include "qwalk/step_operator.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace qwalk {

StepOperator build_step_operator(const Graph& g, const StateSpace& space) {
    const auto n = static_cast<Eigen::Index>(space.dim());
    std::vector<Eigen::Triplet<Complex>> trips;
    std::size_t nnz = 0;
    for (VertexId v : g.vertices()) {
        std::size_t p = g.port_count(v);
        nnz += g.behavior(v).kind == BehaviorKind::GroverScatter ? p * p : p;
    }
    trips.reserve(nnz);

    for (VertexId v : g.vertices()) {
        const auto ports = g.neighbors(v);  // loop port appears as v itself
        const VertexBehavior b = g.behavior(v);
        switch (b.kind) {
            case BehaviorKind::GroverScatter: {
                const auto n_ports = static_cast<double>(ports.size());
                const double t = 2.0 / n_ports;
                for (VertexId in : ports) {
                    const auto col = static_cast<Eigen::Index>(space.index(in, v));
                    for (VertexId out : ports) {
                        const double amp = out == in ? t - 1.0 : t;
                        trips.emplace_back(static_cast<Eigen::Index>(space.index(v, out)),
                                           col, Complex(amp, 0.0));
                    }
                }
                break;
            }
            case BehaviorKind::Transmissive: {
                const VertexId a = ports[0], c = ports[1];
                trips.emplace_back(static_cast<Eigen::Index>(space.index(v, c)),
                                   static_cast<Eigen::Index>(space.index(a, v)),
                                   Complex(1.0, 0.0));
                trips.emplace_back(static_cast<Eigen::Index>(space.index(v, a)),
                                   static_cast<Eigen::Index>(space.index(c, v)),
                                   Complex(1.0, 0.0));
                break;
            }
            case BehaviorKind::LoopRelay: {
                const VertexId spoke = ports[0] == v ? ports[1] : ports[0];
                trips.emplace_back(static_cast<Eigen::Index>(space.index(v, v)),
                                   static_cast<Eigen::Index>(space.index(spoke, v)),
                                   Complex(1.0, 0.0));
                trips.emplace_back(static_cast<Eigen::Index>(space.index(v, spoke)),
                                   static_cast<Eigen::Index>(space.index(v, v)),
                                   Complex(1.0, 0.0));
                break;
            }
            case BehaviorKind::DummyLoop: {
                const VertexId spoke = ports[0] == v ? ports[1] : ports[0];
                trips.emplace_back(static_cast<Eigen::Index>(space.index(v, spoke)),
                                   static_cast<Eigen::Index>(space.index(spoke, v)),
                                   std::polar(1.0, b.phi));
                trips.emplace_back(static_cast<Eigen::Index>(space.index(v, v)),
                                   static_cast<Eigen::Index>(space.index(v, v)),
                                   Complex(1.0, 0.0));
                break;
            }
        }
    }

    StepOperator u;
    u.matrix.resize(n, n);
    u.matrix.setFromTriplets(trips.begin(), trips.end());
    u.matrix.makeCompressed();
    return u;
}

double unitarity_deviation(const StepOperator& u) {
    const Eigen::SparseMatrix<Complex> prod =
        Eigen::SparseMatrix<Complex>(u.matrix.adjoint()) * u.matrix;
    double dev = 0.0;
    for (Eigen::Index col = 0; col < prod.outerSize(); ++col) {
        bool diag_seen = false;
        for (Eigen::SparseMatrix<Complex>::InnerIterator it(prod, col); it; ++it) {
            const double expected = it.row() == col ? 1.0 : 0.0;
            if (it.row() == col) diag_seen = true;
            dev = std::max(dev, std::abs(it.value() - expected));
        }
        if (!diag_seen) dev = std::max(dev, 1.0);
    }
    return dev;
}

StateVector apply_step(const StepOperator& u, const StateVector& s) {
    if (s.size() != u.matrix.cols())
        throw std::invalid_argument("state dimension does not match operator");
    return u.matrix * s;
}

StateVector evolve(const StepOperator& u, StateVector s, long long steps) {
    if (steps < 0) throw std::invalid_argument("step count must be non-negative");
    if (s.size() != u.matrix.cols())
        throw std::invalid_argument("state dimension does not match operator");
    for (long long i = 0; i < steps; ++i) s = u.matrix * s;
    return s;
}

}  // namespace qwalk
