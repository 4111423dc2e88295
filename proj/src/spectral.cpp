#include "qwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qwalk {

namespace {

constexpr double kPi = std::numbers::pi;

bool near(double a, double b, double tol = 1e-9) { return std::abs(a - b) < tol; }

}  // namespace

Complex CharPoly::eval(Complex lambda) const {
    Complex acc = 0.0;
    for (const Complex& c : coeffs) acc = acc * lambda + c;
    return acc;
}

double max_coeff_diff(const CharPoly& a, const CharPoly& b) {
    if (a.coeffs.size() != b.coeffs.size())
        throw std::invalid_argument("max_coeff_diff: degree mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        worst = std::max(worst, std::abs(a.coeffs[i] - b.coeffs[i]));
    return worst;
}

CharPoly characteristic_poly(const Eigen::MatrixXcd& m) {
    const Eigen::Index d = m.rows();
    if (d == 0 || m.cols() != d)
        throw std::invalid_argument("characteristic_poly: square matrix required");
    CharPoly p;
    p.coeffs.assign(static_cast<std::size_t>(d) + 1, Complex{0.0});
    p.coeffs[0] = 1.0;
    Eigen::MatrixXcd work = Eigen::MatrixXcd::Zero(d, d);
    Complex c = 1.0;
    for (Eigen::Index k = 1; k <= d; ++k) {
        work.diagonal().array() += c;
        work = (m * work).eval();
        c = -work.trace() / static_cast<double>(k);
        p.coeffs[static_cast<std::size_t>(k)] = c;
    }
    return p;
}

CharPoly scenario_char_poly_closed_form(const ScenarioParams& p) {
    p.validate();
    CharPoly out;
    switch (p.scenario) {
        case Scenario::StarLoop: {
            const double r = 1.0 - 2.0 / p.n;
            out.coeffs = {1.0, 0.0, -r, r, 0.0, -1.0};
            break;
        }
        case Scenario::StarDummyLoops: {
            const double r = 1.0 - 2.0 / p.n;
            const Complex phase = std::polar(1.0, p.phi);
            out.coeffs = {1.0, 0.0, r * phase, -r, 0.0, -phase};
            break;
        }
        case Scenario::StarClique: {
            const double t = 2.0 / p.n;
            const double tc = 2.0 / p.m;
            const double c = 2.0 * (p.m - 1) * t + tc - 2.0;
            out.coeffs = {1.0, tc - 1.0, c, -c, -(tc - 1.0), -1.0};
            break;
        }
        case Scenario::TwoStars: {
            const double r = 1.0 - 2.0 / p.n;
            out.coeffs = {1.0, -2.0 * r, 1.0};
            break;
        }
        case Scenario::BipartiteExtra: {
            const double rt = (p.n2 - 1.0) / (p.n2 + 1.0);
            const double tt = 2.0 / (p.n2 + 1.0);
            const double r2 = (p.n1 - 2.0) / p.n1;
            const double t2 = 2.0 / p.n1;
            const double b = tt * (r2 - t2);
            out.coeffs = {1.0, rt, -b, b, -rt, -1.0};
            break;
        }
        case Scenario::BipartiteDetect:
            throw std::invalid_argument(
                "scenario_char_poly_closed_form: bipartite-detect has no reduced form; "
                "use bipartite-extra");
    }
    return out;
}

CharPoly dummy_loops_limit_poly(double phi) {
    const Complex phase = std::polar(1.0, phi);
    CharPoly out;
    out.coeffs = {1.0, 0.0, phase, -1.0, 0.0, -phase};
    return out;
}

double dummy_loops_limit_root_gap(double phi) {
    const Complex cubic[3] = {Complex{1.0, 0.0}, std::polar(1.0, 2.0 * kPi / 3.0),
                              std::polar(1.0, -2.0 * kPi / 3.0)};
    // lambda^2 = -e^{i phi} -> lambda = +-e^{i(phi+pi)/2}
    const Complex q = std::polar(1.0, (phi + kPi) / 2.0);
    const Complex quad[2] = {q, -q};
    double gap = std::numeric_limits<double>::infinity();
    for (const Complex& a : cubic)
        for (const Complex& b : quad) gap = std::min(gap, std::abs(a - b));
    return gap;
}

Eigensystem eigensystem(const Eigen::MatrixXcd& m) {
    const Eigen::Index d = m.rows();
    if (d == 0 || m.cols() != d)
        throw std::invalid_argument("eigensystem: square matrix required");
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, true);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigensystem: eigensolver failed to converge");

    std::vector<Eigen::Index> order(static_cast<std::size_t>(d));
    for (Eigen::Index i = 0; i < d; ++i) order[static_cast<std::size_t>(i)] = i;
    const auto& vals = solver.eigenvalues();
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return std::arg(vals(a)) < std::arg(vals(b));
    });

    Eigensystem out;
    out.values.resize(d);
    out.vectors.resize(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        const Eigen::Index src = order[static_cast<std::size_t>(i)];
        out.values(i) = vals(src);
        Eigen::VectorXcd v = solver.eigenvectors().col(src);
        v.normalize();
        for (Eigen::Index j = 0; j < d; ++j) {
            if (std::abs(v(j)) > 1e-8) {
                v *= std::polar(1.0, -std::arg(v(j)));
                break;
            }
        }
        out.vectors.col(i) = v;
        const double residual = (m * v - out.values(i) * v).norm();
        if (residual > 1e-10)
            throw std::runtime_error("eigensystem: eigenpair residual " +
                                     std::to_string(residual));
    }
    return out;
}

namespace {

Eigen::VectorXcd make_vec(std::initializer_list<Complex> entries) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (const Complex& e : entries) v(i++) = e;
    return v;
}

}  // namespace

PerturbativePrediction perturbative_prediction(const ScenarioParams& p) {
    p.validate();
    const Complex im{0.0, 1.0};
    PerturbativePrediction out;
    switch (p.scenario) {
        case Scenario::StarLoop: {
            const double t = 2.0 / p.n;
            out.lambda0 = -1.0;
            out.theta = std::sqrt(t / 3.0);
            const double a = 1.0 / std::sqrt(6.0);
            const Complex b = im * std::sqrt(1.5) / std::sqrt(6.0);
            out.eigvec_plus = make_vec({a, -a, a, -b, b});
            out.eigvec_minus = make_vec({a, -a, a, b, -b});
            break;
        }
        case Scenario::StarDummyLoops: {
            const double t = 2.0 / p.n;
            out.theta = std::sqrt(t / 3.0);
            if (near(std::abs(p.phi), kPi)) {
                out.lambda0 = 1.0;
                const Complex c = im * std::sqrt(2.0 / 3.0) / 2.0;
                out.eigvec_plus = make_vec({0.5, -0.5, c, c, c});
                out.eigvec_minus = make_vec({0.5, -0.5, -c, -c, -c});
            } else if (near(p.phi, kPi / 3.0)) {
                out.lambda0 = std::polar(1.0, 2.0 * kPi / 3.0);
            } else if (near(p.phi, -kPi / 3.0)) {
                out.lambda0 = std::polar(1.0, -2.0 * kPi / 3.0);
            } else {
                throw std::invalid_argument(
                    "perturbative_prediction: dummy-loop phase " + std::to_string(p.phi) +
                    " leaves no degenerate eigenvalue pair; the split arises only at "
                    "phase pi or +-pi/3 where the loop phase collides with a cube root "
                    "of unity");
            }
            const Complex dir = std::polar(1.0, p.phi / 2.0);
            out.delta_plus = out.theta * dir;
            out.delta_minus = -out.theta * dir;
            out.lambda_plus = out.lambda0 + out.delta_plus;
            out.lambda_minus = out.lambda0 + out.delta_minus;
            out.theta_approx = out.theta;
            return out;
        }
        case Scenario::StarClique: {
            const double m = p.m;
            out.lambda0 = -1.0;
            out.theta = std::sqrt(2.0 * m * (m - 1.0) / ((2.0 * m - 1.0) * p.n));
            const double scale = std::sqrt((m - 1.0) / (2.0 * (2.0 * m - 1.0)));
            const double inv = 1.0 / std::sqrt(m - 1.0);
            const Complex c = im * std::sqrt((2.0 * m - 1.0) / (2.0 * m - 2.0));
            out.eigvec_plus = scale * make_vec({1.0, 1.0, -inv, -c, c});
            out.eigvec_minus = scale * make_vec({1.0, 1.0, -inv, c, -c});
            break;
        }
        case Scenario::TwoStars: {
            const double t = 2.0 / p.n;
            const double r = 1.0 - t;
            out.lambda0 = 1.0;
            out.theta = std::acos(r);
            out.delta_plus = im * out.theta;
            out.delta_minus = -im * out.theta;
            out.lambda_plus = Complex{r, t * std::sqrt(p.n - 1.0)};
            out.lambda_minus = std::conj(out.lambda_plus);
            const double a = 1.0 / std::sqrt(2.0);
            out.eigvec_plus = make_vec({a, im * a});
            out.eigvec_minus = make_vec({a, -im * a});
            out.theta_approx = 2.0 / std::sqrt(static_cast<double>(p.n));
            return out;
        }
        case Scenario::BipartiteExtra: {
            const double t2 = 2.0 / p.n1;
            out.lambda0 = -1.0;
            out.theta = std::sqrt(2.0 * t2 / (p.n2 + 2.0));
            const double scale = 1.0 / std::sqrt(2.0 * (p.n2 + 2.0));
            const double root = std::sqrt(static_cast<double>(p.n2));
            const Complex c = im * std::sqrt((p.n2 + 2.0) / 2.0);
            out.eigvec_plus = scale * make_vec({-root, 1.0, 1.0, -c, c});
            out.eigvec_minus = scale * make_vec({-root, 1.0, 1.0, c, -c});
            break;
        }
        case Scenario::BipartiteDetect:
            throw std::invalid_argument(
                "perturbative_prediction: bipartite-detect has no reduced form; "
                "use bipartite-extra");
    }
    out.delta_plus = im * out.theta;
    out.delta_minus = -im * out.theta;
    out.lambda_plus = out.lambda0 + out.delta_plus;
    out.lambda_minus = out.lambda0 + out.delta_minus;
    out.theta_approx = out.theta;
    return out;
}

namespace {

double overlap_deficit(const Eigen::VectorXcd& pred, const Eigen::VectorXcd& exact) {
    const Complex ip = pred.normalized().adjoint() * exact;
    return 1.0 - std::norm(ip);
}

}  // namespace

PredictionReport verify_prediction(const Eigen::MatrixXcd& m,
                                   const PerturbativePrediction& pred) {
    const Eigensystem sys = eigensystem(m);
    const Eigen::Index d = sys.values.size();

    auto nearest = [&](Complex target, Eigen::Index exclude) {
        Eigen::Index best = -1;
        double dist = std::numeric_limits<double>::infinity();
        for (Eigen::Index i = 0; i < d; ++i) {
            if (i == exclude) continue;
            const double cand = std::abs(sys.values(i) - target);
            if (cand < dist) {
                dist = cand;
                best = i;
            }
        }
        return std::pair{best, dist};
    };

    const auto [i_plus, d_plus] = nearest(pred.lambda_plus, -1);
    const auto [i_minus, d_minus] = nearest(pred.lambda_minus, i_plus);
    const double bound = pred.theta / 2.0;
    if (d_plus > bound || d_minus > bound)
        throw std::runtime_error(
            "verify_prediction: no exact eigenvalue within theta/2 of the predicted "
            "pair (nearest at distance " + std::to_string(std::max(d_plus, d_minus)) +
            ", theta " + std::to_string(pred.theta) + ")");

    PredictionReport report;
    report.lambda_plus_error = d_plus;
    report.lambda_minus_error = d_minus;
    if (pred.eigvec_plus.size() == d)
        report.overlap_deficit_plus = overlap_deficit(pred.eigvec_plus, sys.vectors.col(i_plus));
    if (pred.eigvec_minus.size() == d)
        report.overlap_deficit_minus =
            overlap_deficit(pred.eigvec_minus, sys.vectors.col(i_minus));
    return report;
}

}  // namespace qwalk
