#pragma once

#include <optional>

#include <Eigen/Dense>

#include "qwalk/collective.hpp"
#include "qwalk/scenario.hpp"

namespace qwalk {

// Monic polynomial, coefficients highest degree first (coeffs[0] == 1).
struct CharPoly {
    std::vector<Complex> coeffs;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    Complex eval(Complex lambda) const;
};

double max_coeff_diff(const CharPoly& a, const CharPoly& b);

// Faddeev-LeVerrier; exact in exact arithmetic, fine at d <= 8.
CharPoly characteristic_poly(const Eigen::MatrixXcd& m);

// det(lambda - U_S) of the scenario's reduced step matrix in closed form
// (two-stars: of the 2x2 U^2 rotation block).
CharPoly scenario_char_poly_closed_form(const ScenarioParams& p);

// Large-N limit of the dummy-loops polynomial: (lambda^3 - 1)(lambda^2 + e^{i phi}).
CharPoly dummy_loops_limit_poly(double phi);
// Distance between the nearest cube-root / quadratic-root pair of that limit;
// zero exactly at the degenerate phases pi and +-pi/3.
double dummy_loops_limit_root_gap(double phi);

struct Eigensystem {
    Eigen::VectorXcd values;    // sorted by principal argument
    Eigen::MatrixXcd vectors;   // columns, unit norm, first big coordinate real positive
};

// Dense eigensolve for the small reduced unitaries. Throws on residuals
// above 1e-10 (not expected at these sizes).
Eigensystem eigensystem(const Eigen::MatrixXcd& m);

// Degenerate-pair prediction: the zeroth-order eigenvalue lambda0 splits into
// lambda_plus/lambda_minus = lambda0 +- (rotation generator). delta_plus and
// delta_minus are +-i*theta; the predicted pair is stored explicitly because
// the two-stars block is exact rather than first-order.
struct PerturbativePrediction {
    Complex lambda0;
    double theta = 0.0;
    Complex delta_plus, delta_minus;
    Complex lambda_plus, lambda_minus;
    Eigen::VectorXcd eigvec_plus, eigvec_minus;  // empty when not predicted
    double theta_approx = 0.0;  // large-N shorthand where one exists, else theta
};

PerturbativePrediction perturbative_prediction(const ScenarioParams& p);

struct PredictionReport {
    double lambda_plus_error = 0.0;
    double lambda_minus_error = 0.0;
    std::optional<double> overlap_deficit_plus;   // 1 - |<v_pred|v_exact>|^2
    std::optional<double> overlap_deficit_minus;
};

// Matches the predicted pair to the nearest exact eigenpairs of m.
// Throws std::runtime_error if no eigenvalue lies within theta/2 of a
// predicted one (no degenerate pair where expected).
PredictionReport verify_prediction(const Eigen::MatrixXcd& m,
                                   const PerturbativePrediction& pred);

}  // namespace qwalk
