#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/errors.hpp"
#include "qwalk/initial_state.hpp"
#include "qwalk/step_operator.hpp"

namespace qwalk {

// Orthonormal collective states spanning the walk's invariant subspace.
// Columns of `vectors` live in the full directed-edge space.
struct CollectiveBasis {
    Eigen::MatrixXcd vectors;
    std::vector<std::string> labels;

    std::size_t dim() const { return static_cast<std::size_t>(vectors.rows()); }
    std::size_t size() const { return static_cast<std::size_t>(vectors.cols()); }
};

struct ReducedOperator {
    Eigen::MatrixXcd matrix;
    std::vector<std::string> labels;

    std::size_t size() const { return static_cast<std::size_t>(matrix.rows()); }
};

struct Projection {
    Eigen::VectorXcd coords;
    double residual = 0.0;  // norm of the component outside the span
};

// The scenario's reduction basis (two-stars: the psi basis; see the w variants below).
// Throws ScenarioMismatchError if the graph lacks the scenario's states.
CollectiveBasis collective_basis(const Graph& g, const StateSpace& space,
                                 const ScenarioParams& p);

// Two-stars only: the 4-dim antisymmetric combination basis actually searched.
CollectiveBasis two_stars_w_basis(const Graph& g, const StateSpace& space,
                                  const ScenarioParams& p);

// max over basis columns f of || (1 - P_S) U f ||
double verify_invariance(const StepOperator& u, const CollectiveBasis& basis);

// B^dag U B. Refuses (std::runtime_error carrying the residual) if the basis
// is not invariant within tol.
ReducedOperator reduce_operator(const StepOperator& u, const CollectiveBasis& basis,
                                double tol = 1e-10);

// Scenario reduced step matrix in closed form (two-stars: the 4-dim w step).
ReducedOperator reduced_matrix_closed_form(const ScenarioParams& p);

// Two-stars extras: the 8-dim psi-basis step and the two 2x2 blocks of U^2
// on (w1,w2) and (w3,w4).
ReducedOperator two_stars_psi_closed_form(int n);
std::pair<Eigen::Matrix2cd, Eigen::Matrix2cd> two_stars_u2_blocks(int n);

Projection project_initial(const StateVector& s, const CollectiveBasis& basis);

}  // namespace qwalk
