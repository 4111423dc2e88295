#pragma once

#include <Eigen/SparseCore>

#include "qwalk/state_space.hpp"

namespace qwalk {

// One step of the walk. Column j holds the scattered image of basis state j;
// every column touches only outgoing states of the head vertex of state j.
struct StepOperator {
    Eigen::SparseMatrix<Complex> matrix;

    std::size_t dim() const { return static_cast<std::size_t>(matrix.cols()); }
};

StepOperator build_step_operator(const Graph& g, const StateSpace& space);

// max |(U^dag U - I)_{jk}|
double unitarity_deviation(const StepOperator& u);

StateVector apply_step(const StepOperator& u, const StateVector& s);
StateVector evolve(const StepOperator& u, StateVector s, long long steps);

}  // namespace qwalk
