#pragma once

// Method of Moving Asymptotes for bound-constrained minimization. With no
// nonlinear constraints the separable subproblem decouples per variable and
// its minimizer has a closed form, so each step is exact to KKT.

#include <cstddef>
#include <vector>

#include "turingflow/errors.hpp"

namespace turingflow {

class MmaOptimizer {
public:
    MmaOptimizer(std::size_t n, double x_min, double x_max, double move_limit = 0.1,
                 double initial_asymptote_offset = 0.5);

    /// One design update in place. `grad` is dF/dx at x.
    void step(std::vector<double>& x, const std::vector<double>& grad);

    int iteration() const { return iter_; }

private:
    std::size_t n_;
    double xmin_, xmax_, move_, s0_;
    std::vector<double> low_, upp_, x_prev_, x_prev2_;
    int iter_ = 0;
};

}  // namespace turingflow
