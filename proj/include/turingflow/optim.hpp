#pragma once

// Design optimization of the gamma field: composite objective (normalized
// power dissipation + outlet-velocity uniformity), discrete-adjoint
// sensitivities, MMA updates, and the per-outlet mass-flow constraint
// evaluator.

#include <optional>
#include <vector>

#include "turingflow/flow.hpp"
#include "turingflow/media.hpp"

namespace turingflow {

struct ObjectiveWeights {
    double w_dissipation = 0.5;
    double w_uniformity = 0.5;
    // Raw term values at iteration 0; both must be set before total_objective.
    double f_o_ref = 0.0;
    double f_u_ref = 0.0;

    void validate() const {
        if (w_dissipation < 0.0 || w_uniformity < 0.0 ||
            (w_dissipation == 0.0 && w_uniformity == 0.0)) {
            throw InvalidArgument("objective weights must be non-negative and not both zero");
        }
    }
    bool normalized() const { return f_o_ref > 0.0 && f_u_ref > 0.0; }
};

/// Normalized variance of the outlet normal-velocity profile:
/// integral (u_n - mean)^2 ds / (mean^2 * L). Zero iff uniform; invariant
/// under scaling of the profile.
double outlet_uniformity(const OutletProfile& profile);

/// F = w_d * f_o/f_o0 + w_u * f_u/f_u0.
double total_objective(double f_o, double f_u, const ObjectiveWeights& w);

struct MassFlowConstraint {
    std::vector<double> targets;  // [kg/(s m)] per outlet
    double delta = 0.06;
};

/// Per-outlet values (mdot_k/target_k - 1)^2 - delta^2; <= 0 means satisfied.
std::vector<double> mass_flow_violation(const std::vector<double>& mdot,
                                        const MassFlowConstraint& c);

/// dF/dgamma via the discrete adjoint of the converged flow state. The
/// weights must already carry the iteration-0 normalization.
Field2D<double> sensitivities(const FlowProblem& pb, const FlowSolution& sol,
                              const DesignField& design, const ObjectiveWeights& w);

/// Central finite-difference gradient of the same objective, for oracle
/// checks on coarse grids. Only the listed cells are evaluated (two flow
/// solves each); other entries are zero.
Field2D<double> fd_gradient(const Grid& grid, const BoundaryTags& tags, double inlet_velocity,
                            const DesignField& design, const FluidProps& fluid,
                            const ObjectiveWeights& w, const FlowOptions& fopt,
                            const std::vector<std::pair<int, int>>& cells, double step);

struct OptimOptions {
    int max_iters = 100;
    double move_limit = 0.1;
    double stagnation_tol = 1e-5;
    int stagnation_window = 5;
    double gamma0 = 0.5;
    FlowOptions flow;
    double w_dissipation = 0.5;
    double w_uniformity = 0.5;
};

struct OptimHistoryRow {
    int iteration = 0;
    double f_o = 0.0;      // raw dissipation [W/m]
    double f_u = 0.0;      // raw uniformity [-]
    double objective = 0.0;
    double max_dgamma = 0.0;
};

struct OptimResult {
    Field2D<double> gamma;  // best iterate
    std::vector<OptimHistoryRow> history;
    ObjectiveWeights weights;  // with normalization constants filled in
    double best_objective = 0.0;
    int best_iteration = 0;
};

/// Full optimization loop: flow solve, adjoint, MMA update, stagnation stop.
OptimResult optimize(const Grid& grid, const BoundaryTags& tags, double inlet_velocity,
                     const MediaParams& media, const FluidProps& fluid,
                     const OptimOptions& opt);

}  // namespace turingflow
