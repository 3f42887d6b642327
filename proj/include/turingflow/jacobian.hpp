#pragma once

// Exact Jacobian of the discrete flow residuals with respect to the unknown
// state (u, v, p), plus the dof numbering shared by the Newton finisher and
// the discrete adjoint. Unknowns are ordered in vertical slabs along x so
// the coupled matrix stays narrow-banded for the direct solver.

#include <vector>

#include "turingflow/flow.hpp"
#include "turingflow/linalg.hpp"

namespace turingflow {

class FlowDofMap {
public:
    explicit FlowDofMap(const FlowProblem& pb);

    std::size_t n_dofs() const { return n_; }

    long long u_dof(std::size_t k) const { return u_dof_[k]; }
    long long v_dof(std::size_t k) const { return v_dof_[k]; }
    long long p_dof(std::size_t k) const { return p_dof_[k]; }

    /// Pack per-field residual arrays into one dof-ordered vector.
    void gather_residual(const FlowProblem& pb, const std::vector<double>& ru,
                         const std::vector<double>& rv, const std::vector<double>& rc,
                         std::vector<double>& out) const;

    /// u,v,p += scale * delta (dof-ordered).
    void apply_update(const FlowProblem& pb, const std::vector<double>& delta,
                      std::vector<double>& u, std::vector<double>& v, std::vector<double>& p,
                      double scale) const;

private:
    std::vector<long long> u_dof_, v_dof_, p_dof_;
    std::size_t n_ = 0;
};

/// J = dR/d(u,v,p) at the given state, rows and columns in dof order.
/// `frozen_mass_flux` drops the derivative of the convective mass fluxes
/// (the cheaper frozen-velocity approximation for adjoint experiments).
void assemble_jacobian(const FlowProblem& pb, const std::vector<double>& u,
                       const std::vector<double>& v, const std::vector<double>& p,
                       const FlowDofMap& map, TripletMatrix& out,
                       bool frozen_mass_flux = false);

/// Whether the banded direct solve fits a sane memory budget for this grid.
bool newton_feasible(const FlowProblem& pb, const FlowDofMap& map);

}  // namespace turingflow
