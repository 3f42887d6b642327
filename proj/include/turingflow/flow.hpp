#pragma once

// Steady incompressible Navier-Stokes with the Brinkman/Darcy friction term
// -eta*alpha*u on a staggered (MAC) finite-volume grid.
//
// Velocity components live on faces (u on vertical faces, v on horizontal
// faces), pressure at cell centers. Convection is discretized centrally with
// an optional upwind blend; the SIMPLE iteration carries the central part as
// a deferred correction so the converged state satisfies the blended scheme
// exactly. The same discrete residual definition backs the solver's
// convergence check, the Newton finisher, and the adjoint Jacobian.

#include <vector>

#include "turingflow/field.hpp"
#include "turingflow/grid.hpp"

namespace turingflow {

struct FluidProps {
    double rho = 1.204;   // [kg/m^3], air at 20 C
    double eta = 1.81e-5;  // [Pa s]

    void validate() const {
        if (!(rho > 0.0) || !(eta > 0.0)) {
            throw InvalidArgument("fluid properties must be positive");
        }
    }
};

struct FlowOptions {
    double tol = 1e-6;            // normalized momentum + continuity residual target
    int max_outer = 6000;
    double relax_u = 0.7;
    double relax_p = 0.3;
    int momentum_sweeps = 4;
    double pressure_rel_tol = 5e-2;  // per pressure-correction solve
    bool stokes = false;             // drop the convective term entirely
    double convection_blend = 1.0;   // 1 = central, 0 = first-order upwind
    bool allow_newton = true;        // coupled Newton finish on small grids
    double newton_switch = 1e-3;
    int max_newton = 20;
};

/// How each velocity face is treated.
enum class FaceBcKind : std::uint8_t {
    interior,   // solved, full control volume
    fixed,      // Dirichlet value (wall or inlet)
    outlet,     // solved, half control volume against a zero-pressure face
};

/// Immutable description of one flow solve: grid, boundary treatment,
/// inverse-permeability field, fluid, and solver options.
class FlowProblem {
public:
    FlowProblem(const Grid& grid, const BoundaryTags& tags, double inlet_velocity,
                std::vector<double> alpha, FluidProps fluid, FlowOptions options = {});

    const Grid& grid() const { return grid_; }
    const BoundaryTags& tags() const { return tags_; }
    const FluidProps& fluid() const { return fluid_; }
    const FlowOptions& options() const { return options_; }
    const std::vector<double>& alpha() const { return alpha_; }
    double inlet_velocity() const { return inlet_velocity_; }

    int nx() const { return grid_.nx; }
    int ny() const { return grid_.ny; }
    std::size_t n_u() const { return static_cast<std::size_t>(nx() + 1) * ny(); }
    std::size_t n_v() const { return static_cast<std::size_t>(nx()) * (ny() + 1); }
    std::size_t n_p() const { return static_cast<std::size_t>(nx()) * ny(); }

    std::size_t ui(int i, int j) const { return static_cast<std::size_t>(j) * (nx() + 1) + i; }
    std::size_t vi(int i, int j) const { return static_cast<std::size_t>(j) * nx() + i; }
    std::size_t pi(int i, int j) const { return static_cast<std::size_t>(j) * nx() + i; }

    FaceBcKind u_kind(int i, int j) const { return u_kind_[ui(i, j)]; }
    FaceBcKind v_kind(int i, int j) const { return v_kind_[vi(i, j)]; }
    double u_bc(int i, int j) const { return u_val_[ui(i, j)]; }
    double v_bc(int i, int j) const { return v_val_[vi(i, j)]; }

    /// Tangential boundary treatment: true if the named boundary strip next
    /// to this face is an outlet (zero tangential gradient), false for the
    /// no-slip treatment.
    bool u_top_zero_grad(int i) const { return u_top_zg_[i]; }
    bool u_bottom_zero_grad(int i) const { return u_bot_zg_[i]; }
    bool v_left_zero_grad(int j) const { return v_left_zg_[j]; }
    bool v_right_zero_grad(int j) const { return v_right_zg_[j]; }

    double alpha_at_u(int i, int j) const { return alpha_u_[ui(i, j)]; }
    double alpha_at_v(int i, int j) const { return alpha_v_[vi(i, j)]; }

    /// Prescribed inlet mass flow (per unit depth) [kg/(s m)].
    double inlet_mass_flow() const { return inlet_mass_flow_; }

    /// Initial state with Dirichlet faces set and everything else zero.
    void initial_state(std::vector<double>& u, std::vector<double>& v,
                       std::vector<double>& p) const;

private:
    Grid grid_;
    BoundaryTags tags_;
    double inlet_velocity_;
    std::vector<double> alpha_;
    FluidProps fluid_;
    FlowOptions options_;

    std::vector<FaceBcKind> u_kind_, v_kind_;
    std::vector<double> u_val_, v_val_;
    std::vector<double> alpha_u_, alpha_v_;
    std::vector<std::uint8_t> u_top_zg_, u_bot_zg_, v_left_zg_, v_right_zg_;
    double inlet_mass_flow_ = 0.0;
};

struct FlowSolution {
    int nx = 0, ny = 0;
    double dx = 0.0, dy = 0.0;
    std::vector<double> u, v, p;
    std::vector<double> residual_history;
    int iterations = 0;
    bool converged = false;
    double momentum_residual = 0.0;
    double continuity_residual = 0.0;
    double mass_in = 0.0, mass_out = 0.0;

    double u_at(int i, int j) const { return u[static_cast<std::size_t>(j) * (nx + 1) + i]; }
    double v_at(int i, int j) const { return v[static_cast<std::size_t>(j) * nx + i]; }
    double p_at(int i, int j) const { return p[static_cast<std::size_t>(j) * nx + i]; }

    /// Cell-centered velocity components.
    Field2D<double> u_center() const;
    Field2D<double> v_center() const;
};

/// Solve the flow problem with SIMPLE (+ optional coupled Newton finish).
/// Throws ConvergenceFailure with the residual history when the outer
/// iteration stalls above tolerance. A previous solution on the same grid
/// may be passed as a warm start.
FlowSolution solve_flow(const FlowProblem& problem, const FlowSolution* warm_start = nullptr);

FlowSolution solve_flow(const Grid& grid, const BoundaryTags& tags, const BoundarySpec& spec,
                        const std::vector<double>& alpha, const FluidProps& fluid,
                        double tol);

/// Discrete residuals of the blended scheme at the given state. Arrays are
/// full-size; entries of fixed faces are zero. Rc is the cell mass imbalance
/// [kg/(s m)].
void compute_residuals(const FlowProblem& problem, const std::vector<double>& u,
                       const std::vector<double>& v, const std::vector<double>& p,
                       std::vector<double>& ru, std::vector<double>& rv,
                       std::vector<double>& rc);

/// Power dissipation objective (per unit depth, [W/m]); midpoint quadrature
/// of the strain and Darcy terms.
double dissipation(const FlowSolution& sol, const FlowProblem& problem);

struct OutletProfile {
    std::vector<double> position;  // arc position along the outlet edge [m]
    std::vector<double> normal_velocity;  // outward-positive [m/s]
    std::vector<double> face_length;      // [m]
};

/// Outward normal velocity sampled on every outlet face, ordered by position.
OutletProfile outlet_profile(const FlowSolution& sol, const FlowProblem& problem);

}  // namespace turingflow
