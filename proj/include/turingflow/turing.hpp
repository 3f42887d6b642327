#pragma once

// Dehomogenization: an anisotropic two-species reaction-diffusion system
// grows an explicit microchannel wall pattern out of the optimized porous
// media field. Diffusion tensors are aligned with the local flow direction
// and scaled by the local microstructure pitch; a time schedule alternates
// between strongly anisotropic phases (orienting the pattern) and a terminal
// isotropic phase (packing it), after which the activator field is
// binarized against the local target porosity.
//
// Kinetics are clamped-linear:
//   R_u = F(U,V) - d_u U,  F = clamp(a_u U + b_u V + c_u, 0, F_max)
//   R_v = G(U,V) - d_v V,  G = clamp(a_v U + b_v V + c_v, 0, G_max)
// Integration is semi-implicit: diffusion and decay implicit (a CG solve per
// species per step, positivity preserving), clamped production explicit.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "turingflow/field.hpp"
#include "turingflow/flow.hpp"
#include "turingflow/grid.hpp"
#include "turingflow/kernels.hpp"
#include "turingflow/media.hpp"

namespace turingflow {

struct ReactionCoeffs {
    // Linear activator-inhibitor set with the fixed point placed low in the
    // clamp window (F* = 0.35 F_max). The off-center fixed point breaks the
    // up-down symmetry of the saturated pattern, so the minority (solid)
    // phase forms island walls instead of connected stripes; flow can then
    // redistribute laterally between wall segments.
    double a_u = 1.8, b_u = -2.0, c_u = 1.12, d_u = 0.6, f_max = 2.4;
    double a_v = 2.0, b_v = 0.0, c_v = -0.56, d_v = 1.6, g_max = 6.4;

    /// Fixed point of the unclamped linear system.
    std::pair<double, double> fixed_point() const;

    double u_high() const { return f_max / d_u; }
    double v_high() const { return g_max / d_v; }

    /// Basic structural checks: positive decay and clamp bounds, tr(J) < 0,
    /// det(J) > 0, fixed point interior to the clamp window.
    void validate() const;
};

/// R_u, R_v of the clamped kinetics.
std::pair<double, double> reaction(double u, double v, const ReactionCoeffs& c);

struct Dispersion {
    double k_star = 0.0;      // fastest-growing wavenumber [rad/length]
    double lambda_max = 0.0;  // its growth rate [1/time]
    double wavelength = 0.0;  // 2*pi/k_star
    bool turing_unstable = false;
};

/// Growth-rate scan of the linearized system for isotropic diffusivities.
Dispersion dispersion_scan(const ReactionCoeffs& c, double diff_u, double diff_v);

/// w_factor such that the fastest-growing wavelength of the isotropic system
/// with W_u = (w_factor * w)^2 and W_v = ratio * W_u equals the pitch w.
/// Derived from the dispersion relation at unit diffusivity; throws if the
/// coefficient set is not Turing unstable at this ratio.
double calibrate_w_factor(const ReactionCoeffs& c, double diffusion_ratio);

struct Tensor2 {
    double xx = 0.0, xy = 0.0, yy = 0.0;
};

/// D = (L - W) (u x u) + W I with W = (w_factor*w)^2 and L = (l_factor *
/// w_factor * w)^2, so l_factor is the diffusion-length stretch along the
/// flow direction and l_factor = 1 is exactly isotropic.
Tensor2 diffusion_tensor(double ux_hat, double uy_hat, double w, double l_factor,
                         double w_factor);

struct TensorField {
    Field2D<double> xx, xy, yy;
};

struct Phase {
    double duration = 0.0;  // [time units]
    double l_u = 1.0;
    double l_v = 1.0;
};

struct AnisotropySchedule {
    std::vector<Phase> phases;

    void validate() const;
    double total_time() const;

    /// Alternating anisotropic phases followed by an isotropic settling
    /// phase, 1800 time units in total.
    static AnisotropySchedule defaults();
};

/// Dirichlet pinning data: outlet channel template plus solid side walls.
struct DirichletBands {
    Field2D<std::uint8_t> mask;  // 1 = pinned cell
    Field2D<double> u_pin, v_pin;
    int outlet_channels = 0;
    bool pitch_warning = false;  // pitch did not divide the outlet length
};

/// Build the pinned bands: channel pattern of width wc_outlet at pitch
/// wc_outlet + ww along the outlet edge and along an inner line band_depth
/// below it, solid values on the remaining boundary except the inlet span.
DirichletBands enforce_outlet_bc(const Grid& rd_grid, const BoundarySpec& bc,
                                 double wc_outlet, const MediaParams& media,
                                 const ReactionCoeffs& coeffs, double band_depth = 3e-3);

struct TuringState {
    Field2D<double> U, V;
    double t = 0.0;
};

/// Semi-implicit stepper on a fixed grid. Tensors (and the derived implicit
/// stencils) are rebuilt via set_tensors, typically once per schedule phase.
class RdModel {
public:
    RdModel(const Grid& grid, const ReactionCoeffs& coeffs, double dt);

    /// Largest dt for which the uniform mode of the IMEX splitting is
    /// non-amplifying (explicit production vs implicit decay). Diffusion is
    /// implicit and only damps, so this is the integrator's stability bound.
    double max_stable_dt() const;

    void set_dirichlet(const DirichletBands* pins);  // may be null; not owned
    void set_tensors(const TensorField& du, const TensorField& dv);
    void set_state(const Field2D<double>& u, const Field2D<double>& v, double t);
    void set_cg_tol(double tol) { cg_tol_ = tol; }

    void step();

    const Field2D<double>& U() const { return u_; }
    const Field2D<double>& V() const { return v_; }
    double time() const { return t_; }

    /// Cells floored to zero over the run (cross-term undershoot guard).
    std::size_t floor_clamp_count() const { return floor_clamps_; }

private:
    void build_system(const TensorField& d, double decay, kernels::Stencil9& s,
                      std::vector<double>& fix, std::vector<double>& diag,
                      const Field2D<double>& pin_values) const;
    void solve_species(const kernels::Stencil9& s, const std::vector<double>& fix,
                       const std::vector<double>& diag, Field2D<double>& x,
                       const std::vector<double>& production);

    Grid grid_;
    ReactionCoeffs coeffs_;
    double dt_;
    double t_ = 0.0;
    Field2D<double> u_, v_;
    const DirichletBands* pins_ = nullptr;
    kernels::Stencil9 su_, sv_;
    std::vector<double> fix_u_, fix_v_, diag_u_, diag_v_;
    std::vector<double> rhs_, prod_;
    double cg_tol_ = 1e-6;
    std::size_t floor_clamps_ = 0;
    bool tensors_set_ = false;
};

struct RunScheduleOptions {
    double dt = 0.1;
    std::uint64_t seed = 1;
    double diffusion_ratio = 14.0;
    double perturbation = 0.01;       // relative, +-1 percent of the fixed point
    double stagnation_fraction = 1e-3;  // |u| below this x reference -> isotropic
    double reference_speed = 0.0;       // 0: use the max design-grid speed
    double snapshot_every = 0.0;        // simulated time units; 0 disables
    double cg_tol = 1e-6;               // per-step implicit solve tolerance
};

using SnapshotFn = std::function<void(const TuringState&)>;

/// Integrate the full anisotropy schedule over the optimized design.
/// gamma_star lives on design_grid; everything is interpolated to rd_grid.
TuringState run_schedule(const Grid& design_grid, const DesignField& gamma_star,
                         const FlowSolution& flow, const AnisotropySchedule& schedule,
                         const ReactionCoeffs& coeffs, const Grid& rd_grid,
                         const DirichletBands* pins, const RunScheduleOptions& opt,
                         const SnapshotFn& snapshot = nullptr);

/// Same, from cell-centered design-grid velocity fields (stage restarts
/// reload these from disk).
TuringState run_schedule_fields(const Grid& design_grid, const DesignField& gamma_star,
                                const Field2D<double>& u_center,
                                const Field2D<double>& v_center,
                                const AnisotropySchedule& schedule, const ReactionCoeffs& coeffs,
                                const Grid& rd_grid, const DirichletBands* pins,
                                const RunScheduleOptions& opt,
                                const SnapshotFn& snapshot = nullptr);

/// Fluid/solid raster with provenance.
struct BinaryPattern {
    Field2D<std::uint8_t> fluid;  // 1 = fluid, 0 = solid
    std::uint64_t seed = 0;
    std::string source_hash;  // FNV-1a of the gamma* raster
};

/// Threshold U so the local fluid fraction matches the local target
/// porosity; thresholds are windowed quantiles blended across tiles.
BinaryPattern binarize(const Field2D<double>& u, const Field2D<double>& porosity,
                       double pitch_cells);

/// FNV-1a hash of a double field (provenance records).
std::string field_hash(const Field2D<double>& f);

}  // namespace turingflow
