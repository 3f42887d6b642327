#pragma once

// Porous-media parameterization: maps the per-cell design variable
// gamma in [0,1] to microchannel geometry and effective flow properties.
//
//   w_c(gamma) = wc_min + (wc_max - wc_min) * gamma     channel width
//   w          = w_c + w_w                              pitch
//   eps        = w_c / w                                porosity
//   kappa      = eps * w_c^2 / 12                       permeability
//   alpha_n    = 12 * (1/w_c^2 + w_w/w_c^3) = 1/kappa   inverse permeability
//
// alpha_s is the conventional convex interpolation kept for baseline and
// ablation comparisons; the pipeline default is alpha_n.

#include <utility>

#include "turingflow/field.hpp"

namespace turingflow {

struct MediaParams {
    double wc_min = 0.0;     // [m]
    double wc_max = 0.0;     // [m]
    double ww = 0.0;         // [m], constant wall width
    double q = 0.01;         // convex tuning parameter for alpha_s
    double Da = 1e-5;        // Darcy number for alpha_s bounds
    double l_char = 0.01;    // [m], characteristic length for alpha_s bounds
    double alpha_min = 0.0;  // [1/m^2]

    /// alpha_max = 1 / (l^2 * Da)
    double alpha_max() const { return 1.0 / (l_char * l_char * Da); }

    void validate() const;

    /// Pitch w = w_c + w_w at a given design value.
    double pitch(double gamma) const;
};

/// Linear channel-width interpolation. gamma outside [0,1] is an error,
/// never a silent clamp.
double channel_width(double gamma, const MediaParams& p);

/// (porosity, permeability) of the unit microstructure.
std::pair<double, double> porosity_permeability(double wc, double ww);

/// New inverse-permeability expression; identical to 1/kappa.
double inverse_permeability_new(double gamma, const MediaParams& p);

/// Conventional convex interpolation between alpha_min and alpha_max.
double inverse_permeability_std(double gamma, const MediaParams& p);

/// Analytic d(alpha_n)/d(gamma) for the sensitivity chain rule.
double d_alpha_n_d_gamma(double gamma, const MediaParams& p);

/// Design variable field with its derived media quantities. The derived
/// caches are recomputed eagerly on every gamma update so they are always
/// consistent when read.
class DesignField {
public:
    DesignField(int nx, int ny, const MediaParams& params, double gamma0 = 0.5);

    void set_gamma(const Field2D<double>& gamma);
    void set_gamma(int i, int j, double value);

    const Field2D<double>& gamma() const { return gamma_; }
    const Field2D<double>& wc() const { return wc_; }
    const Field2D<double>& porosity() const { return eps_; }
    const Field2D<double>& permeability() const { return kappa_; }
    const Field2D<double>& alpha() const { return alpha_; }
    const MediaParams& params() const { return params_; }

private:
    void refresh_cell(std::size_t k);

    MediaParams params_;
    Field2D<double> gamma_, wc_, eps_, kappa_, alpha_;
};

}  // namespace turingflow
