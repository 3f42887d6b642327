#pragma once

// Run configuration: sectioned key = value text, lengths in millimeters on
// disk, SI units in memory. Unknown keys are rejected; omitted optional keys
// take documented defaults and the serialized (effective) form is what the
// run manifest records.

#include <string>

#include "turingflow/flow.hpp"
#include "turingflow/grid.hpp"
#include "turingflow/media.hpp"
#include "turingflow/optim.hpp"
#include "turingflow/turing.hpp"
#include "turingflow/verify.hpp"

namespace turingflow {

struct RunConfig {
    Domain domain;
    BoundarySpec boundary;
    FluidProps fluid;
    MediaParams media;

    int design_nx = 0, design_ny = 0;  // 0: derive from 1 mm cells
    int rd_nx = 0, rd_ny = 0;          // 0: derive from wc_min / 4 cells
    int verify_nx = 0, verify_ny = 0;  // 0: same as rd grid

    OptimOptions optim;

    ReactionCoeffs rd_coeffs;
    AnisotropySchedule schedule = AnisotropySchedule::defaults();
    RunScheduleOptions rd;
    double wc_outlet = 0.0;    // 0: wc_min
    double band_depth = 3e-3;  // inner Dirichlet line depth [m]

    VerifyOptions verify;

    std::string output_dir;

    Grid design_grid() const;
    Grid rd_grid() const;
    Grid verify_grid() const;

    /// Resolve derived defaults and check every invariant. Called by
    /// parse_config; call again after programmatic edits.
    void finalize();
};

/// Parse and validate. Throws ConfigError naming the key and line.
RunConfig parse_config(const std::string& text);

/// Effective configuration, every key explicit, full precision; satisfies
/// parse(serialize(c)) == c.
std::string serialize_config(const RunConfig& config);

}  // namespace turingflow
