#pragma once

// Verification on the resolved geometry: solve flow through the binarized
// pattern with solid cells handled by Brinkman penalization, segment the
// outlet edge into discrete channels, and compute per-outlet mass-flow
// statistics for optimized, baseline, and pattern geometries.

#include <vector>

#include "turingflow/flow.hpp"
#include "turingflow/grid.hpp"
#include "turingflow/turing.hpp"

namespace turingflow {

struct VerifyOptions {
    double alpha_solid_factor = 1e5;  // alpha_solid = factor / kappa_min
    FlowOptions flow;
};

struct ResolvedFlowResult {
    FlowSolution solution;
    std::vector<std::size_t> orphan_region_sizes;  // isolated fluid pockets, masked solid
    double max_solid_face_flux = 0.0;              // worst face flux through a solid cell,
                                                   // as a fraction of the inlet flow
};

/// Flow through the pattern raster. Solid cells get the penalization
/// inverse permeability; fluid pockets not connected to the inlet are masked
/// solid and reported. Throws InvalidGeometry when the inlet and outlet are
/// not connected through fluid.
ResolvedFlowResult resolved_flow(const Grid& grid, const BoundaryTags& tags,
                                 double inlet_velocity, const Field2D<std::uint8_t>& fluid,
                                 double kappa_min, const FluidProps& fluid_props,
                                 const VerifyOptions& opt);

/// Maximal contiguous fluid run of faces along the outlet edge,
/// [begin, end) in face indices.
struct OutletInterval {
    int begin = 0;
    int end = 0;
};

std::vector<OutletInterval> segment_outlets(const Field2D<std::uint8_t>& fluid,
                                            const Grid& grid, const BoundaryTags& tags);

/// Mass flow through each outlet interval [kg/(s m)].
std::vector<double> per_outlet_mass_flow(const FlowSolution& sol, const Grid& grid,
                                         const BoundaryTags& tags, const FluidProps& fluid,
                                         const std::vector<OutletInterval>& intervals);

struct OutletReport {
    std::vector<double> mdot;      // per outlet [kg/(s m)]
    std::vector<double> position;  // interval midpoints [m]
    double mdot_avg = 0.0;
    double avg_variation = 0.0;  // (1/n) sum |mdot_k - avg| / avg
    double max_variation = 0.0;  // max_k |mdot_k - avg| / avg
    int outlets = 0;
};

OutletReport flow_metrics(const std::vector<double>& mdot);

struct DofScalingRow {
    int outlets = 0;
    std::size_t design_cells = 0;
    std::size_t verify_cells = 0;
};

/// Element-count scaling: the design grid is independent of the outlet
/// count (implicit outlets); the verification grid must resolve each
/// channel with >= 4 cells, so it grows with the outlet count.
std::vector<DofScalingRow> dof_scaling_report(const Domain& domain, const Grid& design_grid,
                                              const std::vector<int>& outlet_counts);

}  // namespace turingflow
