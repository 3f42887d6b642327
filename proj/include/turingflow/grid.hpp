#pragma once

// Rectangular design domain, uniform Cartesian grid, and boundary-segment
// handling shared by the flow, reaction-diffusion, and verification solvers.
// All lengths are meters; configuration ingestion converts from millimeters.

#include <cstdint>
#include <vector>

#include "turingflow/errors.hpp"

namespace turingflow {

struct Domain {
    double width = 0.0;   // [m]
    double height = 0.0;  // [m]
};

/// Uniform structured grid over a Domain. Cell (i, j) has its center at
/// (x_center(i), y_center(j)); faces sit at x_face / y_face.
struct Grid {
    Domain domain;
    int nx = 0, ny = 0;
    double dx = 0.0, dy = 0.0;

    double x_center(int i) const { return (i + 0.5) * dx; }
    double y_center(int j) const { return (j + 0.5) * dy; }
    double x_face(int i) const { return i * dx; }
    double y_face(int j) const { return j * dy; }
    std::size_t cell_count() const { return static_cast<std::size_t>(nx) * ny; }
    double cell_area() const { return dx * dy; }
};

enum class Edge : std::uint8_t { bottom, top, left, right };

const char* edge_name(Edge e);

/// Length of a domain edge.
double edge_length(const Domain& d, Edge e);

/// A contiguous span on one domain edge, measured from the edge's low
/// corner (left end for bottom/top, bottom end for left/right).
struct EdgeSegment {
    Edge edge = Edge::bottom;
    double offset = 0.0;  // [m]
    double width = 0.0;   // [m]
};

struct BoundarySpec {
    EdgeSegment inlet;
    double inlet_velocity = 0.0;  // [m/s], uniform plug, directed into the domain
    EdgeSegment outlet;           // zero-pressure segment
};

enum class FaceTag : std::uint8_t { wall, inlet, outlet };

/// Tags for every boundary face of the grid. bottom/top hold nx entries
/// (one per vertical cell column), left/right hold ny entries.
struct BoundaryTags {
    std::vector<FaceTag> bottom, top, left, right;

    const std::vector<FaceTag>& on(Edge e) const;
    std::vector<FaceTag>& on(Edge e);
};

Grid build_grid(const Domain& domain, int nx, int ny);

/// Resolution form: cells per meter, identical in both directions.
Grid build_grid(const Domain& domain, double cells_per_meter);

/// Tag every boundary face as inlet, outlet, or wall. Faces whose centers
/// fall inside a segment get that segment's tag; everything else is wall.
BoundaryTags classify_boundary(const Grid& grid, const BoundarySpec& spec);

void validate_boundary_spec(const Domain& domain, const BoundarySpec& spec);

}  // namespace turingflow
