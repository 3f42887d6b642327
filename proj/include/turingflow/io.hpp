#pragma once

// File formats: CSV rasters (row-major, ny rows x nx columns, top row =
// max-y, 9 significant digits) and binary PGM (P5, maxval 255). All writes
// are atomic (temp file + rename) so partially written artifacts never
// appear under the final name.

#include <filesystem>
#include <string>

#include "turingflow/field.hpp"

namespace turingflow {

void atomic_write_text(const std::filesystem::path& path, const std::string& content);

void write_csv_field(const std::filesystem::path& path, const Field2D<double>& f);
void write_csv_field(const std::filesystem::path& path, const Field2D<std::uint8_t>& f);

Field2D<double> read_csv_field(const std::filesystem::path& path);
Field2D<std::uint8_t> read_csv_pattern(const std::filesystem::path& path);

/// Linear min->0, max->255 grayscale rendering.
void write_pgm_scaled(const std::filesystem::path& path, const Field2D<double>& f);

/// Pattern rendering: 0 = solid, 255 = fluid.
void write_pgm_pattern(const std::filesystem::path& path, const Field2D<std::uint8_t>& f);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace turingflow
