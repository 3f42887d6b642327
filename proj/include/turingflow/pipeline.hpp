#pragma once

// Pipeline orchestration: optimize -> dehomogenize -> verify -> report.
// Every stage reads its inputs from and writes its outputs to the run
// directory, so stages are independently re-runnable; the manifest records
// the effective configuration, seeds, timings, and summary metrics.

#include <string>
#include <vector>

#include "turingflow/config.hpp"

namespace turingflow {

enum class Stage { optimize, dehomogenize, verify, report };

const char* stage_name(Stage s);

struct PipelineRun {
    RunConfig config;
    bool baseline_only = false;  // skip optimization; all-fluid verification
};

/// Execute the requested stages in order. Throws StageInputError when a
/// stage's inputs are missing on disk; other failures propagate after the
/// manifest records the failure point.
void run_pipeline(const PipelineRun& run, const std::vector<Stage>& stages);

/// Artifact names inside the run directory.
namespace artifacts {
inline constexpr const char* kEffectiveConfig = "config.effective.cfg";
inline constexpr const char* kManifest = "manifest.json";
inline constexpr const char* kGamma = "gamma.csv";
inline constexpr const char* kGammaPgm = "gamma.pgm";
inline constexpr const char* kHistory = "history.csv";
inline constexpr const char* kUCenter = "u_center.csv";
inline constexpr const char* kVCenter = "v_center.csv";
inline constexpr const char* kPressure = "pressure.csv";
inline constexpr const char* kPattern = "pattern.csv";
inline constexpr const char* kPatternPgm = "pattern.pgm";
inline constexpr const char* kActivator = "u_rd.csv";
inline constexpr const char* kActivatorPgm = "u_rd.pgm";
inline constexpr const char* kOutlets = "outlets.csv";
inline constexpr const char* kOutletsBaseline = "outlets_baseline.csv";
inline constexpr const char* kSpeed = "speed.csv";
inline constexpr const char* kSpeedPgm = "speed.pgm";
inline constexpr const char* kSummary = "summary.csv";
}  // namespace artifacts

}  // namespace turingflow
