#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "wsn/config.hpp"
#include "wsn/sim_engine.hpp"

namespace wsn {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitIoError = 2;

/// "LEACH" for the base protocol, "iLEACH" with the sleep overlay.
std::string variant_label(ProtocolKind kind, bool ehorm);

/// Runs independent configurations on up to `jobs` threads (0 = hardware
/// threads). Results come back in input order regardless of scheduling.
std::vector<SimulationResult> run_batch(std::span<const SimulationConfig> configs, unsigned jobs);

struct RunRecord {
  std::string label;
  std::uint64_t seed = 0;
  SimulationResult result;
  std::filesystem::path csv;
};

struct ExperimentOutputs {
  std::vector<RunRecord> runs;  // baseline arm first in compare mode
  std::filesystem::path summary;
  std::optional<std::filesystem::path> paired;
};

/// Summary file: key=value lines with batch statistics per variant plus
/// one line per run and metric.
std::string format_batch_summary(const ExperimentSpec& spec, std::span<const RunRecord> runs);

/// Paired file: wins/ties/losses per metric and per-seed deltas.
std::string format_paired_summary(std::string_view baseline_label, std::string_view variant_label,
                                  std::span<const SimulationResult> baseline,
                                  std::span<const SimulationResult> variant);

/// Runs every seed (both arms in compare mode), then writes
/// <label>_seed<seed>.csv per run, summary.txt, and paired.txt in compare
/// mode. Throws IoError when the output directory is unusable.
ExperimentOutputs execute_experiment(const ExperimentSpec& spec);

/// execute_experiment with errors reported on `log`; returns the exit status.
int run_experiment(const ExperimentSpec& spec, std::ostream& log);

}  // namespace wsn
