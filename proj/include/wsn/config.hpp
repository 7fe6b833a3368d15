#pragma once

// Flat key=value experiment configuration: one key per line, '#' starts a
// comment, blank lines are ignored. Precedence: command-line overrides, then
// the file, then built-in defaults.

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wsn/sim_engine.hpp"

namespace wsn {

struct ExperimentSpec {
  SimulationConfig simulation;  // field.rng_seed is replaced per run
  bool compare = false;         // run ehorm off and on for every seed
  std::vector<std::uint64_t> seeds{1};
  std::filesystem::path output_dir = "wsn_out";
  unsigned jobs = 0;            // 0 = one per hardware thread

  SimulationConfig config_for(std::uint64_t seed, bool ehorm) const;
};

using Overrides = std::vector<std::pair<std::string, std::string>>;

struct ConfigKey {
  std::string_view name;
  std::string_view help;
};

/// Every accepted key, in application order.
std::span<const ConfigKey> config_keys();

/// Throws ConfigError naming the key (and line, for file entries) on an
/// unknown key, an unparsable value or a constraint violation.
ExperimentSpec parse_config(std::string_view text, const Overrides& overrides = {});

/// "1,2,10-12" -> {1, 2, 10, 11, 12}. Throws ConfigError("seeds", ...).
std::vector<std::uint64_t> parse_seed_list(std::string_view text);

}  // namespace wsn
