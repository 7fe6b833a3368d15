#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>

#include "wsn/sim_engine.hpp"

namespace wsn {

inline constexpr std::string_view kRoundCsvHeader =
    "round,alive,asleep,heads,packets_to_sink,residual_total_j,e_th_j,savings_total_j";

/// Shortest round-trip of printf("%.<digits>g"), locale independent.
std::string format_significant(double value, int digits = 9);

/// Header plus one row per round, every line newline-terminated.
void write_round_csv(const SimulationResult& result, std::ostream& out);

/// Throws IoError carrying the path on any failure.
void write_round_csv(const SimulationResult& result, const std::filesystem::path& path);

std::string round_csv(const SimulationResult& result);

}  // namespace wsn
