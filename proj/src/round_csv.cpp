#include "wsn/round_csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "wsn/error.hpp"

namespace wsn {

std::string format_significant(double value, int digits) {
  std::array<char, 64> buf{};
  const auto [end, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, digits);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), end);
}

void write_round_csv(const SimulationResult& result, std::ostream& out) {
  out << kRoundCsvHeader << '\n';
  for (const RoundMetrics& m : result.per_round) {
    out << m.round << ',' << m.alive << ',' << m.asleep << ',' << m.heads << ','
        << m.packets_to_sink << ',' << format_significant(m.residual_total) << ','
        << format_significant(m.e_th) << ',' << format_significant(m.savings_total) << '\n';
  }
}

void write_round_csv(const SimulationResult& result, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  write_round_csv(result, out);
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");
}

std::string round_csv(const SimulationResult& result) {
  std::ostringstream out;
  write_round_csv(result, out);
  return out.str();
}

}  // namespace wsn
