#include "wsn/radio_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wsn {

namespace {

void require_non_negative(double value, const char* what) {
  if (!(value >= 0.0)) throw std::invalid_argument(std::string(what) + " must be >= 0");
}

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument(std::string("radio parameter ") + what + " must be > 0");
  }
}

}  // namespace

Meters derived_crossover_distance(Joules e_fs, Joules e_mp) { return std::sqrt(e_fs / e_mp); }

RadioParams& RadioParams::resolve() {
  if (crossover == CrossoverMode::derived) d0 = derived_crossover_distance(e_fs, e_mp);
  return *this;
}

void RadioParams::validate() const {
  require_positive(e_elec, "e_elec");
  require_positive(e_fs, "e_fs");
  require_positive(e_mp, "e_mp");
  require_positive(e_da, "e_da");
  require_positive(d0, "d0");
  if (packet_bits < 0) throw std::invalid_argument("radio parameter packet_bits must be >= 0");
  if (crossover == CrossoverMode::derived) {
    const double expected = derived_crossover_distance(e_fs, e_mp);
    if (std::abs(d0 - expected) > 1e-6 * expected) {
      throw std::invalid_argument("radio parameter d0 is not sqrt(e_fs/e_mp) in derived mode");
    }
  }
}

RadioParams default_radio_params() {
  RadioParams radio;
  radio.resolve();
  return radio;
}

Joules tx_energy(const RadioParams& radio, Bits bits, Meters d) {
  require_non_negative(static_cast<double>(bits), "bits");
  require_non_negative(d, "distance");
  const auto b = static_cast<double>(bits);
  if (d < radio.d0) return b * radio.e_elec + b * radio.e_fs * (d * d);
  const double d2 = d * d;
  return b * radio.e_elec + b * radio.e_mp * (d2 * d2);
}

Joules rx_energy(const RadioParams& radio, Bits bits) {
  require_non_negative(static_cast<double>(bits), "bits");
  return static_cast<double>(bits) * radio.e_elec;
}

Joules aggregation_energy(const RadioParams& radio, Bits bits) {
  require_non_negative(static_cast<double>(bits), "bits");
  return static_cast<double>(bits) * radio.e_da;
}

Joules ch_round_energy(const RadioParams& radio, std::int64_t member_count, Meters d_to_sink) {
  require_non_negative(static_cast<double>(member_count), "member_count");
  const Bits packet = radio.packet_bits;
  return rx_energy(radio, member_count * packet) +
         aggregation_energy(radio, (member_count + 1) * packet) +
         tx_energy(radio, packet, d_to_sink);
}

}  // namespace wsn
