#pragma once

// First-order radio energy model with a free-space (d^2) / multipath (d^4)
// amplifier crossover at d0.

#include "wsn/units.hpp"

namespace wsn {

enum class CrossoverMode : std::uint8_t {
  derived,  // d0 = sqrt(e_fs / e_mp)
  fixed,    // d0 as configured
};

struct RadioParams {
  Joules e_elec = 50e-9;       // per bit, transmitter and receiver electronics
  Joules e_fs = 10e-12;        // per bit per m^2
  Joules e_mp = 0.0013e-12;    // per bit per m^4
  Joules e_da = 5e-9;          // per bit, aggregation
  CrossoverMode crossover = CrossoverMode::derived;
  Meters d0 = 87.0;            // only read as-is in fixed mode; see resolve()
  Bits packet_bits = 4000;

  /// Recomputes d0 when the crossover is derived. Returns *this for chaining.
  RadioParams& resolve();

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;

  bool operator==(const RadioParams&) const = default;
};

/// Resolved parameters with the standard first-order constants.
RadioParams default_radio_params();

Meters derived_crossover_distance(Joules e_fs, Joules e_mp);

// All energy functions throw std::invalid_argument for negative bits or distance.

/// bits*e_elec + bits*e_fs*d^2 below d0, bits*e_elec + bits*e_mp*d^4 from d0 on.
Joules tx_energy(const RadioParams& radio, Bits bits, Meters d);

Joules rx_energy(const RadioParams& radio, Bits bits);

Joules aggregation_energy(const RadioParams& radio, Bits bits);

/// One head's round: receive every member packet, aggregate members plus its
/// own packet, then send one aggregated packet to the sink.
Joules ch_round_energy(const RadioParams& radio, std::int64_t member_count, Meters d_to_sink);

}  // namespace wsn
