#pragma once

#include <cstdint>
#include <random>

namespace wsn {

/// Independent sub-streams of one run's seed. Each consumer owns its stream,
/// so e.g. turning TEEN sensing on or off never shifts election draws.
enum class Stream : std::uint64_t {
  deployment = 1,
  election = 2,
  sensing = 3,
};

/// 64-bit Mersenne Twister with a platform-independent double conversion
/// (std::uniform_real_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

Rng derive_stream(std::uint64_t run_seed, Stream stream);

}  // namespace wsn
