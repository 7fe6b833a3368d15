#include "wsn/rng.hpp"

namespace wsn {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rng derive_stream(std::uint64_t run_seed, Stream stream) {
  const auto tag = static_cast<std::uint64_t>(stream);
  return Rng{splitmix64(splitmix64(run_seed) ^ (tag * 0xD1B54A32D192ED03ULL))};
}

}  // namespace wsn
