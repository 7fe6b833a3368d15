#pragma once

// Data-parallel geometry kernels used by the round engine.
//
// Every variant computes each element with the same operation sequence
// (subtract, multiply, add, sqrt; no fused multiply-add) so that all
// variants return bit-identical results. The scalar table is the reference.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>

namespace wsn::kernels {

enum class Isa : std::uint8_t { scalar, avx2 };

inline constexpr std::uint32_t kNoIndex = std::numeric_limits<std::uint32_t>::max();

struct KernelTable {
  Isa isa;
  const char* name;

  // out[i] = sqrt((xs[i]-px)^2 + (ys[i]-py)^2)
  void (*distances_to_point)(const double* xs, const double* ys, std::size_t n,
                             double px, double py, double* out);

  // Index of the largest values[i] with mask[i] != 0, smallest index on ties.
  // Returns -1 when no element is selected. Values must not be NaN.
  std::ptrdiff_t (*masked_argmax)(const double* values, const std::uint8_t* mask,
                                  std::size_t n);

  // For each point i, the index j of the closest centre (smallest j on ties)
  // and the Euclidean distance to it. With m == 0 every index is kNoIndex
  // and every distance is +inf.
  void (*nearest_point)(const double* xs, const double* ys, std::size_t n,
                        const double* cx, const double* cy, std::size_t m,
                        std::uint32_t* out_index, double* out_distance);
};

const KernelTable& scalar_table();

/// nullptr when the variant was not compiled in or the CPU lacks it.
const KernelTable* table_for(Isa isa);

/// Selected once on first use: the widest supported variant, unless the
/// WSN_KERNELS environment variable names another one ("scalar", "avx2").
const KernelTable& active();

std::string_view isa_name(Isa isa);

// Span front-ends over active().

void distances_to_point(std::span<const double> xs, std::span<const double> ys,
                        double px, double py, std::span<double> out);

std::ptrdiff_t masked_argmax(std::span<const double> values,
                             std::span<const std::uint8_t> mask);

void nearest_point(std::span<const double> xs, std::span<const double> ys,
                   std::span<const double> cx, std::span<const double> cy,
                   std::span<std::uint32_t> out_index, std::span<double> out_distance);

}  // namespace wsn::kernels
