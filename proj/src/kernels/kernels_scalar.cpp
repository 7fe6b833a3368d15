#include "kernels_impl.hpp"

#include <cmath>
#include <limits>

namespace wsn::kernels::detail {

void distances_to_point_scalar(const double* xs, const double* ys, std::size_t n,
                               double px, double py, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - px;
    const double dy = ys[i] - py;
    out[i] = std::sqrt(dx * dx + dy * dy);
  }
}

std::ptrdiff_t masked_argmax_scalar(const double* values, const std::uint8_t* mask,
                                    std::size_t n) {
  std::ptrdiff_t best = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask[i] == 0) continue;
    if (best < 0 || values[i] > values[best]) best = static_cast<std::ptrdiff_t>(i);
  }
  return best;
}

void nearest_point_scalar(const double* xs, const double* ys, std::size_t n,
                          const double* cx, const double* cy, std::size_t m,
                          std::uint32_t* out_index, double* out_distance) {
  for (std::size_t i = 0; i < n; ++i) {
    double best = std::numeric_limits<double>::infinity();
    std::uint32_t best_j = kNoIndex;
    for (std::size_t j = 0; j < m; ++j) {
      const double dx = xs[i] - cx[j];
      const double dy = ys[i] - cy[j];
      const double d2 = dx * dx + dy * dy;
      if (d2 < best) {
        best = d2;
        best_j = static_cast<std::uint32_t>(j);
      }
    }
    out_index[i] = best_j;
    out_distance[i] = std::sqrt(best);
  }
}

}  // namespace wsn::kernels::detail
