#pragma once

#include "wsn/kernels.hpp"

namespace wsn::kernels::detail {

void distances_to_point_scalar(const double* xs, const double* ys, std::size_t n,
                               double px, double py, double* out);
std::ptrdiff_t masked_argmax_scalar(const double* values, const std::uint8_t* mask,
                                    std::size_t n);
void nearest_point_scalar(const double* xs, const double* ys, std::size_t n,
                          const double* cx, const double* cy, std::size_t m,
                          std::uint32_t* out_index, double* out_distance);

#if defined(WSN_HAVE_AVX2)
void distances_to_point_avx2(const double* xs, const double* ys, std::size_t n,
                             double px, double py, double* out);
std::ptrdiff_t masked_argmax_avx2(const double* values, const std::uint8_t* mask,
                                  std::size_t n);
void nearest_point_avx2(const double* xs, const double* ys, std::size_t n,
                        const double* cx, const double* cy, std::size_t m,
                        std::uint32_t* out_index, double* out_distance);
#endif

}  // namespace wsn::kernels::detail
