// Compiled with -mavx2 only; callers reach it through the dispatch table
// after a runtime CPU check.

#include "kernels_impl.hpp"

#include <immintrin.h>

#include <cmath>
#include <cstring>
#include <limits>

namespace wsn::kernels::detail {

namespace {

inline __m256d squared_distance(__m256d x, __m256d y, __m256d px, __m256d py) {
  const __m256d dx = _mm256_sub_pd(x, px);
  const __m256d dy = _mm256_sub_pd(y, py);
  return _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
}

// Four mask bytes widened to a lane mask (all ones where byte != 0).
inline __m256d load_mask4(const std::uint8_t* mask) {
  std::int32_t packed = 0;
  std::memcpy(&packed, mask, sizeof(packed));
  const __m256i wide = _mm256_cvtepu8_epi64(_mm_cvtsi32_si128(packed));
  return _mm256_castsi256_pd(_mm256_cmpgt_epi64(wide, _mm256_setzero_si256()));
}

}  // namespace

void distances_to_point_avx2(const double* xs, const double* ys, std::size_t n,
                             double px, double py, double* out) {
  const __m256d vpx = _mm256_set1_pd(px);
  const __m256d vpy = _mm256_set1_pd(py);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d2 = squared_distance(_mm256_loadu_pd(xs + i), _mm256_loadu_pd(ys + i), vpx, vpy);
    _mm256_storeu_pd(out + i, _mm256_sqrt_pd(d2));
  }
  distances_to_point_scalar(xs + i, ys + i, n - i, px, py, out + i);
}

std::ptrdiff_t masked_argmax_avx2(const double* values, const std::uint8_t* mask,
                                  std::size_t n) {
  __m256d best = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
  __m256d best_idx = _mm256_set1_pd(-1.0);
  __m256d idx = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
  const __m256d step = _mm256_set1_pd(4.0);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(values + i);
    const __m256d gt = _mm256_cmp_pd(v, best, _CMP_GT_OQ);
    const __m256d take = _mm256_and_pd(gt, load_mask4(mask + i));
    best = _mm256_blendv_pd(best, v, take);
    best_idx = _mm256_blendv_pd(best_idx, idx, take);
    idx = _mm256_add_pd(idx, step);
  }

  alignas(32) double lane_val[4];
  alignas(32) double lane_idx[4];
  _mm256_store_pd(lane_val, best);
  _mm256_store_pd(lane_idx, best_idx);

  std::ptrdiff_t result = -1;
  double result_val = 0.0;
  for (int lane = 0; lane < 4; ++lane) {
    if (lane_idx[lane] < 0.0) continue;
    const auto li = static_cast<std::ptrdiff_t>(lane_idx[lane]);
    if (result < 0 || lane_val[lane] > result_val ||
        (lane_val[lane] == result_val && li < result)) {
      result = li;
      result_val = lane_val[lane];
    }
  }
  for (; i < n; ++i) {
    if (mask[i] == 0) continue;
    if (result < 0 || values[i] > result_val) {
      result = static_cast<std::ptrdiff_t>(i);
      result_val = values[i];
    }
  }
  return result;
}

void nearest_point_avx2(const double* xs, const double* ys, std::size_t n,
                        const double* cx, const double* cy, std::size_t m,
                        std::uint32_t* out_index, double* out_distance) {
  const __m256d inf = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(xs + i);
    const __m256d y = _mm256_loadu_pd(ys + i);
    __m256d best = inf;
    __m256d best_idx = _mm256_set1_pd(-1.0);
    for (std::size_t j = 0; j < m; ++j) {
      const __m256d d2 = squared_distance(x, y, _mm256_set1_pd(cx[j]), _mm256_set1_pd(cy[j]));
      const __m256d lt = _mm256_cmp_pd(d2, best, _CMP_LT_OQ);
      best = _mm256_blendv_pd(best, d2, lt);
      best_idx = _mm256_blendv_pd(best_idx, _mm256_set1_pd(static_cast<double>(j)), lt);
    }
    _mm256_storeu_pd(out_distance + i, _mm256_sqrt_pd(best));
    alignas(32) double lane_idx[4];
    _mm256_store_pd(lane_idx, best_idx);
    for (int lane = 0; lane < 4; ++lane) {
      out_index[i + lane] =
          lane_idx[lane] < 0.0 ? kNoIndex : static_cast<std::uint32_t>(lane_idx[lane]);
    }
  }
  nearest_point_scalar(xs + i, ys + i, n - i, cx, cy, m, out_index + i, out_distance + i);
}

}  // namespace wsn::kernels::detail
