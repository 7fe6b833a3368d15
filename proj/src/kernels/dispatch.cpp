#include "kernels_impl.hpp"

#include <cassert>
#include <cstdlib>
#include <string>

namespace wsn::kernels {

namespace {

constexpr KernelTable kScalar{
    Isa::scalar,
    "scalar",
    &detail::distances_to_point_scalar,
    &detail::masked_argmax_scalar,
    &detail::nearest_point_scalar,
};

#if defined(WSN_HAVE_AVX2)
constexpr KernelTable kAvx2{
    Isa::avx2,
    "avx2",
    &detail::distances_to_point_avx2,
    &detail::masked_argmax_avx2,
    &detail::nearest_point_avx2,
};

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
}
#endif

const KernelTable& select_table() {
  const KernelTable* widest = &kScalar;
#if defined(WSN_HAVE_AVX2)
  if (cpu_has_avx2()) widest = &kAvx2;
#endif
  if (const char* forced = std::getenv("WSN_KERNELS")) {
    const std::string name{forced};
    if (name == "scalar") return kScalar;
    if (name == "avx2" && table_for(Isa::avx2) != nullptr) return *table_for(Isa::avx2);
  }
  return *widest;
}

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

const KernelTable* table_for(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return &kScalar;
    case Isa::avx2:
#if defined(WSN_HAVE_AVX2)
      return cpu_has_avx2() ? &kAvx2 : nullptr;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const KernelTable& active() {
  static const KernelTable& table = select_table();
  return table;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

void distances_to_point(std::span<const double> xs, std::span<const double> ys,
                        double px, double py, std::span<double> out) {
  assert(xs.size() == ys.size() && out.size() == xs.size());
  active().distances_to_point(xs.data(), ys.data(), xs.size(), px, py, out.data());
}

std::ptrdiff_t masked_argmax(std::span<const double> values,
                             std::span<const std::uint8_t> mask) {
  assert(values.size() == mask.size());
  return active().masked_argmax(values.data(), mask.data(), values.size());
}

void nearest_point(std::span<const double> xs, std::span<const double> ys,
                   std::span<const double> cx, std::span<const double> cy,
                   std::span<std::uint32_t> out_index, std::span<double> out_distance) {
  assert(xs.size() == ys.size() && cx.size() == cy.size());
  assert(out_index.size() == xs.size() && out_distance.size() == xs.size());
  active().nearest_point(xs.data(), ys.data(), xs.size(), cx.data(), cy.data(), cx.size(),
                         out_index.data(), out_distance.data());
}

}  // namespace wsn::kernels
