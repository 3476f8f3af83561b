#include <atomic>

#include "kernels/kernel_impl.hpp"

namespace meanforge::kernels {

namespace {

constexpr KernelTable kScalar{
    Level::Scalar,           &scalar::normalized_means,   &scalar::mean_curvatures,
    &scalar::reduced_offsets, &scalar::linear_combination, &scalar::compare,
};

#if defined(__x86_64__) || defined(_M_X64)
constexpr KernelTable kAvx2{
    Level::Avx2,           &avx2::normalized_means,   &avx2::mean_curvatures,
    &avx2::reduced_offsets, &avx2::linear_combination, &avx2::compare,
};
#endif

#if defined(__aarch64__)
constexpr KernelTable kNeon{
    Level::Neon,           &neon::normalized_means,   &neon::mean_curvatures,
    &neon::reduced_offsets, &neon::linear_combination, &neon::compare,
};
#endif

bool host_has_avx2() noexcept {
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::atomic<const KernelTable*>& active_slot() noexcept {
  static std::atomic<const KernelTable*> slot{table(best_supported())};
  return slot;
}

}  // namespace

std::string_view level_name(Level level) noexcept {
  switch (level) {
    case Level::Scalar: return "scalar";
    case Level::Avx2: return "avx2";
    case Level::Neon: return "neon";
  }
  return "unknown";
}

const KernelTable* table(Level level) noexcept {
  switch (level) {
    case Level::Scalar: return &kScalar;
    case Level::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return host_has_avx2() ? &kAvx2 : nullptr;
#else
      return nullptr;
#endif
    case Level::Neon:
#if defined(__aarch64__)
      return &kNeon;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

Level best_supported() noexcept {
  if (table(Level::Avx2) != nullptr) return Level::Avx2;
  if (table(Level::Neon) != nullptr) return Level::Neon;
  return Level::Scalar;
}

const KernelTable& active() noexcept { return *active_slot().load(std::memory_order_acquire); }

bool set_active(Level level) noexcept {
  const KernelTable* t = table(level);
  if (t == nullptr) return false;
  active_slot().store(t, std::memory_order_release);
  return true;
}

void normalized_means(std::span<const double> x, const std::array<double*, kColumnCount>& out) {
  active().normalized_means(x.data(), x.size(), out.data());
}

void mean_curvatures(std::span<const double> x, const std::array<double*, kMeanCount>& out) {
  active().mean_curvatures(x.data(), x.size(), out.data());
}

void reduced_offsets(std::span<const double> x, const std::array<double*, kMeanCount>& out) {
  active().reduced_offsets(x.data(), x.size(), out.data());
}

}  // namespace meanforge::kernels
